//! Family predicates: simple, ladder, symmetric and Arthur type.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::segment::Segment;
use crate::value::Value;

/// `{[b,e], [b+1,e+1], ..., [b+n-1,e+n-1]}`, each shift appearing once.
pub fn is_simple(alpha: &Multisegment) -> bool {
    let segs = alpha.segments();
    !segs.is_empty()
        && segs.windows(2).all(|w| {
            w[0].base().is_consecutive(w[1].base()) && w[0].end().is_consecutive(w[1].end())
        })
}

/// Bases and ends both strictly increasing in canonical order.
pub fn is_ladder(alpha: &Multisegment) -> bool {
    let segs = alpha.segments();
    !segs.is_empty() && segs.windows(2).all(|w| w[0].base() < w[1].base() && w[0].end() < w[1].end())
}

/// The simple multisegment with `n` unit shifts of `first`.
pub fn simple_multisegment(first: Segment, n: usize) -> Multisegment {
    let segs = (0..n as i64).map(|k| first.shifted(Value::ZERO.offset(k))).collect();
    Multisegment::from_sorted(segs)
}

/// The point `c` about which `alpha` is mirror-symmetric, if any.
///
/// Only the midpoint of the support can work; the result may be a
/// half-integer relative to the coset of `alpha`.
pub fn center(alpha: &Multisegment) -> Result<Option<Value>> {
    let (min, max) = alpha.min_value().zip(alpha.max_value()).ok_or(Error::Empty)?;
    let c = Value::midpoint(min, max).expect("endpoints share a coset");
    let shifted = alpha.shifted(-c);
    Ok((shifted.mirrored() == shifted).then_some(c))
}

pub fn is_symmetric(alpha: &Multisegment) -> bool {
    alpha.is_empty() || matches!(center(alpha), Ok(Some(_)))
}

/// The simple block symmetric about zero whose top segment is `top`:
/// `{[-e,-x], [-e+1,-x+1], ..., [x,e]}` for `top = [x,e]`.
pub fn symmetric_block(top: Segment) -> Option<Multisegment> {
    let (x, e) = (top.base(), top.end());
    if x < -e || !x.same_coset(-e) {
        return None;
    }
    let first = Segment::new_unchecked(-e, -x);
    Some(simple_multisegment(first, ((-e).steps_to(x) + 1) as usize))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArthurDecomposition {
    /// Blocks in centered coordinates, with multiplicity, in extraction order.
    pub blocks: Vec<(Multisegment, usize)>,
    /// The center subtracted from the input.
    pub offset: Value,
    /// Whether the greedy extraction succeeded without backtracking.
    pub greedy: bool,
}

impl ArthurDecomposition {
    /// The multiset union of the blocks, shifted back to the input position.
    pub fn reassemble(&self) -> Multisegment {
        let mut segs = Vec::new();
        for (block, k) in &self.blocks {
            for _ in 0..*k {
                segs.extend(block.segments().iter().map(|s| s.shifted(self.offset)));
            }
        }
        Multisegment::from_unsorted(segs)
    }

    /// The first extracted block, in the input's coordinates.
    pub fn top_block(&self) -> Option<Multisegment> {
        self.blocks.first().map(|(b, _)| b.shifted(self.offset))
    }
}

fn group(blocks: Vec<Multisegment>) -> Vec<(Multisegment, usize)> {
    let mut out: Vec<(Multisegment, usize)> = Vec::new();
    for b in blocks {
        match out.iter_mut().find(|(x, _)| *x == b) {
            Some((_, k)) => *k += 1,
            None => out.push((b, 1)),
        }
    }
    out
}

/// Segments ending at the maximum value, shortest first, without repeats.
fn top_candidates(rest: &Multisegment) -> Vec<Segment> {
    let e = rest.max_value().expect("non-empty");
    let mut tops: Vec<Segment> = rest.segments().iter().filter(|s| s.end() == e).copied().collect();
    tops.dedup();
    tops.reverse();
    tops
}

fn greedy_blocks(centered: &Multisegment) -> Option<Vec<Multisegment>> {
    let mut rest = centered.clone();
    let mut blocks = Vec::new();
    while !rest.is_empty() {
        let block = symmetric_block(top_candidates(&rest)[0])?;
        rest = rest.difference(&block)?;
        blocks.push(block);
    }
    Some(blocks)
}

fn exhaustive_blocks(rest: &Multisegment) -> Option<Vec<Multisegment>> {
    if rest.is_empty() {
        return Some(Vec::new());
    }
    for top in top_candidates(rest) {
        let Some(block) = symmetric_block(top) else { continue };
        let Some(next) = rest.difference(&block) else { continue };
        if let Some(mut found) = exhaustive_blocks(&next) {
            found.insert(0, block);
            return Some(found);
        }
    }
    None
}

/// Split `alpha`, after centering, into simple blocks symmetric about zero.
///
/// Greedy extraction takes the block of the shortest segment through the
/// current maximum; if that gets stuck a backtracking search over every
/// segment through the maximum decides the question.
pub fn arthur_decompose(alpha: &Multisegment) -> Result<Option<ArthurDecomposition>> {
    let Some(offset) = center(alpha)? else {
        return Ok(None);
    };
    let centered = alpha.shifted(-offset);
    if let Some(blocks) = greedy_blocks(&centered) {
        return Ok(Some(ArthurDecomposition { blocks: group(blocks), offset, greedy: true }));
    }
    Ok(exhaustive_blocks(&centered).map(|blocks| ArthurDecomposition { blocks: group(blocks), offset, greedy: false }))
}

/// Exhaustive search only, skipping the greedy pass.
pub fn arthur_decompose_exhaustive(alpha: &Multisegment) -> Result<Option<ArthurDecomposition>> {
    let Some(offset) = center(alpha)? else {
        return Ok(None);
    };
    Ok(exhaustive_blocks(&alpha.shifted(-offset))
        .map(|blocks| ArthurDecomposition { blocks: group(blocks), offset, greedy: false }))
}

/// Empty counts as Arthur type so block extraction bottoms out cleanly.
pub fn is_arthur(alpha: &Multisegment) -> bool {
    alpha.is_empty() || matches!(arthur_decompose(alpha), Ok(Some(_)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub simple: bool,
    pub ladder: bool,
    pub symmetric: bool,
    pub arthur: bool,
    pub center_x2: Option<i64>,
}

pub fn classify(alpha: &Multisegment) -> Classification {
    let c = center(alpha).ok().flatten();
    Classification {
        simple: is_simple(alpha),
        ladder: is_ladder(alpha),
        symmetric: is_symmetric(alpha),
        arthur: is_arthur(alpha),
        center_x2: c.map(Value::twice),
    }
}
