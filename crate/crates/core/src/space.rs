//! Weight classes and the families swept by the rigidity checks.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::{simple_multisegment, symmetric_block};
use crate::multisegment::{Multisegment, Weight};
use crate::order::{act_conjunction, act_union_intersection};
use crate::ranks::RankTriangle;
use crate::segment::Segment;
use crate::value::Value;

/// Default bound on the content of an enumerated weight class.
pub const DEFAULT_CONTENT_CAP: usize = 14;

/// An inclusive interval of values `lo..hi` on one coset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Support {
    pub lo: Value,
    pub hi: Value,
}

impl Support {
    pub fn new(lo: Value, hi: Value) -> Result<Self> {
        if !lo.same_coset(hi) {
            return Err(Error::MixedCoset(lo, hi));
        }
        if lo > hi {
            return Err(Error::Bounds(format!("empty support {lo}..{hi}")));
        }
        Ok(Support { lo, hi })
    }

    pub fn ints(lo: i64, hi: i64) -> Self {
        Support::new(Value::int(lo), Value::int(hi)).expect("lo <= hi")
    }

    pub fn width(&self) -> usize {
        (self.lo.steps_to(self.hi) + 1) as usize
    }

    pub fn values(&self) -> impl Iterator<Item = Value> {
        let lo = self.lo;
        (0..self.width() as i64).map(move |k| lo.offset(k))
    }

    /// Every segment inside the support, canonically ordered.
    pub fn segments(&self) -> Vec<Segment> {
        let vals: Vec<Value> = self.values().collect();
        let mut out = Vec::new();
        for (p, &b) in vals.iter().enumerate() {
            for &e in &vals[p..] {
                out.push(Segment::new_unchecked(b, e));
            }
        }
        out
    }

    pub fn contains(&self, s: &Segment) -> bool {
        self.lo <= s.base() && s.end() <= self.hi && self.lo.same_coset(s.base())
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for Support {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| Error::Bounds(format!("expected a..b, got {s:?}")))?;
        Support::new(lo.parse()?, hi.parse()?)
    }
}

fn check_cap(content: usize, cap: usize) -> Result<()> {
    if content > cap {
        return Err(Error::CapExceeded { what: "weight-class content", size: content, cap });
    }
    Ok(())
}

pub fn enumerate_weight(w: &Weight) -> Result<Vec<Multisegment>> {
    enumerate_weight_with_cap(w, DEFAULT_CONTENT_CAP)
}

/// Every multisegment of weight `w`, each once, in canonical order.
///
/// The lowest value with a positive residual count must be the base of some
/// segment; each choice of its end is peeled off and the rest recursed on.
pub fn enumerate_weight_with_cap(w: &Weight, cap: usize) -> Result<Vec<Multisegment>> {
    check_cap(w.total(), cap)?;
    let (Some(lo), Some(hi)) = (w.min_value(), w.max_value()) else {
        return Ok(vec![Multisegment::empty()]);
    };
    let width = (lo.steps_to(hi) + 1) as usize;
    let mut counts: Vec<usize> = (0..width).map(|p| w.count(lo.offset(p as i64))).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    peel(&mut counts, 0, (0, 0), lo, &mut current, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn peel(
    counts: &mut [usize],
    from: usize,
    last: (usize, usize),
    lo: Value,
    current: &mut Vec<Segment>,
    out: &mut Vec<Multisegment>,
) {
    let Some(p) = (from..counts.len()).find(|&p| counts[p] > 0) else {
        out.push(Multisegment::from_sorted(current.clone()));
        return;
    };
    let min_q = if p == last.0 { last.1 } else { p };
    let mut q = p;
    while q < counts.len() && counts[q] > 0 {
        counts[q] -= 1;
        if q >= min_q {
            current.push(Segment::new_unchecked(lo.offset(p as i64), lo.offset(q as i64)));
            peel(counts, p, (p, q), lo, current, out);
            current.pop();
        }
        q += 1;
    }
    for c in &mut counts[p..q] {
        *c += 1;
    }
}

/// All weights with values in `support` and total content in `1..=max_content`.
pub fn weights_in(support: Support, max_content: usize) -> Vec<Weight> {
    let vals: Vec<Value> = support.values().collect();
    let mut out = Vec::new();
    let mut counts = vec![0usize; vals.len()];
    fn rec(k: usize, left: usize, vals: &[Value], counts: &mut Vec<usize>, out: &mut Vec<Weight>) {
        if k == vals.len() {
            if counts.iter().any(|&c| c > 0) {
                out.push(Weight::new(vals.iter().copied().zip(counts.iter().copied())).expect("one coset"));
            }
            return;
        }
        for c in 0..=left {
            counts[k] = c;
            rec(k + 1, left - c, vals, counts, out);
        }
        counts[k] = 0;
    }
    rec(0, max_content, &vals, &mut counts, &mut out);
    out
}

/// Every non-empty multisegment inside `support` with content at most
/// `max_content`, gathered weight class by weight class.
pub fn all_in(support: Support, max_content: usize) -> Result<Vec<Multisegment>> {
    let mut out = Vec::new();
    for w in weights_in(support, max_content) {
        out.extend(enumerate_weight_with_cap(&w, max_content.max(DEFAULT_CONTENT_CAP))?);
    }
    out.sort_unstable();
    Ok(out)
}

pub fn upper_set(alpha: &Multisegment) -> Result<Vec<Multisegment>> {
    upper_set_with_cap(alpha, DEFAULT_CONTENT_CAP)
}

/// Every `beta` of the same weight with `alpha <= beta`, `alpha` included.
pub fn upper_set_with_cap(alpha: &Multisegment, cap: usize) -> Result<Vec<Multisegment>> {
    let r = RankTriangle::of(alpha);
    Ok(enumerate_weight_with_cap(&alpha.weight(), cap)?
        .into_iter()
        .filter(|b| r.entrywise_le(&RankTriangle::of(b)))
        .collect())
}

pub fn action_closure(alpha: &Multisegment) -> Result<Vec<Multisegment>> {
    action_closure_with_cap(alpha, DEFAULT_CONTENT_CAP)
}

/// Everything reachable from `alpha` by union-intersection and conjunction
/// steps, `alpha` included, in canonical order.
pub fn action_closure_with_cap(alpha: &Multisegment, cap: usize) -> Result<Vec<Multisegment>> {
    check_cap(alpha.content(), cap)?;
    let mut seen: HashSet<Multisegment> = HashSet::from([alpha.clone()]);
    let mut queue = VecDeque::from([alpha.clone()]);
    while let Some(m) = queue.pop_front() {
        for i1 in 0..m.len() {
            for i2 in i1 + 1..m.len() {
                let steps = [act_union_intersection(&m, i1, i2)?, act_conjunction(&m, i1, i2)?];
                for next in steps.into_iter().flatten() {
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    let mut out: Vec<Multisegment> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Simple multisegments inside `support` with content at most `max_content`.
pub fn simple_family(support: Support, max_content: usize) -> Vec<Multisegment> {
    let mut out = Vec::new();
    for first in support.segments() {
        let len = first.len();
        let mut n = 1;
        while n * len <= max_content && first.end().offset(n as i64 - 1) <= support.hi {
            out.push(simple_multisegment(first, n));
            n += 1;
        }
    }
    out.sort_unstable();
    out
}

/// Ladder multisegments inside `support` with content at most `max_content`.
pub fn ladder_family(support: Support, max_content: usize) -> Vec<Multisegment> {
    let segs = support.segments();
    let mut out = Vec::new();
    fn rec(segs: &[Segment], start: usize, left: usize, current: &mut Vec<Segment>, out: &mut Vec<Multisegment>) {
        for k in start..segs.len() {
            let s = segs[k];
            if s.len() > left {
                continue;
            }
            if let Some(last) = current.last() {
                if !(last.base() < s.base() && last.end() < s.end()) {
                    continue;
                }
            }
            current.push(s);
            out.push(Multisegment::from_sorted(current.clone()));
            rec(segs, k + 1, left - s.len(), current, out);
            current.pop();
        }
    }
    rec(&segs, 0, max_content, &mut Vec::new(), &mut out);
    out.sort_unstable();
    out
}

/// Simple blocks symmetric about the midpoint of `support` and inside it.
pub fn symmetric_blocks(support: Support) -> Vec<Multisegment> {
    let c = Value::midpoint(support.lo, support.hi).expect("one coset");
    let mut out: Vec<Multisegment> = support
        .segments()
        .into_iter()
        .filter_map(|top| symmetric_block(top.shifted(-c)))
        .map(|b| b.shifted(c))
        .filter(|b| b.segments().iter().all(|s| support.contains(s)))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Arthur-type multisegments centered at the midpoint of `support`: every
/// non-empty multiset of symmetric simple blocks within the content bound.
pub fn arthur_family(support: Support, max_content: usize) -> Vec<Multisegment> {
    let blocks = symmetric_blocks(support);
    let mut out = BTreeSet::new();
    fn rec(blocks: &[Multisegment], start: usize, left: usize, current: &Multisegment, out: &mut BTreeSet<Multisegment>) {
        for k in start..blocks.len() {
            let size = blocks[k].content();
            if size > left {
                continue;
            }
            let next = current.union(&blocks[k]).expect("one coset");
            rec(blocks, k, left - size, &next, out);
            out.insert(next);
        }
    }
    rec(&blocks, 0, max_content, &Multisegment::empty(), &mut out);
    out.into_iter().collect()
}
