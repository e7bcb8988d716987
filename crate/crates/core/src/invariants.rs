//! Numerical invariants of a multisegment.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::mw::mw_dual;
use crate::segment::Segment;
use crate::value::Value;

/// Default bound on `n` for the partition search behind [`endoscopic_count`].
pub const DEFAULT_PARTITION_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InvariantProfile {
    /// Largest value.
    pub e_max: Value,
    /// Length of the longest segment.
    pub longest: usize,
    /// Number of segments.
    pub count: usize,
    /// Number of maximal runs in the union of all segments.
    pub components: usize,
    /// Total size of those runs.
    pub cover_size: usize,
    /// Largest number of parts of a splitting whose duals also split.
    pub endoscopic: usize,
}

#[derive(Serialize)]
struct ProfileJson {
    e_x2: i64,
    #[serde(rename = "L")]
    longest: usize,
    n: usize,
    c: usize,
    #[serde(rename = "S")]
    cover: usize,
    #[serde(rename = "C")]
    endoscopic: usize,
}

impl InvariantProfile {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ProfileJson {
            e_x2: self.e_max.twice(),
            longest: self.longest,
            n: self.count,
            c: self.components,
            cover: self.cover_size,
            endoscopic: self.endoscopic,
        })
        .expect("profile serializes")
    }
}

pub fn invariant_profile(alpha: &Multisegment) -> Result<InvariantProfile> {
    invariant_profile_with_cap(alpha, DEFAULT_PARTITION_CAP)
}

pub fn invariant_profile_with_cap(alpha: &Multisegment, cap: usize) -> Result<InvariantProfile> {
    let e_max = alpha.max_value().ok_or(Error::Empty)?;
    let runs = cover_runs(alpha);
    Ok(InvariantProfile {
        e_max,
        longest: alpha.longest(),
        count: alpha.len(),
        components: runs.len(),
        cover_size: runs.iter().map(Segment::len).sum(),
        endoscopic: endoscopic_count_with_cap(alpha, cap)?,
    })
}

/// The maximal runs of consecutive values making up the union of `alpha`.
pub fn cover_runs(alpha: &Multisegment) -> Vec<Segment> {
    let mut runs: Vec<Segment> = Vec::new();
    for (v, _) in alpha.weight().iter() {
        match runs.last_mut() {
            Some(run) if run.end().is_consecutive(v) => *run = Segment::new_unchecked(run.base(), v),
            _ => runs.push(Segment::singleton(v)),
        }
    }
    runs
}

pub fn endoscopic_count(alpha: &Multisegment) -> Result<usize> {
    endoscopic_count_with_cap(alpha, DEFAULT_PARTITION_CAP)
}

/// Maximum `k` over splittings `alpha = a_1 ⊔ ... ⊔ a_k` with
/// `dual(alpha) = dual(a_1) ⊔ ... ⊔ dual(a_k)`, by exhaustive search over the
/// partitions of the multiset `alpha`.
pub fn endoscopic_count_with_cap(alpha: &Multisegment, cap: usize) -> Result<usize> {
    if alpha.is_empty() {
        return Err(Error::Empty);
    }
    if alpha.len() > cap {
        return Err(Error::CapExceeded { what: "segment count for the partition search", size: alpha.len(), cap });
    }
    let types = alpha.multiplicities();
    let mut search = PartitionSearch {
        kinds: types.iter().map(|&(s, _)| s).collect(),
        duals: HashMap::new(),
        best: 1,
    };
    let counts: Vec<usize> = types.iter().map(|&(_, k)| k).collect();
    let target = dual_counts(&mw_dual(alpha));
    search.run(&counts, &counts, target, 0);
    Ok(search.best)
}

type DualCounts = Vec<(Segment, usize)>;

fn dual_counts(ms: &Multisegment) -> DualCounts {
    ms.multiplicities()
}

/// `whole - part` on sorted count lists, or `None` if `part` is not contained.
fn subtract(whole: &DualCounts, part: &DualCounts) -> Option<DualCounts> {
    let mut out = Vec::with_capacity(whole.len());
    let mut it = part.iter().peekable();
    for &(s, k) in whole {
        match it.peek() {
            Some(&&(p, j)) if p == s => {
                it.next();
                if j > k {
                    return None;
                }
                if j < k {
                    out.push((s, k - j));
                }
            }
            _ => out.push((s, k)),
        }
    }
    it.peek().is_none().then_some(out)
}

struct PartitionSearch {
    kinds: Vec<Segment>,
    duals: HashMap<Vec<usize>, DualCounts>,
    best: usize,
}

impl PartitionSearch {
    fn dual_of(&mut self, part: &[usize]) -> DualCounts {
        if let Some(d) = self.duals.get(part) {
            return d.clone();
        }
        let segs = part
            .iter()
            .zip(&self.kinds)
            .flat_map(|(&k, &s)| std::iter::repeat_n(s, k))
            .collect();
        let d = dual_counts(&mw_dual(&Multisegment::from_sorted(segs)));
        self.duals.insert(part.to_vec(), d.clone());
        d
    }

    /// Parts are emitted in lexicographically non-increasing order so each
    /// multiset partition is visited once. `rest` is the dual still to be
    /// matched by the parts yet to come; a part whose dual does not fit in it
    /// cannot belong to a valid splitting.
    fn run(&mut self, remaining: &[usize], bound: &[usize], rest: DualCounts, parts: usize) {
        if remaining.iter().all(|&k| k == 0) {
            self.best = self.best.max(parts);
            return;
        }
        let left: usize = remaining.iter().sum();
        if parts + left <= self.best {
            return;
        }
        let mut part = vec![0; remaining.len()];
        self.sub_vectors(remaining, bound, &mut part, 0, true, &rest, parts);
    }

    #[allow(clippy::too_many_arguments)]
    fn sub_vectors(
        &mut self,
        remaining: &[usize],
        bound: &[usize],
        part: &mut Vec<usize>,
        pos: usize,
        tight: bool,
        rest: &DualCounts,
        parts: usize,
    ) {
        if pos == remaining.len() {
            if part.iter().all(|&k| k == 0) {
                return;
            }
            let d = self.dual_of(part);
            if let Some(next_rest) = subtract(rest, &d) {
                let next_remaining: Vec<usize> = remaining.iter().zip(part.iter()).map(|(r, p)| r - p).collect();
                let next_bound = part.clone();
                self.run(&next_remaining, &next_bound, next_rest, parts + 1);
            }
            return;
        }
        let hi = if tight { remaining[pos].min(bound[pos]) } else { remaining[pos] };
        for k in (0..=hi).rev() {
            part[pos] = k;
            self.sub_vectors(remaining, bound, part, pos + 1, tight && k == bound[pos], rest, parts);
        }
        part[pos] = 0;
    }
}
