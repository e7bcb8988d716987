//! The Mœglin–Waldspurger algorithm for the Zelevinsky dual.
//!
//! One iteration walks down from the largest value `e`: it picks the shortest
//! segment ending at `e`, then repeatedly the shortest segment ending one
//! lower that precedes the previous pick. Each picked segment loses its end
//! value and the run of removed values `[m, e]` becomes one segment of the
//! dual. The dual is the collection of emitted segments once nothing is left.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::json::SegmentJson;
use crate::multisegment::Multisegment;
use crate::segment::Segment;
use crate::value::Value;

/// One picked segment of an iteration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainLink {
    /// Position of the segment in the canonical order of the iteration's input.
    pub index: usize,
    pub segment: Segment,
    pub removed: Value,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Iteration {
    /// Picks from the top value downwards.
    pub chain: Vec<ChainLink>,
    pub emitted: Segment,
    pub remainder: Multisegment,
}

impl Iteration {
    /// The picked segments before their end values were removed.
    pub fn chosen(&self) -> Multisegment {
        Multisegment::from_unsorted(self.chain.iter().map(|l| l.segment).collect())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualTrace {
    pub iterations: Vec<Iteration>,
}

impl DualTrace {
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Link {
            segment: SegmentJson,
            removed_x2: i64,
        }
        #[derive(Serialize)]
        struct Iter {
            emitted: SegmentJson,
            chain: Vec<Link>,
        }
        let iters: Vec<Iter> = self
            .iterations
            .iter()
            .map(|it| Iter {
                emitted: it.emitted.into(),
                chain: it
                    .chain
                    .iter()
                    .map(|l| Link { segment: l.segment.into(), removed_x2: l.removed.twice() })
                    .collect(),
            })
            .collect();
        serde_json::to_value(iters).expect("trace serializes")
    }
}

/// Shortest candidate, ties going to the lowest index.
fn shortest(segs: &[Segment], mut eligible: impl FnMut(&Segment) -> bool) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (k, s) in segs.iter().enumerate() {
        if eligible(s) && best.is_none_or(|b| s.len() < segs[b].len()) {
            best = Some(k);
        }
    }
    best
}

/// Picks of one iteration as indices into `segs`, top value first.
fn chain_indices(segs: &[Segment]) -> Vec<usize> {
    let Some(e) = segs.iter().map(Segment::end).max() else {
        return Vec::new();
    };
    let first = shortest(segs, |s| s.end() == e).expect("some segment attains the maximum");
    let mut chain = vec![first];
    let mut current = segs[first];
    let mut m = e;
    while let Some(next) = shortest(segs, |s| s.end() == m.pred() && s.precedes(&current)) {
        chain.push(next);
        current = segs[next];
        m = m.pred();
    }
    chain
}

/// One iteration: the emitted segment `[m, e]`, the remainder and the picks.
pub fn mw_first_segment(alpha: &Multisegment) -> Result<Iteration> {
    if alpha.is_empty() {
        return Err(Error::Empty);
    }
    let segs = alpha.segments();
    let picks = chain_indices(segs);
    let chain: Vec<ChainLink> = picks
        .iter()
        .map(|&k| ChainLink { index: k, segment: segs[k], removed: segs[k].end() })
        .collect();
    let top = chain[0].removed;
    let bottom = chain[chain.len() - 1].removed;
    let mut remainder = Vec::with_capacity(segs.len());
    for (k, s) in segs.iter().enumerate() {
        if picks.contains(&k) {
            remainder.extend(s.without_end());
        } else {
            remainder.push(*s);
        }
    }
    Ok(Iteration {
        chain,
        emitted: Segment::new_unchecked(bottom, top),
        remainder: Multisegment::from_unsorted(remainder),
    })
}

/// The Zelevinsky dual by repeated iterations.
pub fn mw_dual(alpha: &Multisegment) -> Multisegment {
    // Works on an unsorted buffer: ties only ever occur between identical
    // segments, so the order of `segs` does not affect the result.
    let mut segs: Vec<Segment> = alpha.segments().to_vec();
    let mut dual = Vec::new();
    while !segs.is_empty() {
        let mut picks = chain_indices(&segs);
        let top = segs[picks[0]].end();
        let bottom = segs[*picks.last().unwrap()].end();
        dual.push(Segment::new_unchecked(bottom, top));
        picks.sort_unstable_by(|a, b| b.cmp(a));
        for k in picks {
            match segs[k].without_end() {
                Some(shorter) => segs[k] = shorter,
                None => {
                    segs.swap_remove(k);
                }
            }
        }
    }
    Multisegment::from_unsorted(dual)
}

pub fn mw_dual_traced(alpha: &Multisegment) -> (Multisegment, DualTrace) {
    let mut trace = DualTrace::default();
    let mut current = alpha.clone();
    while !current.is_empty() {
        let it = mw_first_segment(&current).expect("non-empty");
        current = it.remainder.clone();
        trace.iterations.push(it);
    }
    let dual = Multisegment::from_unsorted(trace.iterations.iter().map(|it| it.emitted).collect());
    (dual, trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(pairs: &[(i64, i64)]) -> Multisegment {
        Multisegment::from_ints(pairs)
    }

    #[test]
    fn first_iteration_of_ladder_example() {
        let it = mw_first_segment(&ms(&[(1, 1), (2, 2), (3, 5), (4, 6), (6, 7)])).unwrap();
        assert_eq!(it.emitted, Segment::int(5, 7));
        assert_eq!(it.remainder, ms(&[(1, 1), (2, 2), (3, 4), (4, 5), (6, 6)]));
        let removed: Vec<_> = it.chain.iter().map(|l| l.removed).collect();
        assert_eq!(removed, vec![Value::int(7), Value::int(6), Value::int(5)]);
    }

    #[test]
    fn first_iteration_small_cases() {
        let it = mw_first_segment(&ms(&[(4, 4)])).unwrap();
        assert_eq!((it.emitted, it.remainder), (Segment::int(4, 4), Multisegment::empty()));
        let it = mw_first_segment(&ms(&[(1, 2)])).unwrap();
        assert_eq!((it.emitted, it.remainder), (Segment::int(2, 2), ms(&[(1, 1)])));
        assert_eq!(mw_first_segment(&Multisegment::empty()), Err(Error::Empty));
    }

    #[test]
    fn duals_of_worked_examples() {
        let simple = ms(&[(1, 3), (2, 4), (3, 5)]);
        assert_eq!(mw_dual(&simple), simple);
        assert_eq!(
            mw_dual(&ms(&[(1, 1), (2, 2), (3, 5), (4, 6), (6, 7)])),
            ms(&[(1, 4), (4, 6), (5, 7)])
        );
        assert_eq!(mw_dual(&ms(&[(1, 2)])), ms(&[(1, 1), (2, 2)]));
        assert_eq!(mw_dual(&Multisegment::empty()), Multisegment::empty());
    }

    #[test]
    fn traced_two_singletons() {
        let (dual, trace) = mw_dual_traced(&ms(&[(1, 1), (2, 2)]));
        assert_eq!(dual, ms(&[(1, 2)]));
        assert_eq!(trace.iterations.len(), 1);
        let chain: Vec<_> = trace.iterations[0].chain.iter().map(|l| (l.segment, l.removed)).collect();
        assert_eq!(
            chain,
            vec![(Segment::int(2, 2), Value::int(2)), (Segment::int(1, 1), Value::int(1))]
        );
        let (dual, trace) = mw_dual_traced(&Multisegment::empty());
        assert!(dual.is_empty() && trace.iterations.is_empty());
    }

    #[test]
    fn traced_simple_example_follows_the_three_diagonals() {
        let (dual, trace) = mw_dual_traced(&ms(&[(1, 3), (2, 4), (3, 5)]));
        assert_eq!(dual, ms(&[(1, 3), (2, 4), (3, 5)]));
        let chains: Vec<Vec<(Segment, i64)>> = trace
            .iterations
            .iter()
            .map(|it| it.chain.iter().map(|l| (l.segment, l.removed.twice() / 2)).collect())
            .collect();
        // each iteration strips one value from every segment: 5,4,3 then 4,3,2 then 3,2,1
        assert_eq!(
            chains,
            vec![
                vec![(Segment::int(3, 5), 5), (Segment::int(2, 4), 4), (Segment::int(1, 3), 3)],
                vec![(Segment::int(3, 4), 4), (Segment::int(2, 3), 3), (Segment::int(1, 2), 2)],
                vec![(Segment::int(3, 3), 3), (Segment::int(2, 2), 2), (Segment::int(1, 1), 1)],
            ]
        );
        let emitted: Vec<_> = trace.iterations.iter().map(|it| it.emitted).collect();
        assert_eq!(emitted, vec![Segment::int(3, 5), Segment::int(2, 4), Segment::int(1, 3)]);
    }

    #[test]
    fn tie_break_picks_lowest_index() {
        let it = mw_first_segment(&ms(&[(1, 2), (2, 2), (2, 2)])).unwrap();
        assert_eq!(it.chain[0].index, 1);
    }

    #[test]
    fn trace_json_shape() {
        let (_, trace) = mw_dual_traced(&ms(&[(1, 1), (2, 2)]));
        let json = trace.to_json();
        assert_eq!(
            json,
            serde_json::json!([{
                "emitted": {"b2": 2, "e2": 4},
                "chain": [
                    {"segment": {"b2": 4, "e2": 4}, "removed_x2": 4},
                    {"segment": {"b2": 2, "e2": 2}, "removed_x2": 2}
                ]
            }])
        );
    }
}
