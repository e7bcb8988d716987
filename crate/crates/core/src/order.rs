//! The rank order on a fixed weight class and the two actions that climb it.

use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::ranks::RankTriangle;

/// `alpha <= beta`: equal weights and entrywise-smaller ranks.
///
/// Multisegments of different weights are incomparable, reported as `false`.
pub fn leq(alpha: &Multisegment, beta: &Multisegment) -> bool {
    alpha.weight() == beta.weight() && RankTriangle::of(alpha).entrywise_le(&RankTriangle::of(beta))
}

/// Rank-level comparison for callers that already hold both triangles.
/// Equal diagonals are required, mirroring [`leq`].
pub fn leq_ranks(alpha: &RankTriangle, beta: &RankTriangle) -> bool {
    alpha.diagonal() == beta.diagonal() && alpha.entrywise_le(beta)
}

fn pair(alpha: &Multisegment, i1: usize, i2: usize) -> Result<(crate::Segment, crate::Segment)> {
    let d1 = alpha.get(i1)?;
    let d2 = alpha.get(i2)?;
    if i1 == i2 {
        return Err(Error::SameIndex(i1));
    }
    Ok((d1, d2))
}

/// Replace `D1, D2` by `D1 ∩ D2, D1 ∪ D2` when they overlap and differ.
pub fn act_union_intersection(alpha: &Multisegment, i1: usize, i2: usize) -> Result<Option<Multisegment>> {
    let (d1, d2) = pair(alpha, i1, i2)?;
    if d1 == d2 {
        return Ok(None);
    }
    let Some(meet) = d1.intersection(&d2) else {
        return Ok(None);
    };
    if d1.contains_segment(&d2) || d2.contains_segment(&d1) {
        // nested: intersection and union are the pair itself
        return Ok(None);
    }
    let join = d1.union(&d2).expect("overlapping segments have a segment union");
    Ok(Some(alpha.replace_pair(i1, i2, &[meet, join])))
}

/// Replace disjoint adjacent `D1, D2` by the single segment `D1 ∪ D2`.
pub fn act_conjunction(alpha: &Multisegment, i1: usize, i2: usize) -> Result<Option<Multisegment>> {
    let (d1, d2) = pair(alpha, i1, i2)?;
    if d1.intersection(&d2).is_some() {
        return Ok(None);
    }
    Ok(d1.union(&d2).map(|join| alpha.replace_pair(i1, i2, &[join])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(pairs: &[(i64, i64)]) -> Multisegment {
        Multisegment::from_ints(pairs)
    }

    #[test]
    fn leq_examples() {
        assert!(leq(&ms(&[(1, 1), (2, 2)]), &ms(&[(1, 2)])));
        let a = ms(&[(1, 3), (2, 4)]);
        assert!(leq(&a, &a));
        assert!(!leq(&ms(&[(1, 2)]), &ms(&[(1, 1), (2, 2)])));
        // different weights are incomparable
        assert!(!leq(&ms(&[(1, 1)]), &ms(&[(1, 2)])));
    }

    #[test]
    fn union_intersection_examples() {
        let a = ms(&[(1, 3), (2, 4)]);
        let b = act_union_intersection(&a, 0, 1).unwrap().unwrap();
        assert_eq!(b, ms(&[(2, 3), (1, 4)]));
        assert!(leq(&a, &b) && a != b);

        assert_eq!(act_union_intersection(&ms(&[(1, 2), (1, 2)]), 0, 1).unwrap(), None);

        let c = ms(&[(-1, 0), (0, 1)]);
        assert_eq!(act_union_intersection(&c, 1, 0).unwrap(), Some(ms(&[(0, 0), (-1, 1)])));
    }

    #[test]
    fn nested_segments_do_not_move() {
        assert_eq!(act_union_intersection(&ms(&[(1, 4), (2, 3)]), 0, 1).unwrap(), None);
    }

    #[test]
    fn conjunction_examples() {
        assert_eq!(act_conjunction(&ms(&[(1, 1), (2, 2)]), 0, 1).unwrap(), Some(ms(&[(1, 2)])));
        assert_eq!(act_conjunction(&ms(&[(1, 1), (3, 3)]), 0, 1).unwrap(), None);
        assert_eq!(act_conjunction(&ms(&[(1, 2), (2, 3)]), 0, 1).unwrap(), None);
    }

    #[test]
    fn index_errors() {
        let a = ms(&[(1, 1), (2, 2)]);
        assert_eq!(act_conjunction(&a, 0, 2), Err(Error::IndexOutOfRange { index: 2, len: 2 }));
        assert_eq!(act_union_intersection(&a, 1, 1), Err(Error::SameIndex(1)));
    }
}
