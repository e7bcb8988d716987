use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::segment::Segment;
use crate::value::Value;

/// A finite multiset of segments on a single coset of the half-integer line.
///
/// Segments are kept in canonical `(b, e)` order, so derived equality is
/// multiset equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multisegment {
    segments: Vec<Segment>,
}

impl Multisegment {
    pub fn empty() -> Self {
        Multisegment::default()
    }

    pub fn new(mut segments: Vec<Segment>) -> Result<Self> {
        if let Some(first) = segments.first() {
            let anchor = first.base();
            if let Some(bad) = segments.iter().find(|s| !s.base().same_coset(anchor)) {
                return Err(Error::MixedCoset(anchor, bad.base()));
            }
        }
        segments.sort_unstable();
        Ok(Multisegment { segments })
    }

    /// Build from integer pairs `(b, e)`. Panics on `b > e`.
    pub fn from_ints(pairs: &[(i64, i64)]) -> Self {
        let segments = pairs.iter().map(|&(b, e)| Segment::int(b, e)).collect();
        Multisegment::new(segments).expect("integer segments share a coset")
    }

    /// Caller guarantees a single coset; order is restored here.
    pub(crate) fn from_unsorted(mut segments: Vec<Segment>) -> Self {
        segments.sort_unstable();
        Multisegment { segments }
    }

    pub(crate) fn from_sorted(segments: Vec<Segment>) -> Self {
        debug_assert!(segments.windows(2).all(|w| w[0] <= w[1]));
        Multisegment { segments }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn into_segments(self) -> Vec<Segment> {
        self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn get(&self, index: usize) -> Result<Segment> {
        self.segments
            .get(index)
            .copied()
            .ok_or(Error::IndexOutOfRange { index, len: self.len() })
    }

    /// Total number of values counted with multiplicity.
    pub fn content(&self) -> usize {
        self.segments.iter().map(Segment::len).sum()
    }

    pub fn min_value(&self) -> Option<Value> {
        self.segments.first().map(Segment::base)
    }

    pub fn max_value(&self) -> Option<Value> {
        self.segments.iter().map(Segment::end).max()
    }

    pub fn longest(&self) -> usize {
        self.segments.iter().map(Segment::len).max().unwrap_or(0)
    }

    pub fn weight(&self) -> Weight {
        let mut counts = BTreeMap::new();
        for s in &self.segments {
            for v in s.values() {
                *counts.entry(v).or_insert(0) += 1;
            }
        }
        Weight { counts }
    }

    pub fn shifted(&self, by: Value) -> Multisegment {
        Multisegment::from_sorted(self.segments.iter().map(|s| s.shifted(by)).collect())
    }

    pub fn mirrored(&self) -> Multisegment {
        Multisegment::from_unsorted(self.segments.iter().map(Segment::mirrored).collect())
    }

    /// Multiset sum. Errors if the two live on different cosets.
    pub fn union(&self, other: &Multisegment) -> Result<Multisegment> {
        if let (Some(a), Some(b)) = (self.min_value(), other.min_value()) {
            if !a.same_coset(b) {
                return Err(Error::MixedCoset(a, b));
            }
        }
        let mut segments = Vec::with_capacity(self.len() + other.len());
        segments.extend_from_slice(&self.segments);
        segments.extend_from_slice(&other.segments);
        Ok(Multisegment::from_unsorted(segments))
    }

    /// Multiset difference `self - sub`, or `None` if `sub` is not contained.
    pub fn difference(&self, sub: &Multisegment) -> Option<Multisegment> {
        let mut rest = Vec::with_capacity(self.len());
        let mut it = sub.segments.iter().peekable();
        for s in &self.segments {
            if it.peek() == Some(&s) {
                it.next();
            } else {
                rest.push(*s);
            }
        }
        it.peek().is_none().then(|| Multisegment::from_sorted(rest))
    }

    pub fn contains_sub(&self, sub: &Multisegment) -> bool {
        self.difference(sub).is_some()
    }

    /// Distinct segments with their multiplicities, in canonical order.
    pub fn multiplicities(&self) -> Vec<(Segment, usize)> {
        let mut out: Vec<(Segment, usize)> = Vec::new();
        for s in &self.segments {
            match out.last_mut() {
                Some((last, k)) if last == s => *k += 1,
                _ => out.push((*s, 1)),
            }
        }
        out
    }

    /// Replace the segments at two indices by `replacement`.
    pub(crate) fn replace_pair(&self, i1: usize, i2: usize, replacement: &[Segment]) -> Multisegment {
        let mut segments: Vec<Segment> = self
            .segments
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i1 && k != i2)
            .map(|(_, s)| *s)
            .collect();
        segments.extend_from_slice(replacement);
        Multisegment::from_unsorted(segments)
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, s) in self.segments.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<Segment> for Result<Multisegment> {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        Multisegment::new(iter.into_iter().collect())
    }
}

/// Multiplicity of every value across all segments of a multisegment.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    counts: BTreeMap<Value, usize>,
}

impl Weight {
    /// Zero counts are dropped. Errors on mixed cosets.
    pub fn new(counts: impl IntoIterator<Item = (Value, usize)>) -> Result<Self> {
        let counts: BTreeMap<Value, usize> = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        if let Some((&first, _)) = counts.iter().next() {
            if let Some(&bad) = counts.keys().find(|v| !v.same_coset(first)) {
                return Err(Error::MixedCoset(first, bad));
            }
        }
        Ok(Weight { counts })
    }

    pub fn from_ints(pairs: &[(i64, usize)]) -> Self {
        Weight::new(pairs.iter().map(|&(v, c)| (Value::int(v), c))).expect("integer weight")
    }

    pub fn count(&self, v: Value) -> usize {
        self.counts.get(&v).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Value, usize)> + '_ {
        self.counts.iter().map(|(&v, &c)| (v, c))
    }

    pub fn min_value(&self) -> Option<Value> {
        self.counts.keys().next().copied()
    }

    pub fn max_value(&self) -> Option<Value> {
        self.counts.keys().next_back().copied()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (v, c)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}:{c}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_any_input() {
        let a = Multisegment::from_ints(&[(2, 4), (1, 3)]);
        assert_eq!(a.to_string(), "{[1,3],[2,4]}");
        assert_eq!(Multisegment::empty().to_string(), "{}");
    }

    #[test]
    fn weight_examples() {
        assert_eq!(
            Multisegment::from_ints(&[(1, 3), (2, 4), (3, 5)]).weight(),
            Weight::from_ints(&[(1, 1), (2, 2), (3, 3), (4, 2), (5, 1)])
        );
        assert_eq!(Multisegment::from_ints(&[(7, 7)]).weight(), Weight::from_ints(&[(7, 1)]));
        assert_eq!(
            Multisegment::from_ints(&[(1, 1), (1, 2), (2, 2)]).weight(),
            Weight::from_ints(&[(1, 2), (2, 2)])
        );
    }

    #[test]
    fn difference_respects_multiplicity() {
        let a = Multisegment::from_ints(&[(0, 1), (0, 1), (2, 2)]);
        let one = Multisegment::from_ints(&[(0, 1)]);
        let rest = a.difference(&one).unwrap();
        assert_eq!(rest, Multisegment::from_ints(&[(0, 1), (2, 2)]));
        let three = Multisegment::from_ints(&[(0, 1), (0, 1), (0, 1)]);
        assert!(a.difference(&three).is_none());
    }

    #[test]
    fn mixed_cosets_rejected() {
        let s1 = Segment::int(0, 0);
        let s2 = Segment::singleton(Value::from_twice(1));
        assert!(matches!(Multisegment::new(vec![s1, s2]), Err(Error::MixedCoset(..))));
    }
}
