use std::fmt;

use crate::error::{Error, Result};
use crate::value::Value;

/// A run of consecutive values `b, b+1, ..., e`.
///
/// The derived ordering is lexicographic on `(b, e)`, which is the canonical
/// order used everywhere a multisegment is stored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    b: Value,
    e: Value,
}

impl Segment {
    pub fn new(b: Value, e: Value) -> Result<Self> {
        if !b.same_coset(e) {
            return Err(Error::MixedCoset(b, e));
        }
        if b > e {
            return Err(Error::BaseAfterEnd { b, e });
        }
        Ok(Segment { b, e })
    }

    /// Integer segment `[b, e]`. Panics if `b > e`.
    pub fn int(b: i64, e: i64) -> Self {
        Segment::new(Value::int(b), Value::int(e)).expect("integer segment with b <= e")
    }

    pub fn singleton(v: Value) -> Self {
        Segment { b: v, e: v }
    }

    pub(crate) fn new_unchecked(b: Value, e: Value) -> Self {
        debug_assert!(b <= e && b.same_coset(e));
        Segment { b, e }
    }

    pub fn base(&self) -> Value {
        self.b
    }

    pub fn end(&self) -> Value {
        self.e
    }

    pub fn len(&self) -> usize {
        (self.b.steps_to(self.e) + 1) as usize
    }

    /// Segments are never empty; provided for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: Value) -> bool {
        self.b <= v && v <= self.e && self.b.same_coset(v)
    }

    pub fn contains_segment(&self, other: &Segment) -> bool {
        self.b <= other.b && other.e <= self.e
    }

    pub fn values(&self) -> impl Iterator<Item = Value> {
        let b = self.b;
        (0..self.len() as i64).map(move |k| b.offset(k))
    }

    /// `self` precedes `other`: `b1 < b2`, `e1 < e2` and `b2 <= e1 + 1`.
    pub fn precedes(&self, other: &Segment) -> bool {
        self.b < other.b && self.e < other.e && other.b <= self.e.succ()
    }

    pub fn intersection(&self, other: &Segment) -> Option<Segment> {
        let b = self.b.max(other.b);
        let e = self.e.min(other.e);
        (b <= e).then(|| Segment::new_unchecked(b, e))
    }

    /// The union, when it is itself a run of consecutive values.
    pub fn union(&self, other: &Segment) -> Option<Segment> {
        let (lo, hi) = if self.b <= other.b { (self, other) } else { (other, self) };
        (hi.b <= lo.e.succ()).then(|| Segment::new_unchecked(lo.b, lo.e.max(hi.e)))
    }

    pub fn shifted(&self, by: Value) -> Segment {
        Segment::new_unchecked(self.b + by, self.e + by)
    }

    /// Reflection `[b, e] -> [-e, -b]`.
    pub fn mirrored(&self) -> Segment {
        Segment::new_unchecked(-self.e, -self.b)
    }

    /// Drop the end value; `None` if the segment was a singleton.
    pub fn without_end(&self) -> Option<Segment> {
        (self.b < self.e).then(|| Segment::new_unchecked(self.b, self.e.pred()))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == self.e {
            write!(f, "[{}]", self.b)
        } else {
            write!(f, "[{},{}]", self.b, self.e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedes_examples() {
        assert!(Segment::int(1, 1).precedes(&Segment::int(2, 2)));
        assert!(!Segment::int(1, 2).precedes(&Segment::int(1, 2)));
        assert!(!Segment::int(1, 1).precedes(&Segment::int(3, 3)));
        assert!(Segment::int(1, 3).precedes(&Segment::int(2, 4)));
        assert!(!Segment::int(1, 4).precedes(&Segment::int(2, 3)));
    }

    #[test]
    fn rejects_bad_segments() {
        assert_eq!(
            Segment::new(Value::int(3), Value::int(1)),
            Err(Error::BaseAfterEnd { b: Value::int(3), e: Value::int(1) })
        );
        assert!(matches!(
            Segment::new(Value::int(0), Value::from_twice(1)),
            Err(Error::MixedCoset(..))
        ));
    }

    #[test]
    fn union_and_intersection() {
        let a = Segment::int(1, 3);
        let b = Segment::int(2, 4);
        assert_eq!(a.intersection(&b), Some(Segment::int(2, 3)));
        assert_eq!(a.union(&b), Some(Segment::int(1, 4)));
        assert_eq!(Segment::int(1, 1).union(&Segment::int(2, 2)), Some(Segment::int(1, 2)));
        assert_eq!(Segment::int(1, 1).union(&Segment::int(3, 3)), None);
        assert_eq!(Segment::int(1, 1).intersection(&Segment::int(2, 2)), None);
    }

    #[test]
    fn half_integer_length() {
        let s = Segment::new(Value::from_twice(-1), Value::from_twice(3)).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_string(), "[-1/2,3/2]");
        assert_eq!(s.mirrored().to_string(), "[-3/2,1/2]");
    }
}
