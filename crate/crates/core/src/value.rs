use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A point of the half-integer line, stored as twice its value.
///
/// Integers and half-integers are both exact: `Value::from_twice(3)` is 3/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Value(i64);

impl Value {
    pub const ZERO: Value = Value(0);
    /// The distance between consecutive values.
    pub const ONE: Value = Value(2);

    pub const fn from_twice(twice: i64) -> Self {
        Value(twice)
    }

    pub const fn int(v: i64) -> Self {
        Value(2 * v)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// Two values lie in the same coset when their difference is an integer.
    pub const fn same_coset(self, other: Value) -> bool {
        (self.0 - other.0) % 2 == 0
    }

    pub const fn succ(self) -> Self {
        Value(self.0 + 2)
    }

    pub const fn pred(self) -> Self {
        Value(self.0 - 2)
    }

    pub const fn is_consecutive(self, next: Value) -> bool {
        next.0 - self.0 == 2
    }

    /// Number of unit steps from `self` up to `other`; both must share a coset.
    pub fn steps_to(self, other: Value) -> i64 {
        debug_assert!(self.same_coset(other));
        (other.0 - self.0) / 2
    }

    /// Shift by a whole number of unit steps.
    pub const fn offset(self, steps: i64) -> Self {
        Value(self.0 + 2 * steps)
    }

    /// Midpoint of two values, which may land in the other coset.
    pub fn midpoint(a: Value, b: Value) -> Option<Value> {
        let sum = a.0 + b.0;
        (sum % 2 == 0).then_some(Value(sum / 2))
    }
}

impl Add for Value {
    type Output = Value;
    fn add(self, rhs: Value) -> Value {
        Value(self.0 + rhs.0)
    }
}

impl Sub for Value {
    type Output = Value;
    fn sub(self, rhs: Value) -> Value {
        Value(self.0 - rhs.0)
    }
}

impl Neg for Value {
    type Output = Value;
    fn neg(self) -> Value {
        Value(-self.0)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::int(v)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}
