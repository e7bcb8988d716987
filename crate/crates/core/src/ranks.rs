//! Rank triangles `r[i,j]`: the number of segments `[k,l]` with `k <= i` and
//! `j <= l`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::segment::Segment;
use crate::value::Value;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankTriangle {
    min: Value,
    width: usize,
    // row-major width x width, only p <= q is populated
    data: Vec<u32>,
}

impl RankTriangle {
    pub fn empty() -> Self {
        RankTriangle { min: Value::ZERO, width: 0, data: Vec::new() }
    }

    /// Triangle over `[min, max]` with entries computed by `f(i, j)` for `i <= j`.
    pub fn from_fn(min: Value, max: Value, mut f: impl FnMut(Value, Value) -> u32) -> Self {
        if max < min {
            return RankTriangle::empty();
        }
        let width = (min.steps_to(max) + 1) as usize;
        let mut data = vec![0; width * width];
        for p in 0..width {
            for q in p..width {
                data[p * width + q] = f(min.offset(p as i64), min.offset(q as i64));
            }
        }
        RankTriangle { min, width, data }
    }

    pub fn of(ms: &Multisegment) -> Self {
        let (Some(min), Some(max)) = (ms.min_value(), ms.max_value()) else {
            return RankTriangle::empty();
        };
        let width = (min.steps_to(max) + 1) as usize;
        let mut data = vec![0u32; width * width];
        for s in ms.segments() {
            let lo = min.steps_to(s.base()) as usize;
            let hi = min.steps_to(s.end()) as usize;
            for p in lo..=hi {
                for q in p..=hi {
                    data[p * width + q] += 1;
                }
            }
        }
        RankTriangle { min, width, data }
    }

    pub fn is_empty(&self) -> bool {
        self.width == 0
    }

    /// Inclusive support `[min, max]`, or `None` when empty.
    pub fn support(&self) -> Option<(Value, Value)> {
        (self.width > 0).then(|| (self.min, self.min.offset(self.width as i64 - 1)))
    }

    pub fn width(&self) -> usize {
        self.width
    }

    fn index(&self, i: Value, j: Value) -> Option<usize> {
        if self.width == 0 || i > j || !i.same_coset(self.min) || !j.same_coset(self.min) {
            return None;
        }
        let p = self.min.steps_to(i);
        let q = self.min.steps_to(j);
        (p >= 0 && (q as usize) < self.width).then(|| p as usize * self.width + q as usize)
    }

    /// `r[i,j]`; zero outside the support.
    pub fn get(&self, i: Value, j: Value) -> u32 {
        self.index(i, j).map_or(0, |k| self.data[k])
    }

    /// Inclusion-exclusion `r[i,j] - r[i-1,j] - r[i,j+1] + r[i-1,j+1]`.
    pub fn multiplicity(&self, i: Value, j: Value) -> i64 {
        self.get(i, j) as i64 - self.get(i.pred(), j) as i64 - self.get(i, j.succ()) as i64
            + self.get(i.pred(), j.succ()) as i64
    }

    /// All `(i, j, r[i,j])` with `i <= j`, ordered by `i` then `j`.
    pub fn entries(&self) -> impl Iterator<Item = (Value, Value, u32)> + '_ {
        let w = self.width;
        (0..w).flat_map(move |p| {
            (p..w).map(move |q| {
                (self.min.offset(p as i64), self.min.offset(q as i64), self.data[p * w + q])
            })
        })
    }

    /// Reconstruct the multisegment with `m[i,j]` copies of `[i,j]`.
    pub fn to_multisegment(&self) -> Result<Multisegment> {
        let mut segments = Vec::new();
        for (i, j, _) in self.entries() {
            let m = self.multiplicity(i, j);
            if m < 0 {
                return Err(Error::NegativeMultiplicity { i, j, m });
            }
            segments.extend(std::iter::repeat_n(Segment::new_unchecked(i, j), m as usize));
        }
        Ok(Multisegment::from_sorted(segments))
    }

    /// Entrywise `self <= other` over the union of both supports.
    pub fn entrywise_le(&self, other: &RankTriangle) -> bool {
        if self.min == other.min && self.width == other.width {
            return self.data.iter().zip(&other.data).all(|(a, b)| a <= b);
        }
        self.entries().all(|(i, j, r)| r <= other.get(i, j))
    }

    /// Top row `r[i,i]`.
    pub fn diagonal(&self) -> Vec<(Value, u32)> {
        (0..self.width)
            .map(|p| (self.min.offset(p as i64), self.data[p * self.width + p]))
            .collect()
    }

    /// Staggered layout: row `d` holds the entries `r[i, i+d]`.
    pub fn render(&self) -> String {
        if self.width == 0 {
            return "(empty rank triangle)\n".to_string();
        }
        let labels: Vec<String> = (0..self.width).map(|p| self.min.offset(p as i64).to_string()).collect();
        let cell = self
            .data
            .iter()
            .map(|r| r.to_string().len())
            .chain(labels.iter().map(String::len))
            .max()
            .unwrap_or(1)
            .max(1);
        let half = cell.div_ceil(2);
        let mut out = String::new();
        let mut header = String::new();
        for label in &labels {
            let _ = write!(header, "{label:>cell$}{:half$}", "");
        }
        let _ = writeln!(out, "{}", header.trim_end());
        for d in 0..self.width {
            let mut line = " ".repeat(d * (cell + half) / 2);
            for p in 0..self.width - d {
                let r = self.data[p * self.width + p + d];
                let _ = write!(line, "{r:>cell$}{:half$}", "");
            }
            let _ = writeln!(out, "{}", line.trim_end());
        }
        out
    }
}

pub fn ranks(ms: &Multisegment) -> RankTriangle {
    RankTriangle::of(ms)
}

pub fn multisegment_from_ranks(r: &RankTriangle) -> Result<Multisegment> {
    r.to_multisegment()
}
