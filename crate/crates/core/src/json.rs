//! JSON shapes. Every value is carried as twice its value (`*_x2`, `b2`, `e2`)
//! so half-integers stay exact.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::multisegment::Multisegment;
use crate::ranks::RankTriangle;
use crate::segment::Segment;
use crate::value::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentJson {
    pub b2: i64,
    pub e2: i64,
}

impl From<Segment> for SegmentJson {
    fn from(s: Segment) -> Self {
        SegmentJson { b2: s.base().twice(), e2: s.end().twice() }
    }
}

impl TryFrom<SegmentJson> for Segment {
    type Error = crate::Error;
    fn try_from(s: SegmentJson) -> Result<Segment> {
        Segment::new(Value::from_twice(s.b2), Value::from_twice(s.e2))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultisegmentJson {
    pub segments: Vec<SegmentJson>,
}

impl From<&Multisegment> for MultisegmentJson {
    fn from(ms: &Multisegment) -> Self {
        MultisegmentJson { segments: ms.segments().iter().map(|&s| s.into()).collect() }
    }
}

impl TryFrom<MultisegmentJson> for Multisegment {
    type Error = crate::Error;
    fn try_from(j: MultisegmentJson) -> Result<Multisegment> {
        let segments = j.segments.into_iter().map(Segment::try_from).collect::<Result<Vec<_>>>()?;
        Multisegment::new(segments)
    }
}

impl Multisegment {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MultisegmentJson::from(self)).expect("multisegment serializes")
    }
}

#[derive(Serialize)]
struct RankEntry {
    i_x2: i64,
    j_x2: i64,
    r: u32,
}

impl RankTriangle {
    /// `{"min_x2":..,"max_x2":..,"entries":[{"i_x2":..,"j_x2":..,"r":..}, ..]}`;
    /// the bounds are `null` for an empty triangle.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<RankEntry> = self
            .entries()
            .map(|(i, j, r)| RankEntry { i_x2: i.twice(), j_x2: j.twice(), r })
            .collect();
        let (min, max) = match self.support() {
            Some((a, b)) => (Some(a.twice()), Some(b.twice())),
            None => (None, None),
        };
        serde_json::json!({ "min_x2": min, "max_x2": max, "entries": entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multisegment_json_round_trip() {
        let ms: Multisegment = "{[1/2],[-1/2,3/2]}".parse().unwrap();
        let json = ms.to_json();
        assert_eq!(
            json,
            serde_json::json!({"segments": [{"b2": -1, "e2": 3}, {"b2": 1, "e2": 1}]})
        );
        let back: MultisegmentJson = serde_json::from_value(json).unwrap();
        assert_eq!(Multisegment::try_from(back).unwrap(), ms);
    }

    #[test]
    fn rank_json_flat_map() {
        let r = RankTriangle::of(&Multisegment::from_ints(&[(1, 2)]));
        assert_eq!(
            r.to_json(),
            serde_json::json!({
                "min_x2": 2, "max_x2": 4,
                "entries": [
                    {"i_x2": 2, "j_x2": 2, "r": 1},
                    {"i_x2": 2, "j_x2": 4, "r": 1},
                    {"i_x2": 4, "j_x2": 4, "r": 1}
                ]
            })
        );
        assert_eq!(RankTriangle::empty().to_json()["entries"], serde_json::json!([]));
    }
}
