//! The rigidity property: `alpha <= beta` and `dual(alpha) <= dual(beta)`
//! force `beta = alpha`.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::flow_dual;
use crate::multisegment::{Multisegment, Weight};
use crate::mw::mw_dual;
use crate::ranks::RankTriangle;
use crate::space::{
    action_closure_with_cap, all_in, arthur_family, enumerate_weight_with_cap, ladder_family, simple_family,
    Support, DEFAULT_CONTENT_CAP,
};

/// Which algorithm computes duals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Mw,
    Flow,
}

impl Engine {
    pub fn dual(self, alpha: &Multisegment) -> Multisegment {
        match self {
            Engine::Mw => mw_dual(alpha),
            Engine::Flow => flow_dual(alpha).expect("network ranks are always realizable"),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Engine::Mw => "mw",
            Engine::Flow => "flow",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Filter the whole weight class by the rank order.
    Exhaustive,
    /// Explore only what the two actions reach.
    ActionClosure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub subject: Multisegment,
    pub singleton: bool,
    /// Every `beta != subject` above it whose dual is above the subject's dual.
    pub witnesses: Vec<Multisegment>,
    pub class_size: usize,
    pub method: Method,
}

impl RigidityReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "subject": self.subject.to_json(),
            "subject_text": self.subject.to_string(),
            "singleton": self.singleton,
            "witnesses": self.witnesses.iter().map(Multisegment::to_string).collect::<Vec<_>>(),
            "class_size": self.class_size,
            "method": self.method,
        })
    }
}

/// One weight class with ranks of every member and lazily computed, shared
/// ranks of their duals.
pub struct WeightClass<'d> {
    members: Vec<Multisegment>,
    ranks: Vec<RankTriangle>,
    dual_ranks: Vec<OnceLock<RankTriangle>>,
    dual: &'d (dyn Fn(&Multisegment) -> Multisegment + Sync),
}

impl<'d> WeightClass<'d> {
    pub fn new(w: &Weight, cap: usize, dual: &'d (dyn Fn(&Multisegment) -> Multisegment + Sync)) -> Result<Self> {
        let members = enumerate_weight_with_cap(w, cap)?;
        let ranks = members.iter().map(RankTriangle::of).collect();
        let dual_ranks = members.iter().map(|_| OnceLock::new()).collect();
        Ok(WeightClass { members, ranks, dual_ranks, dual })
    }

    pub fn members(&self) -> &[Multisegment] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn dual_rank(&self, k: usize) -> &RankTriangle {
        self.dual_ranks[k].get_or_init(|| RankTriangle::of(&(self.dual)(&self.members[k])))
    }

    fn position(&self, alpha: &Multisegment) -> Option<usize> {
        self.members.binary_search(alpha).ok()
    }

    /// Rigidity of `alpha`, which must belong to this class.
    pub fn check(&self, alpha: &Multisegment) -> RigidityReport {
        let k = self.position(alpha).expect("subject belongs to its weight class");
        let r = &self.ranks[k];
        let rd = self.dual_rank(k);
        let witnesses = (0..self.members.len())
            .filter(|&j| j != k && r.entrywise_le(&self.ranks[j]) && rd.entrywise_le(self.dual_rank(j)))
            .map(|j| self.members[j].clone())
            .collect::<Vec<_>>();
        RigidityReport {
            subject: alpha.clone(),
            singleton: witnesses.is_empty(),
            witnesses,
            class_size: self.members.len(),
            method: Method::Exhaustive,
        }
    }
}

pub fn rigidity_check(alpha: &Multisegment, dual: &(dyn Fn(&Multisegment) -> Multisegment + Sync)) -> Result<RigidityReport> {
    rigidity_check_with(alpha, dual, Method::Exhaustive, DEFAULT_CONTENT_CAP)
}

pub fn rigidity_check_with(
    alpha: &Multisegment,
    dual: &(dyn Fn(&Multisegment) -> Multisegment + Sync),
    method: Method,
    cap: usize,
) -> Result<RigidityReport> {
    match method {
        Method::Exhaustive => Ok(WeightClass::new(&alpha.weight(), cap, dual)?.check(alpha)),
        Method::ActionClosure => {
            let class_size = enumerate_weight_with_cap(&alpha.weight(), cap)?.len();
            let rd = RankTriangle::of(&dual(alpha));
            let witnesses: Vec<Multisegment> = action_closure_with_cap(alpha, cap)?
                .into_iter()
                .filter(|b| b != alpha && rd.entrywise_le(&RankTriangle::of(&dual(b))))
                .collect();
            Ok(RigidityReport {
                subject: alpha.clone(),
                singleton: witnesses.is_empty(),
                witnesses,
                class_size,
                method,
            })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Simple,
    Ladder,
    Arthur,
    All,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simple" => Ok(Family::Simple),
            "ladder" => Ok(Family::Ladder),
            "arthur" => Ok(Family::Arthur),
            "all" => Ok(Family::All),
            _ => Err(Error::Bounds(format!("unknown family {s:?}"))),
        }
    }
}

impl Family {
    pub fn members(self, support: Support, max_content: usize) -> Result<Vec<Multisegment>> {
        Ok(match self {
            Family::Simple => simple_family(support, max_content),
            Family::Ladder => ladder_family(support, max_content),
            Family::Arthur => arthur_family(support, max_content),
            Family::All => all_in(support, max_content)?,
        })
    }
}

#[derive(Clone, Debug)]
pub struct SweepSummary {
    pub checked: usize,
    pub classes: usize,
    /// Failing reports in canonical subject order.
    pub failures: Vec<RigidityReport>,
    pub wall_ms: u128,
}

impl SweepSummary {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "summary": {
                "checked": self.checked,
                "classes": self.classes,
                "failures": self.failures.len(),
                "wall_ms": self.wall_ms as u64,
            }
        })
    }
}

/// Check every member of `subjects`, one weight class at a time.
pub fn rigidity_sweep_subjects(
    subjects: &[Multisegment],
    dual: &(dyn Fn(&Multisegment) -> Multisegment + Sync),
    cap: usize,
) -> Result<(Vec<RigidityReport>, usize)> {
    let mut by_weight: BTreeMap<Weight, Vec<&Multisegment>> = BTreeMap::new();
    for s in subjects {
        by_weight.entry(s.weight()).or_default().push(s);
    }
    let classes = by_weight.len();
    let groups: Vec<(Weight, Vec<&Multisegment>)> = by_weight.into_iter().collect();
    let reports: Vec<Vec<RigidityReport>> = groups
        .par_iter()
        .map(|(w, members)| -> Result<Vec<RigidityReport>> {
            let class = WeightClass::new(w, cap, dual)?;
            Ok(members.iter().map(|m| class.check(m)).collect())
        })
        .collect::<Result<_>>()?;
    let mut all: Vec<RigidityReport> = reports.into_iter().flatten().collect();
    all.sort_by(|a, b| a.subject.cmp(&b.subject));
    Ok((all, classes))
}

pub fn rigidity_sweep(
    family: Family,
    support: Support,
    max_content: usize,
    dual: &(dyn Fn(&Multisegment) -> Multisegment + Sync),
) -> Result<SweepSummary> {
    if max_content > DEFAULT_CONTENT_CAP {
        return Err(Error::CapExceeded { what: "sweep content", size: max_content, cap: DEFAULT_CONTENT_CAP });
    }
    let start = Instant::now();
    let subjects = family.members(support, max_content)?;
    let (reports, classes) = rigidity_sweep_subjects(&subjects, dual, DEFAULT_CONTENT_CAP)?;
    Ok(SweepSummary {
        checked: reports.len(),
        classes,
        failures: reports.into_iter().filter(|r| !r.singleton).collect(),
        wall_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::leq;

    fn ms(pairs: &[(i64, i64)]) -> Multisegment {
        Multisegment::from_ints(pairs)
    }

    #[test]
    fn symmetric_pair_is_rigid() {
        let a = ms(&[(-1, 0), (0, 1)]);
        let report = rigidity_check(&a, &mw_dual).unwrap();
        assert!(report.singleton);
        // the sole proper upper element fails on the dual side
        let above = ms(&[(-1, 1), (0, 0)]);
        assert!(leq(&a, &above));
        assert_eq!(mw_dual(&above), ms(&[(-1, -1), (0, 0), (0, 0), (1, 1)]));
        assert!(!leq(&mw_dual(&a), &mw_dual(&above)));
    }

    #[test]
    fn single_segments_and_simple_example() {
        for a in [ms(&[(1, 4)]), ms(&[(0, 0)]), ms(&[(1, 3), (2, 4), (3, 5)])] {
            assert!(rigidity_check(&a, &mw_dual).unwrap().singleton, "{a}");
        }
    }

    #[test]
    fn non_rigid_subjects_have_verified_witnesses() {
        let subjects = all_in(Support::ints(1, 3), 5).unwrap();
        let mut failing = 0;
        for a in &subjects {
            let report = rigidity_check(a, &mw_dual).unwrap();
            assert_eq!(report.singleton, report.witnesses.is_empty());
            for b in &report.witnesses {
                assert!(leq(a, b) && leq(&mw_dual(a), &mw_dual(b)) && b != a);
            }
            failing += usize::from(!report.singleton);
        }
        assert!(failing > 0, "some small multisegment should fail rigidity");
    }

    #[test]
    fn action_closure_method_agrees_on_small_cases() {
        for a in [ms(&[(1, 1), (2, 2), (2, 3)]), ms(&[(-1, 0), (0, 1)]), ms(&[(1, 2), (2, 2), (1, 1)])] {
            let ex = rigidity_check_with(&a, &mw_dual, Method::Exhaustive, 14).unwrap();
            let ac = rigidity_check_with(&a, &mw_dual, Method::ActionClosure, 14).unwrap();
            assert_eq!(ex.witnesses, ac.witnesses);
            assert_eq!(ac.method, Method::ActionClosure);
        }
    }

    #[test]
    fn sweep_cap() {
        assert!(matches!(
            rigidity_sweep(Family::Simple, Support::ints(1, 5), 15, &mw_dual),
            Err(Error::CapExceeded { .. })
        ));
    }
}
