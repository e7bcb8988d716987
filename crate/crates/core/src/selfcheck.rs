//! A self-contained battery of the crate's invariants over an exhaustive
//! small corpus plus a seeded random one.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{arthur_decompose, is_ladder, is_simple};
use crate::flow::dual_ranks;
use crate::invariants::invariant_profile_with_cap;
use crate::multisegment::Multisegment;
use crate::mw::{mw_dual, mw_dual_traced};
use crate::ranks::RankTriangle;
use crate::rigidity::{rigidity_sweep, Family};
use crate::segment::Segment;
use crate::space::{all_in, arthur_family, Support, DEFAULT_CONTENT_CAP};
use crate::value::Value;

#[derive(Clone, Debug)]
pub struct SelfCheckOptions {
    pub support: Support,
    pub max_content: usize,
    pub seed: u64,
    pub random: usize,
    /// Test hook: corrupt one network rank so the engine cross-check fails.
    pub inject_fault: bool,
}

impl Default for SelfCheckOptions {
    fn default() -> Self {
        SelfCheckOptions {
            support: Support::ints(1, 5),
            max_content: 7,
            seed: 0,
            random: 1000,
            inject_fault: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    /// A reproducing input and what went wrong.
    pub failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// A random multisegment of at most `max_segments` segments on `0..width`.
pub fn random_multisegment(rng: &mut impl Rng, width: i64, max_segments: usize) -> Multisegment {
    let n = rng.gen_range(1..=max_segments);
    let segs = (0..n)
        .map(|_| {
            let b = rng.gen_range(0..width);
            let e = rng.gen_range(b..width);
            Segment::int(b, e)
        })
        .collect();
    Multisegment::from_unsorted(segs)
}

pub fn random_corpus(seed: u64, count: usize, width: i64, max_segments: usize) -> Vec<Multisegment> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let w = rng.gen_range(1..=width);
            random_multisegment(&mut rng, w, max_segments)
        })
        .collect()
}

/// First element of `corpus` (in order) for which `check` reports a problem.
fn suite<F>(name: &'static str, corpus: &[Multisegment], check: F) -> SuiteResult
where
    F: Fn(&Multisegment) -> std::result::Result<(), String> + Sync,
{
    let failure = corpus
        .par_iter()
        .enumerate()
        .filter_map(|(k, a)| check(a).err().map(|msg| (k, format!("{a}: {msg}"))))
        .min_by_key(|(k, _)| *k)
        .map(|(_, msg)| msg);
    SuiteResult { name, checked: corpus.len(), failure }
}

fn flow_dual_checked(a: &Multisegment, fault: bool) -> std::result::Result<Multisegment, String> {
    let mut r = dual_ranks(a);
    if fault && a.len() >= 2 {
        if let Some((lo, _)) = r.support() {
            r = RankTriangle::from_fn(lo, r.support().unwrap().1, |i, j| {
                r.get(i, j) + u32::from(i == lo && j == lo)
            });
        }
    }
    r.to_multisegment().map_err(|e| e.to_string())
}

fn sweep_suite(name: &'static str, family: Family, support: Support, max_content: usize) -> Result<SuiteResult> {
    let summary = rigidity_sweep(family, support, max_content, &mw_dual)?;
    Ok(SuiteResult {
        name,
        checked: summary.checked,
        failure: summary
            .failures
            .first()
            .map(|r| format!("{}: not rigid, witness {}", r.subject, r.witnesses[0])),
    })
}

pub fn run_selfcheck(opts: &SelfCheckOptions) -> Result<Vec<SuiteResult>> {
    if opts.max_content > DEFAULT_CONTENT_CAP {
        return Err(Error::CapExceeded { what: "selfcheck content", size: opts.max_content, cap: DEFAULT_CONTENT_CAP });
    }
    let exhaustive = all_in(opts.support, opts.max_content)?;
    let random = random_corpus(opts.seed, opts.random, 8, 12);
    let both: Vec<Multisegment> = exhaustive.iter().chain(&random).cloned().collect();
    let cap = opts.max_content.max(crate::invariants::DEFAULT_PARTITION_CAP);
    let fault = opts.inject_fault;

    let mut out = vec![
        suite("involution", &both, |a| {
            let back = mw_dual(&mw_dual(a));
            (back == *a).then_some(()).ok_or(format!("dual of dual is {back}"))
        }),
        suite("mw-equals-flow", &both, |a| {
            let f = flow_dual_checked(a, fault)?;
            let m = mw_dual(a);
            (f == m).then_some(()).ok_or(format!("mw {m} but flow {f}"))
        }),
        suite("rank-round-trip", &both, |a| {
            let back = RankTriangle::of(a).to_multisegment().map_err(|e| e.to_string())?;
            (back == *a).then_some(()).ok_or(format!("round trip gave {back}"))
        }),
        suite("weight-preserved", &both, |a| {
            (mw_dual(a).weight() == a.weight()).then_some(()).ok_or("dual changes the weight".into())
        }),
        suite("increasing-chain-lengths", &both, |a| {
            let (_, trace) = mw_dual_traced(a);
            for it in &trace.iterations {
                if it.chain.windows(2).any(|w| w[0].segment.len() > w[1].segment.len()) {
                    return Err(format!("chain emitting {} shrinks", it.emitted));
                }
                if !is_ladder(&it.chosen()) {
                    return Err(format!("chain emitting {} is not a ladder", it.emitted));
                }
            }
            Ok(())
        }),
        suite("basic-bounds", &exhaustive, |a| {
            let d = mw_dual(a);
            let p = invariant_profile_with_cap(a, cap).map_err(|e| e.to_string())?;
            if d.len() < a.longest() || a.len() < d.longest() {
                return Err(format!("dual {d} violates n~ >= L or n >= L~"));
            }
            if p.endoscopic < p.components {
                return Err(format!("C = {} < c = {}", p.endoscopic, p.components));
            }
            Ok(())
        }),
        suite("simple-dual-count", &exhaustive, |a| {
            if is_simple(a) && mw_dual(a).len() != a.longest() {
                return Err("n~ != L".into());
            }
            Ok(())
        }),
        suite("ladder-characterisation", &exhaustive, |a| {
            let p = invariant_profile_with_cap(a, cap).map_err(|e| e.to_string())?;
            let lhs = mw_dual(a).len() + a.len();
            let (with_c, with_big_c) = (p.cover_size + p.components, p.cover_size + p.endoscopic);
            let balanced = lhs == with_big_c && with_big_c == with_c;
            if is_ladder(a) != balanced {
                return Err(format!("ladder = {}, n~ + n = {lhs}, S + C = {with_big_c}, S + c = {with_c}", is_ladder(a)));
            }
            if !is_ladder(a) && lhs <= with_big_c {
                return Err(format!("non-ladder with n~ + n = {lhs} <= S + C = {with_big_c}"));
            }
            Ok(())
        }),
    ];

    let arthur = arthur_family(arthur_support(opts.support), opts.max_content);
    out.push(suite("arthur-top-block-splits", &arthur, |a| {
        let d = arthur_decompose(a).map_err(|e| e.to_string())?.ok_or("not Arthur type")?;
        let top = d.top_block().expect("non-empty");
        let rest = a.difference(&top).ok_or("top block not contained")?;
        let split = mw_dual(&top).union(&mw_dual(&rest)).map_err(|e| e.to_string())?;
        (split == mw_dual(a)).then_some(()).ok_or(format!("top block {top} does not split the dual"))
    }));
    out.push(sweep_suite("rigidity-simple", Family::Simple, opts.support, opts.max_content)?);
    out.push(sweep_suite("rigidity-ladder", Family::Ladder, opts.support, opts.max_content)?);
    out.push(sweep_suite("rigidity-arthur", Family::Arthur, arthur_support(opts.support), opts.max_content)?);
    Ok(out)
}

/// The support shifted so its midpoint sits at zero.
fn arthur_support(support: Support) -> Support {
    let c = Value::midpoint(support.lo, support.hi).expect("one coset");
    Support { lo: support.lo - c, hi: support.hi - c }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SelfCheckOptions {
        SelfCheckOptions { support: Support::ints(1, 4), max_content: 5, random: 200, ..Default::default() }
    }

    #[test]
    fn small_selfcheck_passes() {
        let results = run_selfcheck(&small()).unwrap();
        for r in &results {
            assert!(r.passed(), "{}: {:?}", r.name, r.failure);
        }
    }

    #[test]
    fn injected_fault_is_caught() {
        let results = run_selfcheck(&SelfCheckOptions { inject_fault: true, ..small() }).unwrap();
        let engines = results.iter().find(|r| r.name == "mw-equals-flow").unwrap();
        assert!(engines.failure.is_some());
    }

    #[test]
    fn random_corpus_is_seeded() {
        assert_eq!(random_corpus(7, 20, 8, 12), random_corpus(7, 20, 8, 12));
        assert_ne!(random_corpus(7, 20, 8, 12), random_corpus(8, 20, 8, 12));
        for a in random_corpus(1, 200, 8, 12) {
            assert!(a.len() <= 12 && a.max_value().unwrap() <= Value::int(7));
        }
    }
}
