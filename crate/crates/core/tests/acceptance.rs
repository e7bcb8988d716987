//! Acceptance criteria, one PASS/FAIL line each. Runs as a plain binary so the
//! lines come out in order; exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use multiseg::invariants::invariant_profile_with_cap;
use multiseg::rigidity::rigidity_sweep_subjects;
use multiseg::selfcheck::random_corpus;
use multiseg::space::{all_in, arthur_family, ladder_family, simple_family};
use multiseg::{
    arthur_decompose, flow_dual, is_ladder, is_simple, mw_dual, mw_dual_traced, mw_first_segment, ranks,
    Multisegment, Segment, Support, Value,
};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn within(elapsed: Duration, budget: Duration, what: &str, ok: Outcome) -> Outcome {
    if !ok.ok {
        return ok;
    }
    if elapsed > budget {
        return fail(format!("{} but took {elapsed:?} > {budget:?} ({what})", ok.detail));
    }
    Outcome { ok: true, detail: format!("{} in {elapsed:?}", ok.detail) }
}

type Criterion<'c> = Box<dyn Fn() -> Outcome + 'c>;

fn first_failure(
    corpus: &[Multisegment],
    check: impl Fn(&Multisegment) -> Result<(), String>,
) -> Option<(&Multisegment, String)> {
    corpus.iter().find_map(|a| check(a).err().map(|e| (a, e)))
}

fn over(corpus: &[Multisegment], what: &str, check: impl Fn(&Multisegment) -> Result<(), String>) -> Outcome {
    match first_failure(corpus, check) {
        None => pass(format!("{} {what}", corpus.len())),
        Some((a, e)) => fail(format!("{a}: {e}")),
    }
}

fn ms(text: &str) -> Multisegment {
    text.parse().expect("valid multisegment")
}

fn both_engines(input: &str, expected: &str) -> Result<(), String> {
    let a = ms(input);
    let want = ms(expected);
    let m = mw_dual(&a);
    let f = flow_dual(&a).map_err(|e| e.to_string())?;
    if m != want || f != want {
        return Err(format!("mw {m}, flow {f}, expected {want}"));
    }
    Ok(())
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn criterion_1() -> Outcome {
    let _ = both_engines("{[1,3],[2,4],[3,5]}", "{[1,3],[2,4],[3,5]}");
    let (r, t) = timed(|| both_engines("{[1,3],[2,4],[3,5]}", "{[1,3],[2,4],[3,5]}"));
    let ok = match r {
        Ok(()) => pass("self-dual under mw and flow"),
        Err(e) => fail(e),
    };
    within(t, Duration::from_millis(1), "runtime", ok)
}

fn criterion_2() -> Outcome {
    let input = "{[1],[2],[3,5],[4,6],[6,7]}";
    let _ = both_engines(input, "{[1,4],[4,6],[5,7]}");
    let (r, t) = timed(|| {
        both_engines(input, "{[1,4],[4,6],[5,7]}")?;
        let first = mw_first_segment(&ms(input)).map_err(|e| e.to_string())?;
        let (_, trace) = mw_dual_traced(&ms(input));
        let want = Segment::int(5, 7);
        if first.emitted != want || trace.iterations[0].emitted != want {
            return Err(format!("first iteration emitted {}", first.emitted));
        }
        Ok(())
    });
    let ok = match r {
        Ok(()) => pass("dual {[1,4],[4,6],[5,7]}, first emission [5,7]"),
        Err(e) => fail(e),
    };
    within(t, Duration::from_millis(1), "runtime", ok)
}

fn main() {
    let corpus3 = all_in(Support::ints(1, 5), 9).expect("within caps");
    let random = random_corpus(20_240_601, 10_000, 8, 12);
    let simple6 = simple_family(Support::ints(1, 6), usize::MAX);
    let arthur_int = arthur_family(Support::ints(-3, 3), 12);
    let arthur_half = arthur_family(
        Support::new(Value::from_twice(-7), Value::from_twice(7)).expect("support"),
        12,
    );
    let arthur: Vec<Multisegment> = arthur_int.iter().chain(&arthur_half).cloned().collect();

    let criteria: Vec<(&str, Criterion<'_>)> = vec![
        ("1 simple example is self-dual under both engines", Box::new(criterion_1)),
        ("2 ladder example dual under both engines", Box::new(criterion_2)),
        (
            "3 involution on support [1,5], content <= 9",
            Box::new(|| {
                let (o, t) = timed(|| {
                    over(&corpus3, "multisegments", |a| {
                        let back = mw_dual(&mw_dual(a));
                        (back == *a).then_some(()).ok_or(format!("dual of dual is {back}"))
                    })
                });
                within(t, Duration::from_secs(60), "runtime", o)
            }),
        ),
        (
            "4 mw = flow on the exhaustive corpus and 10,000 random inputs",
            Box::new(|| {
                let all: Vec<Multisegment> = corpus3.iter().chain(&random).cloned().collect();
                let (o, t) = timed(|| {
                    over(&all, "multisegments", |a| {
                        let f = flow_dual(a).map_err(|e| e.to_string())?;
                        let m = mw_dual(a);
                        (f == m).then_some(()).ok_or(format!("mw {m}, flow {f}"))
                    })
                });
                within(t, Duration::from_secs(300), "runtime", o)
            }),
        ),
        (
            "5 rank round trip on the criterion 3 corpus",
            Box::new(|| {
                over(&corpus3, "multisegments", |a| {
                    let back = ranks(a).to_multisegment().map_err(|e| e.to_string())?;
                    (back == *a).then_some(()).ok_or(format!("round trip gave {back}"))
                })
            }),
        ),
        (
            "6 simple multisegments on [1,6] have n~ = L",
            Box::new(|| {
                over(&simple6, "simple multisegments", |a| {
                    debug_assert!(is_simple(a));
                    let n = mw_dual(a).len();
                    (n == a.longest()).then_some(()).ok_or(format!("n~ = {n}, L = {}", a.longest()))
                })
            }),
        ),
        (
            "7 ladder iff n~ + n = S + C = S + c; otherwise n~ + n > S + C",
            Box::new(|| {
                over(&corpus3, "multisegments", |a| {
                    let p = invariant_profile_with_cap(a, 10).map_err(|e| e.to_string())?;
                    let lhs = mw_dual(a).len() + a.len();
                    let s_big_c = p.cover_size + p.endoscopic;
                    let s_c = p.cover_size + p.components;
                    let ladder = is_ladder(a);
                    if ladder != (lhs == s_big_c && s_big_c == s_c) {
                        return Err(format!("ladder = {ladder}, n~+n = {lhs}, S+C = {s_big_c}, S+c = {s_c}"));
                    }
                    if !ladder && lhs <= s_big_c {
                        return Err(format!("non-ladder with n~+n = {lhs} <= S+C = {s_big_c}"));
                    }
                    Ok(())
                })
            }),
        ),
        (
            "8 rigidity of simple multisegments on [1,5], content <= 12",
            Box::new(|| sweep(&simple_family(Support::ints(1, 5), 12), Duration::from_secs(120))),
        ),
        (
            "9 rigidity of ladder multisegments on [1,6], content <= 10",
            Box::new(|| sweep(&ladder_family(Support::ints(1, 6), 10), Duration::from_secs(300))),
        ),
        (
            "10 rigidity of Arthur type on [-3,3] and [-7/2,7/2], content <= 12",
            Box::new(|| sweep(&arthur, Duration::from_secs(600))),
        ),
        (
            "11 the top Arthur block splits the dual",
            Box::new(|| {
                over(&arthur, "Arthur-type multisegments", |a| {
                    let d = arthur_decompose(a).map_err(|e| e.to_string())?.ok_or("not Arthur type")?;
                    let top = d.top_block().expect("non-empty");
                    let rest = a.difference(&top).ok_or("top block not contained")?;
                    let split = mw_dual(&top).union(&mw_dual(&rest)).map_err(|e| e.to_string())?;
                    let whole = mw_dual(a);
                    (split == whole)
                        .then_some(())
                        .ok_or(format!("block {top}: {split} != {whole}"))
                })
            }),
        ),
        (
            "12 MW chains pick segments of non-decreasing length",
            Box::new(|| {
                over(&corpus3, "multisegments", |a| {
                    let (_, trace) = mw_dual_traced(a);
                    for it in &trace.iterations {
                        if it.chain.windows(2).any(|w| w[0].segment.len() > w[1].segment.len()) {
                            return Err(format!("chain emitting {} shrinks", it.emitted));
                        }
                    }
                    Ok(())
                })
            }),
        ),
    ];

    let mut failed = 0;
    for (name, check) in &criteria {
        let o = check();
        println!("{} criterion {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.ok);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

fn sweep(subjects: &[Multisegment], budget: Duration) -> Outcome {
    let (r, t) = timed(|| rigidity_sweep_subjects(subjects, &mw_dual, 14));
    let o = match r {
        Err(e) => fail(e.to_string()),
        Ok((reports, classes)) => match reports.iter().find(|r| !r.singleton) {
            None => pass(format!("{} subjects in {classes} weight classes all rigid", reports.len())),
            Some(r) => fail(format!("{} not rigid, witness {}", r.subject, r.witnesses[0])),
        },
    };
    within(t, budget, "runtime", o)
}
