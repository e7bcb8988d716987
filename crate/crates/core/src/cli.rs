//! The `multiseg` command line.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::families::{arthur_decompose, classify};
use crate::flow::{flow_dual, PrecedenceGraph};
use crate::invariants::invariant_profile;
use crate::multisegment::{Multisegment, Weight};
use crate::mw::{mw_dual, mw_dual_traced, DualTrace};
use crate::order::leq;
use crate::parse::parse_value;
use crate::ranks::RankTriangle;
use crate::rigidity::{rigidity_check_with, rigidity_sweep, Family, Method};
use crate::selfcheck::{run_selfcheck, SelfCheckOptions};
use crate::space::{enumerate_weight_with_cap, upper_set_with_cap, Support, DEFAULT_CONTENT_CAP};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "multiseg", version, about = "Zelevinsky duals, rank triangles and rigidity checks for multisegments")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Dual engine; `both` fails with exit code 2 if the engines disagree.
    #[arg(long, value_enum, default_value_t = Alg::Both, global = true)]
    pub alg: Alg,
    /// Content cap for weight-class enumeration.
    #[arg(long, default_value_t = DEFAULT_CONTENT_CAP, global = true)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Alg {
    Mw,
    Flow,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Simple,
    Ladder,
    Arthur,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dual of a multisegment.
    Dual {
        /// Multisegment text, or `@path` to read it from a file.
        input: String,
        /// Print every iteration of the Mœglin–Waldspurger algorithm.
        #[arg(long)]
        trace: bool,
        /// Print the precedence graph in DOT format instead.
        #[arg(long)]
        dot: bool,
    },
    /// Rank triangle of a multisegment.
    Ranks {
        input: String,
        /// Show the triangle of the dual instead.
        #[arg(long)]
        dual: bool,
    },
    /// Numerical invariants e, L, n, c, S and C.
    Invariants { input: String },
    /// Family membership: simple, ladder, symmetric, Arthur type.
    Classify { input: String },
    /// Compare two multisegments in the rank order.
    Compare { left: String, right: String },
    /// Everything above a multisegment in its weight class.
    Above {
        input: String,
        /// Use the closure under the two actions instead of the rank filter.
        #[arg(long)]
        closure: bool,
    },
    /// Every multisegment of a weight, given as `{v:count,..}` or as a multisegment.
    Enumerate { weight: String },
    /// Rigidity of one multisegment, or of a whole family with `--family`.
    Rigid {
        input: Option<String>,
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long, default_value = "1..5")]
        support: String,
        #[arg(long, default_value_t = 9)]
        max_content: usize,
        /// Explore the action closure instead of the weight class.
        #[arg(long)]
        closure: bool,
    },
    /// Run the invariant battery over an exhaustive and a random corpus.
    Selfcheck {
        #[arg(long, default_value = "1..5")]
        support: String,
        #[arg(long, default_value_t = 7)]
        max_content: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Size of the random corpus.
        #[arg(long, default_value_t = 1000)]
        random: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

enum Failure {
    Usage(String),
    Violation(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            Error::NegativeMultiplicity { .. } => Failure::Violation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parse `args` (program name first) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Violation(msg)) => {
            let _ = writeln!(err, "property violation: {msg}");
            EXIT_VIOLATION
        }
        Err(Failure::Cap(msg)) => {
            let _ = writeln!(err, "cap exceeded: {msg}");
            EXIT_CAP
        }
    }
}

fn read_input(arg: &str) -> std::result::Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn multisegment_arg(arg: &str) -> std::result::Result<Multisegment, Failure> {
    Ok(read_input(arg)?.trim().parse::<Multisegment>()?)
}

fn weight_arg(arg: &str) -> std::result::Result<Weight, Failure> {
    let text = read_input(arg)?;
    let text = text.trim();
    if !text.contains(':') {
        return Ok(text.parse::<Multisegment>()?.weight());
    }
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| Failure::Usage("weight must look like {v:count, ...}".into()))?;
    let mut counts = Vec::new();
    for item in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (v, c) = item
            .split_once(':')
            .ok_or_else(|| Failure::Usage(format!("bad weight entry {item:?}")))?;
        let c: usize = c.trim().parse().map_err(|_| Failure::Usage(format!("bad count in {item:?}")))?;
        counts.push((parse_value(v.trim())?, c));
    }
    Ok(Weight::new(counts)?)
}

fn json_line(out: &mut dyn Write, v: &serde_json::Value) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string(v).expect("json"))
}

fn dual_of(cli: &Cli, a: &Multisegment) -> std::result::Result<Multisegment, Failure> {
    match cli.alg {
        Alg::Mw => Ok(mw_dual(a)),
        Alg::Flow => Ok(flow_dual(a)?),
        Alg::Both => {
            let m = mw_dual(a);
            let f = flow_dual(a)?;
            if m != f {
                return Err(Failure::Violation(format!("engines disagree on {a}: mw {m}, flow {f}")));
            }
            Ok(m)
        }
    }
}

fn dual_fn(cli: &Cli) -> fn(&Multisegment) -> Multisegment {
    fn flow(a: &Multisegment) -> Multisegment {
        flow_dual(a).expect("network ranks are realizable")
    }
    match cli.alg {
        Alg::Flow => flow,
        _ => mw_dual,
    }
}

fn write_trace(out: &mut dyn Write, trace: &DualTrace) -> std::io::Result<()> {
    for (k, it) in trace.iterations.iter().enumerate() {
        let chain: Vec<String> = it.chain.iter().map(|l| format!("{} -{}", l.segment, l.removed)).collect();
        writeln!(out, "iteration {}: emit {} via {} -> {}", k + 1, it.emitted, chain.join(", "), it.remainder)?;
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Dual { input, trace, dot } => {
            let a = multisegment_arg(input)?;
            if *dot {
                write!(out, "{}", PrecedenceGraph::build(&a).to_dot())?;
                return Ok(EXIT_OK);
            }
            let d = dual_of(cli, &a)?;
            let traced = trace.then(|| mw_dual_traced(&a).1);
            if json {
                let mut v = serde_json::json!({ "input": a.to_json(), "dual": d.to_json(), "dual_text": d.to_string() });
                if let Some(t) = &traced {
                    v["trace"] = t.to_json();
                }
                json_line(out, &v)?;
            } else {
                writeln!(out, "{d}")?;
                if let Some(t) = &traced {
                    write_trace(out, t)?;
                }
            }
        }
        Command::Ranks { input, dual } => {
            let a = multisegment_arg(input)?;
            let target = if *dual { dual_of(cli, &a)? } else { a };
            let r = RankTriangle::of(&target);
            if json {
                json_line(out, &r.to_json())?;
            } else {
                write!(out, "{}", r.render())?;
            }
        }
        Command::Invariants { input } => {
            let a = multisegment_arg(input)?;
            let p = invariant_profile(&a)?;
            if json {
                json_line(out, &p.to_json())?;
            } else {
                writeln!(out, "e = {}", p.e_max)?;
                writeln!(out, "L = {}", p.longest)?;
                writeln!(out, "n = {}", p.count)?;
                writeln!(out, "c = {}", p.components)?;
                writeln!(out, "S = {}", p.cover_size)?;
                writeln!(out, "C = {}", p.endoscopic)?;
            }
        }
        Command::Classify { input } => {
            let a = multisegment_arg(input)?;
            let c = classify(&a);
            if json {
                json_line(out, &serde_json::to_value(&c).expect("json"))?;
            } else {
                writeln!(out, "simple: {}", c.simple)?;
                writeln!(out, "ladder: {}", c.ladder)?;
                writeln!(out, "symmetric: {}", c.symmetric)?;
                writeln!(out, "arthur: {}", c.arthur)?;
                if let Some(Some(d)) = (!a.is_empty() && c.arthur).then(|| arthur_decompose(&a).ok().flatten()) {
                    for (block, k) in &d.blocks {
                        writeln!(out, "  block {} x{}", block.shifted(d.offset), k)?;
                    }
                }
            }
        }
        Command::Compare { left, right } => {
            let a = multisegment_arg(left)?;
            let b = multisegment_arg(right)?;
            let same_weight = a.weight() == b.weight();
            let le = leq(&a, &b);
            let ge = leq(&b, &a);
            if json {
                json_line(out, &serde_json::json!({ "same_weight": same_weight, "leq": le, "geq": ge }))?;
            } else if !same_weight {
                writeln!(out, "incomparable: weights differ ({} vs {})", a.weight(), b.weight())?;
            } else {
                writeln!(out, "leq: {le}")?;
                writeln!(out, "geq: {ge}")?;
            }
        }
        Command::Above { input, closure } => {
            let a = multisegment_arg(input)?;
            let list = if *closure {
                crate::space::action_closure_with_cap(&a, cli.cap)?
            } else {
                upper_set_with_cap(&a, cli.cap)?
            };
            write_list(out, &list, json)?;
        }
        Command::Enumerate { weight } => {
            let w = weight_arg(weight)?;
            let list = enumerate_weight_with_cap(&w, cli.cap)?;
            write_list(out, &list, json)?;
        }
        Command::Rigid { input, family, support, max_content, closure } => {
            let dual = dual_fn(cli);
            let method = if *closure { Method::ActionClosure } else { Method::Exhaustive };
            match (input, family) {
                (Some(input), None) => {
                    let a = multisegment_arg(input)?;
                    if cli.alg == Alg::Both {
                        dual_of(cli, &a)?;
                    }
                    let report = rigidity_check_with(&a, &dual, method, cli.cap)?;
                    if json {
                        json_line(out, &report.to_json())?;
                    } else {
                        writeln!(out, "singleton: {}", report.singleton)?;
                        writeln!(out, "class size: {}", report.class_size)?;
                        for w in &report.witnesses {
                            writeln!(out, "witness: {w}")?;
                        }
                    }
                }
                (None, Some(f)) => {
                    let support: Support = support.parse()?;
                    let family = match f {
                        FamilyArg::Simple => Family::Simple,
                        FamilyArg::Ladder => Family::Ladder,
                        FamilyArg::Arthur => Family::Arthur,
                        FamilyArg::All => Family::All,
                    };
                    let summary = rigidity_sweep(family, support, *max_content, &dual)?;
                    if json {
                        for r in &summary.failures {
                            json_line(out, &r.to_json())?;
                        }
                        json_line(out, &summary.to_json())?;
                    } else {
                        for r in &summary.failures {
                            writeln!(out, "not rigid: {} (witness {})", r.subject, r.witnesses[0])?;
                        }
                        writeln!(
                            out,
                            "checked {} in {} weight classes: {} failures",
                            summary.checked,
                            summary.classes,
                            summary.failures.len()
                        )?;
                    }
                }
                _ => return Err(Failure::Usage("give either a multisegment or --family".into())),
            }
        }
        Command::Selfcheck { support, max_content, seed, random, inject_fault } => {
            let opts = SelfCheckOptions {
                support: support.parse()?,
                max_content: *max_content,
                seed: *seed,
                random: *random,
                inject_fault: *inject_fault,
            };
            let results = run_selfcheck(&opts)?;
            writeln!(out, "seed {}", opts.seed)?;
            let mut failed = false;
            for r in &results {
                match &r.failure {
                    None => writeln!(out, "PASS {} ({} checked)", r.name, r.checked)?,
                    Some(msg) => {
                        failed = true;
                        writeln!(out, "FAIL {}: {}", r.name, msg)?;
                    }
                }
            }
            if failed {
                return Err(Failure::Violation("selfcheck failed".into()));
            }
        }
    }
    Ok(EXIT_OK)
}

fn write_list(out: &mut dyn Write, list: &[Multisegment], json: bool) -> std::io::Result<()> {
    if json {
        let v: Vec<serde_json::Value> = list.iter().map(Multisegment::to_json).collect();
        json_line(out, &serde_json::Value::Array(v))
    } else {
        for m in list {
            writeln!(out, "{m}")?;
        }
        writeln!(out, "{} multisegments", list.len())
    }
}
