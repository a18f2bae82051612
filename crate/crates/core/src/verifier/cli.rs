use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use super::homo::verify_homo;
use super::report::VerificationReport;
use super::simplicial::{prop_u_derivation, verify_cocycle_equation, verify_prop_last, verify_prop_u};
use super::suites::{kv1_witness, verify_kv1, verify_prop_key, verify_series_identities, verify_theorem};
use crate::error::{Error, Result};
use crate::kvsolver::{gauge_family, solve_kv, KvSolution};
use crate::liecore::{bch_multi, parse_lie, LieElement};
use crate::random::Generator;
use crate::tangential::{quadratic_trace, TangentialDerivation};
use crate::traces::TraceSeries;

/// Highest order used for checks in three variables.
pub const ARITY3_ORDER: usize = 6;

#[derive(Parser)]
#[command(name = "kvquad", version, about = "Exact KV solutions and quadratic KV checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print ch(x_1, .., x_n) in the Lyndon basis as JSON.
    Bch {
        #[arg(long, default_value_t = 2)]
        arity: usize,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct the canonical solution, optionally with gauge shifts.
    SolveKv {
        #[arg(long)]
        order: usize,
        /// Lie pairs `P,Q;P,Q;..` in x/y bracket syntax.
        #[arg(long)]
        gauge: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Solution (or list of solutions) written by solve-kv.
        #[arg(long)]
        solution: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorem,
    #[value(name = "propU")]
    PropU,
    #[value(name = "propLast")]
    PropLast,
    Cocycle,
    Homo,
    Series,
    Kv1,
    Key,
    All,
}

impl Suite {
    const EACH: [Suite; 8] = [
        Suite::Kv1,
        Suite::Theorem,
        Suite::Series,
        Suite::Key,
        Suite::PropU,
        Suite::PropLast,
        Suite::Cocycle,
        Suite::Homo,
    ];

    fn name(self) -> &'static str {
        match self {
            Suite::Theorem => "theorem",
            Suite::PropU => "propU",
            Suite::PropLast => "propLast",
            Suite::Cocycle => "cocycle",
            Suite::Homo => "homo",
            Suite::Series => "series",
            Suite::Kv1 => "kv1",
            Suite::Key => "key",
            Suite::All => "all",
        }
    }
}

/// Default gauge pairs: five Lie pairs with distinct nonzero traces.
pub fn standard_gauge_pairs(order: usize) -> Result<Vec<(LieElement, LieElement)>> {
    parse_gauge_spec(
        "x,y; [x,y],[x,y]; [x,[x,y]],[x,[x,y]]; [x,[x,y]],[y,[x,y]]; [y,[x,y]],[y,[x,y]]",
        order,
    )
}

/// Parses `P,Q;P,Q;..`, splitting each pair at its top-level comma.
pub fn parse_gauge_spec(spec: &str, order: usize) -> Result<Vec<(LieElement, LieElement)>> {
    let mut pairs = Vec::new();
    for chunk in spec.split(';').map(str::trim).filter(|c| !c.is_empty()) {
        let mut depth = 0i32;
        let mut split = None;
        for (i, ch) in chunk.char_indices() {
            match ch {
                '[' | '(' => depth += 1,
                ']' | ')' => depth -= 1,
                ',' if depth == 0 => {
                    if split.replace(i).is_some() {
                        return Err(Error::Usage(format!("gauge pair `{chunk}` has more than two parts")));
                    }
                }
                _ => {}
            }
        }
        let i = split.ok_or_else(|| Error::Usage(format!("gauge pair `{chunk}` needs `P,Q`")))?;
        let p = parse_lie(&chunk[..i], 2, order).map_err(as_usage)?;
        let q = parse_lie(&chunk[i + 1..], 2, order).map_err(as_usage)?;
        pairs.push((p, q));
    }
    Ok(pairs)
}

fn as_usage(e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Usage(m),
        other => other,
    }
}

/// Random elements of tr^2 in arities 2 and 3, degree at most 6.
pub fn key_instances(seed: u64, count: usize) -> Result<Vec<TraceSeries>> {
    let mut g = Generator::new(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let arity = 2 + out.len() % 2;
        let order = 6;
        let pairs = vec![g.lie_pair(arity, order, order), g.lie_pair(arity, order, order)];
        if let Some(p) = quadratic_trace(&pairs)? {
            if !p.is_zero() {
                out.push(p);
            }
        }
    }
    Ok(out)
}

fn load_solutions(path: &Path) -> Result<Vec<KvSolution>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let parsed = if value.is_array() {
        serde_json::from_value(value)
    } else {
        serde_json::from_value(value).map(|s| vec![s])
    };
    parsed.map_err(|e| Error::Parse(e.to_string()))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, format!("{text}\n"))
            .map_err(|e| Error::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn tag(mut report: VerificationReport, label: &str) -> VerificationReport {
    for o in &mut report.outcomes {
        o.subject = Some(match o.subject.take() {
            None => label.to_owned(),
            Some(s) => format!("{label}/{s}"),
        });
    }
    for n in &mut report.notes {
        *n = format!("{label}: {n}");
    }
    report
}

/// Runs one suite over all solutions. Solutions failing the first KV equation produce a
/// failing outcome instead of running the suite.
fn run_suite(suite: Suite, solutions: &[KvSolution], order: usize, seed: u64) -> Result<VerificationReport> {
    let order3 = order.min(ARITY3_ORDER);
    let check = suite.name();
    let mut report = VerificationReport::new(check, order);
    match suite {
        Suite::Homo => return verify_homo(order.max(2)),
        Suite::Key => return verify_prop_key(&key_instances(seed, 24)?),
        Suite::PropLast => {
            let mut instances = Vec::new();
            for s in solutions {
                if let Some((k, w)) = kv1_witness(s)? {
                    report.fail(k, Some(&format!("{} kv1 hypothesis", s.method)), w);
                    continue;
                }
                instances.push(prop_u_derivation(&s.truncated(order3).derivation()?)?);
            }
            if instances.len() >= 2 {
                let diff = instances[1].sub(&instances[0])?;
                instances.push(diff);
            }
            instances.push(TangentialDerivation::zero(3, order3));
            report.merge(verify_prop_last(&instances)?);
            report.order = order3;
            return Ok(report);
        }
        _ => {}
    }
    for s in solutions {
        if let Some((k, w)) = kv1_witness(s)? {
            if suite != Suite::Kv1 {
                report.fail(k, Some(&format!("{} kv1 hypothesis", s.method)), w);
                continue;
            }
        }
        let single = match suite {
            Suite::Theorem => verify_theorem(s)?,
            Suite::Series => verify_series_identities(s)?,
            Suite::Kv1 => verify_kv1(s)?,
            Suite::PropU => verify_prop_u(&s.truncated(order3))?,
            Suite::Cocycle => verify_cocycle_equation(&s.truncated(order3))?,
            _ => unreachable!("handled above"),
        };
        report.order = single.order;
        report.merge(tag(single, &s.method));
    }
    Ok(report)
}

fn verify(order: usize, suite: Suite, json: bool, seed: u64, solution: Option<&Path>) -> Result<bool> {
    if order == 0 {
        return Err(Error::Usage("verify needs order >= 1".into()));
    }
    let solutions = match solution {
        Some(path) => {
            let loaded = load_solutions(path)?;
            if loaded.is_empty() {
                return Err(Error::Usage("solution file holds no solutions".into()));
            }
            loaded.into_iter().map(|s| s.truncated(order.min(s.order()))).collect()
        }
        None => {
            let s = solve_kv(order)?;
            gauge_family(&s, &standard_gauge_pairs(order)?)?
        }
    };
    let order = solutions.iter().map(KvSolution::order).max().unwrap_or(order);
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut all = true;
    let stdout = std::io::stdout();
    for s in suites {
        let report = run_suite(s, &solutions, order, seed)?;
        all &= report.passed();
        let mut out = stdout.lock();
        if json {
            for line in report.json_lines() {
                let _ = writeln!(out, "{line}");
            }
        } else {
            let _ = writeln!(out, "{report}");
        }
    }
    if !json {
        println!("{}", if all { "all checks passed" } else { "some checks failed" });
    }
    Ok(all)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Bch { arity, order, out } => {
            let ch = bch_multi(arity, order)?;
            write_output(out.as_deref(), &serde_json::to_string(&ch).expect("serializable"))?;
            Ok(true)
        }
        Command::SolveKv { order, gauge, out } => {
            let s = solve_kv(order)?;
            let text = match gauge {
                None => serde_json::to_string(&s),
                Some(spec) => {
                    let pairs = parse_gauge_spec(&spec, order)?;
                    serde_json::to_string(&gauge_family(&s, &pairs)?)
                }
            }
            .expect("serializable");
            let (a, b) = s.linear_coefficients();
            eprintln!(
                "method {}, linear coefficients a = {}, b = {}",
                s.method,
                crate::rational::format_q(&a),
                crate::rational::format_q(&b)
            );
            write_output(out.as_deref(), &text)?;
            Ok(true)
        }
        Command::Verify {
            order,
            suite,
            json,
            seed,
            solution,
        } => verify(order, suite, json, seed, solution.as_deref()),
    }
}

/// Entry point of the `kvquad` binary: 0 when every check passes, 1 on a
/// failed check or internal error, 2 on usage errors.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e @ (Error::Usage(_) | Error::Parse(_))) => {
            eprintln!("kvquad: {e}");
            2
        }
        Err(e) => {
            eprintln!("kvquad: {e}");
            1
        }
    }
}
