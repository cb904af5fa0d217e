//! Command-line front end: reads a polynomial, runs one analysis and prints
//! text or JSON.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 computation error,
//! 3 a requested equality or invariant check failed.

mod parse;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::Error;
use crate::hodge::{
    conjecture_probe, estring_crepant_from, estring_general_value, sign_report, singularity_checks, SignReport,
    StringyReport,
};
use crate::newton::{classify, discrepancy_value, support_complex, varchenko_fan, MonomialSupport, Verdict};
use crate::polytope::linalg::ivec;

pub use parse::{parse, PolynomialExpression};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "stringy", version, about = "Stringy E-function contributions of hypersurface singularities")]
struct Cli {
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Record that f is nondegenerate with respect to its Newton polyhedron
    #[arg(long, global = true)]
    assert_nondegenerate: bool,
    /// Record that the singularity at the origin is isolated
    #[arg(long, global = true)]
    assert_isolated: bool,
    /// Number of variables, when x1..xn naming leaves some unused
    #[arg(long, global = true, value_name = "N")]
    nvars: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Newton polyhedron summary, fan rays and the crepancy table
    Analyze { input: Option<String> },
    /// Terminal / strictly canonical / not canonical
    Classify { input: Option<String> },
    /// Local contribution to the stringy E-function
    Estring {
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        input: Option<String>,
    },
    /// Sign pattern (-1)^(i+j) c_ij >= 0 of the local contribution
    Signs {
        /// Threshold d; defaults to n - 1
        #[arg(long)]
        dim: Option<i64>,
        /// Also compare truncated S~ polynomials of the support polytopes
        #[arg(long)]
        probe: bool,
        input: Option<String>,
    },
    /// Run the invariant suite on every polytope derived from f
    Invariants {
        /// Degree up to which T series are compared with enumeration
        #[arg(long, default_value_t = 8)]
        series_degree: i64,
        input: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Crepant,
    General,
    Both,
}

enum Failure {
    Usage(String),
    Compute(Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, stdin, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_COMPUTATION
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "check failed: {msg}");
            EXIT_CHECK_FAILED
        }
    }
}

fn read_support(cli: &Cli, input: &Option<String>, stdin: &mut dyn Read, err: &mut dyn Write) -> Result<MonomialSupport, Failure> {
    let text = match input {
        Some(t) => t.clone(),
        None => {
            let mut buf = String::new();
            stdin.read_to_string(&mut buf).map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
            buf
        }
    };
    let text = text.trim();
    let mut support = if text.starts_with('{') {
        MonomialSupport::from_json(text).map_err(|e| Failure::Usage(e.to_string()))?
    } else {
        let expr = parse(text, cli.nvars).map_err(|e| match e {
            Error::Parse { pos, msg } => Failure::Usage(format!("{msg}\n  {text}\n  {}^", " ".repeat(pos))),
            other => Failure::Usage(other.to_string()),
        })?;
        for w in &expr.warnings {
            let _ = writeln!(err, "warning: {w}");
        }
        expr.support().map_err(|e| Failure::Usage(e.to_string()))?
    };
    support.assert_nondegenerate |= cli.assert_nondegenerate;
    support.assert_isolated |= cli.assert_isolated;
    if !(support.assert_nondegenerate && support.assert_isolated) {
        let _ = writeln!(
            err,
            "note: nondegeneracy and isolatedness are not verified; pass --assert-nondegenerate --assert-isolated to record them"
        );
    }
    Ok(support)
}

fn emit(out: &mut dyn Write, value: &impl serde::Serialize) -> Outcome {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| Failure::Usage(e.to_string()))
}

fn fmt_vec(v: &[i64]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn verdict_text(s: &MonomialSupport, v: &Verdict) -> Result<String, Failure> {
    Ok(match v {
        Verdict::Terminal => "terminal".to_string(),
        Verdict::StrictlyCanonical { witness } => {
            let value = discrepancy_value(s, &ivec(witness))?;
            format!("strictly canonical, witness {} with sigma - m_f = {value}", fmt_vec(witness))
        }
        Verdict::NotCanonical { witness, value } => {
            format!("not canonical, witness {} with sigma - m_f = {value}", fmt_vec(witness))
        }
    })
}

fn verdict_json(s: &MonomialSupport, v: &Verdict) -> Result<Value, Failure> {
    let mut value = serde_json::to_value(v).expect("plain data");
    if let Verdict::StrictlyCanonical { witness } = v {
        let d: BigInt = discrepancy_value(s, &ivec(witness))?;
        value["value"] = json!(d.to_string().parse::<i64>().unwrap_or(i64::MAX));
    }
    Ok(value)
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let io = |e: std::io::Error| Failure::Usage(e.to_string());
    match &cli.command {
        Command::Analyze { input } => {
            let s = read_support(cli, input, stdin, err)?;
            let fan = varchenko_fan(&s)?;
            let newton = &fan.newton;
            let rays = fan.ray_report()?;
            let crepant = rays.iter().all(|r| r.is_crepant());
            let compact = newton.compact_faces();
            let maximal: Vec<Vec<Vec<i64>>> = newton
                .maximal_compact_faces()
                .into_iter()
                .map(|f| newton.face_points(f).iter().map(|p| p.iter().map(to_i64).collect()).collect())
                .collect();
            if cli.json {
                return emit(
                    out,
                    &json!({
                        "input": s,
                        "vertices": newton.vertices().iter().map(|p| p.iter().map(to_i64).collect::<Vec<_>>()).collect::<Vec<_>>(),
                        "faces": newton.faces().len(),
                        "compact_faces": compact.len(),
                        "maximal_compact_faces": maximal,
                        "convenient": s.is_convenient(),
                        "rays": rays,
                        "crepant": crepant,
                    }),
                );
            }
            writeln!(out, "variables: {}, monomials: {}", s.n, s.monomials.len()).map_err(io)?;
            writeln!(
                out,
                "Newton polyhedron: {} vertices, {} faces, {} compact",
                newton.vertices().len(),
                newton.faces().len(),
                compact.len()
            )
            .map_err(io)?;
            for m in &maximal {
                let pts: Vec<String> = m.iter().map(|p| fmt_vec(p)).collect();
                writeln!(out, "maximal compact face: {}", pts.join(" ")).map_err(io)?;
            }
            writeln!(out, "convenient: {}", yes_no(s.is_convenient())).map_err(io)?;
            writeln!(out, "rays (generator, sigma, m_f, sigma - m_f):").map_err(io)?;
            for r in &rays {
                let tag = if r.is_basis { "  basis" } else { "" };
                writeln!(out, "  {:<24} {:>6} {:>6} {:>6}{tag}", fmt_vec(&r.generator), r.sigma, r.m_f, r.value)
                    .map_err(io)?;
            }
            writeln!(out, "crepant: {}", yes_no(crepant)).map_err(io)?;
            Ok(())
        }
        Command::Classify { input } => {
            let s = read_support(cli, input, stdin, err)?;
            let v = classify(&s)?;
            if cli.json {
                return emit(out, &verdict_json(&s, &v)?);
            }
            writeln!(out, "{}", verdict_text(&s, &v)?).map_err(io)
        }
        Command::Estring { method, input } => {
            let s = read_support(cli, input, stdin, err)?;
            estring(cli, &s, *method, out)
        }
        Command::Signs { dim, probe, input } => {
            let s = read_support(cli, input, stdin, err)?;
            let d = dim.unwrap_or(s.n as i64 - 1);
            let fan = varchenko_fan(&s)?;
            let (e, probe_entries) = if fan.is_crepant()? {
                let sc = support_complex(&s)?;
                let entries = if *probe { Some(conjecture_probe(&sc)?) } else { None };
                (estring_crepant_from(&sc)?, entries)
            } else {
                if *probe {
                    return Err(Failure::Compute(Error::NotCrepant));
                }
                let g = estring_general_value(&s)?;
                (g.as_laurent().cloned().ok_or(Error::NotPolynomial)?, None)
            };
            let report = sign_report(&e, d);
            if cli.json {
                return emit(out, &json!({ "e_st": e.to_string(), "signs": report, "probe": probe_entries }));
            }
            writeln!(out, "E_st,0 = {e}").map_err(io)?;
            write_signs(out, &report).map_err(io)?;
            if let Some(entries) = probe_entries {
                writeln!(out, "terms of degree > (d - dim mu)/2 of S~(P_mu, I_mu) vs S~(P_mu):").map_err(io)?;
                for p in entries {
                    let mu: Vec<String> = p.mu.iter().map(|v| fmt_vec(v)).collect();
                    let mu = if mu.is_empty() { "empty".to_string() } else { mu.join(" ") };
                    let rel = if p.equal { "equal" } else if p.holds { ">=" } else { "NOT >=" };
                    writeln!(out, "  {mu}: {rel}  ({} vs {})", p.truncated_with_ideal, p.truncated_plain).map_err(io)?;
                }
            }
            Ok(())
        }
        Command::Invariants { series_degree, input } => {
            let s = read_support(cli, input, stdin, err)?;
            let checks = singularity_checks(&s, *series_degree)?;
            let failed = checks.iter().filter(|c| !c.passed).count();
            if cli.json {
                emit(out, &json!({ "checks": checks, "failed": failed }))?;
            } else {
                for c in &checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "{status}  {}  [{}]", c.name, c.subject).map_err(io)?;
                    if let Some(d) = &c.detail {
                        writeln!(out, "      {d}").map_err(io)?;
                    }
                }
                writeln!(out, "{} checks, {failed} failed", checks.len()).map_err(io)?;
            }
            if failed > 0 {
                return Err(Failure::Check(format!("{failed} invariant check(s) failed")));
            }
            Ok(())
        }
    }
}

fn estring(cli: &Cli, s: &MonomialSupport, method: Method, out: &mut dyn Write) -> Outcome {
    let io = |e: std::io::Error| Failure::Usage(e.to_string());
    let verdict = classify(s)?;
    let fan = varchenko_fan(s)?;
    let rays = fan.ray_report()?;
    let crepant = rays.iter().all(|r| r.is_crepant());
    let newton = &fan.newton;
    let d = s.n as i64 - 1;

    let e_crepant = match method {
        Method::Crepant | Method::Both => {
            let sc = support_complex(s)?;
            Some(estring_crepant_from(&sc)?)
        }
        Method::General => None,
    };
    let e_general = match method {
        Method::General | Method::Both => Some(estring_general_value(s)?),
        Method::Crepant => None,
    };
    let paths_agree = match (&e_crepant, &e_general) {
        (Some(c), Some(g)) => Some(g.as_laurent() == Some(c)),
        _ => None,
    };
    let polynomial = e_crepant.clone().or_else(|| e_general.as_ref().and_then(|g| g.as_laurent().cloned()));
    let report = StringyReport {
        input: s.clone(),
        classification: verdict.clone(),
        crepant,
        rays,
        convenient: s.is_convenient(),
        unique_max_compact_face: newton.unique_max_compact_face().is_some(),
        e_crepant,
        e_general,
        paths_agree,
        signs: polynomial.as_ref().map(|e| sign_report(e, d)),
        note: crate::hodge::COEFFICIENT_NOTE,
    };

    if cli.json {
        emit(out, &report)?;
    } else {
        writeln!(out, "classification: {}", verdict_text(s, &verdict)?).map_err(io)?;
        writeln!(out, "crepant: {}", yes_no(crepant)).map_err(io)?;
        if let Some(e) = &report.e_crepant {
            writeln!(out, "E_st,0 (crepant formula) = {e}").map_err(io)?;
        }
        if let Some(e) = &report.e_general {
            writeln!(out, "E_st,0 (general formula) = {e}").map_err(io)?;
        }
        if let Some(agree) = paths_agree {
            writeln!(out, "formulas agree: {}", yes_no(agree)).map_err(io)?;
        }
        writeln!(out, "note: {}", report.note).map_err(io)?;
    }
    if paths_agree == Some(false) {
        return Err(Failure::Check("the crepant and general formulas disagree".into()));
    }
    Ok(())
}

fn write_signs(out: &mut dyn Write, r: &SignReport) -> std::io::Result<()> {
    writeln!(out, "signs (-1)^(i+j) c_ij >= 0, threshold d = {}:", r.d)?;
    for t in &r.terms {
        let status = if t.sign_ok { "ok" } else { "WRONG" };
        let range = if t.in_range { "" } else { "  (below d)" };
        writeln!(out, "  {:>8} u^{} v^{}  {status}{range}", t.c, t.i, t.j)?;
    }
    writeln!(out, "all signs right for i + j >= d: {}", yes_no(r.ok_in_range()))?;
    writeln!(out, "all signs right: {}", yes_no(r.ok_everywhere()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn to_i64(x: &BigInt) -> i64 {
    x.to_string().parse().unwrap_or(i64::MAX)
}
