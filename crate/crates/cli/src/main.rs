//! Command-line front end for the sector-certification library.
//!
//! Subcommands: `certify`, `table`, `minors`, `cfrac`, `factor`, `roots`,
//! `report`. Every command accepts a polynomial inline (`--poly`) or from a
//! file (`--poly-file`, one polynomial per line, `#` comments) and renders
//! text or JSON (`--json`). All results go to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 = success / certified; 1 = informational negative outcome
//! (UNKNOWN, NOT_APPLICABLE, NOT_TN, degenerate expansion, vanishing
//! factorization parameter); 2 = usage or input error; 3 = internal or
//! numeric error (oracle refutation, failed verification, non-convergence).
//!
//! JSON keeps every exact rational as a `p/q` string; floating-point values
//! appear only inside `oracle` objects. Output is byte-identical for
//! identical inputs and seed; the `HMSECTOR_SEED` environment variable
//! overrides `--seed`.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hmsector::{
    all_roots_real_negative, certify, cross_validate, expand_pair_cfrac, factor_hm, find_roots,
    run_generalized_euclid, sector_clearance, sector_half_angle_degrees, special_minors,
    tn_verdict, verify_factorization, ClearanceReport, CrossValidation, Error, Evidence, Method,
    RationalPolynomial, RootReport, SectorCertificate, Status, TNMethod, TNStatus,
    DEFAULT_MINOR_SEARCH_CAP, DEFAULT_ROOT_TOL, DEFAULT_SEED,
};

// ---------------------------------------------------------------------------
// Argument surface
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "hmsector",
    version,
    about = "Exact zero-free sector certificates for real polynomials",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Coefficients in descending degree: integers, exact fractions
    /// ("81/5"), or finite decimals ("1.001"), comma-separated — or a JSON
    /// array of coefficient strings.
    #[arg(
        long,
        value_name = "COEFFS",
        conflicts_with = "poly_file",
        required_unless_present = "poly_file"
    )]
    poly: Option<String>,

    /// File with one polynomial per line; `#` starts a comment. Output
    /// becomes a JSON array (or one text section per line).
    #[arg(long, value_name = "PATH")]
    poly_file: Option<PathBuf>,

    /// Emit JSON on stdout instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Try every applicable route, strongest first.
    Auto,
    /// Positivity of the full Euclid leading-coefficient chain.
    H,
    /// Total nonnegativity via positive special minors.
    Tn,
    /// Positive leading principal minors of every residue-pair submatrix.
    Pairwise,
    /// Coefficient positivity at M = n.
    Ct,
}

impl MethodArg {
    fn to_method(self) -> Option<Method> {
        match self {
            MethodArg::Auto => None,
            MethodArg::H => Some(Method::AllHPositive),
            MethodArg::Tn => Some(Method::TnSpecialMinors),
            MethodArg::Pairwise => Some(Method::PairwiseHurwitz),
            MethodArg::Ct => Some(Method::CowlingThron),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Certify that no zero of f lies in the sector |arg z| < pi/M.
    Certify {
        #[command(flatten)]
        input: InputArgs,
        /// Sector parameter M: the sector half-angle is pi/M.
        #[arg(long)]
        m: usize,
        /// Certification route.
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Root-oracle seed (the HMSECTOR_SEED environment variable
        /// overrides this flag).
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Print the step-M division table f_0..f_n by residue row, with
    /// quotients and leading coefficients.
    Table {
        #[command(flatten)]
        input: InputArgs,
        /// Step parameter M, with 2 <= M <= degree.
        #[arg(long)]
        m: usize,
    },
    /// Print the n special minors of the step-M matrix; optionally run the
    /// total-nonnegativity verdict with a windowed witness search.
    Minors {
        #[command(flatten)]
        input: InputArgs,
        /// Step parameter M, with 2 <= M <= degree.
        #[arg(long)]
        m: usize,
        /// Also search for a negative-minor witness and report the verdict.
        #[arg(long)]
        witness: bool,
        /// Maximum minor order for the witness search.
        #[arg(long, default_value_t = DEFAULT_MINOR_SEARCH_CAP)]
        cap: usize,
    },
    /// Expand the continued fraction of a residue-part ratio f_i/f_j.
    Cfrac {
        #[command(flatten)]
        input: InputArgs,
        /// Step parameter M, with 2 <= M <= degree.
        #[arg(long)]
        m: usize,
        /// Residue pair "i,j" with 0 <= i < j <= M-1.
        #[arg(long, value_name = "I,J", default_value = "0,1")]
        pair: String,
    },
    /// Compute the bidiagonal factorization parameters c_1..c_n and verify
    /// them against a finite window of the shifted matrix.
    Factor {
        #[command(flatten)]
        input: InputArgs,
        /// Step parameter M >= 2 (values above the degree are allowed).
        #[arg(long)]
        m: usize,
        /// Verification window in columns; defaults to degree + M + 2.
        #[arg(long)]
        window: Option<usize>,
    },
    /// Find all roots with the seeded floating-point oracle and report
    /// residuals and sector clearance.
    Roots {
        #[command(flatten)]
        input: InputArgs,
        /// Optional sector parameter M for a clearance report.
        #[arg(long)]
        m: Option<usize>,
        /// Root-oracle seed (the HMSECTOR_SEED environment variable
        /// overrides this flag).
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Combined document: table, minors, certificate, and roots. Each
    /// section equals the standalone command's output.
    Report {
        #[command(flatten)]
        input: InputArgs,
        /// Sector parameter M: the sector half-angle is pi/M.
        #[arg(long)]
        m: usize,
        /// Certification route for the certificate section.
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Root-oracle seed (the HMSECTOR_SEED environment variable
        /// overrides this flag).
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

impl Command {
    fn input(&self) -> &InputArgs {
        match self {
            Command::Certify { input, .. }
            | Command::Table { input, .. }
            | Command::Minors { input, .. }
            | Command::Cfrac { input, .. }
            | Command::Factor { input, .. }
            | Command::Roots { input, .. }
            | Command::Report { input, .. } => input,
        }
    }
}

// ---------------------------------------------------------------------------
// Entry point and batch plumbing
// ---------------------------------------------------------------------------

/// One command outcome for one polynomial, in both representations.
struct Rendered {
    json: Value,
    text: String,
    exit: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let seed_override = match std::env::var("HMSECTOR_SEED") {
        Ok(raw) => match raw.trim().parse::<u64>() {
            Ok(seed) => Some(seed),
            Err(_) => {
                eprintln!("error: HMSECTOR_SEED must be an unsigned 64-bit integer, got {raw:?}");
                return ExitCode::from(2);
            }
        },
        Err(_) => None,
    };

    let input = cli.command.input();
    let (sources, batch) = match load_sources(input) {
        Ok(pair) => pair,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(exit_code_for(&err));
        }
    };

    let json_mode = input.json;
    let mut docs: Vec<Value> = Vec::with_capacity(sources.len());
    let mut text = String::new();
    let mut worst: u8 = 0;

    for (index, source) in sources.iter().enumerate() {
        let rendered = run_one(&cli.command, source, seed_override, batch);
        worst = worst.max(rendered.exit);
        if json_mode {
            docs.push(rendered.json);
        } else {
            if batch {
                text.push_str(&format!("== polynomial {}: {} ==\n", index + 1, source));
            }
            text.push_str(&rendered.text);
        }
    }

    if json_mode {
        let output = if batch {
            Value::Array(docs)
        } else {
            docs.into_iter().next().unwrap_or(Value::Null)
        };
        println!("{output}");
    } else {
        print!("{text}");
    }
    ExitCode::from(worst)
}

/// Resolves the input source(s): the inline polynomial, or the cleaned lines
/// of the polynomial file. The boolean is true for file (batch) input.
fn load_sources(input: &InputArgs) -> Result<(Vec<String>, bool), Error> {
    if let Some(inline) = &input.poly {
        return Ok((vec![inline.clone()], false));
    }
    let path = input.poly_file.as_ref().expect("clap enforces one source");
    let content = fs::read_to_string(path).map_err(|e| Error::PolyFile {
        reason: format!("{}: {e}", path.display()),
    })?;
    let lines: Vec<String> = content
        .lines()
        .map(|line| match line.split_once('#') {
            Some((data, _comment)) => data.trim().to_string(),
            None => line.trim().to_string(),
        })
        .filter(|line| !line.is_empty())
        .collect();
    if lines.is_empty() {
        return Err(Error::PolyFile {
            reason: format!("{}: no polynomials found", path.display()),
        });
    }
    Ok((lines, true))
}

/// Parses one polynomial and dispatches the command on it; errors become an
/// error document so a batch keeps its per-line alignment.
fn run_one(command: &Command, source: &str, seed_override: Option<u64>, batch: bool) -> Rendered {
    let result = hmsector::parse_polynomial(source).and_then(|f| match command {
        Command::Certify {
            m, method, seed, ..
        } => cmd_certify(&f, *m, method.to_method(), seed_override.unwrap_or(*seed)),
        Command::Table { m, .. } => cmd_table(&f, *m),
        Command::Minors {
            m, witness, cap, ..
        } => cmd_minors(&f, *m, *witness, *cap),
        Command::Cfrac { m, pair, .. } => cmd_cfrac(&f, *m, pair),
        Command::Factor { m, window, .. } => cmd_factor(&f, *m, *window),
        Command::Roots { m, seed, .. } => cmd_roots(&f, *m, seed_override.unwrap_or(*seed)),
        Command::Report {
            m, method, seed, ..
        } => cmd_report(&f, *m, method.to_method(), seed_override.unwrap_or(*seed)),
    });
    match result {
        Ok(rendered) => rendered,
        Err(err) => {
            if batch {
                eprintln!("error [{source}]: {err}");
            } else {
                eprintln!("error: {err}");
            }
            Rendered {
                json: json!({ "error": err.to_string() }),
                // In single-input text mode stderr already carries the
                // message, so stdout stays clean for pipelines.
                text: if batch {
                    format!("error: {err}\n")
                } else {
                    String::new()
                },
                exit: exit_code_for(&err),
            }
        }
    }
}

/// Maps library errors onto the exit-code contract.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        // Input and precondition problems are usage errors.
        Error::MalformedCoefficient { .. }
        | Error::RepeatingDecimal { .. }
        | Error::ZeroDenominator { .. }
        | Error::EmptyCoefficients
        | Error::LeadingZero
        | Error::ZeroPolynomial
        | Error::StepOutOfRange { .. }
        | Error::DegreeTooSmall { .. }
        | Error::InvalidIndexSet { .. }
        | Error::InvalidPair { .. }
        | Error::NonPositiveLeadingCoefficient
        | Error::MinorOrderTooLarge { .. }
        | Error::RootsOfConstant
        | Error::PolyFile { .. } => 2,
        // Honest negative outcomes: the requested object does not exist.
        Error::DegeneratePairExpansion { .. } | Error::ZeroLeadingCoefficient { .. } => 1,
        // Everything else is an internal or numeric failure.
        _ => 3,
    }
}

// ---------------------------------------------------------------------------
// Command implementations
// ---------------------------------------------------------------------------

fn cmd_certify(
    f: &RationalPolynomial,
    m: usize,
    method: Option<Method>,
    seed: u64,
) -> Result<Rendered, Error> {
    let cert = certify(f, m, method)?;
    let (cert, cv) = cross_validate(cert, f, DEFAULT_ROOT_TOL, seed)?;

    let mut doc = cert.to_json();
    doc["oracle"] = certify_oracle_json(&cv, m, seed);

    let exit = match cert.status {
        Status::Certified => 0,
        Status::Unknown | Status::NotApplicable => 1,
        Status::RefutedByOracle => 3,
    };
    let text = certify_text(&cert, &cv, m);
    Ok(Rendered {
        json: doc,
        text,
        exit,
    })
}

fn certify_oracle_json(cv: &CrossValidation, m: usize, seed: u64) -> Value {
    let mut oracle = json!({
        "seed": seed,
        "roots": roots_json(&cv.roots),
        "residual": cv.roots.residual,
        "converged": cv.roots.converged,
        "clustered": cv.roots.clustered,
        "min_clearance_radians": cv.clearance.clearance,
        "agreed": cv.agreed,
    });
    if m == 1 {
        oracle["all_real_negative"] = json!(all_roots_real_negative(&cv.roots, 1e-9));
    }
    oracle
}

fn certify_text(cert: &SectorCertificate, cv: &CrossValidation, m: usize) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "degree {} at step M = {}: sector |arg z| < pi/{} ({} degrees)\n",
        cert.degree,
        cert.m,
        cert.m,
        sector_half_angle_degrees(cert.m)
    ));
    out.push_str(&format!("status: {}\n", cert.status.tag()));
    if let Some(method) = cert.method {
        out.push_str(&format!("method: {}\n", method.tag()));
    }
    if let Some(claim) = cert.claim {
        let wording = match claim {
            hmsector::SectorClaim::StrictExterior => {
                format!("every zero satisfies |arg z| > pi/{}", cert.m)
            }
            hmsector::SectorClaim::OpenSectorClear => {
                format!("no zero lies in the open sector |arg z| < pi/{}", cert.m)
            }
        };
        out.push_str(&format!("claim: {} ({wording})\n", claim.tag()));
    }
    if let Some(evidence) = &cert.evidence {
        out.push_str(&evidence_text(evidence));
    }
    for failure in &cert.failures {
        out.push_str(&format!(
            "failed {}: {}\n",
            failure.method.tag(),
            failure.reason
        ));
    }
    if let Some(note) = &cert.note {
        out.push_str(&format!("note: {note}\n"));
    }
    out.push_str(&format!(
        "oracle: {} roots, min clearance {:+.6e} rad, residual {:.3e}, converged {}, agreed {}\n",
        cv.roots.roots.len(),
        cv.clearance.clearance,
        cv.roots.residual,
        cv.roots.converged,
        cv.agreed
    ));
    if m == 1 {
        out.push_str(&format!(
            "oracle: all roots real and negative: {}\n",
            all_roots_real_negative(&cv.roots, 1e-9)
        ));
    }
    out
}

fn evidence_text(evidence: &Evidence) -> String {
    match evidence {
        Evidence::LeadingCoefficientChain { hs } => {
            format!("evidence: h = {}\n", join_rationals(hs))
        }
        Evidence::SpecialMinors { minors } => {
            let list: Vec<String> = minors
                .iter()
                .map(|sm| format!("p={} -> {}", sm.p, sm.value))
                .collect();
            format!("evidence: special minors {}\n", list.join(", "))
        }
        Evidence::PairMinors { pairs } => {
            let mut out = String::from("evidence: pair minors\n");
            for pair in pairs {
                out.push_str(&format!(
                    "  pair ({}, {}): {}\n",
                    pair.i,
                    pair.j,
                    join_rationals(&pair.minors)
                ));
            }
            out
        }
        Evidence::PositiveCoefficients { coefficients } => {
            format!(
                "evidence: positive coefficients {}\n",
                join_rationals(coefficients)
            )
        }
    }
}

fn cmd_table(f: &RationalPolynomial, m: usize) -> Result<Rendered, Error> {
    let table = run_generalized_euclid(f, m)?;
    Ok(Rendered {
        json: table.to_json(),
        text: table.render_text(),
        exit: 0,
    })
}

fn cmd_minors(
    f: &RationalPolynomial,
    m: usize,
    witness: bool,
    cap: usize,
) -> Result<Rendered, Error> {
    let set = special_minors(f, m)?;
    let mut doc = json!({
        "m": set.m,
        "degree": set.degree,
        "minors": set
            .minors
            .iter()
            .map(|sm| {
                json!({
                    "p": sm.p,
                    "k": sm.k,
                    "r": sm.r,
                    "rows": sm.rows(),
                    "cols": sm.cols(),
                    "value": sm.value.to_string(),
                })
            })
            .collect::<Vec<_>>(),
        "all_positive": set.all_positive(),
    });

    let mut text = format!(
        "special minors of the step-{m} matrix (degree {})\n",
        set.degree
    );
    for sm in &set.minors {
        text.push_str(&format!(
            "  p={} rows {}..{} cols 1..{}: {}\n",
            sm.p,
            sm.k,
            sm.k + sm.r - 1,
            sm.r,
            sm.value
        ));
    }
    text.push_str(&format!("all positive: {}\n", set.all_positive()));

    let mut exit = 0u8;
    if witness {
        let verdict = tn_verdict(f, m, cap)?;
        doc["tn"] = json!({
            "status": tn_status_tag(verdict.status),
            "method": tn_method_tag(verdict.method),
            "cap": verdict.cap,
            "witness": verdict.witness.as_ref().map(|w| {
                json!({
                    "rows": w.rows.clone(),
                    "cols": w.cols.clone(),
                    "value": w.value.to_string(),
                })
            }),
        });
        text.push_str(&format!(
            "total nonnegativity: {} (via {}, order cap {})\n",
            tn_status_tag(verdict.status),
            tn_method_tag(verdict.method),
            verdict.cap
        ));
        if let Some(w) = &verdict.witness {
            text.push_str(&format!(
                "  negative witness: rows {:?} cols {:?} value {}\n",
                w.rows, w.cols, w.value
            ));
        }
        exit = match verdict.status {
            TNStatus::TnCertified => 0,
            TNStatus::NotTn | TNStatus::Inconclusive => 1,
        };
    }
    Ok(Rendered {
        json: doc,
        text,
        exit,
    })
}

fn tn_status_tag(status: TNStatus) -> &'static str {
    match status {
        TNStatus::TnCertified => "TN_CERTIFIED",
        TNStatus::NotTn => "NOT_TN",
        TNStatus::Inconclusive => "INCONCLUSIVE",
    }
}

fn tn_method_tag(method: TNMethod) -> &'static str {
    match method {
        TNMethod::SpecialMinorsPositive => "SPECIAL_MINORS_POSITIVE",
        TNMethod::ExhaustiveCap => "EXHAUSTIVE_CAP",
        TNMethod::WitnessFound => "WITNESS_FOUND",
    }
}

fn cmd_cfrac(f: &RationalPolynomial, m: usize, pair: &str) -> Result<Rendered, Error> {
    let (i, j) = parse_pair(pair)?;
    let cf = expand_pair_cfrac(f, m, i, j)?;
    let coefficients: Vec<String> = cf.coefficients.iter().map(|c| c.to_string()).collect();
    let exponents = cf.exponents();
    let doc = json!({
        "step": cf.step,
        "i": cf.i,
        "j": cf.j,
        "levels": cf.len(),
        "coefficients": coefficients,
        "exponents": exponents,
    });
    let text = format!(
        "continued fraction of f_{}/f_{} at step M = {}\n  levels: {}\n  coefficients: {}\n  exponents: {}\n",
        cf.i,
        cf.j,
        cf.step,
        cf.len(),
        coefficients.join(", "),
        exponents
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok(Rendered {
        json: doc,
        text,
        exit: 0,
    })
}

fn parse_pair(pair: &str) -> Result<(usize, usize), Error> {
    let malformed = || Error::InvalidIndexSet {
        reason: format!("pair must be two integers \"i,j\", got {pair:?}"),
    };
    let (a, b) = pair.split_once(',').ok_or_else(malformed)?;
    let i = a.trim().parse::<usize>().map_err(|_| malformed())?;
    let j = b.trim().parse::<usize>().map_err(|_| malformed())?;
    Ok((i, j))
}

fn cmd_factor(f: &RationalPolynomial, m: usize, window: Option<usize>) -> Result<Rendered, Error> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let result = factor_hm(f, m)?;
    let window = window.unwrap_or(n + m + 2);
    let verified = verify_factorization(f, m, &result, window)?;

    let cs: Vec<String> = result.cs.iter().map(|c| c.to_string()).collect();
    let doc = json!({
        "m": result.m,
        "degree": result.degree,
        "cs": cs,
        "terminal": result.terminal.to_string(),
        "window": window,
        "verified": verified,
    });
    let mut text = format!("bidiagonal factorization at step M = {m} (degree {n})\n");
    for (idx, c) in cs.iter().enumerate() {
        text.push_str(&format!("  c_{} = {}\n", idx + 1, c));
    }
    text.push_str(&format!("  terminal = {}\n", result.terminal));
    text.push_str(&format!(
        "verified on a {window}-column window: {verified}\n"
    ));
    let exit = if verified { 0 } else { 3 };
    Ok(Rendered {
        json: doc,
        text,
        exit,
    })
}

fn cmd_roots(f: &RationalPolynomial, m: Option<usize>, seed: u64) -> Result<Rendered, Error> {
    let report = find_roots(f, DEFAULT_ROOT_TOL, seed)?;
    let mut oracle = json!({
        "seed": seed,
        "roots": roots_json(&report),
        "residual": report.residual,
        "converged": report.converged,
        "iterations": report.iterations,
        "clustered": report.clustered,
        "min_arg_radians": report.min_arg,
    });

    let mut text = format!(
        "roots of a degree-{} polynomial (seed {seed})\n",
        report.degree
    );
    for (idx, z) in report.roots.iter().enumerate() {
        text.push_str(&format!(
            "  z_{} = {:+.12e} {:+.12e}i\n",
            idx + 1,
            z.re,
            z.im
        ));
    }
    text.push_str(&format!(
        "residual {:.3e}, converged {}, iterations {}, clustered {}\n",
        report.residual, report.converged, report.iterations, report.clustered
    ));
    if report.min_arg.is_finite() {
        text.push_str(&format!(
            "min |arg z| over nonzero roots: {:.9}\n",
            report.min_arg
        ));
    } else {
        text.push_str("min |arg z| over nonzero roots: none (all roots at the origin)\n");
    }

    if let Some(m) = m {
        let clearance = sector_clearance(&report, m);
        oracle["clearance"] = clearance_json(&clearance);
        text.push_str(&clearance_text(&clearance));
    }
    let doc = json!({ "degree": report.degree, "oracle": oracle });
    let exit = if report.converged { 0 } else { 3 };
    Ok(Rendered {
        json: doc,
        text,
        exit,
    })
}

fn clearance_json(clearance: &ClearanceReport) -> Value {
    json!({
        "m": clearance.m,
        "clearance_radians": clearance.clearance,
        "slack": clearance.slack,
        "boundary_slope": clearance.boundary_slope,
        "root_slope": clearance.root_slope,
        "closest_root": clearance.closest_root.map(|z| json!({ "re": z.re, "im": z.im })),
    })
}

fn clearance_text(clearance: &ClearanceReport) -> String {
    let mut out = format!(
        "sector clearance at M = {}: {:+.6e} rad (slack {:.0e})\n",
        clearance.m, clearance.clearance, clearance.slack
    );
    if let Some(z) = clearance.closest_root {
        out.push_str(&format!("  closest root: {:+.12e} {:+.12e}i\n", z.re, z.im));
    }
    if let (Some(root), Some(boundary)) = (clearance.root_slope, clearance.boundary_slope) {
        out.push_str(&format!(
            "  slope comparison: root |im/re| = {root:.5} vs boundary tan(pi/{}) = {boundary:.5}\n",
            clearance.m
        ));
    }
    out
}

fn cmd_report(
    f: &RationalPolynomial,
    m: usize,
    method: Option<Method>,
    seed: u64,
) -> Result<Rendered, Error> {
    let table = cmd_table(f, m)?;
    let minors = cmd_minors(f, m, false, DEFAULT_MINOR_SEARCH_CAP)?;
    let certificate = cmd_certify(f, m, method, seed)?;
    let roots = cmd_roots(f, Some(m), seed)?;

    let exit = table
        .exit
        .max(minors.exit)
        .max(certificate.exit)
        .max(roots.exit);
    let doc = json!({
        "table": table.json,
        "minors": minors.json,
        "certificate": certificate.json,
        "roots": roots.json,
    });
    let text = format!(
        "--- table ---\n{}--- minors ---\n{}--- certificate ---\n{}--- roots ---\n{}",
        table.text, minors.text, certificate.text, roots.text
    );
    Ok(Rendered {
        json: doc,
        text,
        exit,
    })
}

// ---------------------------------------------------------------------------
// Small shared renderers
// ---------------------------------------------------------------------------

fn roots_json(report: &RootReport) -> Value {
    Value::Array(
        report
            .roots
            .iter()
            .map(|z| json!({ "re": z.re, "im": z.im }))
            .collect(),
    )
}

fn join_rationals<T: std::fmt::Display>(list: &[T]) -> String {
    list.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
