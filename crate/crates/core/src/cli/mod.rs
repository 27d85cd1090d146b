//! Command line: construct families, verify relations, run the analysis
//! procedures, and print classification tables, with exact JSON output on
//! request.
//!
//! Exit codes: 0 success, 1 domain errors (degenerate parameters, boundary
//! violations, ...), 2 usage and parse errors.

mod document;
mod render;

pub use document::{
    deserialize_rep, document_from_str, document_to_string, serialize_rep, FamilyDoc, RepDocument,
    ScalarRepr, FORMAT_VERSION,
};
pub use render::{
    classification_json, classification_table, format_family, format_matrix, format_subspace,
};

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{
    are_isomorphic, classify, has_complement, invariant_subspace_search, is_irreducible,
    iso_criterion_cyclic, scan_highest_weight, ScanMode, Subspace, Verdict,
};
use crate::error::Error;
use crate::families::{self, CyclicParams};
use crate::repcore::{CentralValue, Representation};
use crate::scalar::{parse_scalar, render_scalar, Cyclotomic, QContext};

#[derive(Parser)]
#[command(
    name = "qsu2",
    version,
    about = "Exact representation workbench for quantum su(2) at a root of unity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a representation from one of the named families
    Construct(ConstructArgs),
    /// Check the defining relations of a serialized representation
    Verify(InputArgs),
    /// Run a decision procedure on a serialized representation
    Analyze(AnalyzeArgs),
    /// Decide isomorphism of two serialized irreducible representations
    Iso(IsoArgs),
    /// Parameter-level isomorphism test for two cyclic modules
    IsoCriterion(IsoCriterionArgs),
    /// Classification table: which dimensions carry an irreducible
    Classify(MArgs),
    /// The indecomposable module defeating complete reducibility
    Counterexample(CounterexampleArgs),
    /// Torsion scan of the dimension-N highest-weight candidates
    Scan(ScanArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Order of q (smallest m with q^m = 1), m >= 3
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Dimension N (generic and highest-weight families)
    #[arg(long)]
    n: Option<usize>,
    /// Fourth root of unity omega (generic family), as an expression
    #[arg(long)]
    omega: Option<String>,
    /// Weight parameter lambda, as an expression
    #[arg(long)]
    lambda: Option<String>,
    /// Boundary parameter a on F (cyclic family)
    #[arg(long)]
    a: Option<String>,
    /// Boundary parameter b on E (cyclic family)
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    json: bool,
    /// Serialize scalars as raw power-basis coefficient arrays
    #[arg(long)]
    raw_coeffs: bool,
    /// Write the JSON document to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Generic,
    Highest,
    Half,
    Cyclic,
    Counterexample,
}

#[derive(Args)]
struct InputArgs {
    input: PathBuf,
    /// Cross-check against the document's m
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    input: PathBuf,
    #[arg(long, value_enum)]
    which: WhichArg,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Irreducible,
    Weights,
    Central,
    Submodule,
}

#[derive(Args)]
struct IsoArgs {
    input1: PathBuf,
    input2: PathBuf,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct IsoCriterionArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    lambda1: String,
    #[arg(long)]
    a1: String,
    #[arg(long)]
    b1: String,
    #[arg(long)]
    lambda2: String,
    #[arg(long)]
    a2: String,
    #[arg(long)]
    b2: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CounterexampleArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    raw_coeffs: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    json: bool,
}

/// Captured result of one invocation.
#[derive(Debug)]
pub struct CmdOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::Schema(_) | Error::ConductorMismatch { .. } => 2,
        _ => 1,
    }
}

/// Parse and run an argument vector (including the program name). All
/// output is returned, never printed; nothing is written on the error path,
/// so partial JSON can never be emitted.
pub fn dispatch<I, T>(argv: I) -> CmdOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CmdOutput {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                // --help / --version
                CmdOutput::ok(rendered)
            };
        }
    };
    match run(cli.command) {
        Ok(stdout) => CmdOutput::ok(stdout),
        Err(e) => CmdOutput {
            code: exit_code_for(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Entry point for the binary: dispatch on the process arguments and print.
pub fn run_main() -> i32 {
    let out = dispatch(std::env::args_os());
    if !out.stdout.is_empty() {
        print!("{}", out.stdout);
    }
    if !out.stderr.is_empty() {
        eprint!("{}", out.stderr);
    }
    out.code
}

fn run(command: Command) -> Result<String, Error> {
    match command {
        Command::Construct(args) => cmd_construct(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Iso(args) => cmd_iso(args),
        Command::IsoCriterion(args) => cmd_iso_criterion(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Counterexample(args) => cmd_counterexample(args),
        Command::Scan(args) => cmd_scan(args),
    }
}

fn require_expr(
    field: &Option<String>,
    name: &str,
    family: &str,
    ctx: &QContext,
) -> Result<Cyclotomic, Error> {
    match field {
        Some(text) => parse_scalar(text, ctx),
        None => Err(Error::Schema(format!(
            "family '{family}' requires --{name}"
        ))),
    }
}

fn cmd_construct(args: ConstructArgs) -> Result<String, Error> {
    let ctx = QContext::new(args.m)?;
    let rep = match args.family {
        FamilyArg::Generic => {
            let n = args
                .n
                .ok_or_else(|| Error::Schema("family 'generic' requires --n".into()))?;
            let omega = require_expr(&args.omega, "omega", "generic", &ctx)?;
            families::generic_irrep(&ctx, n, omega)?
        }
        FamilyArg::Highest => {
            let n = args
                .n
                .ok_or_else(|| Error::Schema("family 'highest' requires --n".into()))?;
            let lambda = require_expr(&args.lambda, "lambda", "highest", &ctx)?;
            families::highest_weight_module(&ctx, n, lambda)?
        }
        FamilyArg::Half => {
            let lambda = require_expr(&args.lambda, "lambda", "half", &ctx)?;
            families::half_m_irrep(&ctx, lambda)?
        }
        FamilyArg::Cyclic => {
            let lambda = require_expr(&args.lambda, "lambda", "cyclic", &ctx)?;
            let a = require_expr(&args.a, "a", "cyclic", &ctx)?;
            let b = require_expr(&args.b, "b", "cyclic", &ctx)?;
            families::cyclic_module(&ctx, lambda, a, b)?
        }
        FamilyArg::Counterexample => families::counterexample_module(&ctx),
    };
    emit_representation(&rep, args.json, args.raw_coeffs, args.out.as_deref())
}

fn emit_representation(
    rep: &Representation,
    json: bool,
    raw_coeffs: bool,
    out: Option<&std::path::Path>,
) -> Result<String, Error> {
    let doc = serialize_rep(rep, raw_coeffs);
    let text = document_to_string(&doc) + "\n";
    if let Some(path) = out {
        std::fs::write(path, &text)
            .map_err(|e| Error::InternalInconsistency(format!("cannot write {path:?}: {e}")))?;
        return Ok(format!(
            "wrote {} representation of dimension {} to {}\n",
            rep.params().label(),
            rep.dim(),
            path.display()
        ));
    }
    if json {
        return Ok(text);
    }
    Ok(render::rep_summary(rep))
}

fn load_rep(path: &std::path::Path, m_flag: Option<usize>) -> Result<Representation, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Schema(format!("cannot read {}: {e}", path.display())))?;
    let doc = document_from_str(&text)?;
    if let Some(m) = m_flag {
        if m != doc.m {
            return Err(Error::Schema(format!(
                "--m {} conflicts with document m = {}",
                m, doc.m
            )));
        }
    }
    deserialize_rep(&doc)
}

fn cmd_verify(args: InputArgs) -> Result<String, Error> {
    let rep = load_rep(&args.input, args.m)?;
    let report = rep.verify_relations();
    if args.json {
        let checks: Vec<serde_json::Value> = report
            .checks
            .iter()
            .map(|c| {
                serde_json::json!({
                    "relation": c.relation.description(),
                    "passed": c.passed,
                    "first_failure": c.first_failure.map(|(i, j)| vec![i, j]),
                })
            })
            .collect();
        let value = serde_json::json!({
            "all_pass": report.all_pass(),
            "checks": checks,
        });
        return Ok(serde_json::to_string_pretty(&value).expect("json") + "\n");
    }
    let mut out = String::new();
    for check in &report.checks {
        match check.first_failure {
            None => out.push_str(&format!("ok    {}\n", check.relation.description())),
            Some((i, j)) => out.push_str(&format!(
                "FAIL  {} (first failing entry at row {i}, column {j})\n",
                check.relation.description()
            )),
        }
    }
    out.push_str(if report.all_pass() {
        "all defining relations hold exactly\n"
    } else {
        "defining relations violated\n"
    });
    Ok(out)
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<String, Error> {
    let rep = load_rep(&args.input, args.m)?;
    let ctx = rep.ctx().clone();
    match args.which {
        WhichArg::Irreducible => {
            let cert = is_irreducible(&rep)?;
            if args.json {
                let value = match &cert.verdict {
                    Verdict::Irreducible { closure_dim } => serde_json::json!({
                        "irreducible": true,
                        "closure_dimension": closure_dim,
                    }),
                    Verdict::Reducible { witness } => serde_json::json!({
                        "irreducible": false,
                        "witness": render::subspace_json(witness, &ctx),
                    }),
                };
                return Ok(serde_json::to_string_pretty(&value).expect("json") + "\n");
            }
            Ok(match &cert.verdict {
                Verdict::Irreducible { closure_dim } => format!(
                    "irreducible: generator closure has dimension {closure_dim} = {}^2\n",
                    rep.dim()
                ),
                Verdict::Reducible { witness } => format!(
                    "reducible: invariant subspace of dimension {}\n{}",
                    witness.dim(),
                    format_subspace(witness, &ctx)
                ),
            })
        }
        WhichArg::Weights => {
            let wd = rep.weight_decomposition()?;
            if args.json {
                let spaces: Vec<serde_json::Value> = wd
                    .spaces
                    .iter()
                    .map(|s| {
                        serde_json::json!({
                            "eigenvalue": render_scalar(&s.eigenvalue, &ctx),
                            "orbit_exponent": s.orbit_exponent,
                            "multiplicity": s.multiplicity(),
                            "columns": s.columns,
                        })
                    })
                    .collect();
                let value = serde_json::json!({"dim": wd.dim, "weights": spaces});
                return Ok(serde_json::to_string_pretty(&value).expect("json") + "\n");
            }
            let mut out = String::new();
            for s in &wd.spaces {
                out.push_str(&format!(
                    "weight {} = lambda_0 * q^{}  multiplicity {}  columns {:?}\n",
                    render_scalar(&s.eigenvalue, &ctx),
                    s.orbit_exponent,
                    s.multiplicity(),
                    s.columns
                ));
            }
            Ok(out)
        }
        WhichArg::Central => {
            let report = rep.central_scalars();
            let fmt = |v: &CentralValue| match v {
                CentralValue::Scalar(c) => format!("scalar {}", render_scalar(c, &ctx)),
                CentralValue::NotScalar => "not scalar".to_string(),
            };
            if args.json {
                let as_json = |v: &CentralValue| match v {
                    CentralValue::Scalar(c) => {
                        serde_json::json!({"scalar": render_scalar(c, &ctx)})
                    }
                    CentralValue::NotScalar => serde_json::json!({"scalar": null}),
                };
                let value = serde_json::json!({
                    "e_power": as_json(&report.e_power),
                    "f_power": as_json(&report.f_power),
                    "k_power": as_json(&report.k_power),
                });
                return Ok(serde_json::to_string_pretty(&value).expect("json") + "\n");
            }
            let m = ctx.m();
            Ok(format!(
                "E^{m}: {}\nF^{m}: {}\nK^{m}: {}\n",
                fmt(&report.e_power),
                fmt(&report.f_power),
                fmt(&report.k_power)
            ))
        }
        WhichArg::Submodule => {
            let found = invariant_subspace_search(&rep)?;
            if args.json {
                let value = match &found {
                    Some(s) => serde_json::json!({"submodule": render::subspace_json(s, &ctx)}),
                    None => serde_json::json!({"submodule": null}),
                };
                return Ok(serde_json::to_string_pretty(&value).expect("json") + "\n");
            }
            Ok(match found {
                Some(s) => format!(
                    "proper invariant subspace of dimension {}\n{}",
                    s.dim(),
                    format_subspace(&s, &ctx)
                ),
                None => "no proper invariant subspace (irreducible)\n".to_string(),
            })
        }
    }
}

fn cmd_iso(args: IsoArgs) -> Result<String, Error> {
    let rep1 = load_rep(&args.input1, args.m)?;
    let rep2 = load_rep(&args.input2, args.m)?;
    if rep1.ctx().m() != rep2.ctx().m() {
        return Err(Error::Schema(format!(
            "inputs disagree on m: {} vs {}",
            rep1.ctx().m(),
            rep2.ctx().m()
        )));
    }
    let ctx = rep1.ctx().clone();
    let result = are_isomorphic(&rep1, &rep2)?;
    if args.json {
        let value = match &result {
            Some(t) => serde_json::json!({
                "isomorphic": true,
                "intertwiner": render::matrix_json(t, &ctx),
            }),
            None => serde_json::json!({"isomorphic": false}),
        };
        return Ok(serde_json::to_string_pretty(&value).expect("json") + "\n");
    }
    Ok(match result {
        Some(t) => format!(
            "isomorphic; invertible intertwiner:\n{}",
            format_matrix(&t, &ctx)
        ),
        None => "not isomorphic\n".to_string(),
    })
}

fn cmd_iso_criterion(args: IsoCriterionArgs) -> Result<String, Error> {
    let ctx = QContext::new(args.m)?;
    let parse = |text: &str| parse_scalar(text, &ctx);
    let p1 = CyclicParams {
        lambda: parse(&args.lambda1)?,
        a: parse(&args.a1)?,
        b: parse(&args.b1)?,
    };
    let p2 = CyclicParams {
        lambda: parse(&args.lambda2)?,
        a: parse(&args.a2)?,
        b: parse(&args.b2)?,
    };
    let result = iso_criterion_cyclic(&ctx, &p1, &p2)?;
    if args.json {
        let value = serde_json::json!({
            "isomorphic": result.is_some(),
            "shift": result,
        });
        return Ok(serde_json::to_string_pretty(&value).expect("json") + "\n");
    }
    Ok(match result {
        Some(r) => format!("isomorphic: weights related by lambda' = lambda q^{r}\n"),
        None => "not isomorphic\n".to_string(),
    })
}

fn cmd_classify(args: MArgs) -> Result<String, Error> {
    let ctx = QContext::new(args.m)?;
    let report = classify(&ctx)?;
    if args.json {
        return Ok(render::classification_json(&report, &ctx));
    }
    Ok(render::classification_table(&report, &ctx))
}

fn cmd_counterexample(args: CounterexampleArgs) -> Result<String, Error> {
    let ctx = QContext::new(args.m)?;
    let m = ctx.m();
    let rep = families::counterexample_module(&ctx);
    if args.json || args.out.is_some() {
        return emit_representation(&rep, args.json, args.raw_coeffs, args.out.as_deref());
    }
    let relations = rep.verify_relations();
    let l = ctx.conductor();
    let unit = |i: usize| {
        let mut v = vec![Cyclotomic::zero(l); m + 1];
        v[i] = Cyclotomic::one(l);
        v
    };
    let line = Subspace::from_vectors(m + 1, l, [unit(m)]);
    let tail = Subspace::from_vectors(m + 1, l, (1..=m).map(unit));
    let line_split = has_complement(&rep, &line)?;
    let tail_split = has_complement(&rep, &tail)?;
    let mut out = String::new();
    out.push_str(&format!(
        "indecomposable module of dimension {} at m = {m}\n",
        m + 1
    ));
    out.push_str(&format!(
        "defining relations: {}\n",
        if relations.all_pass() {
            "hold exactly"
        } else {
            "VIOLATED"
        }
    ));
    out.push_str(&format!(
        "span{{e_{m}}} is a submodule; invariant complement: {}\n",
        if line_split.is_some() {
            "exists"
        } else {
            "none"
        }
    ));
    out.push_str(&format!(
        "span{{e_1..e_{m}}} is a submodule; invariant complement: {}\n",
        if tail_split.is_some() {
            "exists"
        } else {
            "none"
        }
    ));
    out.push_str("the module is not completely reducible\n");
    Ok(out)
}

fn cmd_scan(args: ScanArgs) -> Result<String, Error> {
    let ctx = QContext::new(args.m)?;
    let report = scan_highest_weight(&ctx, args.n)?;
    if args.json {
        let entries: Vec<serde_json::Value> = report
            .entries
            .iter()
            .map(|e| {
                serde_json::json!({
                    "lambda": render_scalar(&e.lambda, &ctx),
                    "family": format_family(&e.family, &ctx),
                    "irreducible": e.certificate.is_irreducible(),
                    "witness_dimension": e.certificate.witness().map(|w| w.dim()),
                })
            })
            .collect();
        let value = serde_json::json!({
            "m": args.m,
            "n": args.n,
            "mode": match report.mode {
                ScanMode::Torsion => "torsion",
                ScanMode::FreeParameter => "free_parameter",
            },
            "entries": entries,
        });
        return Ok(serde_json::to_string_pretty(&value).expect("json") + "\n");
    }
    let mut out = String::new();
    out.push_str(&format!(
        "highest-weight scan at dimension N = {} (m = {}): {}\n",
        args.n,
        args.m,
        match report.mode {
            ScanMode::Torsion => "boundary forces 4 torsion weights",
            ScanMode::FreeParameter => "free weight parameter, sampled",
        }
    ));
    for e in &report.entries {
        out.push_str(&format!(
            "  lambda = {:<24} {}  [{}]\n",
            render_scalar(&e.lambda, &ctx),
            if e.certificate.is_irreducible() {
                "irreducible"
            } else {
                "reducible  "
            },
            format_family(&e.family, &ctx)
        ));
    }
    Ok(out)
}
