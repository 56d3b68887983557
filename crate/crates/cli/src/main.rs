//! `spin-cover` command-line front end.
//!
//! Exit codes: 0 success, 1 assertion failure, 2 input error, 3 resource
//! limit.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spin_cover::finite::{
    abstract_group, double_group_verdict_for, find_isomorphism, generate_closure, gpt_hat, gpt_spacetime, Backend,
    ClosureOptions, DoubleGroupConfig, FiniteGroup, GroupKind, ReflectionAxis, VerdictReport, DEFAULT_MAX_ORDER,
};
use spin_cover::matrix::ExactMat2;
use spin_cover::pt::{act_g0, q_projection, G0Element, SpinorSampleField};
use spin_cover::scalar::DEFAULT_TOLERANCE;
use spin_cover::verify::{run_suite, Suite};
use spin_cover::{Error, Sign, SCHEMA_VERSION};

#[derive(Parser)]
#[command(name = "spin-cover", version, about = "Spinor double covers of O(3) and O(3)xZ2")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Number of random samples per sampled check.
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest group a closure may produce.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Equality tolerance of the floating-point backend.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Exact,
    Approx,
}

#[derive(Subcommand)]
enum Command {
    /// Transform a sampled spinor field by an element of the double cover.
    Apply {
        /// `P`, `T`, `PT`, `I`, a matrix `a,b;c,d`, or a pair `a,b;c,d@-1`.
        #[arg(allow_hyphen_values = true)]
        transform: String,
        /// Field file with one `t; x1,x2,x3; u; v` line per sample.
        field: PathBuf,
    },
    /// Cayley table of a named group or of the group generated by matrices.
    Table {
        /// `GPT_hat`, `GPT_spacetime`, an abstract group such as `Z4xZ2`, or
        /// one or more generator matrices (after `--` if one starts with `-`).
        #[arg(required = true)]
        group: Vec<String>,
        #[arg(long, value_enum, default_value_t = BackendArg::Exact)]
        backend: BackendArg,
    },
    /// Decide whether two groups are isomorphic.
    Iso {
        /// Group spec: a name, or `gen:M1|M2|...` for generator matrices.
        #[arg(allow_hyphen_values = true)]
        a: String,
        b: String,
    },
    /// Compare the double groups of C_nv and D_n.
    Doublegroup {
        /// Order of the principal rotation, 2 to 12.
        #[arg(long)]
        n: usize,
        /// Value of P^2 to assume (`+1` or `-1`); both when omitted.
        #[arg(long, allow_hyphen_values = true)]
        convention: Option<String>,
        /// In-plane axis of the half-turn behind the second generator.
        #[arg(long, value_enum, default_value_t = AxisArg::X)]
        axis: AxisArg,
    },
    /// Run the seeded invariant suites.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AxisArg {
    X,
    Y,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MaxOrderExceeded { .. } | Error::SizeLimitExceeded { .. } | Error::SeparationAuditFailed { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

/// What a command produced: the main output and an exit status.
struct Output {
    body: String,
    /// Extra lines for stderr (text mode only).
    notes: String,
    assertions_failed: bool,
}

impl Output {
    fn new(body: String) -> Self {
        Output { body, notes: String::new(), assertions_failed: false }
    }
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn closure_options(c: &Common) -> ClosureOptions {
    ClosureOptions { max_order: c.max_order, tolerance: c.tolerance }
}

fn parse_transform(s: &str) -> Result<G0Element, Error> {
    match s.trim() {
        "I" | "1" => Ok(G0Element::identity()),
        "P" => Ok(G0Element::parity()),
        "T" => Ok(G0Element::time_reversal()),
        "PT" => Ok(G0Element::parity_time()),
        other => other.parse(),
    }
}

fn cmd_apply(c: &Common, transform: &str, path: &PathBuf) -> Result<Output, Failure> {
    let g = parse_transform(transform)?;
    let text = std::fs::read_to_string(path)?;
    let field: SpinorSampleField = text.parse()?;
    let result = act_g0(&g, &field)?;
    let q = q_projection(&g);
    Ok(match c.format {
        Format::Json => Output::new(to_json(&json!({
            "schema_version": SCHEMA_VERSION,
            "element": g,
            "matrix": g.c_part,
            "q_projection": q,
            "field": result.to_string(),
        }))),
        Format::Text => Output {
            notes: format!("element: {g}\nmatrix: {}\nq-projection: {q}\n", g.c_part),
            ..Output::new(result.to_string())
        },
    })
}

fn named_or_abstract(name: &str) -> Result<Option<FiniteGroup>, Error> {
    match name {
        "GPT_hat" => gpt_hat().map(Some),
        "GPT_spacetime" => gpt_spacetime().map(Some),
        _ if name.starts_with(['Z', 'D']) => abstract_group(&name.parse::<GroupKind>()?).map(Some),
        _ => Ok(None),
    }
}

fn from_generators(specs: &[&str], backend: Backend, c: &Common) -> Result<FiniteGroup, Error> {
    let gens = specs.iter().map(|s| s.parse::<ExactMat2>()).collect::<Result<Vec<_>, _>>()?;
    generate_closure(&gens, backend, closure_options(c))
}

fn group_spec(spec: &str, c: &Common) -> Result<FiniteGroup, Error> {
    if let Some(list) = spec.strip_prefix("gen:") {
        let parts: Vec<&str> = list.split('|').filter(|s| !s.trim().is_empty()).collect();
        return from_generators(&parts, Backend::Exact, c);
    }
    named_or_abstract(spec)?.ok_or_else(|| Error::parse(format!("unknown group `{spec}`")))
}

fn cmd_table(c: &Common, group: &[String], backend: BackendArg) -> Result<Output, Failure> {
    let g = match group {
        [single] => match named_or_abstract(single)? {
            Some(g) => g,
            None => from_generators(&[single], backend_of(backend), c)?,
        },
        many => from_generators(&many.iter().map(String::as_str).collect::<Vec<_>>(), backend_of(backend), c)?,
    };
    let all: Vec<usize> = (0..g.order()).collect();
    Ok(Output::new(match c.format {
        Format::Json => {
            let t = g.cayley_table();
            to_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "order": g.order(),
                "elements": t.elements,
                "table": t.table,
            }))
        }
        Format::Text => g.render_text(&all, &all),
    }))
}

fn backend_of(b: BackendArg) -> Backend {
    match b {
        BackendArg::Exact => Backend::Exact,
        BackendArg::Approx => Backend::Approx,
    }
}

fn cmd_iso(c: &Common, a: &str, b: &str) -> Result<Output, Failure> {
    let (ga, gb) = (group_spec(a, c)?, group_spec(b, c)?);
    let witness = find_isomorphism(&ga, &gb)?;
    let orders = |g: &FiniteGroup| g.order_multiset();
    Ok(Output::new(match c.format {
        Format::Json => {
            let mut v = json!({
                "schema_version": SCHEMA_VERSION,
                "a": a,
                "b": b,
                "isomorphic": witness.is_some(),
            });
            match &witness {
                Some(w) => {
                    let labels: serde_json::Map<String, Value> = w
                        .mapping
                        .iter()
                        .enumerate()
                        .map(|(i, &j)| (ga.label(i).to_string(), Value::from(gb.label(j))))
                        .collect();
                    v["witness"] = json!({ "mapping": w.mapping, "labels": labels });
                }
                None => {
                    v["element_orders"] = json!({ "a": orders(&ga), "b": orders(&gb) });
                }
            }
            to_json(&v)
        }
        Format::Text => {
            let mut s = String::new();
            match &witness {
                Some(w) => {
                    let _ = writeln!(s, "isomorphic: {a} ~ {b}");
                    for (i, &j) in w.mapping.iter().enumerate() {
                        let _ = writeln!(s, "  {} -> {}", ga.label(i), gb.label(j));
                    }
                }
                None => {
                    let _ = writeln!(s, "not isomorphic: {a} vs {b}");
                    let _ = writeln!(s, "  element orders {a}: {:?}", orders(&ga));
                    let _ = writeln!(s, "  element orders {b}: {:?}", orders(&gb));
                }
            }
            s
        }
    }))
}

fn cmd_doublegroup(c: &Common, n: usize, convention: Option<&str>, axis: AxisArg) -> Result<Output, Failure> {
    let signs = match convention {
        None => vec![Sign::Plus, Sign::Minus],
        Some(s) => vec![s.parse::<Sign>()?],
    };
    let config = DoubleGroupConfig {
        axis: match axis {
            AxisArg::X => ReflectionAxis::X,
            AxisArg::Y => ReflectionAxis::Y,
        },
        closure: closure_options(c),
    };
    let results = signs
        .into_iter()
        .map(|s| double_group_verdict_for(n, s, config))
        .collect::<Result<Vec<_>, _>>()?;
    let report = VerdictReport { schema_version: SCHEMA_VERSION, n, results };
    Ok(Output::new(match c.format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut s = String::new();
            for v in &report.results {
                let verdict = if v.isomorphic { "isomorphic" } else { "not isomorphic" };
                let _ = writeln!(s, "n={} P^2={}: C{}v and D{} double groups (order {}) are {verdict}", v.n, v.convention, v.n, v.n, v.order);
                match (&v.witness, &v.invariant_used) {
                    (Some(w), _) => {
                        let _ = writeln!(s, "  witness: {w:?}");
                    }
                    (None, Some(inv)) => {
                        let _ = writeln!(s, "  distinguished by {inv}");
                        let _ = writeln!(s, "  C{}v orders: {:?}", v.n, v.cnv_order_profile);
                        let _ = writeln!(s, "  D{} orders: {:?}", v.n, v.dn_order_profile);
                    }
                    (None, None) => {}
                }
                let _ = writeln!(s, "  matches the claimed verdict: {}", v.claim_match);
            }
            s
        }
    }))
}

fn cmd_verify(c: &Common, suite: &str) -> Result<Output, Failure> {
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite, c.seed, c.samples);
    let body = match c.format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut s = String::new();
            for a in &report.assertions {
                let _ = writeln!(s, "{} {}", if a.pass { "PASS" } else { "FAIL" }, a.assertion);
                if let Some(w) = &a.witness {
                    let _ = writeln!(s, "     witness: {w}");
                }
            }
            let failed = report.failures().count();
            let _ = writeln!(s, "{} assertions, {failed} failed (suite {}, seed {}, samples {})", report.assertions.len(), report.suite, report.seed, report.samples);
            s
        }
    };
    Ok(Output { assertions_failed: !report.all_pass, ..Output::new(body) })
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let c = &cli.common;
    if c.max_order == 0 {
        return Err(Failure { code: 2, message: "--max-order must be at least 1".into() });
    }
    if !(c.tolerance > 0.0 && c.tolerance.is_finite()) {
        return Err(Failure { code: 2, message: "--tolerance must be a positive number".into() });
    }
    match &cli.command {
        Command::Apply { transform, field } => cmd_apply(c, transform, field),
        Command::Table { group, backend } => cmd_table(c, group, *backend),
        Command::Iso { a, b } => cmd_iso(c, a, b),
        Command::Doublegroup { n, convention, axis } => cmd_doublegroup(c, *n, convention.as_deref(), *axis),
        Command::Verify { suite } => cmd_verify(c, suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.common.out.clone();
    match run(cli) {
        Ok(output) => {
            eprint!("{}", output.notes);
            let written = match &out_path {
                Some(p) => std::fs::write(p, &output.body),
                None => {
                    print!("{}", output.body);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if output.assertions_failed { 1 } else { 0 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
