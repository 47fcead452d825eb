//! Command-line front end.
//!
//! [`run`] parses arguments, calls the library and renders the result as
//! text or JSON; the `shw` binary only forwards to it.

use crate::closed_forms::{golden_bracket_at, lonely_structure_bracket, witt_bracket, witt_shift};
use crate::error::{Error, Result};
use crate::grammar::{format_monomial, format_number, format_poly, parse_poly, parse_rational, VARIABLES};
use crate::index::{degree_shift, BracketContext, MultiIndex};
use crate::lab::{
    classify, closure_iterate, degree_sum_diagnostics, divergence_witness, is_closed, is_perfect, AlgebraFile,
    Classification, ClosureLimits, SpanBasis,
};
use crate::poly::{rat, ExponentVector, GenPolynomial, Rational};
use crate::selfcheck;
use crate::vandermonde::{quasi_triangular_det, van_det, vanishing_certificate, VanInput, VanishingCertificate};
use crate::wronskian::{bracket, DetMode};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::PathBuf;

/// Version of the JSON output layout.
pub const SCHEMA_VERSION: u64 = 1;

/// Outcome of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    /// 0 on success, 1 on a domain error, 2 on a usage error.
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "shw", version, about = "Exact complete generalised Wronskian brackets")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Bareiss,
    Cofactor,
}

#[derive(Args, Debug)]
struct CtxArgs {
    /// Number of coordinates.
    #[arg(long)]
    dim: usize,
    /// Differential order.
    #[arg(long)]
    order: usize,
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    /// JSON file with `dim`, `order` and `generators`.
    #[arg(long)]
    algebra: Option<PathBuf>,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    order: Option<usize>,
    /// Generators, used when no algebra file is given.
    #[arg(allow_hyphen_values = true)]
    generators: Vec<String>,
}

#[derive(Args, Debug)]
struct LimitArgs {
    /// Iteration cap for closure.
    #[arg(long)]
    max_iter: Option<usize>,
    /// Total degree cap for closure.
    #[arg(long)]
    max_degree: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bracket of N polynomials.
    Bracket {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Derivative multi-indices in row order.
    Rows {
        #[command(flatten)]
        ctx: CtxArgs,
    },
    /// Degree shift per coordinate and in total.
    Shift {
        #[command(flatten)]
        ctx: CtxArgs,
    },
    /// Generalised Vandermonde determinant of exponent tuples.
    Vandermonde {
        #[command(flatten)]
        ctx: CtxArgs,
        /// Tuples as `a,b;c,d;...`.
        #[arg(long, allow_hyphen_values = true)]
        tuples: String,
    },
    /// Standard monomials with one row's slot replaced by a monomial.
    Structure {
        #[command(flatten)]
        ctx: CtxArgs,
        /// Row multi-index, e.g. `1,0`.
        #[arg(long)]
        row: String,
        /// Replacing monomial.
        #[arg(allow_hyphen_values = true)]
        monomial: String,
    },
    /// Closed form for two replaced monomials.
    Golden {
        #[command(flatten)]
        ctx: CtxArgs,
        /// Monomial replacing the coordinate.
        #[arg(long)]
        p: String,
        /// Monomial replacing the constant.
        #[arg(long)]
        q: String,
        /// Replaced coordinate (`x`, `y`, ...).
        #[arg(long, default_value = "x")]
        coord: char,
    },
    /// Structure constant of shifted monomials.
    Witt {
        #[command(flatten)]
        ctx: CtxArgs,
        /// Index tuples as `a,b;c,d;...`.
        #[arg(long, allow_hyphen_values = true)]
        indices: String,
    },
    /// Classify the algebra spanned by generators.
    Classify {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        limits: LimitArgs,
        /// Run closure first and classify the result.
        #[arg(long)]
        after_closure: bool,
    },
    /// Iterate brackets until the span stabilises or a cap is hit.
    Closure {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Test closedness and perfection.
    Perfect {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long)]
        after_closure: bool,
    },
    /// Degree-sum diagnostics.
    Diagnose {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long)]
        after_closure: bool,
    },
    /// Replay every published reference value.
    Selfcheck,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Out = std::result::Result<Output, Failure>;

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }
}

/// Run one command; `args` excludes the program name.
pub fn run<S: AsRef<str>>(args: &[S]) -> CommandResult {
    let argv = std::iter::once("shw").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CommandResult { exit_code: 0, stdout: text, stderr: String::new() }
                }
                _ => CommandResult { exit_code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let (name, result) = dispatch(cli.command);
    match result {
        Ok(out) => {
            let stdout = match cli.format {
                Format::Text => out.text,
                Format::Json => {
                    let mut obj = json!({ "schema": SCHEMA_VERSION, "command": name });
                    if let (Value::Object(dst), Value::Object(src)) = (&mut obj, out.json) {
                        dst.extend(src);
                    }
                    format!("{}\n", serde_json::to_string_pretty(&obj).expect("serialisable"))
                }
            };
            CommandResult { exit_code: if out.ok { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => CommandResult { exit_code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Domain(e)) => CommandResult { exit_code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Positional values that look like long flags are unknown options.
fn stray_flag(cmd: &Command) -> Option<&str> {
    let values: Vec<&String> = match cmd {
        Command::Bracket { polys, .. } => polys.iter().collect(),
        Command::Structure { monomial, .. } => vec![monomial],
        Command::Classify { alg, .. } | Command::Closure { alg, .. } | Command::Perfect { alg, .. } | Command::Diagnose { alg, .. } => {
            alg.generators.iter().collect()
        }
        _ => Vec::new(),
    };
    values.into_iter().map(String::as_str).find(|v| v.starts_with("--"))
}

fn dispatch(cmd: Command) -> (&'static str, Out) {
    if let Some(flag) = stray_flag(&cmd) {
        return ("", Err(Failure::Usage(format!("unexpected argument `{flag}`"))));
    }
    match cmd {
        Command::Bracket { ctx, mode, polys } => ("bracket", cmd_bracket(&ctx, mode, &polys)),
        Command::Rows { ctx } => ("rows", cmd_rows(&ctx)),
        Command::Shift { ctx } => ("shift", cmd_shift(&ctx)),
        Command::Vandermonde { ctx, tuples } => ("vandermonde", cmd_vandermonde(&ctx, &tuples)),
        Command::Structure { ctx, row, monomial } => ("structure", cmd_structure(&ctx, &row, &monomial)),
        Command::Golden { ctx, p, q, coord } => ("golden", cmd_golden(&ctx, &p, &q, coord)),
        Command::Witt { ctx, indices } => ("witt", cmd_witt(&ctx, &indices)),
        Command::Classify { alg, limits, after_closure } => ("classify", cmd_classify(&alg, &limits, after_closure)),
        Command::Closure { alg, limits } => ("closure", cmd_closure(&alg, &limits)),
        Command::Perfect { alg, limits, after_closure } => ("perfect", cmd_perfect(&alg, &limits, after_closure)),
        Command::Diagnose { alg, limits, after_closure } => ("diagnose", cmd_diagnose(&alg, &limits, after_closure)),
        Command::Selfcheck => ("selfcheck", cmd_selfcheck()),
    }
}

fn context(a: &CtxArgs) -> Result<BracketContext> {
    BracketContext::new(a.dim, a.order)
}

fn monomial_exps(text: &str, dim: usize) -> Result<ExponentVector> {
    let p = parse_poly(text, dim)?;
    match p.as_monomial() {
        Some((e, c)) if *c == rat(1) => Ok(e.clone()),
        _ => Err(Error::Domain(format!("`{text}` is not a monic monomial"))),
    }
}

/// Parse `a,b;c,d;...` into exponent vectors of length `dim`.
pub fn parse_tuples(text: &str, dim: usize) -> Result<Vec<ExponentVector>> {
    text.split(';')
        .map(|t| {
            let entries = t.split(',').map(|e| parse_rational(e.trim())).collect::<Result<Vec<Rational>>>()?;
            if entries.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: entries.len() });
            }
            Ok(ExponentVector::new(entries))
        })
        .collect()
}

/// Render exponent vectors as `a,b;c,d;...`.
pub fn format_tuples(tuples: &[ExponentVector]) -> String {
    tuples
        .iter()
        .map(|t| t.entries().iter().map(format_number).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

fn tuple_json(e: &ExponentVector) -> Value {
    Value::Array(e.entries().iter().map(|q| Value::String(format_number(q))).collect())
}

fn polys_json(ps: &[GenPolynomial]) -> Value {
    Value::Array(ps.iter().map(|p| Value::String(format_poly(p))).collect())
}

fn cmd_bracket(a: &CtxArgs, mode: Option<ModeArg>, polys: &[String]) -> Out {
    let ctx = context(a)?;
    let args = polys.iter().map(|s| parse_poly(s, ctx.dim())).collect::<Result<Vec<_>>>()?;
    let mode = match mode {
        None => DetMode::Auto,
        Some(ModeArg::Bareiss) => DetMode::FractionFree,
        Some(ModeArg::Cofactor) => DetMode::Cofactor,
    };
    let v = bracket(&ctx, &args, mode)?;
    let text = format_poly(&v);
    Ok(Output::new(format!("{text}\n"), json!({ "result": text })))
}

fn cmd_rows(a: &CtxArgs) -> Out {
    let ctx = context(a)?;
    let rows: Vec<String> = ctx.rows().iter().map(MultiIndex::to_string).collect();
    let json_rows: Vec<Vec<u32>> = ctx.rows().iter().map(|r| r.entries().to_vec()).collect();
    Ok(Output::new(format!("{}\n", rows.join(";")), json!({ "arity": ctx.arity(), "rows": json_rows })))
}

fn cmd_shift(a: &CtxArgs) -> Out {
    context(a)?;
    let s = degree_shift(a.dim, a.order);
    Ok(Output::new(
        format!("per_coordinate: {}\ntotal: {}\n", s.per_coordinate, s.total),
        json!({ "per_coordinate": s.per_coordinate.to_string(), "total": s.total.to_string() }),
    ))
}

fn certificate_text(c: &VanishingCertificate) -> String {
    match c {
        VanishingCertificate::DuplicateColumns(a, b) => format!("duplicate_columns {a} {b}"),
        VanishingCertificate::ConstantCoordinate(i) => format!("constant_coordinate {}", VARIABLES[*i]),
        VanishingCertificate::DeficientDegree(i) => format!("deficient_degree {}", VARIABLES[*i]),
        VanishingCertificate::NoneFound => "none".to_string(),
    }
}

fn cmd_vandermonde(a: &CtxArgs, tuples: &str) -> Out {
    let ctx = context(a)?;
    let input = VanInput::new(ctx.clone(), parse_tuples(tuples, ctx.dim())?)?;
    let det = van_det(&input);
    let tri = quasi_triangular_det(&input);
    if det != tri {
        return Err(Error::Internal("quasi-triangular determinant disagrees".into()).into());
    }
    let cert = certificate_text(&vanishing_certificate(&input));
    Ok(Output::new(
        format!("{}\n", format_number(&det)),
        json!({ "det": format_number(&det), "certificate": cert }),
    ))
}

fn cmd_structure(a: &CtxArgs, row: &str, monomial: &str) -> Out {
    let ctx = context(a)?;
    let row = MultiIndex::parse(row)?;
    let exps = monomial_exps(monomial, ctx.dim())?;
    if !exps.is_natural() {
        return Err(Error::Domain("replacing monomial needs natural exponents".into()).into());
    }
    let v = lonely_structure_bracket(&ctx, &row, &exps)?;
    let text = format_poly(&v);
    Ok(Output::new(format!("{text}\n"), json!({ "result": text })))
}

fn cmd_golden(a: &CtxArgs, p: &str, q: &str, coord: char) -> Out {
    let ctx = context(a)?;
    let coord = VARIABLES
        .iter()
        .position(|&v| v == coord)
        .filter(|&i| i < ctx.dim())
        .ok_or(Error::VariableOutOfRange { var: coord, dim: ctx.dim() })?;
    let n = monomial_exps(p, ctx.dim())?;
    let m = monomial_exps(q, ctx.dim())?;
    if !n.is_natural() || !m.is_natural() {
        return Err(Error::Domain("golden formula needs natural exponents".into()).into());
    }
    let mb = golden_bracket_at(&ctx, coord, &n, &m)?;
    let text = format_poly(&mb.to_poly());
    Ok(Output::new(
        format!("{text}\n"),
        json!({ "result": text, "coeff": format_number(&mb.coeff), "monomial": format_monomial(&mb.exps) }),
    ))
}

fn cmd_witt(a: &CtxArgs, indices: &str) -> Out {
    let ctx = context(a)?;
    let idx = parse_tuples(indices, ctx.dim())?;
    let wb = witt_bracket(&ctx, &idx)?;
    let s = witt_shift(&ctx);
    let sum = format_tuples(std::slice::from_ref(&wb.index_sum));
    Ok(Output::new(
        format!("omega: {}\nsum: {}\nshift: {}\n", format_number(&wb.omega), sum, format_number(&s)),
        json!({ "omega": format_number(&wb.omega), "sum": tuple_json(&wb.index_sum), "shift": format_number(&s) }),
    ))
}

fn load_algebra(a: &AlgebraArgs) -> std::result::Result<(BracketContext, Vec<GenPolynomial>), Failure> {
    let file = match &a.algebra {
        Some(path) => {
            if !a.generators.is_empty() {
                return Err(Failure::Usage("give generators either inline or with --algebra, not both".into()));
            }
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let mut f = AlgebraFile::from_json(&text)?;
            if let Some(d) = a.dim {
                f.dim = d;
            }
            if let Some(k) = a.order {
                f.order = k;
            }
            f
        }
        None => match (a.dim, a.order) {
            (Some(dim), Some(order)) => AlgebraFile { dim, order, generators: a.generators.clone() },
            _ => return Err(Failure::Usage("need --algebra <file> or --dim, --order and generators".into())),
        },
    };
    Ok(file.resolve()?)
}

fn limits(ctx: &BracketContext, l: &LimitArgs) -> ClosureLimits {
    let mut out = ClosureLimits::defaults(ctx);
    if let Some(n) = l.max_iter {
        out.max_iter = n;
    }
    if let Some(d) = l.max_degree {
        out.max_degree = Rational::from_integer(d.into());
    }
    out
}

fn prepared(a: &AlgebraArgs, l: &LimitArgs, after_closure: bool) -> std::result::Result<(BracketContext, Vec<GenPolynomial>), Failure> {
    let (ctx, gens) = load_algebra(a)?;
    if after_closure {
        let report = closure_iterate(&ctx, &gens, &limits(&ctx, l))?;
        Ok((ctx, report.basis))
    } else {
        let basis = SpanBasis::from_polys(ctx.dim(), &gens).into_elements();
        Ok((ctx, basis))
    }
}

const WITNESS_STEPS: usize = 3;

fn cmd_classify(a: &AlgebraArgs, l: &LimitArgs, after_closure: bool) -> Out {
    let (ctx, basis) = prepared(a, l, after_closure)?;
    let class = classify(&ctx, &basis)?;
    let mut text = format!("class: {}\n", class.name());
    let mut js = json!({ "class": class.name(), "dimension": basis.len() });
    match &class {
        Classification::Lonely { top } => {
            text += &format!("top: {}\n", format_poly(top));
            js["top"] = Value::String(format_poly(top));
        }
        Classification::Chubby { p, q } => {
            text += &format!("p: {}\nq: {}\n", format_poly(p), format_poly(q));
            js["p"] = Value::String(format_poly(p));
            js["q"] = Value::String(format_poly(q));
        }
        Classification::Lanky { coord, excess } => {
            text += &format!("coordinate: {}\nexcess: {excess}\n", VARIABLES[*coord]);
            js["coordinate"] = Value::String(VARIABLES[*coord].to_string());
            js["excess"] = json!(excess);
        }
        Classification::Unresolved { reason } => {
            text += &format!("reason: {reason}\n");
            js["reason"] = Value::String(reason.clone());
        }
        Classification::Inconsistent | Classification::Trivial => {}
    }
    if matches!(class, Classification::Chubby { .. } | Classification::Lanky { .. }) {
        if let Ok(w) = divergence_witness(&ctx, &class, WITNESS_STEPS) {
            let steps: Vec<String> = w.steps.iter().map(|s| format_poly(&s.to_poly())).collect();
            text += &format!("witness: {}\n", steps.join("; "));
            js["witness"] = json!(steps);
        }
    }
    Ok(Output::new(text, js))
}

fn cmd_closure(a: &AlgebraArgs, l: &LimitArgs) -> Out {
    let (ctx, gens) = load_algebra(a)?;
    let report = closure_iterate(&ctx, &gens, &limits(&ctx, l))?;
    let dims: Vec<String> = report.dims.iter().map(usize::to_string).collect();
    let max_deg = report.max_degree_seen.as_ref().map(format_number).unwrap_or_else(|| "none".into());
    let text = format!(
        "status: {}\ndims: {}\nmax_degree: {}\nbasis: {}\n",
        report.status.name(),
        dims.join(" "),
        max_deg,
        report.basis.iter().map(format_poly).collect::<Vec<_>>().join("; ")
    );
    let js = json!({
        "status": report.status.name(),
        "dims": report.dims,
        "max_degree": max_deg,
        "basis": polys_json(&report.basis),
    });
    Ok(Output::new(text, js))
}

fn cmd_perfect(a: &AlgebraArgs, l: &LimitArgs, after_closure: bool) -> Out {
    let (ctx, basis) = prepared(a, l, after_closure)?;
    let closed = is_closed(&ctx, &basis)?;
    let perfect = is_perfect(&ctx, &basis)?;
    let missing: Vec<String> = perfect.missing.iter().map(format_poly).collect();
    let mut text = format!("closed: {}\nperfect: {}\nmissing: {}\n", closed.closed, perfect.perfect, missing.join("; "));
    let mut js = json!({ "closed": closed.closed, "perfect": perfect.perfect, "missing": missing });
    if let Some(w) = &closed.witness {
        text += &format!("escape: [{}] = {}\n", w.args.iter().map(format_poly).collect::<Vec<_>>().join(", "), format_poly(&w.value));
        js["escape"] = json!({ "args": polys_json(&w.args), "value": format_poly(&w.value) });
    }
    Ok(Output::new(text, js))
}

fn cmd_diagnose(a: &AlgebraArgs, l: &LimitArgs, after_closure: bool) -> Out {
    let (ctx, basis) = prepared(a, l, after_closure)?;
    let d = degree_sum_diagnostics(&ctx, &basis);
    let mut text = String::new();
    let mut coords = Vec::new();
    for (i, c) in d.coordinates.iter().enumerate() {
        text += &format!("{}: {} {}\n", VARIABLES[i], format_number(&c.sum), c.label.name());
        coords.push(json!({ "coordinate": VARIABLES[i].to_string(), "sum": format_number(&c.sum), "label": c.label.name() }));
    }
    text += &format!("shift: {}\npromising: {}\ntoo_few_monomials: {}\n", d.shift, d.promising, d.too_few_monomials);
    let js = json!({
        "shift": d.shift,
        "coordinates": coords,
        "promising": d.promising,
        "too_few_monomials": d.too_few_monomials,
        "support_size": d.support_size,
    });
    Ok(Output::new(text, js))
}

fn cmd_selfcheck() -> Out {
    let reports = selfcheck::run_all();
    let mut text = String::new();
    let mut items = Vec::new();
    for r in &reports {
        text += &format!("{}\n", r.line());
        items.push(json!({ "id": r.id, "title": r.title, "passed": r.passed(), "detail": r.detail() }));
    }
    let ok = reports.iter().all(selfcheck::CriterionReport::passed);
    text += &format!("{}\n", if ok { "all criteria passed" } else { "some criteria failed" });
    Ok(Output { text, json: json!({ "passed": ok, "criteria": items }), ok })
}
