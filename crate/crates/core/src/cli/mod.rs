//! The `yhk` command line: batch checks, computations and graph export.

mod expr;

pub use expr::{evaluate, ExprError};

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::ayh::{check_relations, check_theta, check_xggx, is_central, orbit_sum, AyhError, Guard};
use crate::crystal::{branch_graph_compare, module_graph, predicted_level_size, tensor_crystal};
use crate::cyclo::{reduce_guarded, regular_representation, CycloError, WeightDatum};
use crate::partition::Partition;
use crate::rep::{blocks, morita_check, predicted_branch_dims, restrict_branch, simple_dim, simple_labels, simple_module, FdModule, RepError};
use crate::scalars::Specialization;
use crate::symgroup::Composition;

#[derive(Parser, Debug)]
#[command(name = "yhk", version, about = "Exact computations in affine and cyclotomic Yokonuma-Hecke algebras")]
pub struct Cli {
    /// Machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, env = "YHK_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Largest PBW support allowed while rewriting.
    #[arg(long, global = true, default_value_t = 200_000)]
    pub max_support: usize,
    /// Largest module dimension allowed.
    #[arg(long, global = true, default_value_t = 2_000)]
    pub max_dim: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every defining and derived identity in PBW normal form.
    Relations {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Evaluate an expression to PBW normal form.
    Mult {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        expr: String,
    },
    /// Build an orbit sum (or evaluate an expression) and test centrality.
    Center {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: Option<usize>,
        /// Exponents of X, comma separated.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "expr")]
        alpha: Option<String>,
        /// Exponents of t, comma separated.
        #[arg(long, allow_hyphen_values = true, requires = "alpha")]
        beta: Option<String>,
        #[arg(long)]
        expr: Option<String>,
    },
    /// Normal form in the cyclotomic quotient.
    Reduce {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        expr: String,
    },
    /// Dimensions of the simple modules and the sum of their squares.
    Dims {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        charge: i64,
        /// Also construct every module and check its relations.
        #[arg(long)]
        build: bool,
    },
    /// Round trip of the functors F and G on every simple module and their sum.
    Morita {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        charge: i64,
    },
    /// Restriction of a simple module, compared with the Hecke-side prediction.
    Branch {
        #[command(flatten)]
        simple: SimpleArgs,
    },
    /// Block decomposition of a simple module, or of the regular representation.
    Blocks {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        weight: WeightArgs,
        /// Composition μ, comma separated; without it the regular representation is used.
        #[arg(long, requires = "shapes")]
        mu: Option<String>,
        #[arg(long, requires = "mu")]
        shapes: Option<String>,
    },
    /// Export the tensor crystal up to a level.
    Crystal {
        #[arg(long)]
        r: usize,
        /// Quantum characteristic, or `inf`.
        #[arg(long, default_value = "inf")]
        e: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        charge: String,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare the module branching graph with the tensor crystal.
    Compare {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        charge: i64,
    },
}

#[derive(clap::Args, Debug)]
pub struct WeightArgs {
    /// Multicharge shorthand: `0,1` means one root each at q^0 and q^1.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "lambda")]
    pub charge: Option<String>,
    /// Weight datum as JSON, e.g. `{"lambda":{"0":2}}`.
    #[arg(long)]
    pub lambda: Option<String>,
}

#[derive(clap::Args, Debug)]
pub struct SimpleArgs {
    /// Composition μ, comma separated.
    #[arg(long)]
    pub mu: String,
    /// One partition per part of μ, separated by `|`; parts comma separated, `-` for empty.
    #[arg(long)]
    pub shapes: String,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    pub charge: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

/// How a command ended when it did not produce a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Usage(String),
    Guard(String),
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Internal(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Guard(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Guard(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<AyhError> for Failure {
    fn from(e: AyhError) -> Self {
        match e {
            AyhError::SupportExceeded { .. } | AyhError::RankTooLarge { .. } => Failure::Guard(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::Syntax(m) => Failure::Usage(m),
            ExprError::Algebra(inner) => inner.into(),
        }
    }
}

impl From<RepError> for Failure {
    fn from(e: RepError) -> Self {
        match e {
            RepError::TooLarge { .. } => Failure::Guard(e.to_string()),
            RepError::Shape(_) | RepError::Unsupported(_) => Failure::Usage(e.to_string()),
            RepError::Algebra(inner) => inner.into(),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<CycloError> for Failure {
    fn from(e: CycloError) -> Self {
        match e {
            CycloError::TooLarge { .. } => Failure::Guard(e.to_string()),
            CycloError::InvalidWeight(_) => Failure::Usage(e.to_string()),
            CycloError::Algebra(inner) => inner.into(),
            CycloError::Rep(inner) => inner.into(),
            CycloError::Closure(_) => Failure::Internal(e.to_string()),
        }
    }
}

/// Output of a command that ran to completion; `passed` is false when one of its checks failed.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub passed: bool,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn new(passed: bool, text: String, json: Value) -> Self {
        Report { passed, text, json }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("reports serialize");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|p| p.trim().parse().map_err(|_| usage(format!("bad {what} entry '{p}'")))).collect()
}

fn parse_shapes(s: &str) -> Result<Vec<Partition>, Failure> {
    s.split('|')
        .map(|c| {
            let c = c.trim();
            if c.is_empty() || c == "-" {
                return Ok(Partition::empty());
            }
            Partition::new(parse_list(c, "shape")?).ok_or_else(|| usage(format!("'{c}' is not a partition")))
        })
        .collect()
}

fn parse_e(s: &str) -> Result<Option<u32>, Failure> {
    match s {
        "inf" | "∞" | "generic" => Ok(None),
        _ => match s.parse::<u32>() {
            Ok(e) if e >= 2 => Ok(Some(e)),
            _ => Err(usage(format!("e must be an integer at least 2 or 'inf', got '{s}'"))),
        },
    }
}

fn weight(args: &WeightArgs) -> Result<WeightDatum, Failure> {
    match (&args.charge, &args.lambda) {
        (_, Some(j)) => WeightDatum::from_json(j).map_err(Failure::from),
        (Some(c), None) => {
            let charges: Vec<i64> = parse_list(c, "charge")?;
            if charges.is_empty() {
                return Err(usage("empty multicharge"));
            }
            Ok(WeightDatum::from_charges(&charges))
        }
        (None, None) => Ok(WeightDatum::from_charges(&[0])),
    }
}

fn check_rank(r: usize, n: usize, guard: &Guard) -> Result<(), Failure> {
    if r == 0 {
        return Err(usage("r must be at least 1"));
    }
    guard.check_n(n)?;
    Ok(())
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn shapes_label(shapes: &[Partition]) -> String {
    shapes.iter().map(Partition::to_string).collect::<Vec<_>>().join(" ")
}

fn guarded_simple(mu: &Composition, shapes: &[Partition], charge: i64, max_dim: usize) -> Result<FdModule, Failure> {
    let dim = simple_dim(mu, shapes);
    if dim > max_dim {
        return Err(Failure::Guard(format!("dimension {dim} exceeds the limit {max_dim}")));
    }
    Ok(simple_module(mu, shapes, &WeightDatum::from_charges(&[charge]), Specialization::Generic)?)
}

pub fn execute(cli: &Cli) -> Result<Report, Failure> {
    let guard = Guard { max_support: cli.max_support, ..Guard::default() };
    match &cli.command {
        Command::Relations { r, n } => relations(*r, *n, cli.seed, &guard),
        Command::Mult { r, n, expr } => {
            check_rank(*r, *n, &guard)?;
            let e = evaluate(expr, *r, *n, &guard)?;
            Ok(Report::new(true, format!("{e}\n"), json!({ "r": r, "n": n, "terms": e })))
        }
        Command::Center { r, n, alpha, beta, expr } => center(*r, *n, alpha.as_deref(), beta.as_deref(), expr.as_deref(), &guard),
        Command::Reduce { r, n, weight: w, expr } => {
            check_rank(*r, *n, &guard)?;
            let lambda = weight(w)?;
            let e = evaluate(expr, *r, *n, &guard)?;
            let red = reduce_guarded(&e, &lambda, &guard)?;
            let text = format!("{red}\n");
            Ok(Report::new(true, text, json!({ "r": r, "n": n, "lambda": lambda, "d": lambda.d(), "terms": red.element() })))
        }
        Command::Dims { r, n, charge, build } => dims(*r, *n, *charge, *build, cli.max_dim, &guard),
        Command::Morita { r, n, charge } => morita(*r, *n, *charge, cli.max_dim, &guard),
        Command::Branch { simple } => branch(simple, cli.max_dim),
        Command::Blocks { r, n, weight: w, mu, shapes } => blocks_cmd(*r, *n, w, mu.as_deref(), shapes.as_deref(), cli.max_dim, &guard),
        Command::Crystal { r, e, charge, n_max, format, output } => crystal(*r, e, charge, *n_max, *format, output.as_ref()),
        Command::Compare { r, n_max, charge } => compare(*r, *n_max, *charge, &guard),
    }
}

fn relations(r: usize, n: usize, seed: u64, guard: &Guard) -> Result<Report, Failure> {
    check_rank(r, n, guard)?;
    let mut rep = check_relations(r, n, seed);
    rep.merge(check_theta(r, n));
    for mu in Composition::all(r, n) {
        for k in (0..r).filter(|&k| mu.partial_sum(k) < n) {
            rep.merge(check_xggx(r, n, &mu, k)?);
        }
    }
    rep.families.sort_by(|a, b| a.name.cmp(&b.name));
    let ok = rep.all_passed();
    let count = rep.family_count();
    let mut text = rep.to_string();
    if ok {
        let _ = writeln!(text, "all {count} identity families PASS");
    } else {
        let failed = rep.families.iter().filter(|f| !f.passed()).count();
        let _ = writeln!(text, "{failed} of {count} identity families FAIL");
    }
    let json = json!({ "r": r, "n": n, "seed": seed, "family_count": count, "passed": ok, "families": rep.families });
    Ok(Report::new(ok, text, json))
}

fn center(r: usize, n: Option<usize>, alpha: Option<&str>, beta: Option<&str>, expr: Option<&str>, guard: &Guard) -> Result<Report, Failure> {
    let (z, from_orbit) = match (alpha, expr) {
        (Some(a), _) => {
            let alpha: Vec<i32> = parse_list(a, "alpha")?;
            let beta: Vec<i64> = match beta {
                Some(b) => parse_list(b, "beta")?,
                None => vec![0; alpha.len()],
            };
            if beta.len() != alpha.len() || n.is_some_and(|n| n != alpha.len()) {
                return Err(usage("alpha, beta and n must have the same length"));
            }
            check_rank(r, alpha.len(), guard)?;
            (orbit_sum(r, &alpha, &beta), true)
        }
        (None, Some(e)) => {
            let n = n.ok_or_else(|| usage("--expr needs --n"))?;
            check_rank(r, n, guard)?;
            (evaluate(e, r, n, guard)?, false)
        }
        (None, None) => return Err(usage("give --alpha (and optionally --beta) or --expr")),
    };
    let central = is_central(&z);
    let passed = central || !from_orbit;
    let text = format!("{z}\ncentral: {central}\n");
    Ok(Report::new(passed, text, json!({ "r": r, "n": z.n(), "element": z, "central": central })))
}

fn dims(r: usize, n: usize, charge: i64, build: bool, max_dim: usize, guard: &Guard) -> Result<Report, Failure> {
    check_rank(r, n, guard)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut total = 0usize;
    let mut ok = true;
    for (mu, shapes) in simple_labels(r, n) {
        let dim = simple_dim(&mu, &shapes);
        total += dim * dim;
        let mut row = json!({ "mu": mu, "shapes": shapes, "dim": dim });
        let _ = write!(text, "{:<12} {:<24} {dim:>6}", mu.to_string(), shapes_label(&shapes));
        if build {
            let m = guarded_simple(&mu, &shapes, charge, max_dim)?;
            let good = m.dim() == dim && m.check_relations().all_passed();
            ok &= good;
            row["relations"] = json!(good);
            let _ = write!(text, "  {}", pass_word(good));
        }
        text.push('\n');
        rows.push(row);
    }
    let expected = r.pow(n as u32) * factorial(n);
    ok &= total == expected;
    let _ = writeln!(text, "sum of squares {total} (expected {expected}) {}", pass_word(total == expected));
    let json = json!({ "r": r, "n": n, "charge": charge, "simples": rows, "sum_of_squares": total, "expected": expected, "passed": ok });
    Ok(Report::new(ok, text, json))
}

fn morita(r: usize, n: usize, charge: i64, max_dim: usize, guard: &Guard) -> Result<Report, Failure> {
    check_rank(r, n, guard)?;
    let lambda = WeightDatum::from_charges(&[charge]);
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut ok = true;
    let mut sum: Option<FdModule> = None;
    let line = |label: String, m: &FdModule, text: &mut String, rows: &mut Vec<Value>| -> Result<bool, Failure> {
        let c = morita_check(m, &lambda)?;
        let good = c.passed() && c.cyclotomic_y;
        let _ =
            writeln!(text, "{label:<36} dim {:>4}  GF {}  FG {}  f_λ {}/{}  {}", c.dim, c.gf, c.fg, c.cyclotomic_y, c.cyclotomic_h, pass_word(good));
        rows.push(json!({ "module": label, "check": c, "passed": good }));
        Ok(good)
    };
    for (mu, shapes) in simple_labels(r, n) {
        let m = guarded_simple(&mu, &shapes, charge, max_dim)?;
        ok &= line(format!("{mu} {}", shapes_label(&shapes)), &m, &mut text, &mut rows)?;
        sum = Some(match sum {
            None => m,
            Some(s) if s.dim() + m.dim() <= max_dim => s.direct_sum(&m)?,
            Some(s) => s,
        });
    }
    if let Some(s) = sum {
        ok &= line("direct sum".into(), &s, &mut text, &mut rows)?;
    }
    let _ = writeln!(text, "{}", pass_word(ok));
    Ok(Report::new(ok, text, json!({ "r": r, "n": n, "charge": charge, "modules": rows, "passed": ok })))
}

fn simple_from_args(a: &SimpleArgs, max_dim: usize) -> Result<(Composition, Vec<Partition>, FdModule), Failure> {
    let mu = Composition::new(parse_list(&a.mu, "mu")?);
    let shapes = parse_shapes(&a.shapes)?;
    if mu.r() == 0 {
        return Err(usage("empty composition"));
    }
    let m = guarded_simple(&mu, &shapes, a.charge, max_dim)?;
    Ok((mu, shapes, m))
}

fn branch(a: &SimpleArgs, max_dim: usize) -> Result<Report, Failure> {
    let (mu, shapes, m) = simple_from_args(a, max_dim)?;
    let summands = restrict_branch(&m)?;
    let predicted = predicted_branch_dims(&mu, &shapes, a.charge)?;
    let actual: BTreeMap<(usize, i32), usize> = summands.iter().map(|s| ((s.k, s.a), s.module.dim())).collect();
    let ok = predicted == actual;
    let mut text = format!("restriction of S_{mu}({}), dim {}\n", shapes_label(&shapes), m.dim());
    for s in &summands {
        let _ = writeln!(text, "  k={} a={:<3} dim {}", s.k, s.a, s.module.dim());
    }
    let _ = writeln!(text, "matches Hecke-side prediction: {}", pass_word(ok));
    let json = json!({
        "mu": mu,
        "shapes": shapes,
        "charge": a.charge,
        "dim": m.dim(),
        "summands": summands.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
        "predicted": predicted.iter().map(|((k, a), d)| json!({ "k": k, "a": a, "dim": d })).collect::<Vec<_>>(),
        "passed": ok,
    });
    Ok(Report::new(ok, text, json))
}

fn blocks_cmd(
    r: usize,
    n: Option<usize>,
    w: &WeightArgs,
    mu: Option<&str>,
    shapes: Option<&str>,
    max_dim: usize,
    guard: &Guard,
) -> Result<Report, Failure> {
    let (m, what) = match (mu, shapes) {
        (Some(mu), Some(shapes)) => {
            let lambda = weight(w)?;
            let charge = lambda.single_charge().ok_or_else(|| usage("simple modules need a single charge"))?;
            let args = SimpleArgs { mu: mu.into(), shapes: shapes.into(), charge };
            let (mu, shapes, m) = simple_from_args(&args, max_dim)?;
            if mu.r() != r {
                return Err(usage(format!("μ has {} parts but r = {r}", mu.r())));
            }
            (m, format!("S_{mu}({})", shapes_label(&shapes)))
        }
        _ => {
            let n = n.ok_or_else(|| usage("the regular representation needs --n"))?;
            check_rank(r, n, guard)?;
            let lambda = weight(w)?;
            (regular_representation(&lambda, r, n, max_dim)?, format!("regular representation for λ = {lambda}"))
        }
    };
    let pieces = blocks(&m)?;
    let total: usize = pieces.values().map(FdModule::dim).sum();
    let ok = total == m.dim();
    let mut text = format!("blocks of {what}, dim {}\n", m.dim());
    for (label, piece) in &pieces {
        let _ = writeln!(text, "  {label}  dim {}", piece.dim());
    }
    let rows: Vec<Value> = pieces.iter().map(|(l, p)| json!({ "mu": l.mu, "gamma": l.gamma, "label": l.to_string(), "dim": p.dim() })).collect();
    Ok(Report::new(ok, text, json!({ "module": what, "dim": m.dim(), "blocks": rows, "passed": ok })))
}

fn crystal(r: usize, e: &str, charge: &str, n_max: usize, format: GraphFormat, output: Option<&PathBuf>) -> Result<Report, Failure> {
    if r == 0 {
        return Err(usage("r must be at least 1"));
    }
    let e = parse_e(e)?;
    let charges: Vec<i64> = parse_list(charge, "charge")?;
    if charges.is_empty() {
        return Err(usage("empty multicharge"));
    }
    let lambda = WeightDatum::from_charges(&charges);
    let (_, graph) = tensor_crystal(&lambda, r, e, n_max);
    let sizes = graph.level_sizes();
    let predicted: Vec<usize> = (0..=n_max).map(|n| predicted_level_size(&lambda, r, e, n)).collect();
    let ok = sizes == predicted;
    let rendered = match format {
        GraphFormat::Dot => graph.to_dot(),
        GraphFormat::Json => serde_json::to_string_pretty(&graph.to_json()).expect("graph serializes") + "\n",
    };
    let mut json =
        json!({ "r": r, "e": e, "lambda": lambda, "level_sizes": sizes, "predicted": predicted, "arrows": graph.arrows.len(), "passed": ok });
    let text = match output {
        Some(path) => {
            std::fs::write(path, &rendered).map_err(|err| usage(format!("cannot write {}: {err}", path.display())))?;
            format!("wrote {}\nlevel sizes {sizes:?} (enumeration {predicted:?}) {}\n", path.display(), pass_word(ok))
        }
        None => {
            json["graph"] = graph.to_json();
            rendered
        }
    };
    Ok(Report::new(ok, text, json))
}

fn compare(r: usize, n_max: usize, charge: i64, guard: &Guard) -> Result<Report, Failure> {
    check_rank(r, n_max, guard)?;
    let module = module_graph(r, charge, n_max)?;
    let (_, crystal) = tensor_crystal(&WeightDatum::from_charges(&[charge]), r, None, n_max);
    let rep = branch_graph_compare(&module, &crystal, n_max);
    let mut text = format!("module levels {:?}, crystal levels {:?}\n", rep.level_sizes.0, rep.level_sizes.1);
    let _ = writeln!(text, "arrows {} vs {}", rep.arrow_counts.0, rep.arrow_counts.1);
    if let Some(d) = &rep.first_divergence {
        let _ = writeln!(text, "first divergence: {d}");
    }
    let _ = writeln!(text, "isomorphic: {}", pass_word(rep.isomorphic));
    Ok(Report::new(rep.isomorphic, text, json!({ "r": r, "n_max": n_max, "charge": charge, "report": rep })))
}

/// Parses `args`, runs the command and returns `(exit code, stdout, stderr)`.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let s = e.render().to_string();
            return if code == 0 { (0, s, String::new()) } else { (2, String::new(), s) };
        }
    };
    match execute(&cli) {
        Ok(rep) => (if rep.passed { 0 } else { 1 }, rep.render(cli.json), String::new()),
        Err(f) => (f.exit_code(), String::new(), format!("error: {}\n", f.message())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yhk(args: &str) -> (i32, String, String) {
        run(std::iter::once("yhk").chain(args.split_whitespace()))
    }

    #[test]
    fn relations_small() {
        let (code, out, _) = yhk("relations --r 2 --n 3");
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("all 21 identity families PASS"), "{out}");
    }

    #[test]
    fn dims_table() {
        let (code, out, _) = yhk("dims --r 2 --n 2 --charge 0");
        assert_eq!(code, 0);
        assert!(out.contains("sum of squares 8 (expected 8) PASS"), "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(yhk("mult --r 2 --n 2 --expr g5").0, 2);
        assert_eq!(yhk("relations --r 2").0, 2);
        assert_eq!(yhk("--max-support 3 mult --r 2 --n 3 --expr g1g2g1X1X1").0, 3);
        assert_eq!(yhk("--max-dim 2 blocks --r 2 --n 2").0, 3);
        assert_eq!(yhk("center --r 2 --alpha 1,0 --beta 0,1").0, 0);
        let (code, out, _) = yhk("center --r 2 --n 2 --expr X1");
        assert_eq!(code, 0);
        assert!(out.ends_with("central: false\n"));
    }

    #[test]
    fn shapes_parsing() {
        let s = parse_shapes("2,1|-|1").unwrap();
        assert_eq!(s.iter().map(Partition::size).collect::<Vec<_>>(), vec![3, 0, 1]);
        assert!(parse_shapes("1,2").is_err());
        assert_eq!(parse_e("inf").unwrap(), None);
        assert!(parse_e("1").is_err());
    }
}
