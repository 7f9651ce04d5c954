//! Command-line front end for the double category toolkit: fixture zoo,
//! JSON I/O and a reproducible check-suite runner.
//!
//! Categories are named either `zoo:<name>` (built-in fixtures, with `*` for
//! cartesian products, e.g. `zoo:arrowH*G`) or by a path to a JSON file.
//! Exit codes: 0 all checks passed, 1 an axiom or law failed, 2 a resource
//! bound was hit (budget exhausted or tensor not realized within depth),
//! 3 usage or malformed input.
//!
//! Budgets and the realization depth default from a `graydbl.toml`-style
//! key/value file (`budget = …`, `depth = …`), can be overridden by the
//! `GRAYDBL_BUDGET` environment variable, and finally by the `--budget` /
//! `--depth` flags. Reports are deterministic for fixed inputs and budgets;
//! `--json` emits a versioned machine-readable report (`"schema": 1`).

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use graydbl::budget::Budget;
use graydbl::canonical::{
    check_f_involution, check_l_commutation, check_l_identity, check_lr_pentagon,
    check_lr_square, check_r_identity, check_r_square, CheckOutcome, HomCache,
};
use graydbl::dbl::{zoo, FiniteDoubleCategory};
use graydbl::error::{Error, Result};
use graydbl::functor::enumerate_functors;
use graydbl::gray::coherence::{
    check_counit_triangle, check_hexagon, check_pentagon, check_triangle, Coherence,
};
use graydbl::gray::realize::{build_presentation, realize_tensor, Realization};
use graydbl::gray::enumerate_cones;
use graydbl::hom::{build_hom, build_strict_hom};
use graydbl::mnd::{build_mnd, check_chi_mnd_assoc, chi_mnd};
use graydbl::monoid::{check_gray_monoid, GrayMonoidData};
use graydbl::two::chi::{
    check_chi_h_assoc, check_chi_h_unit, check_chi_sqr_assoc, check_chi_sqr_unit, chi_h, chi_sqr,
};
use graydbl::two::{
    arrow2, horizontal_two_category, quintet, terminal2, vertical_two_category, walking_twocell,
    Finite2Category,
};

const DEFAULT_BUDGET: u64 = 200_000_000;
const DEFAULT_DEPTH: usize = 3;

#[derive(Parser)]
#[command(name = "graydbl", version, about = "Finite double category toolkit")]
struct Cli {
    /// Enumeration budget (overrides config file and GRAYDBL_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Tensor realization depth bound.
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Config file with `budget = …` / `depth = …` defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a double category and print its cell counts.
    Validate { cat: String },
    /// Count the double functors between two double categories.
    Functors { dom: String, cod: String },
    /// Build and validate the hom double category ⟦A, B⟧.
    Hom { a: String, b: String },
    /// Build and validate the strict hom ⟪A, B⟫ inside ⟦A, B⟧.
    StrictHom { a: String, b: String },
    /// Run one of the canonical-functor laws.
    CanonicalCheck {
        kind: CanonicalKind,
        /// Category arguments; the arity depends on the law.
        args: Vec<String>,
    },
    /// Gray tensor operations.
    #[command(subcommand)]
    Tensor(TensorCmd),
    /// Monoidal coherence checks on realized tensors.
    #[command(subcommand)]
    Coherence(CoherenceCmd),
    /// Build and validate the quintet double category of a 2-category.
    Sqr { two: String },
    /// Extract and validate the horizontal 2-category.
    H2 { cat: String },
    /// Extract and validate the vertical 2-category.
    V2 { cat: String },
    /// Build a hom comparison functor χ and optionally its coherence laws.
    Chi {
        which: ChiKind,
        a: String,
        b: String,
        /// Also check the associativity law (third argument: the unit).
        #[arg(long)]
        check_assoc: bool,
        /// Also check the reduced unit law (h, v and sqr only).
        #[arg(long)]
        check_unit: bool,
    },
    /// The double category of monads.
    #[command(subcommand)]
    Mnd(MndCmd),
    /// Monoid structures on a double category.
    #[command(subcommand)]
    Monoid(MonoidCmd),
    /// Run a configured list of checks.
    #[command(subcommand)]
    Suite(SuiteCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum CanonicalKind {
    LComm,
    LId,
    RSquare,
    RId,
    LrPentagon,
    LrSquare,
    FInvolution,
}

#[derive(Subcommand)]
enum TensorCmd {
    /// Print the generators-and-relations presentation of A ⊗ B.
    Present { a: String, b: String },
    /// Realize A ⊗ B as a finite double category within the depth bound.
    Realize { a: String, b: String },
    /// Compare |cones(A, B; C)| with |DblCat(A, ⟦B, C⟧)|.
    AdjunctionCheck { a: String, b: String, c: String },
}

#[derive(Subcommand)]
enum CoherenceCmd {
    Pentagon { a: String, b: String, c: String, k: String },
    Triangle { b: String, k: String },
    Hexagon { a: String, c: String, k: String },
    EpsAL { c: String, p: String, k: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum ChiKind {
    H,
    V,
    Sqr,
    Mnd,
}

#[derive(Subcommand)]
enum MndCmd {
    /// Build and validate Mnd(A).
    Build { a: String },
    /// Build χ: Mnd⟦A,B⟧ → ⟦Mnd A, Mnd B⟧, optionally with its laws.
    Chi {
        a: String,
        b: String,
        #[arg(long)]
        check: bool,
    },
}

#[derive(Subcommand)]
enum MonoidCmd {
    /// Check the seven monoid condition families on a JSON data file.
    Check { file: PathBuf },
}

#[derive(Subcommand)]
enum SuiteCmd {
    /// Run every check listed in a JSON suite configuration.
    Run {
        #[arg(value_name = "CONFIG")]
        suite_config: PathBuf,
    },
}

/// A reproducible list of named checks, each given as the argv tail of a
/// `graydbl` invocation.
#[derive(Deserialize)]
struct SuiteConfig {
    #[serde(default)]
    budget: Option<u64>,
    #[serde(default)]
    depth: Option<usize>,
    /// `text` (default) or `json`.
    #[serde(default)]
    format: Option<String>,
    checks: Vec<SuiteCheck>,
}

#[derive(Deserialize)]
struct SuiteCheck {
    name: String,
    args: Vec<String>,
}

#[derive(Serialize)]
struct Report {
    schema: u32,
    checks: Vec<CheckLine>,
    ok: bool,
}

#[derive(Serialize)]
struct CheckLine {
    name: String,
    ok: bool,
    details: String,
}

struct Ctx {
    budget: Budget,
    depth: usize,
    checks: Vec<CheckLine>,
}

impl Ctx {
    fn push(&mut self, name: impl Into<String>, ok: bool, details: impl Into<String>) {
        self.checks.push(CheckLine { name: name.into(), ok, details: details.into() });
    }

    fn outcome(&mut self, name: impl Into<String>, out: &CheckOutcome) {
        let details = out.witness.clone().unwrap_or_default();
        self.push(name, out.ok, details);
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            use clap::error::ErrorKind::*;
            let _ = e.print();
            return match e.kind() {
                DisplayHelp | DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(3),
            };
        }
    };
    run_cli(cli)
}

fn run_cli(cli: Cli) -> ExitCode {
    let (budget, depth) = match resolve_limits(&cli) {
        Ok(pair) => pair,
        Err(e) => return finish_error(cli.json, &e),
    };
    let mut ctx = Ctx { budget: Budget::new(budget), depth, checks: Vec::new() };
    match dispatch(&cli.command, &mut ctx) {
        Ok(()) => finish(cli.json, ctx.checks),
        Err(e) => {
            ctx.push("error", false, e.to_string());
            let _ = finish(cli.json, ctx.checks);
            exit_for(&e)
        }
    }
}

/// Budget/depth precedence: flag, then `GRAYDBL_BUDGET`, then config file,
/// then built-in defaults. The config file is `--config` if given, else
/// `graydbl.toml` in the working directory if present.
fn resolve_limits(cli: &Cli) -> Result<(u64, usize)> {
    let mut budget = DEFAULT_BUDGET;
    let mut depth = DEFAULT_DEPTH;
    let path = cli.config.clone().or_else(|| {
        let p = PathBuf::from("graydbl.toml");
        p.exists().then_some(p)
    });
    if let Some(path) = path {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        let table: BTreeMap<String, toml::Value> = toml::from_str(&text)
            .map_err(|e| Error::Input(format!("bad config {}: {e}", path.display())))?;
        if let Some(v) = table.get("budget").and_then(|v| v.as_integer()) {
            budget = u64::try_from(v).map_err(|_| Error::Input("budget must be positive".into()))?;
        }
        if let Some(v) = table.get("depth").and_then(|v| v.as_integer()) {
            depth = usize::try_from(v).map_err(|_| Error::Input("depth must be positive".into()))?;
        }
    }
    if let Ok(text) = std::env::var("GRAYDBL_BUDGET") {
        budget = text
            .parse()
            .map_err(|_| Error::Input(format!("GRAYDBL_BUDGET is not a number: {text}")))?;
    }
    if let Some(b) = cli.budget {
        budget = b;
    }
    if let Some(d) = cli.depth {
        depth = d;
    }
    if budget == 0 {
        return Err(Error::Input("budget must be positive".into()));
    }
    Ok((budget, depth))
}

fn finish(json: bool, checks: Vec<CheckLine>) -> ExitCode {
    let ok = checks.iter().all(|c| c.ok);
    if json {
        let report = Report { schema: 1, checks, ok };
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        for c in &checks {
            let mark = if c.ok { "ok  " } else { "FAIL" };
            if c.details.is_empty() {
                println!("{mark} {}", c.name);
            } else {
                println!("{mark} {}: {}", c.name, c.details);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn finish_error(json: bool, e: &Error) -> ExitCode {
    let _ = finish(json, vec![CheckLine { name: "error".into(), ok: false, details: e.to_string() }]);
    exit_for(e)
}

fn exit_for(e: &Error) -> ExitCode {
    match e {
        Error::Axioms(_) => ExitCode::from(1),
        Error::Budget(_) => ExitCode::from(2),
        _ => ExitCode::from(3),
    }
}

// ---------------------------------------------------------------------------
// Input loading

/// Resolve a double category argument: `zoo:<name>` with `*`-products, or a
/// JSON file path. Fixture names: `1`/`terminal`, `G`/`generator`, `arrowH`,
/// `arrowV`, `discreteN`, `sqrTerminal`, `sqrArrow`, `sqrTwocell`.
fn load_double(spec: &str) -> Result<FiniteDoubleCategory> {
    if let Some(name) = spec.strip_prefix("zoo:") {
        let mut factors = name.split('*');
        let mut cat = zoo_double(factors.next().unwrap_or_default())?;
        for f in factors {
            cat = zoo::product(&cat, &zoo_double(f)?);
        }
        return Ok(cat);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::Input(format!("cannot read {spec}: {e}")))?;
    let cat: FiniteDoubleCategory =
        serde_json::from_str(&text).map_err(|e| Error::Input(format!("bad JSON in {spec}: {e}")))?;
    cat.validated()
}

fn zoo_double(name: &str) -> Result<FiniteDoubleCategory> {
    Ok(match name {
        "1" | "terminal" => zoo::terminal(),
        "G" | "generator" => zoo::generator(),
        "arrowH" => zoo::free_arrow_h(),
        "arrowV" => zoo::free_arrow_v(),
        "sqrTerminal" => quintet(&terminal2()).cat,
        "sqrArrow" => quintet(&arrow2()).cat,
        "sqrTwocell" => quintet(&walking_twocell()).cat,
        _ => {
            if let Some(n) = name.strip_prefix("discrete") {
                let n: usize = n
                    .parse()
                    .map_err(|_| Error::Input(format!("unknown zoo fixture: {name}")))?;
                zoo::discrete(n)
            } else {
                return Err(Error::Input(format!("unknown zoo fixture: {name}")));
            }
        }
    })
}

/// Resolve a 2-category argument: `zoo:terminal`, `zoo:arrow`, `zoo:twocell`
/// or a JSON file path.
fn load_two(spec: &str) -> Result<Finite2Category> {
    if let Some(name) = spec.strip_prefix("zoo:") {
        return Ok(match name {
            "terminal" => terminal2(),
            "arrow" => arrow2(),
            "twocell" => walking_twocell(),
            _ => return Err(Error::Input(format!("unknown 2-category fixture: {name}"))),
        });
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::Input(format!("cannot read {spec}: {e}")))?;
    let cat: Finite2Category =
        serde_json::from_str(&text).map_err(|e| Error::Input(format!("bad JSON in {spec}: {e}")))?;
    cat.validated()
}

fn counts(c: &FiniteDoubleCategory) -> String {
    format!(
        "objects={} hcells={} vcells={} squares={}",
        c.objects.len(),
        c.hcells.len(),
        c.vcells.len(),
        c.squares.len()
    )
}

// ---------------------------------------------------------------------------
// Dispatch

fn dispatch(cmd: &Command, ctx: &mut Ctx) -> Result<()> {
    match cmd {
        Command::Validate { cat } => {
            let c = load_double_unvalidated(cat)?;
            match c.validate() {
                Ok(()) => ctx.push(format!("validate {cat}"), true, counts(&c)),
                Err(fs) => ctx.push(format!("validate {cat}"), false, fs[0].to_string()),
            }
        }
        Command::Functors { dom, cod } => {
            let d = load_double(dom)?;
            let c = load_double(cod)?;
            let n = enumerate_functors(&d, &c, &ctx.budget)?.len();
            ctx.push(format!("functors {dom} -> {cod}"), true, format!("count={n}"));
        }
        Command::Hom { a, b } => {
            let (a_cat, b_cat) = (load_double(a)?, load_double(b)?);
            let hom = build_hom(&a_cat, &b_cat, &ctx.budget)?;
            match hom.cat.validate() {
                Ok(()) => ctx.push(format!("hom {a} {b}"), true, counts(&hom.cat)),
                Err(fs) => ctx.push(format!("hom {a} {b}"), false, fs[0].to_string()),
            }
        }
        Command::StrictHom { a, b } => {
            let (a_cat, b_cat) = (load_double(a)?, load_double(b)?);
            let (strict, inclusion, full) = build_strict_hom(&a_cat, &b_cat, &ctx.budget)?;
            let name = format!("strict-hom {a} {b}");
            match strict.cat.validate().and_then(|()| inclusion.validate(&strict.cat, &full.cat)) {
                Ok(()) => ctx.push(name, true, counts(&strict.cat)),
                Err(fs) => ctx.push(name, false, fs[0].to_string()),
            }
        }
        Command::CanonicalCheck { kind, args } => canonical_check(*kind, args, ctx)?,
        Command::Tensor(cmd) => tensor(cmd, ctx)?,
        Command::Coherence(cmd) => coherence(cmd, ctx)?,
        Command::Sqr { two } => {
            let t = load_two(two)?;
            let q = quintet(&t);
            match q.cat.validate() {
                Ok(()) => ctx.push(format!("sqr {two}"), true, counts(&q.cat)),
                Err(fs) => ctx.push(format!("sqr {two}"), false, fs[0].to_string()),
            }
        }
        Command::H2 { cat } => {
            let c = load_double(cat)?;
            let h = horizontal_two_category(&c);
            match h.cat.validate() {
                Ok(()) => ctx.push(
                    format!("h2 {cat}"),
                    true,
                    format!(
                        "objects={} onecells={} twocells={}",
                        h.cat.objects.len(),
                        h.cat.onecells.len(),
                        h.cat.twocells.len()
                    ),
                ),
                Err(fs) => ctx.push(format!("h2 {cat}"), false, fs[0].to_string()),
            }
        }
        Command::V2 { cat } => {
            let c = load_double(cat)?;
            let v = vertical_two_category(&c);
            match v.cat.validate() {
                Ok(()) => ctx.push(
                    format!("v2 {cat}"),
                    true,
                    format!(
                        "objects={} onecells={} twocells={}",
                        v.cat.objects.len(),
                        v.cat.onecells.len(),
                        v.cat.twocells.len()
                    ),
                ),
                Err(fs) => ctx.push(format!("v2 {cat}"), false, fs[0].to_string()),
            }
        }
        Command::Chi { which, a, b, check_assoc, check_unit } => {
            chi(*which, a, b, *check_assoc, *check_unit, ctx)?
        }
        Command::Mnd(cmd) => mnd(cmd, ctx)?,
        Command::Monoid(MonoidCmd::Check { file }) => monoid_check(file, ctx)?,
        Command::Suite(SuiteCmd::Run { suite_config }) => return suite(suite_config, ctx),
    }
    Ok(())
}

/// `validate` must report axiom failures itself, so skip the load-time check.
fn load_double_unvalidated(spec: &str) -> Result<FiniteDoubleCategory> {
    if spec.starts_with("zoo:") {
        return load_double(spec);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::Input(format!("cannot read {spec}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("bad JSON in {spec}: {e}")))
}

fn canonical_check(kind: CanonicalKind, args: &[String], ctx: &mut Ctx) -> Result<()> {
    let arity = match kind {
        CanonicalKind::LComm => 4,
        CanonicalKind::LId | CanonicalKind::RId => 2,
        _ => 3,
    };
    if args.len() != arity {
        return Err(Error::Input(format!(
            "this canonical check takes {arity} categories, got {}",
            args.len()
        )));
    }
    let cats: Vec<FiniteDoubleCategory> =
        args.iter().map(|s| load_double(s)).collect::<Result<_>>()?;
    let mut cache = HomCache::new();
    let (name, out) = match kind {
        CanonicalKind::LComm => {
            ("l-comm", check_l_commutation(&mut cache, &cats[0], &cats[1], &cats[2], &cats[3], &ctx.budget)?)
        }
        CanonicalKind::LId => ("l-id", check_l_identity(&mut cache, &cats[0], &cats[1], &ctx.budget)?),
        CanonicalKind::RSquare => {
            ("r-square", check_r_square(&mut cache, &cats[0], &cats[1], &cats[2], &ctx.budget)?)
        }
        CanonicalKind::RId => ("r-id", check_r_identity(&mut cache, &cats[0], &cats[1], &ctx.budget)?),
        CanonicalKind::LrPentagon => {
            ("lr-pentagon", check_lr_pentagon(&mut cache, &cats[0], &cats[1], &cats[2], &ctx.budget)?)
        }
        CanonicalKind::LrSquare => {
            ("lr-square", check_lr_square(&mut cache, &cats[0], &cats[1], &cats[2], &ctx.budget)?)
        }
        CanonicalKind::FInvolution => {
            ("f-involution", check_f_involution(&mut cache, &cats[0], &cats[1], &cats[2], &ctx.budget)?)
        }
    };
    ctx.outcome(format!("canonical-check {name} {}", args.join(" ")), &out);
    Ok(())
}

fn tensor(cmd: &TensorCmd, ctx: &mut Ctx) -> Result<()> {
    match cmd {
        TensorCmd::Present { a, b } => {
            let (a_cat, b_cat) = (load_double(a)?, load_double(b)?);
            let pres = build_presentation(&a_cat, &b_cat, &ctx.budget)?;
            ctx.push(
                format!("tensor present {a} {b}"),
                true,
                format!(
                    "objects={} hgens={} vgens={} sqgens={} relations={}",
                    pres.objects.len(),
                    pres.h_generators.len(),
                    pres.v_generators.len(),
                    pres.square_generators.len(),
                    pres.relations.len()
                ),
            );
        }
        TensorCmd::Realize { a, b } => {
            let (a_cat, b_cat) = (load_double(a)?, load_double(b)?);
            match realize_tensor(&a_cat, &b_cat, ctx.depth, &ctx.budget)? {
                Realization::Realized(rt) => {
                    ctx.push(format!("tensor realize {a} {b}"), true, counts(&rt.category));
                }
                Realization::Unbounded(why) => {
                    ctx.push(format!("tensor realize {a} {b}"), false, format!("unbounded: {why}"));
                    return Err(Error::Budget(why));
                }
            }
        }
        TensorCmd::AdjunctionCheck { a, b, c } => {
            let (a_cat, b_cat, c_cat) = (load_double(a)?, load_double(b)?, load_double(c)?);
            let cones = enumerate_cones(&a_cat, &b_cat, &c_cat, &ctx.budget)?.len();
            let hom = build_hom(&b_cat, &c_cat, &ctx.budget)?;
            let funs = enumerate_functors(&a_cat, &hom.cat, &ctx.budget)?.len();
            ctx.push(
                format!("tensor adjunction-check {a} {b} {c}"),
                cones == funs,
                format!("cones={cones} functors={funs}"),
            );
        }
    }
    Ok(())
}

fn coherence(cmd: &CoherenceCmd, ctx: &mut Ctx) -> Result<()> {
    let mut cache = HomCache::new();
    let (name, result) = match cmd {
        CoherenceCmd::Pentagon { a, b, c, k } => (
            format!("coherence pentagon {a} {b} {c} {k}"),
            check_pentagon(
                &mut cache,
                &load_double(a)?,
                &load_double(b)?,
                &load_double(c)?,
                &load_double(k)?,
                ctx.depth,
                &ctx.budget,
            )?,
        ),
        CoherenceCmd::Triangle { b, k } => (
            format!("coherence triangle {b} {k}"),
            check_triangle(&mut cache, &load_double(b)?, &load_double(k)?, ctx.depth, &ctx.budget)?,
        ),
        CoherenceCmd::Hexagon { a, c, k } => (
            format!("coherence hexagon {a} {c} {k}"),
            check_hexagon(
                &mut cache,
                &load_double(a)?,
                &load_double(c)?,
                &load_double(k)?,
                ctx.depth,
                &ctx.budget,
            )?,
        ),
        CoherenceCmd::EpsAL { c, p, k } => (
            format!("coherence eps-a-l {c} {p} {k}"),
            check_counit_triangle(
                &mut cache,
                &load_double(c)?,
                &load_double(p)?,
                &load_double(k)?,
                ctx.depth,
                &ctx.budget,
            )?,
        ),
    };
    match result {
        Coherence::Checked(out) => ctx.outcome(name, &out),
        Coherence::Skipped(why) => {
            ctx.push(name, false, format!("skipped: {why}"));
            return Err(Error::Budget(why));
        }
    }
    Ok(())
}

fn chi(
    which: ChiKind,
    a: &str,
    b: &str,
    check_assoc: bool,
    check_unit: bool,
    ctx: &mut Ctx,
) -> Result<()> {
    match which {
        ChiKind::H | ChiKind::V => {
            let (mut a_cat, mut b_cat) = (load_double(a)?, load_double(b)?);
            // The vertical comparison is the horizontal one under transpose.
            let label = if matches!(which, ChiKind::H) { "h" } else { "v" };
            if matches!(which, ChiKind::V) {
                a_cat = zoo::transpose(&a_cat);
                b_cat = zoo::transpose(&b_cat);
            }
            let built = chi_h(&a_cat, &b_cat, &ctx.budget)?;
            ctx.push(
                format!("chi {label} {a} {b}"),
                true,
                format!("domain objects={}", built.hom_ab.cat().objects.len()),
            );
            if check_assoc {
                let out = check_chi_h_assoc(&a_cat, &b_cat, &zoo::terminal(), &ctx.budget)?;
                ctx.outcome(format!("chi {label} assoc {a} {b} zoo:1"), &out);
            }
            if check_unit {
                let out = check_chi_h_unit(&a_cat, &ctx.budget)?;
                ctx.outcome(format!("chi {label} unit {a}"), &out);
            }
        }
        ChiKind::Sqr => {
            let (a_cat, b_cat) = (load_two(a)?, load_two(b)?);
            let built = chi_sqr(&a_cat, &b_cat, &ctx.budget)?;
            ctx.push(
                format!("chi sqr {a} {b}"),
                true,
                format!("domain objects={}", built.q_dom.cat.objects.len()),
            );
            if check_assoc {
                let out = check_chi_sqr_assoc(&a_cat, &b_cat, &terminal2(), &ctx.budget)?;
                ctx.outcome(format!("chi sqr assoc {a} {b} zoo:terminal"), &out);
            }
            if check_unit {
                let out = check_chi_sqr_unit(&a_cat, &ctx.budget)?;
                ctx.outcome(format!("chi sqr unit {a}"), &out);
            }
        }
        ChiKind::Mnd => {
            if check_unit {
                return Err(Error::Input(
                    "the reduced unit law is defined for chi h, v and sqr only".into(),
                ));
            }
            let (a_cat, b_cat) = (load_double(a)?, load_double(b)?);
            let built = chi_mnd(&a_cat, &b_cat, &ctx.budget)?;
            ctx.push(
                format!("chi mnd {a} {b}"),
                true,
                format!("domain objects={}", built.mnd_hom.cat.objects.len()),
            );
            if check_assoc {
                let out = check_chi_mnd_assoc(&a_cat, &b_cat, &zoo::terminal(), &ctx.budget)?;
                ctx.outcome(format!("chi mnd assoc {a} {b} zoo:1"), &out);
            }
        }
    }
    Ok(())
}

fn mnd(cmd: &MndCmd, ctx: &mut Ctx) -> Result<()> {
    match cmd {
        MndCmd::Build { a } => {
            let a_cat = load_double(a)?;
            let mnd = build_mnd(&a_cat, &ctx.budget)?;
            match mnd.cat.validate() {
                Ok(()) => ctx.push(format!("mnd build {a}"), true, counts(&mnd.cat)),
                Err(fs) => ctx.push(format!("mnd build {a}"), false, fs[0].to_string()),
            }
        }
        MndCmd::Chi { a, b, check } => chi(ChiKind::Mnd, a, b, *check, false, ctx)?,
    }
    Ok(())
}

fn monoid_check(file: &PathBuf, ctx: &mut Ctx) -> Result<()> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", file.display())))?;
    let data: GrayMonoidData = serde_json::from_str(&text)
        .map_err(|e| Error::Input(format!("bad JSON in {}: {e}", file.display())))?;
    data.carrier.validate().map_err(Error::Axioms)?;
    let report = check_gray_monoid(&data)?;
    let name = format!("monoid check {}", file.display());
    if report.ok {
        ctx.push(name, true, counts(&data.carrier));
    } else {
        let first = &report.failures[0];
        ctx.push(
            name,
            false,
            format!("{} condition families violated; first: {first}", {
                let mut laws: Vec<&str> =
                    report.failures.iter().map(|f| f.law.as_str()).collect();
                laws.dedup();
                laws.len()
            }),
        );
    }
    Ok(())
}

/// Run every configured check into one report, in config order. A resource
/// error anywhere aborts with exit 2; otherwise failures accumulate.
fn suite(config: &PathBuf, ctx: &mut Ctx) -> Result<()> {
    let text = std::fs::read_to_string(config)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", config.display())))?;
    let cfg: SuiteConfig = serde_json::from_str(&text)
        .map_err(|e| Error::Input(format!("bad suite config {}: {e}", config.display())))?;
    if let Some(b) = cfg.budget {
        if b == 0 {
            return Err(Error::Input("suite budget must be positive".into()));
        }
        ctx.budget = Budget::new(b);
    }
    if let Some(d) = cfg.depth {
        ctx.depth = d;
    }
    if let Some(f) = &cfg.format {
        if f != "text" && f != "json" {
            return Err(Error::Input(format!("unknown suite format: {f}")));
        }
    }
    for check in &cfg.checks {
        let mut argv = vec!["graydbl".to_string()];
        argv.extend(check.args.iter().cloned());
        let parsed = Cli::try_parse_from(&argv)
            .map_err(|e| Error::Input(format!("check {}: {e}", check.name)))?;
        let before = ctx.checks.len();
        match dispatch(&parsed.command, ctx) {
            Ok(()) => {}
            Err(e @ Error::Budget(_)) => return Err(e),
            Err(e) => ctx.push(check.name.clone(), false, e.to_string()),
        }
        // Prefix the configured name so report ordering follows the config.
        for line in &mut ctx.checks[before..] {
            line.name = format!("{}: {}", check.name, line.name);
        }
    }
    Ok(())
}
