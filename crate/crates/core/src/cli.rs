//! The `skewgroth` command line.
//!
//! Every verb writes either human-readable text or JSON (one object per
//! line for the streaming verbs). Exit status is 0 on success, 1 when a
//! verification fails and 2 for usage errors, including malformed shapes.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::equivalence::formulas::{self, CoeffFormulaReport, Formula};
use crate::equivalence::search::{self, SearchBudget, ShapeClass, StaircaseBudget};
use crate::equivalence::verify::{self, Suite};
use crate::equivalence::{self, Comparison};
use crate::error::Error;
use crate::polynomials::{self, Family};
use crate::ribbons::Ribbon;
use crate::shapes::SkewShape;
use crate::tableaux::ExponentVector;

#[derive(Parser, Debug)]
#[command(name = "skewgroth", version, about = "Schur, Grothendieck and dual Grothendieck polynomials of skew shapes")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write record streams to files in this directory instead of stdout.
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    #[value(name = "s")]
    Schur,
    #[value(name = "G")]
    Grothendieck,
    #[value(name = "g")]
    Dual,
}

impl From<Kind> for Family {
    fn from(k: Kind) -> Family {
        match k {
            Kind::Schur => Family::Schur,
            Kind::Grothendieck => Family::Grothendieck,
            Kind::Dual => Family::DualGrothendieck,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Skew,
    Ribbon,
}

#[derive(Args, Debug, Clone, Copy)]
struct Budgets {
    /// Number of variables (default: cells, at most 8).
    #[arg(long)]
    vars: Option<usize>,
    /// Degree bound for G (default: cells + 2).
    #[arg(long)]
    degree: Option<usize>,
}

impl Budgets {
    fn vars(&self, cells: usize) -> usize {
        self.vars.unwrap_or(cells.min(8)).max(1)
    }

    fn degree(&self, cells: usize) -> usize {
        self.degree.unwrap_or(cells + 2)
    }
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Print s, G or g of a shape.
    Poly {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        shape: String,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Compare two shapes.
    Equal {
        #[arg(long, value_enum)]
        kind: Kind,
        a: String,
        b: String,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Bottleneck counts, pair sums and row overlaps of a shape.
    Bottlenecks {
        shape: String,
        /// Largest bottleneck width to report.
        #[arg(long, default_value_t = 2)]
        width: usize,
    },
    /// Irreducible factorization of a ribbon.
    Factor { ribbon: String },
    /// Expansion of g of a ribbon in ribbon Schur functions.
    Expand { ribbon: String },
    /// A single coefficient, with the closed form where one exists.
    Coeff {
        shape: String,
        #[arg(long)]
        monomial: String,
        #[arg(long, value_enum, default_value_t = Kind::Dual)]
        kind: Kind,
    },
    /// Group all shapes of a size by equality of their polynomials.
    Search {
        #[arg(long)]
        cells: usize,
        #[arg(long, value_enum, default_value_t = ClassArg::Skew)]
        class: ClassArg,
        #[arg(long, value_enum, default_value_t = Kind::Dual)]
        kind: Kind,
        #[command(flatten)]
        budgets: Budgets,
        /// Stop starting new buckets after this many seconds.
        #[arg(long)]
        time_limit: Option<u64>,
    },
    /// Compare every staircase skew shape of order n with its transpose.
    Staircase {
        #[arg(long)]
        n: usize,
        /// Variables for g.
        #[arg(long, default_value_t = 8)]
        vars: usize,
        /// Variables for G.
        #[arg(long, default_value_t = 4)]
        big_vars: usize,
        /// G is compared up to degree cells + this.
        #[arg(long, default_value_t = 2)]
        extra_degree: usize,
    },
    /// Run a named property suite.
    Verify {
        #[arg(long)]
        suite: String,
        /// Largest shape size (default depends on the suite).
        #[arg(long)]
        max_cells: Option<usize>,
    },
}

/// Failure modes of a command, mapped to exit codes.
enum Failure {
    Usage(String),
    Verification,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Entry point of the binary.
pub fn main_with_args<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I: IntoIterator<Item = OsString>>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    if let Some(n) = cli.jobs {
        // the global pool can only be configured once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let result = dispatch(&cli, out);
    let _ = out.flush();
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Verification) => 1,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn parse_shape(s: &str) -> std::result::Result<SkewShape, Failure> {
    Ok(s.parse::<SkewShape>()?)
}

fn parse_ribbon(s: &str) -> std::result::Result<Ribbon, Failure> {
    Ok(s.parse::<Ribbon>()?)
}

fn emit_json(out: &mut dyn Write, v: &impl serde::Serialize) -> Outcome {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let json = cli.format == Format::Json;
    match &cli.verb {
        Verb::Poly { kind, shape, budgets } => poly(out, json, (*kind).into(), shape, budgets),
        Verb::Equal { kind, a, b, budgets } => equal(out, json, (*kind).into(), a, b, budgets),
        Verb::Bottlenecks { shape, width } => bottlenecks(out, json, shape, *width),
        Verb::Factor { ribbon } => factor(out, json, ribbon),
        Verb::Expand { ribbon } => expand(out, json, ribbon),
        Verb::Coeff { shape, monomial, kind } => coeff(out, json, shape, monomial, (*kind).into()),
        Verb::Search {
            cells,
            class,
            kind,
            budgets,
            time_limit,
        } => {
            let class = match class {
                ClassArg::Skew => ShapeClass::Skew,
                ClassArg::Ribbon => ShapeClass::Ribbon,
            };
            let budget = SearchBudget {
                family: (*kind).into(),
                vars: budgets.vars,
                degree: budgets.degree,
                time_limit: time_limit.map(Duration::from_secs),
            };
            let name = format!("search-{cells}-{class:?}-{}.jsonl", budget.family).to_lowercase();
            with_sink(cli, out, &name, |sink| search_cmd(sink, json, *cells, class, &budget))
        }
        Verb::Staircase {
            n,
            vars,
            big_vars,
            extra_degree,
        } => {
            let budget = StaircaseBudget {
                g_vars: *vars,
                big_g_vars: *big_vars,
                extra_degree: *extra_degree,
            };
            with_sink(cli, out, &format!("staircase-{n}.jsonl"), |sink| {
                staircase_cmd(sink, json, *n, budget)
            })
        }
        Verb::Verify { suite, max_cells } => {
            let suite: Suite = suite.parse()?;
            with_sink(cli, out, &format!("verify-{suite}.jsonl"), |sink| {
                verify_cmd(sink, json, suite, *max_cells)
            })
        }
    }
}

/// Runs `f` against a file in `--out-dir` when given, else against `out`.
fn with_sink(cli: &Cli, out: &mut dyn Write, name: &str, f: impl FnOnce(&mut dyn Write) -> Outcome) -> Outcome {
    match &cli.out_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            let path = dir.join(name);
            let mut file = BufWriter::new(File::create(&path)?);
            let result = f(&mut file);
            file.flush()?;
            writeln!(out, "{}", path.display())?;
            result
        }
        None => f(out),
    }
}

fn poly(out: &mut dyn Write, json: bool, family: Family, shape: &str, budgets: &Budgets) -> Outcome {
    let shape = parse_shape(shape)?;
    let cells = shape.num_cells();
    let degree = match family {
        Family::Grothendieck => budgets.degree(cells),
        _ => budgets.degree.unwrap_or(cells),
    };
    let p = polynomials::build(family, &shape, budgets.vars(cells), degree)?;
    if json {
        let mut v = p.to_json();
        v["kind"] = json!(family.to_string());
        v["shape"] = json!(shape.to_string());
        emit_json(out, &v)
    } else {
        writeln!(out, "# {family} {shape}")?;
        write!(out, "{}", p.to_text())?;
        Ok(())
    }
}

fn comparison_text(c: &Comparison) -> String {
    let word = if c.verdict.equal { "equal" } else { "not equal" };
    match &c.obstruction {
        Some(o) => format!("{word} ({}): {o}", c.verdict.evidence),
        None => format!("{word} ({})", c.verdict.evidence),
    }
}

fn equal(out: &mut dyn Write, json: bool, family: Family, a: &str, b: &str, budgets: &Budgets) -> Outcome {
    let (a, b) = (parse_shape(a)?, parse_shape(b)?);
    let cells = a.num_cells().max(b.num_cells());
    let c = equivalence::equivalent(family, &a, &b, budgets.vars(cells), budgets.degree(cells))?;
    if json {
        emit_json(
            out,
            &json!({
                "shapes": [a, b],
                "kind": family.to_string(),
                "verdict": c.verdict.equal,
                "evidence": c.verdict.evidence,
                "obstruction": c.obstruction.as_ref().map(ToString::to_string),
            }),
        )
    } else {
        writeln!(out, "{}", comparison_text(&c))?;
        Ok(())
    }
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn bottlenecks(out: &mut dyn Write, json: bool, shape: &str, width: usize) -> Outcome {
    let shape = parse_shape(shape)?;
    let profile = shape.bottleneck_profile(width.min(shape.cols().max(1)))?;
    if json {
        let mut v = serde_json::to_value(&profile)?;
        v["shape"] = json!(shape.to_string());
        v["connected"] = json!(shape.is_connected());
        v["sum_of_squares"] = json!(profile.sum_of_squares());
        return emit_json(out, &v);
    }
    writeln!(out, "shape = {shape}")?;
    writeln!(out, "rows = {}, columns = {}, cells = {}", shape.rows(), shape.cols(), shape.num_cells())?;
    writeln!(out, "b = {}", tuple(&profile.b))?;
    for (w, v) in profile.wide.iter().filter(|(w, _)| **w > 1) {
        writeln!(out, "b({w}) = {}", tuple(v))?;
    }
    writeln!(out, "pair sums = {}", tuple(&profile.pair_sums))?;
    writeln!(out, "sum b = {}, sum b^2 = {}", profile.total(), profile.sum_of_squares())?;
    for (k, r) in &profile.overlaps {
        writeln!(out, "r({k}) = {}", tuple(r))?;
    }
    if !shape.is_connected() {
        writeln!(out, "note: shape is not connected")?;
    }
    Ok(())
}

fn factor(out: &mut dyn Write, json: bool, ribbon: &str) -> Outcome {
    let r = parse_ribbon(ribbon)?;
    let f = r.irreducible_factorization();
    if json {
        emit_json(
            out,
            &json!({
                "ribbon": r,
                "columns": r.columns(),
                "factors": f.factors(),
                "irreducible": f.len() == 1,
            }),
        )
    } else {
        writeln!(out, "{f}")?;
        Ok(())
    }
}

fn expand(out: &mut dyn Write, json: bool, ribbon: &str) -> Outcome {
    let r = parse_ribbon(ribbon)?;
    let terms = r.g_schur_expansion();
    if json {
        let terms: Vec<_> = terms
            .iter()
            .map(|(c, k)| json!({"ribbon": c, "columns": c.columns(), "coefficient": k.to_string()}))
            .collect();
        return emit_json(out, &json!({"ribbon": r, "terms": terms}));
    }
    for (c, k) in terms {
        writeln!(out, "{k} s{c}  columns {}", c.column_string())?;
    }
    Ok(())
}

fn coeff(out: &mut dyn Write, json: bool, shape: &str, monomial: &str, family: Family) -> Outcome {
    let shape = parse_shape(shape)?;
    let e: ExponentVector = monomial.parse()?;
    let value = polynomials::coefficient(family, &shape, &e);
    let report: Option<CoeffFormulaReport> = if family == Family::DualGrothendieck {
        Formula::matching(&e, shape.cols())
            .map(|f| CoeffFormulaReport::new(&shape, f))
            .transpose()?
    } else {
        None
    };
    if json {
        return emit_json(
            out,
            &json!({
                "shape": shape,
                "kind": family.to_string(),
                "monomial": e.to_string(),
                "coefficient": value.to_string(),
                "formula": report,
            }),
        );
    }
    writeln!(out, "{value}")?;
    if let Some(r) = report {
        writeln!(out, "closed form ({}): {}", r.formula, r.closed_form)?;
        writeln!(out, "enumerated: {}", r.brute_force)?;
        writeln!(out, "agrees: {}", r.agrees)?;
        if r.formula == Formula::CubeTimesNMinusOne && shape.cols() >= 3 {
            let adjusted = formulas::coeff_x1cube_x2nm1_adjusted(&shape)?;
            writeln!(out, "adjusted closed form: {adjusted}")?;
        }
    }
    Ok(())
}

fn search_cmd(out: &mut dyn Write, json: bool, cells: usize, class: ShapeClass, budget: &SearchBudget) -> Outcome {
    let mut io_err = None;
    let report = search::search_coincidences_with(cells, class, budget, |c| {
        if io_err.is_some() {
            return;
        }
        let r = if json {
            serde_json::to_writer(&mut *out, c)
                .map_err(io::Error::from)
                .and_then(|_| writeln!(out))
        } else {
            let names: Vec<String> = c.shapes.iter().map(ToString::to_string).collect();
            let ev = c.evidence.map(|e| format!(" ({e})")).unwrap_or_default();
            writeln!(out, "{}{ev}", names.join(" | "))
        };
        if let Err(e) = r {
            io_err = Some(e);
        }
    });
    if let Some(e) = io_err {
        return Err(e.into());
    }
    let coincident = report.classes.iter().filter(|c| !c.is_singleton()).count();
    if json {
        emit_json(
            out,
            &json!({
                "summary": {
                    "cells": report.cells,
                    "class": report.class,
                    "kind": report.kind.to_string(),
                    "shapes": report.shapes,
                    "buckets": report.buckets,
                    "classes": report.classes.len(),
                    "coincident_classes": coincident,
                    "complete": report.complete,
                }
            }),
        )
    } else {
        let tail = if report.complete { "" } else { " (time limit reached)" };
        writeln!(
            out,
            "# {} shapes, {} classes, {} with more than one shape{tail}",
            report.shapes,
            report.classes.len(),
            coincident
        )?;
        Ok(())
    }
}

fn staircase_cmd(out: &mut dyn Write, json: bool, n: usize, budget: StaircaseBudget) -> Outcome {
    let start = Instant::now();
    let report = search::check_staircase(n, budget)?;
    for c in &report.checks {
        if json {
            emit_json(
                out,
                &json!({
                    "shapes": c.shapes,
                    "inner": c.inner,
                    "verdict": {"g": c.g.verdict.equal, "G": c.big_g.verdict.equal},
                    "evidence": {"g": c.g.verdict.evidence, "G": c.big_g.verdict.evidence},
                    "invariants": {
                        "cells": c.shapes[0].num_cells(),
                        "rows": c.shapes[0].rows(),
                        "cols": c.shapes[0].cols(),
                    },
                    "elapsed_ms": c.elapsed_ms,
                }),
            )?;
        } else {
            writeln!(
                out,
                "mu = {}: {} vs {}: g {}; G {}",
                c.inner,
                c.shapes[0],
                c.shapes[1],
                comparison_text(&c.g),
                comparison_text(&c.big_g)
            )?;
        }
    }
    if json {
        emit_json(
            out,
            &json!({"summary": {"n": n, "checks": report.checks.len(), "violations": report.violations,
                "elapsed_ms": start.elapsed().as_millis() as u64}}),
        )?;
    } else {
        writeln!(out, "# {} shapes, {} violations", report.checks.len(), report.violations)?;
    }
    if report.violations > 0 {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn verify_cmd(out: &mut dyn Write, json: bool, suite: Suite, max_cells: Option<usize>) -> Outcome {
    let report = verify::run_suite(suite, max_cells);
    for c in &report.checks {
        if json {
            emit_json(out, c)?;
        } else {
            writeln!(out, "{c}")?;
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
