//! Named property suites, each a list of pass/fail checks.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::formulas::{self, Formula};
use crate::error::{Error, Result};
use crate::polynomials::{self, Evidence};
use crate::ribbons::Ribbon;
use crate::shapes::{all_skew_shapes, SkewShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// `g` and truncated `G` agree with those of the rotated shape.
    Rotation,
    /// Ribbon `g` coincide exactly for equal or reversed ribbons, and expand
    /// in ribbon Schur functions with binomial coefficients.
    RibbonTheorem,
    /// Closed-form two-variable coefficients against enumeration.
    Formulas,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::Rotation, Suite::RibbonTheorem, Suite::Formulas];

    /// Largest shape size checked when none is given.
    pub fn default_max_cells(self) -> usize {
        match self {
            Suite::Rotation => 6,
            Suite::RibbonTheorem => 7,
            Suite::Formulas => 9,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rotation" => Ok(Suite::Rotation),
            "ribbon-theorem" | "ribbons" => Ok(Suite::RibbonTheorem),
            "formulas" => Ok(Suite::Formulas),
            _ => Err(Error::Parse {
                what: "suite",
                input: s.to_string(),
                token: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Rotation => "rotation",
            Suite::RibbonTheorem => "ribbon-theorem",
            Suite::Formulas => "formulas",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, failure: Option<String>, summary: String) -> Self {
        Check {
            name: name.into(),
            passed: failure.is_none(),
            detail: failure.unwrap_or(summary),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_cells: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn run_suite(suite: Suite, max_cells: Option<usize>) -> SuiteReport {
    let max_cells = max_cells.unwrap_or(suite.default_max_cells());
    let checks = match suite {
        Suite::Rotation => rotation(max_cells),
        Suite::RibbonTheorem => ribbon_theorem(max_cells),
        Suite::Formulas => formula_checks(max_cells),
    };
    SuiteReport {
        suite,
        max_cells,
        checks,
    }
}

/// `g` exactly and `G` in 4 variables up to degree cells + 2, for every
/// shape of each size against its rotation.
fn rotation(max_cells: usize) -> Vec<Check> {
    (1..=max_cells)
        .map(|cells| {
            let shapes = all_skew_shapes(cells);
            let failure = shapes.par_iter().find_map_first(|s| {
                let r = s.rotate180();
                let g = polynomials::dual_grothendieck(s, cells).equal(&polynomials::dual_grothendieck(&r, cells));
                if !(g.equal && g.evidence == Evidence::Exact) {
                    return Some(format!("g differs for {s}"));
                }
                let big = |x: &SkewShape| polynomials::grothendieck(x, 4, cells + 2).expect("bound covers cells");
                (!big(s).equal(&big(&r)).equal).then(|| format!("G differs for {s}"))
            });
            Check::new(
                format!("rotation, {cells} cells"),
                failure,
                format!("{} shapes, g exact, G to degree {} in 4 variables", shapes.len(), cells + 2),
            )
        })
        .collect()
}

fn ribbon_theorem(max_cells: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for size in 1..=max_cells {
        let ribbons = Ribbon::all_of_size(size);
        let polys: Vec<_> = ribbons
            .par_iter()
            .map(|r| polynomials::dual_grothendieck(&r.shape(), size))
            .collect();
        let mut pairs = 0;
        let mut failure = None;
        'outer: for i in 0..ribbons.len() {
            for j in i + 1..ribbons.len() {
                pairs += 1;
                let v = polys[i].equal(&polys[j]);
                let expected = ribbons[i] == ribbons[j].reverse();
                if v.equal != expected || (v.equal && v.evidence != Evidence::Exact) {
                    failure = Some(format!("{} vs {}: equal = {}", ribbons[i], ribbons[j], v.equal));
                    break 'outer;
                }
            }
        }
        out.push(Check::new(
            format!("equal or reversed, size {size}"),
            failure,
            format!("{pairs} pairs"),
        ));
    }
    for size in 1..=max_cells.min(6) {
        let failure = Ribbon::all_of_size(size).into_iter().find_map(|r| {
            let g = polynomials::dual_grothendieck(&r.shape(), size);
            let mut sum = std::collections::BTreeMap::new();
            for (c, k) in r.g_schur_expansion() {
                for (key, v) in polynomials::schur(&c.shape(), size).terms() {
                    *sum.entry(key.clone()).or_insert_with(num_bigint::BigInt::default) +=
                        v * num_bigint::BigInt::from(k.clone());
                }
            }
            let expected = polynomials::TruncatedSymPoly::from_coeffs(size, size, true, sum)
                .expect("terms fit the ribbon size");
            (!g.equal(&expected).equal).then(|| format!("{r}"))
        });
        out.push(Check::new(
            format!("ribbon Schur expansion, size {size}"),
            failure,
            format!("{} ribbons", 1usize << (size - 1)),
        ));
    }
    out
}

fn formula_checks(max_cells: usize) -> Vec<Check> {
    type Pick = fn(Formula) -> bool;
    let families: [(&str, Pick); 4] = [
        ("x1^r x2^(n-r+1)", |f| matches!(f, Formula::TwoVar(_))),
        ("x1^2 x2^n", |f| f == Formula::SquareTimesN),
        ("x1^3 x2^(n-1)", |f| f == Formula::CubeTimesNMinusOne),
        ("x1^3 x2^n", |f| f == Formula::CubeTimesN),
    ];
    let mut out: Vec<Check> = families
        .par_iter()
        .map(|(name, pick)| {
            let sweep = formulas::sweep(max_cells, SkewShape::is_connected, pick);
            let failure = sweep.discrepancies.first().map(|r| {
                format!(
                    "{} of {} disagree; smallest {}: closed form {} vs enumerated {}",
                    sweep.discrepancies.len(),
                    sweep.checked,
                    r.shape,
                    r.closed_form,
                    r.brute_force
                )
            });
            Check::new(
                format!("{name}, connected shapes up to {max_cells} cells"),
                failure,
                format!("{} evaluations", sweep.checked),
            )
        })
        .collect();

    let mut checked = 0;
    let mut failure = None;
    for cells in 3..=max_cells {
        for s in all_skew_shapes(cells) {
            if !s.is_connected() || s.cols() < 3 {
                continue;
            }
            checked += 1;
            let cf = formulas::coeff_x1cube_x2nm1_adjusted(&s).expect("at least 3 columns");
            let bf = formulas::brute_force_two_var(&s, 3, s.cols() - 1);
            if cf != bf && failure.is_none() {
                failure = Some(format!("{s}: {cf} vs {bf}"));
            }
        }
    }
    out.push(Check::new(
        format!("x1^3 x2^(n-1) adjusted, connected shapes with 3+ columns up to {max_cells} cells"),
        failure,
        format!("{checked} shapes"),
    ));
    out
}
