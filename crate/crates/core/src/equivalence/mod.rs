//! Deciding whether two skew shapes have the same `s`, `G` or `g`.
//!
//! Comparisons run cheap invariants first. Any mismatch certifies that the
//! shapes differ, and the mismatch is returned as an [`Obstruction`]. Only
//! when every invariant agrees are polynomials built and compared, with the
//! evidence level of the comparison recorded in the verdict.

pub mod formulas;
pub mod search;
pub mod verify;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polynomials::{self, EqualityVerdict, Evidence, Family};
use crate::shapes::{pair_sums, Partition, SkewShape};

pub use formulas::{
    brute_force_two_var, coeff_two_var, coeff_x1cube_x2n, coeff_x1cube_x2nm1,
    coeff_x1cube_x2nm1_adjusted, coeff_x1sq_x2n, CoeffFormulaReport, Formula,
};
pub use search::{check_staircase, search_coincidences, EquivClass, Fingerprint, SearchBudget, ShapeClass};

/// An invariant on which two shapes differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Obstruction {
    Cells(usize, usize),
    Rows(usize, usize),
    Columns(usize, usize),
    /// Sorted row overlaps over `k` consecutive rows.
    RowOverlaps { k: usize, a: Partition, b: Partition },
    /// Sorted column overlaps over `k` consecutive columns.
    ColumnOverlaps { k: usize, a: Partition, b: Partition },
    /// `b_i + b_j` with `j = n - i + 1` (one based; `i == j` in the middle).
    PairSum { i: usize, j: usize, a: usize, b: usize },
    /// `sum b_i^2`.
    SquareSum(usize, usize),
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::Cells(a, b) => write!(f, "cells = {a} vs {b}"),
            Obstruction::Rows(a, b) => write!(f, "rows = {a} vs {b}"),
            Obstruction::Columns(a, b) => write!(f, "columns = {a} vs {b}"),
            Obstruction::RowOverlaps { k, a, b } => {
                write!(f, "row overlaps (k={k}) = {a} vs {b}")
            }
            Obstruction::ColumnOverlaps { k, a, b } => {
                write!(f, "column overlaps (k={k}) = {a} vs {b}")
            }
            Obstruction::PairSum { i, j, a, b } if i == j => write!(f, "b{i} = {a} vs {b}"),
            Obstruction::PairSum { i, j, a, b } => write!(f, "b{i}+b{j} = {a} vs {b}"),
            Obstruction::SquareSum(a, b) => write!(f, "sum of b_i^2 = {a} vs {b}"),
        }
    }
}

fn overlap_partitions(shape: &SkewShape) -> Vec<Partition> {
    (1..=shape.rows())
        .map(|k| Partition::from_unsorted(shape.row_overlaps(k).into_iter().filter(|&x| x > 0).collect()))
        .collect()
}

/// Invariants shared by every pair of shapes with equal `s`: size, row and
/// column counts, and the multisets of row and column overlaps.
pub fn schur_obstructions(a: &SkewShape, b: &SkewShape) -> Vec<Obstruction> {
    let mut out = Vec::new();
    if a.num_cells() != b.num_cells() {
        out.push(Obstruction::Cells(a.num_cells(), b.num_cells()));
    }
    if a.rows() != b.rows() {
        out.push(Obstruction::Rows(a.rows(), b.rows()));
    }
    if a.cols() != b.cols() {
        out.push(Obstruction::Columns(a.cols(), b.cols()));
    }
    if !out.is_empty() {
        return out;
    }
    let rows = overlap_partitions(a).into_iter().zip(overlap_partitions(b));
    for (k, (pa, pb)) in rows.enumerate() {
        if pa != pb {
            out.push(Obstruction::RowOverlaps { k: k + 1, a: pa, b: pb });
        }
    }
    let cols = overlap_partitions(&a.transpose()).into_iter().zip(overlap_partitions(&b.transpose()));
    for (k, (pa, pb)) in cols.enumerate() {
        if pa != pb {
            out.push(Obstruction::ColumnOverlaps { k: k + 1, a: pa, b: pb });
        }
    }
    out
}

/// Bottleneck invariants shared by every pair of connected shapes with
/// equal `g`: the pair sums `b_i + b_{n-i+1}` and `sum b_i^2`. Returns
/// nothing unless both shapes are connected.
pub fn bottleneck_obstructions(a: &SkewShape, b: &SkewShape) -> Vec<Obstruction> {
    if !a.is_connected() || !b.is_connected() {
        return Vec::new();
    }
    let (ba, bb) = (a.bottlenecks(), b.bottlenecks());
    if ba.len() != bb.len() {
        return vec![Obstruction::Columns(ba.len(), bb.len())];
    }
    let n = ba.len();
    let mut out: Vec<Obstruction> = pair_sums(&ba)
        .into_iter()
        .zip(pair_sums(&bb))
        .enumerate()
        .filter(|(_, (x, y))| x != y)
        .map(|(i, (x, y))| Obstruction::PairSum {
            i: i + 1,
            j: n - i,
            a: x,
            b: y,
        })
        .collect();
    let sq = |v: &[usize]| v.iter().map(|x| x * x).sum::<usize>();
    if sq(&ba) != sq(&bb) {
        out.push(Obstruction::SquareSum(sq(&ba), sq(&bb)));
    }
    out
}

/// Every invariant on which `a` and `b` differ that rules out equality in
/// `family`, in a fixed order. Empty means the invariants cannot tell the
/// shapes apart.
pub fn obstructions(family: Family, a: &SkewShape, b: &SkewShape) -> Vec<Obstruction> {
    let mut out = schur_obstructions(a, b);
    if family == Family::DualGrothendieck && out.is_empty() {
        out = bottleneck_obstructions(a, b);
    }
    out
}

/// `true` unless some invariant certifies `g(a) != g(b)`.
pub fn necessary_filter(a: &SkewShape, b: &SkewShape) -> bool {
    obstructions(Family::DualGrothendieck, a, b).is_empty()
}

/// The first obstruction to `g(a) = g(b)`, if any.
pub fn filter_witness(a: &SkewShape, b: &SkewShape) -> Option<Obstruction> {
    obstructions(Family::DualGrothendieck, a, b).into_iter().next()
}

/// A verdict together with the invariant that settled it, if one did.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub verdict: EqualityVerdict,
    pub obstruction: Option<Obstruction>,
}

impl Comparison {
    fn refuted(obstruction: Obstruction) -> Self {
        Comparison {
            verdict: EqualityVerdict {
                equal: false,
                evidence: Evidence::Exact,
            },
            obstruction: Some(obstruction),
        }
    }

    fn computed(verdict: EqualityVerdict) -> Self {
        Comparison {
            verdict,
            obstruction: None,
        }
    }
}

/// Compares `g(a)` and `g(b)` in `min(budget_vars, cells)` variables.
pub fn g_equivalent(a: &SkewShape, b: &SkewShape, budget_vars: usize) -> Comparison {
    if let Some(o) = filter_witness(a, b) {
        return Comparison::refuted(o);
    }
    let m = budget_vars.min(a.num_cells()).max(1);
    Comparison::computed(
        polynomials::dual_grothendieck(a, m).equal(&polynomials::dual_grothendieck(b, m)),
    )
}

/// Compares `s(a)` and `s(b)` in `min(budget_vars, cells)` variables.
pub fn schur_equivalent(a: &SkewShape, b: &SkewShape, budget_vars: usize) -> Comparison {
    if let Some(o) = schur_obstructions(a, b).into_iter().next() {
        return Comparison::refuted(o);
    }
    let m = budget_vars.min(a.num_cells()).max(1);
    Comparison::computed(polynomials::schur(a, m).equal(&polynomials::schur(b, m)))
}

/// Compares `G(a)` and `G(b)` in `budget_vars` variables up to degree
/// `budget_degree`. Equal verdicts are never exact unless both shapes are
/// empty.
#[allow(non_snake_case)]
pub fn G_equivalent(
    a: &SkewShape,
    b: &SkewShape,
    budget_vars: usize,
    budget_degree: usize,
) -> Result<Comparison> {
    if let Some(o) = schur_obstructions(a, b).into_iter().next() {
        return Ok(Comparison::refuted(o));
    }
    if budget_degree < a.num_cells() {
        return Err(Error::InvalidBound(format!(
            "degree bound {budget_degree} is below {} cells",
            a.num_cells()
        )));
    }
    let pa = polynomials::grothendieck(a, budget_vars, budget_degree)?;
    let pb = polynomials::grothendieck(b, budget_vars, budget_degree)?;
    Ok(Comparison::computed(pa.equal(&pb)))
}

/// Dispatches to the comparison for `family`.
pub fn equivalent(
    family: Family,
    a: &SkewShape,
    b: &SkewShape,
    budget_vars: usize,
    budget_degree: usize,
) -> Result<Comparison> {
    match family {
        Family::Schur => Ok(schur_equivalent(a, b, budget_vars)),
        Family::DualGrothendieck => Ok(g_equivalent(a, b, budget_vars)),
        Family::Grothendieck => G_equivalent(a, b, budget_vars, budget_degree),
    }
}
