//! Exhaustive searches: all shapes of a given size grouped into classes
//! with equal polynomials, and the comparison of staircase skew shapes with
//! their transposes.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::{equivalent, Comparison};
use crate::error::{Error, Result};
use crate::polynomials::{self, Evidence, Family, TruncatedSymPoly};
use crate::ribbons::Ribbon;
use crate::shapes::{all_skew_shapes, pair_sums, Partition, SkewShape};

/// Which shapes a search ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeClass {
    /// Every skew shape, connected or not.
    Skew,
    /// Ribbons only.
    Ribbon,
}

impl FromStr for ShapeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "skew" | "all_skew" | "all-skew" => Ok(ShapeClass::Skew),
            "ribbon" | "ribbons" => Ok(ShapeClass::Ribbon),
            _ => Err(Error::Parse {
                what: "shape class",
                input: s.to_string(),
                token: s.to_string(),
            }),
        }
    }
}

impl ShapeClass {
    /// All shapes of the class with `cells` cells, sorted.
    pub fn shapes(self, cells: usize) -> Vec<SkewShape> {
        match self {
            ShapeClass::Skew => all_skew_shapes(cells),
            ShapeClass::Ribbon => {
                let mut v: Vec<SkewShape> = Ribbon::all_of_size(cells).iter().map(Ribbon::shape).collect();
                v.sort();
                v.dedup();
                v
            }
        }
    }
}

/// Limits on how much a search may compute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub family: Family,
    /// Variables; defaults to the cell count capped at 8.
    pub vars: Option<usize>,
    /// Degree bound for `G`; defaults to cells + 2.
    pub degree: Option<usize>,
    /// Stop starting new buckets after this long.
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn new(family: Family) -> Self {
        SearchBudget {
            family,
            vars: None,
            degree: None,
            time_limit: None,
        }
    }

    pub fn vars_for(&self, cells: usize) -> usize {
        self.vars.unwrap_or(cells.min(8)).max(1)
    }

    pub fn degree_for(&self, cells: usize) -> usize {
        self.degree.unwrap_or(cells + 2).max(cells)
    }

    fn polynomial(&self, shape: &SkewShape) -> TruncatedSymPoly {
        let cells = shape.num_cells();
        let m = self.vars_for(cells);
        match self.family {
            Family::Schur => polynomials::schur(shape, m.min(cells.max(1))),
            Family::DualGrothendieck => polynomials::dual_grothendieck(shape, m.min(cells.max(1))),
            Family::Grothendieck => polynomials::grothendieck(shape, m, self.degree_for(cells))
                .expect("degree bound is at least the cell count"),
        }
    }
}

/// Invariants that agree within every class of the given family.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Fingerprint {
    pub cells: usize,
    pub rows: usize,
    pub cols: usize,
    /// Bottleneck pair sums `b_i + b_{n-i+1}`; empty unless the family is `g`
    /// and the shape is connected. The same holds for the next two fields.
    pub pair_sums: Vec<usize>,
    /// `sum b_i`.
    pub bottleneck_total: usize,
    /// `sum b_i^2`.
    pub square_sum: usize,
    /// Sorted row overlaps for `k = 1..=rows`.
    pub row_overlaps: Vec<Partition>,
    /// Sorted column overlaps for `k = 1..=cols`.
    pub column_overlaps: Vec<Partition>,
}

impl Fingerprint {
    pub fn of(family: Family, shape: &SkewShape) -> Self {
        let overlaps = |s: &SkewShape| -> Vec<Partition> {
            (1..=s.rows())
                .map(|k| Partition::from_unsorted(s.row_overlaps(k).into_iter().filter(|&x| x > 0).collect()))
                .collect()
        };
        let mut fp = Fingerprint {
            cells: shape.num_cells(),
            rows: shape.rows(),
            cols: shape.cols(),
            pair_sums: Vec::new(),
            bottleneck_total: 0,
            square_sum: 0,
            row_overlaps: overlaps(shape),
            column_overlaps: overlaps(&shape.transpose()),
        };
        if family == Family::DualGrothendieck && shape.is_connected() {
            let b = shape.bottlenecks();
            fp.pair_sums = pair_sums(&b);
            fp.bottleneck_total = b.iter().sum();
            fp.square_sum = b.iter().map(|x| x * x).sum();
        }
        fp
    }
}

/// Shapes found to share a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivClass {
    pub kind: Family,
    pub representative: SkewShape,
    /// All members, representative first, then sorted.
    pub shapes: Vec<SkewShape>,
    /// The weakest evidence among the comparisons with the representative;
    /// `None` for a class of one.
    pub evidence: Option<Evidence>,
    pub invariants: Fingerprint,
    pub elapsed_ms: u64,
}

impl EquivClass {
    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.shapes.len() == 1
    }
}

/// Result of a finished or interrupted search.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub cells: usize,
    pub class: ShapeClass,
    pub kind: Family,
    pub shapes: usize,
    pub buckets: usize,
    /// `false` when the time limit stopped the search early.
    pub complete: bool,
    pub classes: Vec<EquivClass>,
}

fn weaker(a: Evidence, b: Evidence) -> Evidence {
    let rank = |e: &Evidence| match e {
        Evidence::Exact => (2, usize::MAX, usize::MAX),
        Evidence::PartialVars(m) => (1, *m, usize::MAX),
        Evidence::PartialDegree { degree, vars } => (0, *vars, *degree),
    };
    if rank(&a) <= rank(&b) {
        a
    } else {
        b
    }
}

fn resolve_bucket(fp: &Fingerprint, shapes: &[SkewShape], budget: &SearchBudget) -> Vec<EquivClass> {
    let start = Instant::now();
    let polys: Vec<TruncatedSymPoly> = shapes.par_iter().map(|s| budget.polynomial(s)).collect();
    // (representative index, member indices, weakest evidence)
    let mut groups: Vec<(usize, Vec<usize>, Option<Evidence>)> = Vec::new();
    for i in 0..shapes.len() {
        let found = groups.iter_mut().find_map(|(rep, members, ev)| {
            let v = polys[*rep].equal(&polys[i]);
            v.equal.then(|| {
                members.push(i);
                *ev = Some(ev.map_or(v.evidence, |e| weaker(e, v.evidence)));
            })
        });
        if found.is_none() {
            groups.push((i, vec![i], None));
        }
    }
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let mut out: Vec<EquivClass> = groups
        .into_iter()
        .map(|(rep, members, evidence)| EquivClass {
            kind: budget.family,
            representative: shapes[rep].clone(),
            shapes: members.into_iter().map(|i| shapes[i].clone()).collect(),
            evidence,
            invariants: fp.clone(),
            elapsed_ms,
        })
        .collect();
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    out
}

/// Groups all shapes of `class` with `cells` cells by equality of the
/// polynomial in `budget.family`, calling `emit` once per class as buckets
/// are resolved. Output order depends only on the inputs.
pub fn search_coincidences_with(
    cells: usize,
    class: ShapeClass,
    budget: &SearchBudget,
    mut emit: impl FnMut(&EquivClass),
) -> SearchReport {
    let start = Instant::now();
    let shapes = class.shapes(cells);
    let mut buckets: BTreeMap<Fingerprint, Vec<SkewShape>> = BTreeMap::new();
    for s in &shapes {
        buckets.entry(Fingerprint::of(budget.family, s)).or_default().push(s.clone());
    }
    let buckets: Vec<(Fingerprint, Vec<SkewShape>)> = buckets.into_iter().collect();
    let mut report = SearchReport {
        cells,
        class,
        kind: budget.family,
        shapes: shapes.len(),
        buckets: buckets.len(),
        complete: true,
        classes: Vec::new(),
    };
    let chunk = 4 * rayon::current_num_threads().max(1);
    for batch in buckets.chunks(chunk) {
        if budget.time_limit.is_some_and(|t| start.elapsed() > t) {
            report.complete = false;
            break;
        }
        let resolved: Vec<Vec<EquivClass>> = batch
            .par_iter()
            .map(|(fp, members)| resolve_bucket(fp, members, budget))
            .collect();
        for c in resolved.into_iter().flatten() {
            emit(&c);
            report.classes.push(c);
        }
    }
    report.classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    report
}

/// [`search_coincidences_with`] without a callback.
pub fn search_coincidences(cells: usize, class: ShapeClass, budget: &SearchBudget) -> SearchReport {
    search_coincidences_with(cells, class, budget, |_| {})
}

/// Budgets for [`check_staircase`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StaircaseBudget {
    /// Variables for `g`; the comparison is exact when this covers the cells.
    pub g_vars: usize,
    /// Variables for `G`.
    pub big_g_vars: usize,
    /// `G` is compared up to degree cells + this.
    pub extra_degree: usize,
}

impl Default for StaircaseBudget {
    fn default() -> Self {
        StaircaseBudget {
            g_vars: 8,
            big_g_vars: 4,
            extra_degree: 2,
        }
    }
}

/// Outcome for one inner partition.
#[derive(Clone, Debug, Serialize)]
pub struct StaircaseCheck {
    pub inner: Partition,
    /// The shape and its transpose.
    pub shapes: [SkewShape; 2],
    pub g: Comparison,
    #[serde(rename = "G")]
    pub big_g: Comparison,
    pub elapsed_ms: u64,
}

impl StaircaseCheck {
    pub fn holds(&self) -> bool {
        self.g.verdict.equal && self.big_g.verdict.equal
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StaircaseReport {
    pub n: usize,
    pub checks: Vec<StaircaseCheck>,
    pub violations: usize,
}

/// The staircase `<n-1, n-2, ..., 1>`.
pub fn staircase(n: usize) -> Partition {
    Partition::from_unsorted((1..n).collect())
}

/// Compares `g` and `G` of `δ_n/μ` with those of its transpose for every
/// `μ ⊆ δ_n`.
pub fn check_staircase(n: usize, budget: StaircaseBudget) -> Result<StaircaseReport> {
    if n < 2 {
        return Err(Error::InvalidArg(format!("staircase order {n} is below 2")));
    }
    let outer = staircase(n);
    let checks: Vec<StaircaseCheck> = outer
        .subpartitions()
        .into_par_iter()
        .map(|mu| {
            let start = Instant::now();
            let shape = SkewShape::new(outer.clone(), mu.clone()).expect("μ lies inside the staircase");
            let t = shape.transpose();
            let cells = shape.num_cells();
            let g = equivalent(Family::DualGrothendieck, &shape, &t, budget.g_vars, cells)?;
            let big_g = equivalent(
                Family::Grothendieck,
                &shape,
                &t,
                budget.big_g_vars,
                cells + budget.extra_degree,
            )?;
            Ok(StaircaseCheck {
                inner: mu,
                shapes: [shape, t],
                g,
                big_g,
                elapsed_ms: start.elapsed().as_millis() as u64,
            })
        })
        .collect::<Result<_>>()?;
    let violations = checks.iter().filter(|c| !c.holds()).count();
    Ok(StaircaseReport { n, checks, violations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cell_is_one_class() {
        let r = search_coincidences(1, ShapeClass::Skew, &SearchBudget::new(Family::DualGrothendieck));
        assert_eq!(r.classes.len(), 1);
        assert!(r.complete);
    }

    #[test]
    fn ribbon_classes_are_reversal_pairs() {
        let r = search_coincidences(5, ShapeClass::Ribbon, &SearchBudget::new(Family::DualGrothendieck));
        assert_eq!(r.shapes, 16);
        for c in &r.classes {
            let rot = c.representative.rotate180();
            let mut expect = vec![c.representative.clone(), rot];
            expect.sort();
            expect.dedup();
            let mut got = c.shapes.clone();
            got.sort();
            assert_eq!(got, expect);
            if c.len() > 1 {
                assert_eq!(c.evidence, Some(Evidence::Exact));
            }
        }
    }

    #[test]
    fn four_cell_connected_classes_are_rotation_orbits() {
        let r = search_coincidences(4, ShapeClass::Skew, &SearchBudget::new(Family::DualGrothendieck));
        for c in r.classes.iter().filter(|c| c.representative.is_connected()) {
            let mut expect = vec![c.representative.clone(), c.representative.rotate180()];
            expect.sort();
            expect.dedup();
            let mut got = c.shapes.clone();
            got.sort();
            assert_eq!(got, expect, "{c:?}");
        }
    }

    #[test]
    fn search_is_deterministic() {
        let b = SearchBudget::new(Family::Schur);
        let x = search_coincidences(5, ShapeClass::Skew, &b);
        let y = search_coincidences(5, ShapeClass::Skew, &b);
        let key = |r: &SearchReport| -> Vec<_> {
            r.classes.iter().map(|c| (c.shapes.clone(), c.evidence)).collect()
        };
        assert_eq!(key(&x), key(&y));
    }

    #[test]
    fn small_staircases() {
        let r = check_staircase(2, StaircaseBudget::default()).unwrap();
        assert_eq!(r.violations, 0);
        let r = check_staircase(3, StaircaseBudget::default()).unwrap();
        assert_eq!(r.checks.len(), 5);
        assert_eq!(r.violations, 0);
        assert!(check_staircase(1, StaircaseBudget::default()).is_err());
    }
}
