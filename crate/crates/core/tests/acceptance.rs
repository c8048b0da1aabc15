//! End-to-end acceptance checks. Prints one line per criterion.
//!
//! A criterion that fails in a way already analysed and recorded is
//! reported as `FAIL (recorded)` and does not fail the run; any other
//! failure does.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use skewgroth::equivalence::formulas::{self, two_var_table, Formula};
use skewgroth::equivalence::search::{check_staircase, staircase, StaircaseBudget};
use skewgroth::equivalence::{self, filter_witness, necessary_filter, obstructions, Obstruction};
use skewgroth::polynomials::{dual_grothendieck, dual_grothendieck_truncated, grothendieck, schur, TruncatedSymPoly};
use skewgroth::shapes::all_skew_shapes;
use skewgroth::tableaux::{enumerate_rpp, path_to_rpp12, rpp12_to_path};
use skewgroth::{coefficient, Evidence, ExponentVector, Family, Ribbon, SkewShape};

enum Status {
    Pass,
    /// Holds on connected shapes and fails on some disconnected ones.
    ConnectedOnly,
    Fail,
    /// Fails for a reason that has been analysed; see the detail.
    Recorded,
}

struct Outcome {
    status: Status,
    detail: String,
}

impl Outcome {
    fn check(ok: bool, detail: String) -> Self {
        Outcome {
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        }
    }
}

fn shape(s: &str) -> SkewShape {
    s.parse().expect("valid shape")
}

fn rotation() -> Outcome {
    let mut checked = 0;
    for cells in 1..=7 {
        for s in all_skew_shapes(cells) {
            let r = s.rotate180();
            let g = dual_grothendieck(&s, cells).equal(&dual_grothendieck(&r, cells));
            if !g.equal || g.evidence != Evidence::Exact {
                return Outcome::check(false, format!("g differs for {s}"));
            }
            let big = |x: &SkewShape| grothendieck(x, 4, cells + 2).expect("bound covers cells");
            if !big(&s).equal(&big(&r)).equal {
                return Outcome::check(false, format!("G differs for {s}"));
            }
            checked += 1;
        }
    }
    Outcome::check(
        true,
        format!("{checked} shapes up to 7 cells: g exact, G to degree cells+2 in 4 variables"),
    )
}

fn ribbon_theorem() -> Outcome {
    let mut pairs = 0;
    for size in 1..=7 {
        let ribbons = Ribbon::all_of_size(size);
        let g: Vec<TruncatedSymPoly> = ribbons.iter().map(|r| dual_grothendieck(&r.shape(), size)).collect();
        for i in 0..ribbons.len() {
            for j in i + 1..ribbons.len() {
                pairs += 1;
                let v = g[i].equal(&g[j]);
                let expected = ribbons[i] == ribbons[j].reverse();
                if v.equal != expected || v.evidence != Evidence::Exact {
                    return Outcome::check(false, format!("{} vs {}", ribbons[i], ribbons[j]));
                }
            }
        }
    }
    Outcome::check(true, format!("{pairs} unordered pairs of distinct ribbons up to size 7, zero exceptions"))
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// Column readings `γ` with `1 <= γ_i <= α_i`.
fn below(alpha: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &a in alpha {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=a).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

fn ribbon_expansion() -> Outcome {
    let mut checked = 0;
    for size in 1..=6 {
        for r in Ribbon::all_of_size(size) {
            let alpha = r.columns();
            let mut sum: BTreeMap<_, BigInt> = BTreeMap::new();
            for gamma in below(&alpha) {
                let c: BigInt = alpha.iter().zip(&gamma).map(|(&a, &g)| binomial(a - 1, a - g)).product();
                let s = schur(&Ribbon::from_columns(&gamma).expect("positive columns").shape(), size);
                for (k, v) in s.terms() {
                    *sum.entry(k.clone()).or_default() += v * &c;
                }
            }
            let expected = TruncatedSymPoly::from_coeffs(size, size, true, sum).expect("fits");
            if !dual_grothendieck(&r.shape(), size).equal(&expected).equal {
                return Outcome::check(false, format!("{r}"));
            }
            checked += 1;
        }
    }
    Outcome::check(true, format!("{checked} ribbons up to size 6, exact in size-many variables"))
}

fn two_variable() -> Outcome {
    let (mut checked, mut shapes, mut skipped, mut skipped_bad) = (0, 0, 0, 0);
    let mut example = None;
    for cells in 1..=9 {
        for s in all_skew_shapes(cells) {
            let n = s.cols();
            let table = two_var_table(&s);
            let values = |r: usize| {
                (
                    formulas::coeff_two_var(&s, r).expect("r in range"),
                    table.get(&(r, n + 1 - r)).copied().unwrap_or(0),
                )
            };
            let agree = |r: usize| values(r).0 == values(r).1;
            if !s.is_connected() {
                skipped += 1;
                if let Some(r) = (1..=n).find(|&r| !agree(r)) {
                    skipped_bad += 1;
                    if example.is_none() {
                        let (cf, bf) = values(r);
                        example = Some(format!(", e.g. {s} at r = {r}: {cf} vs {bf}"));
                    }
                }
                continue;
            }
            shapes += 1;
            for r in 1..=n {
                checked += 1;
                if !agree(r) {
                    return Outcome::check(false, format!("{s}, r = {r}"));
                }
            }
        }
    }
    Outcome {
        status: if skipped_bad == 0 { Status::Pass } else { Status::ConnectedOnly },
        detail: format!(
            "{checked} coefficients on {shapes} connected shapes up to 9 cells agree; \
             {skipped_bad} of {skipped} disconnected shapes differ{}",
            example.unwrap_or_default()
        ),
    }
}

fn closed_forms() -> Outcome {
    let sweep = formulas::sweep(9, SkewShape::is_connected, |f| !matches!(f, Formula::TwoVar(_)));
    let failing = |f: Formula| sweep.discrepancies.iter().filter(|r| r.formula == f).count();
    let square = failing(Formula::SquareTimesN);
    let cube = failing(Formula::CubeTimesN);
    let cube_m1 = failing(Formula::CubeTimesNMinusOne);
    if square > 0 || cube > 0 {
        return Outcome::check(false, format!("x1^2 x2^n: {square} failures, x1^3 x2^n: {cube} failures"));
    }
    // the x1^3 x2^(n-1) closed form disagrees; check that the disagreement is
    // the analysed one and that the adjusted form is exact
    let smallest = sweep.first(|f| f == Formula::CubeTimesNMinusOne);
    let smallest_wide = sweep
        .discrepancies
        .iter()
        .find(|r| r.formula == Formula::CubeTimesNMinusOne && r.shape.cols() >= 3);
    let adjusted_ok = (3..=9).all(|cells| {
        all_skew_shapes(cells).iter().filter(|s| s.is_connected() && s.cols() >= 3).all(|s| {
            formulas::coeff_x1cube_x2nm1_adjusted(s).expect("3+ columns")
                == formulas::brute_force_two_var(s, 3, s.cols() - 1)
        })
    });
    let as_recorded = smallest.map(|r| (r.shape.to_string(), r.closed_form, r.brute_force))
        == Some(("2,2".to_string(), 1, 0))
        && smallest_wide.map(|r| (r.shape.to_string(), r.closed_form, r.brute_force))
            == Some(("3,2,2/1,1".to_string(), 2, 0))
        && adjusted_ok;
    let detail = format!(
        "x1^2 x2^n and x1^3 x2^n exact on all connected shapes up to 9 cells; \
         x1^3 x2^(n-1) disagrees on {cube_m1} shapes, minimal counterexamples 2,2 (1 vs 0) and, \
         with 3+ columns, 3,2,2/1,1 (2 vs 0); subtracting sum_(i=2..n-1) b_i(b_i-1) matches every \
         connected shape with 3+ columns: {adjusted_ok}"
    );
    match (cube_m1, as_recorded) {
        (0, _) => Outcome::check(true, "all three closed forms exact on connected shapes up to 9 cells".into()),
        (_, true) => Outcome {
            status: Status::Recorded,
            detail,
        },
        (_, false) => Outcome::check(false, detail),
    }
}

fn rsw_pair() -> Outcome {
    let a = shape("6,5,5,3,2,2/4,2,1,1");
    let b = shape("6,5,5,4,4,2/4,3,3,1");
    let witness = filter_witness(&a, &b);
    let expected = Obstruction::PairSum { i: 2, j: 5, a: 2, b: 1 };
    let schur_agree = (1..=5).all(|k| schur(&a, k).equal(&schur(&b, k)).equal);
    let cells = a.num_cells();
    let exact = schur(&a, cells).equal(&schur(&b, cells));
    Outcome::check(
        !necessary_filter(&a, &b) && witness.as_ref() == Some(&expected) && schur_agree && exact.equal,
        format!(
            "filter rejects with {}; s agrees in 1..=5 variables; also s agrees in {cells} variables ({})",
            witness.map(|w| w.to_string()).unwrap_or_default(),
            exact.evidence
        ),
    )
}

fn g_not_big_g() -> Outcome {
    let a = shape("8,6,4,2/4,1");
    let b = shape("8,6,4,2/3,2");
    let e: ExponentVector = "x1^6 x2^6 x3^3 x4".parse().expect("monomial");
    let reordered: ExponentVector = "x1 x2^3 x3^6 x4^6".parse().expect("monomial");
    let ca = coefficient(Family::Grothendieck, &a, &e);
    let cb = coefficient(Family::Grothendieck, &b, &e);
    let symmetric = coefficient(Family::Grothendieck, &a, &reordered) == ca
        && coefficient(Family::Grothendieck, &b, &reordered) == cb;
    let g5 = equivalence::g_equivalent(&a, &b, 5).verdict;
    let g_full = equivalence::g_equivalent(&a, &b, a.num_cells()).verdict;
    Outcome::check(
        ca == BigInt::from(-353)
            && cb == BigInt::from(-354)
            && symmetric
            && g5.equal
            && g5.evidence == Evidence::PartialVars(5),
        format!(
            "G coefficients {ca} and {cb}; g equal in 5 variables ({}); \
             beyond the target, g equal in {} variables ({})",
            g5.evidence,
            a.num_cells(),
            g_full.evidence
        ),
    )
}

fn big_g_not_g() -> Outcome {
    let a = shape("8,6,4,2/3,3,1");
    let b = shape("8,6,4,2/5,1,1");
    let all: Vec<String> = obstructions(Family::DualGrothendieck, &a, &b).iter().map(ToString::to_string).collect();
    let has_witness = all.iter().any(|o| o == "b4+b5 = 1 vs 0");
    let c = equivalence::G_equivalent(&a, &b, 4, a.num_cells() + 1).expect("bound covers cells");
    Outcome::check(
        !necessary_filter(&a, &b) && has_witness && c.verdict.equal,
        format!(
            "filter rejects with {}; G equal ({})",
            all.join(", "),
            c.verdict.evidence
        ),
    )
}

fn staircases() -> Outcome {
    let mut checked = 0;
    for n in 2..=4 {
        let outer = staircase(n);
        for mu in outer.subpartitions() {
            let s = SkewShape::new(outer.clone(), mu).expect("inside");
            let t = s.transpose();
            let cells = s.num_cells();
            let m = cells.max(1);
            let g = dual_grothendieck(&s, m).equal(&dual_grothendieck(&t, m));
            let big = grothendieck(&s, 4, cells + 2)
                .expect("bound")
                .equal(&grothendieck(&t, 4, cells + 2).expect("bound"));
            if !(g.equal && g.evidence == Evidence::Exact && big.equal) {
                return Outcome::check(false, format!("violation at {s}"));
            }
            checked += 1;
        }
        let report = check_staircase(n, StaircaseBudget::default()).expect("n >= 2");
        if report.violations != 0 {
            return Outcome::check(false, format!("check_staircase reports violations for n = {n}"));
        }
    }
    Outcome::check(
        true,
        format!("{checked} inner partitions for n = 2..=4: g exact and G to degree cells+2 in 4 variables, zero violations"),
    )
}

fn lattice_paths() -> Outcome {
    let mut checked = 0;
    for cells in 1..=8 {
        for s in all_skew_shapes(cells) {
            for f in enumerate_rpp(&s, 2).expect("bound 2") {
                let path = match rpp12_to_path(&f) {
                    Ok(p) => p,
                    Err(e) => return Outcome::check(false, format!("{s}: {e}")),
                };
                if path_to_rpp12(&path) != f {
                    return Outcome::check(false, format!("round trip fails on {s}:\n{f}"));
                }
                let mixed = (0..s.cols())
                    .filter(|&c| {
                        let (top, bottom) = s.column_span(c);
                        let values: Vec<Vec<usize>> = (top..bottom).filter_map(|r| f.get(r, c)).collect();
                        values.iter().any(|v| v == &[1]) && values.iter().any(|v| v == &[2])
                    })
                    .count();
                if mixed != path.interior_edges().len() {
                    return Outcome::check(false, format!("edge count differs on {s}:\n{f}"));
                }
                checked += 1;
            }
        }
    }
    Outcome::check(true, format!("{checked} plane partitions with entries 1, 2 on shapes up to 8 cells"))
}

fn degree_n_plus_one() -> Outcome {
    type Key = (usize, usize, Vec<i64>);
    let mut connected: BTreeMap<Key, Vec<(SkewShape, TruncatedSymPoly)>> = BTreeMap::new();
    let mut disconnected: BTreeMap<Key, Vec<(SkewShape, TruncatedSymPoly)>> = BTreeMap::new();
    for cells in 1..=8 {
        for s in all_skew_shapes(cells) {
            let n = s.cols();
            let t = two_var_table(&s);
            let v = (0..=n + 1).map(|r| t.get(&(r, n + 1 - r)).copied().unwrap_or(0)).collect();
            let top = dual_grothendieck_truncated(&s, n + 1, n + 1).homogeneous_part(n + 1);
            let bucket = if s.is_connected() { &mut connected } else { &mut disconnected };
            bucket.entry((s.rows(), n, v)).or_default().push((s, top));
        }
    }
    let violations = |groups: &BTreeMap<Key, Vec<(SkewShape, TruncatedSymPoly)>>| {
        let mut pairs = 0;
        let mut bad = Vec::new();
        for members in groups.values() {
            for i in 0..members.len() {
                for j in i + 1..members.len() {
                    pairs += 1;
                    if members[i].1.terms().ne(members[j].1.terms()) {
                        bad.push((members[i].0.clone(), members[j].0.clone()));
                    }
                }
            }
        }
        (pairs, bad)
    };
    let (pairs, bad) = violations(&connected);
    let (_, bad_disconnected) = violations(&disconnected);
    let example = bad_disconnected
        .first()
        .map(|(a, b)| format!(", e.g. {a} vs {b}"))
        .unwrap_or_default();
    let status = match (bad.is_empty(), bad_disconnected.is_empty()) {
        (false, _) => Status::Fail,
        (true, true) => Status::Pass,
        (true, false) => Status::ConnectedOnly,
    };
    Outcome {
        status,
        detail: format!(
            "{pairs} pairs of connected shapes up to 8 cells with equal rows and two-variable \
             degree-(n+1) coefficients, {} exceptions; among disconnected shapes {} pairs differ{example}",
            bad.len(),
            bad_disconnected.len()
        ),
    }
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, "rotation invariance", rotation),
        (2, "ribbon g equal iff equal or reversed", ribbon_theorem),
        (3, "ribbon Schur expansion", ribbon_expansion),
        (4, "two-variable coefficient formula", two_variable),
        (5, "degree n+2 closed forms", closed_forms),
        (6, "Schur-equivalent pair separated by bottlenecks", rsw_pair),
        (7, "g-equivalent pair with different G", g_not_big_g),
        (8, "G-agreeing pair with different g", big_g_not_g),
        (9, "staircase shapes against their transposes", staircases),
        (10, "lattice-path bijection", lattice_paths),
        (11, "degree-(n+1) coefficients", degree_n_plus_one),
    ];
    let mut failed = false;
    for (n, name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let status = match outcome.status {
            Status::Pass => "PASS",
            Status::ConnectedOnly => "PASS on connected shapes, FAIL on disconnected (recorded)",
            Status::Recorded => "FAIL (recorded)",
            Status::Fail => {
                failed = true;
                "FAIL"
            }
        };
        println!(
            "criterion {n:>2} [{name}]: {status} in {:.1}s: {}",
            start.elapsed().as_secs_f64(),
            outcome.detail
        );
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
