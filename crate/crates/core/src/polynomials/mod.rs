//! Truncated symmetric polynomials with exact integer coefficients, and the
//! Schur, stable Grothendieck and dual stable Grothendieck polynomials of a
//! skew shape.
//!
//! A polynomial in `m` variables is stored by its monomial-symmetric
//! coefficients: one entry per exponent partition with at most `m` parts.
//! Besides the variable count it records a degree bound and whether the
//! series it represents has no terms above that bound. Those two facts decide
//! how much an equality between two such objects proves about the underlying
//! symmetric functions, see [`EqualityVerdict`].

mod transfer;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::{ExponentVector, FillingKind};

use transfer::Transfer;

/// A symmetric polynomial in `num_vars` variables, known in every degree up
/// to `degree_bound`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSymPoly {
    num_vars: usize,
    degree_bound: usize,
    /// The represented series has no terms of degree above `degree_bound`.
    complete: bool,
    coeffs: BTreeMap<Partition, BigInt>,
}

/// How much a comparison of truncations says about the full series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Evidence {
    /// The verdict holds for the symmetric functions themselves.
    Exact,
    /// Both series are known in every degree but only in this many variables.
    PartialVars(usize),
    /// Only terms up to `degree` in `vars` variables were compared.
    PartialDegree { degree: usize, vars: usize },
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::Exact => write!(f, "exact"),
            Evidence::PartialVars(k) => write!(f, "partial: {k} variables"),
            Evidence::PartialDegree { degree, vars } => {
                write!(f, "partial: degree <= {degree}, {vars} variables")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EqualityVerdict {
    pub equal: bool,
    pub evidence: Evidence,
}

/// Which generating function of a shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// `s`: semistandard tableaux.
    Schur,
    /// `G`: set-valued tableaux with sign `(-1)^(|T| - cells)`.
    Grothendieck,
    /// `g`: reverse plane partitions weighted by columns.
    DualGrothendieck,
}

impl Family {
    fn filling_kind(self) -> FillingKind {
        match self {
            Family::Schur => FillingKind::Ssyt,
            Family::Grothendieck => FillingKind::SetValued,
            Family::DualGrothendieck => FillingKind::Rpp,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s" | "schur" => Ok(Family::Schur),
            "G" | "grothendieck" => Ok(Family::Grothendieck),
            "g" | "dual" | "dual-grothendieck" => Ok(Family::DualGrothendieck),
            _ => Err(Error::Parse {
                what: "polynomial family",
                input: s.to_string(),
                token: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Schur => "s",
            Family::Grothendieck => "G",
            Family::DualGrothendieck => "g",
        })
    }
}

/// `s_{λ/μ}` in `num_vars` variables.
pub fn schur(shape: &SkewShape, num_vars: usize) -> TruncatedSymPoly {
    let n = shape.num_cells();
    let counts = Transfer::new(FillingKind::Ssyt, shape).expand(num_vars, n, n);
    TruncatedSymPoly::from_counts(num_vars, n, true, counts, |_| 1)
}

/// `g_{λ/μ}` in `num_vars` variables, all degrees.
pub fn dual_grothendieck(shape: &SkewShape, num_vars: usize) -> TruncatedSymPoly {
    dual_grothendieck_truncated(shape, num_vars, shape.num_cells())
}

/// `g_{λ/μ}` in `num_vars` variables, terms of degree at most `degree_bound`.
pub fn dual_grothendieck_truncated(shape: &SkewShape, num_vars: usize, degree_bound: usize) -> TruncatedSymPoly {
    let n = shape.num_cells();
    let d = degree_bound.min(n);
    let counts = Transfer::new(FillingKind::Rpp, shape).expand(num_vars, shape.cols(), d);
    TruncatedSymPoly::from_counts(num_vars, degree_bound, degree_bound >= n, counts, |_| 1)
}

/// `G_{λ/μ}` in `num_vars` variables, terms of degree at most `degree_bound`.
pub fn grothendieck(shape: &SkewShape, num_vars: usize, degree_bound: usize) -> Result<TruncatedSymPoly> {
    let n = shape.num_cells();
    if degree_bound < n {
        return Err(Error::InvalidBound(format!(
            "degree bound {degree_bound} is below the {n} cells of {shape}"
        )));
    }
    let counts = Transfer::new(FillingKind::SetValued, shape).expand(num_vars, n, degree_bound);
    // G of the empty shape is 1; otherwise the series never terminates
    let complete = n == 0;
    Ok(TruncatedSymPoly::from_counts(num_vars, degree_bound, complete, counts, |d| {
        if (d - n).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }))
}

/// A polynomial of the given family, with the family's natural bounds.
pub fn build(family: Family, shape: &SkewShape, num_vars: usize, degree_bound: usize) -> Result<TruncatedSymPoly> {
    match family {
        Family::Schur => Ok(schur(shape, num_vars)),
        Family::DualGrothendieck => Ok(dual_grothendieck_truncated(shape, num_vars, degree_bound)),
        Family::Grothendieck => grothendieck(shape, num_vars, degree_bound),
    }
}

/// Coefficient of the monomial `x^e` (any order of exponents) in the
/// generating function of `shape`, counted directly for that exponent order.
pub fn coefficient(family: Family, shape: &SkewShape, e: &ExponentVector) -> BigInt {
    let count = Transfer::new(family.filling_kind(), shape).count(e.exponents());
    let sign = if family == Family::Grothendieck && (e.degree() + shape.num_cells()) % 2 == 1 {
        -1
    } else {
        1
    };
    BigInt::from(count * sign)
}

impl TruncatedSymPoly {
    fn from_counts(
        num_vars: usize,
        degree_bound: usize,
        complete: bool,
        counts: BTreeMap<Partition, i128>,
        sign: impl Fn(usize) -> i128,
    ) -> Self {
        let coeffs = counts
            .into_iter()
            .map(|(p, c)| {
                let s = sign(p.size());
                (p, BigInt::from(c * s))
            })
            .collect();
        TruncatedSymPoly {
            num_vars,
            degree_bound,
            complete,
            coeffs,
        }
    }

    /// The zero polynomial.
    pub fn zero(num_vars: usize, degree_bound: usize, complete: bool) -> Self {
        TruncatedSymPoly {
            num_vars,
            degree_bound,
            complete,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from monomial-symmetric coefficients. Keys with
    /// more than `num_vars` parts or degree above `degree_bound` are rejected.
    pub fn from_coeffs(
        num_vars: usize,
        degree_bound: usize,
        complete: bool,
        coeffs: impl IntoIterator<Item = (Partition, BigInt)>,
    ) -> Result<Self> {
        let mut p = Self::zero(num_vars, degree_bound, complete);
        for (k, c) in coeffs {
            if k.len() > num_vars || k.size() > degree_bound {
                return Err(Error::InvalidArg(format!(
                    "key {k} does not fit in {num_vars} variables and degree {degree_bound}"
                )));
            }
            p.add_term(k, c);
        }
        Ok(p)
    }

    /// Folds raw monomial terms (one per filling, or already aggregated) into
    /// a symmetric polynomial, checking that the coefficient is constant on
    /// every permutation orbit of exponent vectors in `num_vars` variables.
    pub fn from_exponent_terms(
        num_vars: usize,
        degree_bound: usize,
        complete: bool,
        terms: impl IntoIterator<Item = (ExponentVector, BigInt)>,
    ) -> Result<Self> {
        let mut raw: HashMap<Vec<usize>, BigInt> = HashMap::new();
        for (e, c) in terms {
            if e.num_vars() > num_vars || e.degree() > degree_bound {
                return Err(Error::InvalidArg(format!(
                    "monomial {e} does not fit in {num_vars} variables and degree {degree_bound}"
                )));
            }
            let mut v = e.exponents().to_vec();
            v.resize(num_vars, 0);
            *raw.entry(v).or_insert_with(BigInt::zero) += c;
        }
        raw.retain(|_, c| !c.is_zero());
        let mut p = Self::zero(num_vars, degree_bound, complete);
        let mut keys: BTreeMap<Partition, Vec<usize>> = BTreeMap::new();
        for v in raw.keys() {
            keys.entry(Partition::from_unsorted(v.clone())).or_insert_with(|| v.clone());
        }
        for (key, witness) in keys {
            let c = raw[&witness].clone();
            let mut padded = key.parts().to_vec();
            padded.resize(num_vars, 0);
            for perm in distinct_permutations(&padded) {
                let other = raw.get(&perm).cloned().unwrap_or_else(BigInt::zero);
                if other != c {
                    return Err(Error::NotSymmetric(format!(
                        "coefficient of {} is {c} but coefficient of {} is {other}",
                        ExponentVector::new(witness.clone()),
                        ExponentVector::new(perm)
                    )));
                }
            }
            p.add_term(key, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, key: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    /// True when the series has no terms beyond `degree_bound`.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// True when this object determines the symmetric function: complete in
    /// degree, with at least as many variables as the degree bound.
    pub fn is_exact(&self) -> bool {
        self.complete && self.num_vars >= self.degree_bound
    }

    /// What this truncation pins down about the underlying series.
    pub fn evidence(&self) -> Evidence {
        if self.is_exact() {
            Evidence::Exact
        } else if self.complete {
            Evidence::PartialVars(self.num_vars)
        } else {
            Evidence::PartialDegree {
                degree: self.degree_bound,
                vars: self.num_vars,
            }
        }
    }

    /// Coefficient of the monomial symmetric function `m_key`, i.e. of
    /// `x^key` with exponents in weakly decreasing order.
    pub fn coeff(&self, key: &Partition) -> BigInt {
        self.coeffs.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient of `x^e` for any exponent order.
    pub fn coeff_of(&self, e: &ExponentVector) -> BigInt {
        self.coeff(&e.sorted())
    }

    /// Nonzero terms, by key.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    /// Nonzero terms ordered by degree, then by key in decreasing
    /// lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &BigInt)> {
        let mut t: Vec<_> = self.coeffs.iter().collect();
        t.sort_by(|(a, _), (b, _)| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
        t
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Partition::size).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Partition::size).max()
    }

    /// The terms of degree exactly `d`.
    pub fn homogeneous_part(&self, d: usize) -> TruncatedSymPoly {
        TruncatedSymPoly {
            num_vars: self.num_vars,
            degree_bound: d,
            complete: self.complete || d <= self.degree_bound,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.size() == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sets variables beyond `num_vars` to zero and drops terms above
    /// `degree_bound`.
    pub fn restrict(&self, num_vars: usize, degree_bound: usize) -> TruncatedSymPoly {
        let num_vars = num_vars.min(self.num_vars);
        let bound = degree_bound.min(self.degree_bound);
        let complete = self.complete && degree_bound >= self.degree_bound;
        TruncatedSymPoly {
            num_vars,
            degree_bound: bound,
            complete,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.len() <= num_vars && k.size() <= bound)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sum of two polynomials with the same truncation.
    pub fn add(&self, other: &TruncatedSymPoly) -> Result<TruncatedSymPoly> {
        if self.num_vars != other.num_vars || self.degree_bound != other.degree_bound {
            return Err(Error::IncomparableTruncation(format!(
                "({} vars, degree {}) vs ({} vars, degree {})",
                self.num_vars, self.degree_bound, other.num_vars, other.degree_bound
            )));
        }
        let mut out = self.clone();
        out.complete = self.complete && other.complete;
        for (k, c) in &other.coeffs {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> TruncatedSymPoly {
        let mut out = Self::zero(self.num_vars, self.degree_bound, self.complete);
        if c.is_zero() {
            return out;
        }
        out.coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        out
    }

    /// Compares two truncations on what both know: the smaller variable set
    /// and the smaller degree bound. A difference found there is a genuine
    /// difference of the series, so unequal verdicts are always exact.
    pub fn equal(&self, other: &TruncatedSymPoly) -> EqualityVerdict {
        let m = self.num_vars.min(other.num_vars);
        let d = self.degree_bound.min(other.degree_bound);
        let unequal = EqualityVerdict {
            equal: false,
            evidence: Evidence::Exact,
        };
        // a complete series has nothing above its bound; the other may
        for (a, b) in [(self, other), (other, self)] {
            if a.complete && b.coeffs.keys().any(|k| k.size() > a.degree_bound && k.len() <= m) {
                return unequal;
            }
        }
        let ra = self.restrict(m, d);
        let rb = other.restrict(m, d);
        if ra.coeffs != rb.coeffs {
            return unequal;
        }
        let evidence = if self.complete && other.complete {
            let top = self.degree_bound.max(other.degree_bound);
            let top = top.min(
                self.max_degree()
                    .unwrap_or(0)
                    .max(other.max_degree().unwrap_or(0))
                    .max(d),
            );
            if m >= top {
                Evidence::Exact
            } else {
                Evidence::PartialVars(m)
            }
        } else {
            Evidence::PartialDegree { degree: d, vars: m }
        };
        EqualityVerdict { equal: true, evidence }
    }

    /// Expansion in Schur polynomials `s_ν(x_1..x_m)`. Requires at least as
    /// many variables as the largest degree present, so the expansion is
    /// unique.
    pub fn schur_expand(&self) -> Result<BTreeMap<Partition, BigInt>> {
        let top = self.max_degree().unwrap_or(0);
        if self.num_vars < top {
            return Err(Error::InsufficientVariables(format!(
                "a term of degree {top} needs at least {top} variables, have {}",
                self.num_vars
            )));
        }
        let mut rest = self.coeffs.clone();
        let mut out = BTreeMap::new();
        let mut cache: HashMap<Partition, TruncatedSymPoly> = HashMap::new();
        // the lexicographically largest key of a degree is the leading term of
        // exactly one Schur polynomial still present
        while let Some(key) = rest
            .keys()
            .max_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)))
            .cloned()
        {
            let c = rest[&key].clone();
            let s = cache
                .entry(key.clone())
                .or_insert_with(|| schur(&SkewShape::straight(key.clone()), self.num_vars));
            for (k, v) in &s.coeffs {
                let e = rest.entry(k.clone()).or_insert_with(BigInt::zero);
                *e -= &c * v;
                if e.is_zero() {
                    rest.remove(k);
                }
            }
            out.insert(key, c);
        }
        Ok(out)
    }

    /// `Σ c_ν s_ν` in `num_vars` variables.
    pub fn from_schur_expansion(
        num_vars: usize,
        degree_bound: usize,
        expansion: &BTreeMap<Partition, BigInt>,
    ) -> TruncatedSymPoly {
        let mut out = Self::zero(num_vars, degree_bound, true);
        for (nu, c) in expansion {
            let s = schur(&SkewShape::straight(nu.clone()), num_vars);
            for (k, v) in s.coeffs {
                if k.size() <= degree_bound {
                    out.add_term(k, v * c);
                }
            }
        }
        out
    }

    /// Line-oriented text: a header, then one `coefficient partition` line
    /// per term, in the order of [`TruncatedSymPoly::sorted_terms`].
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "# vars={} degree={} complete={} evidence={}\n",
            self.num_vars,
            self.degree_bound,
            self.complete,
            self.evidence()
        );
        for (k, c) in self.sorted_terms() {
            s.push_str(&format!("{c} {k}\n"));
        }
        s
    }

    /// Parses the output of [`TruncatedSymPoly::to_text`].
    pub fn from_text(text: &str) -> Result<Self> {
        let err = |token: &str| Error::Parse {
            what: "polynomial",
            input: text.lines().next().unwrap_or("").to_string(),
            token: token.to_string(),
        };
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| err(""))?;
        let mut fields: HashMap<&str, &str> = HashMap::new();
        for f in header.trim_start_matches('#').split_whitespace() {
            if let Some((k, v)) = f.split_once('=') {
                fields.insert(k, v);
            }
        }
        let get = |k: &str| fields.get(k).copied().ok_or_else(|| err(k));
        let num_vars = get("vars")?.parse().map_err(|_| err("vars"))?;
        let degree_bound = get("degree")?.parse().map_err(|_| err("degree"))?;
        let complete = get("complete")?.parse().map_err(|_| err("complete"))?;
        let mut terms = Vec::new();
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let (c, k) = line.trim().split_once(' ').ok_or_else(|| err(line))?;
            let c: BigInt = c.parse().map_err(|_| err(c))?;
            let k: Partition = k.parse().map_err(|_| err(k))?;
            terms.push((k, c));
        }
        Self::from_coeffs(num_vars, degree_bound, complete, terms)
    }

    /// A JSON object with the truncation data and the sorted term list;
    /// coefficients are decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(k, c)| json!({ "partition": k.parts(), "coeff": c.to_string() }))
            .collect();
        json!({
            "num_vars": self.num_vars,
            "degree_bound": self.degree_bound,
            "complete": self.complete,
            "exact": self.is_exact(),
            "evidence": self.evidence(),
            "terms": terms,
        })
    }
}

impl fmt::Display for TruncatedSymPoly {
    /// Monomial-symmetric notation, e.g. `m[2,1] + 2 m[1,1,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if !mag.is_one() {
                write!(f, "{mag} ")?;
            }
            write!(f, "m[{}]", k.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedSymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} vars, deg <= {}, {}] {self}", self.num_vars, self.degree_bound, self.evidence())
    }
}

/// Distinct rearrangements of `v`.
fn distinct_permutations(v: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next lexicographic permutation until exhausted
    loop {
        let n = sorted.len();
        let Some(i) = (1..n).rev().find(|&i| sorted[i - 1] < sorted[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| sorted[j] > sorted[i - 1]).expect("pivot exists");
        sorted.swap(i - 1, j);
        sorted[i..].reverse();
        out.push(sorted.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::all_skew_shapes;
    use crate::tableaux::{enumerate_rpp, enumerate_ssyt, enumerate_svt};
    use proptest::prelude::*;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// The same polynomial folded from an enumeration stream, with the orbit check.
    fn from_stream(family: Family, s: &SkewShape, vars: usize, degree: usize) -> TruncatedSymPoly {
        let n = s.num_cells();
        let (fillings, complete): (Vec<_>, bool) = match family {
            Family::Schur => (enumerate_ssyt(s, vars).unwrap().collect(), true),
            Family::DualGrothendieck => (enumerate_rpp(s, vars).unwrap().collect(), true),
            Family::Grothendieck => (enumerate_svt(s, vars, degree).unwrap().collect(), n == 0),
        };
        let terms = fillings.into_iter().map(|f| {
            let sign = if (f.size() - n).is_multiple_of(2) || family != Family::Grothendieck { 1 } else { -1 };
            (f.weight(), int(sign))
        });
        TruncatedSymPoly::from_exponent_terms(vars, degree, complete, terms).unwrap()
    }

    #[test]
    fn schur_examples() {
        let s1 = schur(&shape("1"), 4);
        assert_eq!(s1.len(), 1);
        assert_eq!(s1.coeff(&p(&[1])), int(1));
        let s21 = schur(&shape("2,1"), 3);
        assert_eq!(s21.coeff(&p(&[2, 1])), int(1));
        assert_eq!(s21.coeff(&p(&[1, 1, 1])), int(2));
        let e = schur(&SkewShape::empty(), 3);
        assert_eq!(e.coeff(&Partition::empty()), int(1));
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn dual_grothendieck_examples() {
        let g = dual_grothendieck(&shape("2,1"), 2);
        assert_eq!(g.coeff(&p(&[2, 1])), int(1));
        assert_eq!(g.coeff(&p(&[1, 1])), int(1));
        assert_eq!(g.coeff(&p(&[2])), int(1));
        let g = dual_grothendieck(&shape("3"), 1);
        assert_eq!(g.coeff(&p(&[3])), int(1));
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn grothendieck_examples() {
        let g = grothendieck(&shape("1"), 2, 2).unwrap();
        assert_eq!(g.coeff(&p(&[1])), int(1));
        assert_eq!(g.coeff(&p(&[1, 1])), int(-1));
        let g = grothendieck(&shape("2,2/1"), 4, 4).unwrap();
        assert_eq!(g.coeff(&p(&[2, 1])), int(1));
        assert_eq!(g.coeff(&p(&[1, 1, 1])), int(2));
        assert_eq!(g.coeff(&p(&[2, 1, 1])), int(-3));
        assert!(matches!(grothendieck(&shape("2,1"), 3, 2), Err(Error::InvalidBound(_))));
    }

    #[test]
    fn x1_xn_coefficient_is_rows_minus_one() {
        for n in 1..=6 {
            for s in all_skew_shapes(n).into_iter().filter(SkewShape::is_connected) {
                let g = dual_grothendieck(&s, 2);
                let key = Partition::from_unsorted(vec![s.cols(), 1]);
                assert_eq!(g.coeff(&key), int(s.rows() as i64 - 1), "{s}");
            }
        }
    }

    #[test]
    fn constructors_match_streams_with_orbit_check() {
        for n in 0..=5 {
            for s in all_skew_shapes(n) {
                for vars in 1..=3 {
                    assert_eq!(schur(&s, vars), from_stream(Family::Schur, &s, vars, n), "s {s}");
                    assert_eq!(
                        dual_grothendieck(&s, vars),
                        from_stream(Family::DualGrothendieck, &s, vars, n),
                        "g {s}"
                    );
                    let d = n + 2;
                    assert_eq!(
                        grothendieck(&s, vars, d).unwrap(),
                        from_stream(Family::Grothendieck, &s, vars, d),
                        "G {s}"
                    );
                }
            }
        }
    }

    #[test]
    fn orbit_check_rejects_asymmetric_data() {
        let terms = vec![(ExponentVector::new(vec![2, 1]), int(1))];
        assert!(matches!(
            TruncatedSymPoly::from_exponent_terms(2, 3, true, terms),
            Err(Error::NotSymmetric(_))
        ));
    }

    #[test]
    fn lowest_degree_of_grothendieck_is_schur() {
        for n in 1..=5 {
            for s in all_skew_shapes(n) {
                let big = grothendieck(&s, 4, n + 1).unwrap();
                assert_eq!(big.homogeneous_part(n).coeffs, schur(&s, 4).coeffs, "{s}");
            }
        }
    }

    #[test]
    fn single_row_signs_alternate() {
        for n in 1..=5 {
            let s = SkewShape::straight(p(&[n]));
            let g = grothendieck(&s, 4, n + 2).unwrap();
            for (k, c) in g.terms() {
                let j = k.size() - n;
                assert_eq!(c.is_positive(), j % 2 == 0, "{k} {c}");
            }
        }
    }

    #[test]
    fn equality_evidence() {
        let a = schur(&shape("2"), 2);
        let b = schur(&shape("1,1"), 2);
        assert_eq!(
            a.equal(&b),
            EqualityVerdict {
                equal: false,
                evidence: Evidence::Exact
            }
        );
        let s = shape("3,2,1/1");
        let v = dual_grothendieck(&s, 5).equal(&dual_grothendieck(&s.rotate180(), 5));
        assert_eq!(v.evidence, Evidence::Exact);
        assert!(v.equal);
        let v = dual_grothendieck(&s, 3).equal(&dual_grothendieck(&s.rotate180(), 4));
        assert_eq!(v.evidence, Evidence::PartialVars(3));
        let v = grothendieck(&s, 3, 6).unwrap().equal(&grothendieck(&s.rotate180(), 3, 7).unwrap());
        assert_eq!(v.evidence, Evidence::PartialDegree { degree: 6, vars: 3 });
        assert!(matches!(
            a.add(&schur(&shape("2"), 3)),
            Err(Error::IncomparableTruncation(_))
        ));
    }

    #[test]
    fn complete_series_of_different_degree_are_unequal() {
        let a = dual_grothendieck(&shape("2"), 2);
        let b = dual_grothendieck(&shape("2,1"), 2);
        assert!(!a.equal(&b).equal);
        assert_eq!(a.equal(&b).evidence, Evidence::Exact);
    }

    #[test]
    fn schur_expand_examples() {
        let e = schur(&shape("2,1"), 3).schur_expand().unwrap();
        assert_eq!(e, BTreeMap::from([(p(&[2, 1]), int(1))]));
        let one = schur(&SkewShape::empty(), 2).schur_expand().unwrap();
        assert_eq!(one, BTreeMap::from([(Partition::empty(), int(1))]));
        assert!(matches!(
            schur(&shape("2,1"), 2).schur_expand(),
            Err(Error::InsufficientVariables(_))
        ));
        // s_{2,1/1} = s_2 + s_{1,1}
        let e = schur(&shape("2,1/1"), 2).schur_expand().unwrap();
        assert_eq!(e, BTreeMap::from([(p(&[2]), int(1)), (p(&[1, 1]), int(1))]));
    }

    #[test]
    fn text_round_trip() {
        let g = grothendieck(&shape("2,2/1"), 3, 5).unwrap();
        let text = g.to_text();
        assert!(text.starts_with("# vars=3 degree=5 complete=false"));
        assert_eq!(TruncatedSymPoly::from_text(&text).unwrap(), g);
        assert_eq!(g.to_json()["terms"][0]["coeff"], "1");
    }

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(distinct_permutations(&[1, 0, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_permutations(&[1, 1]).len(), 1);
    }

    proptest! {
        #[test]
        fn schur_expansion_round_trips(cs in prop::collection::vec(-5i64..=5, 7)) {
            let keys = [p(&[3]), p(&[2, 1]), p(&[1, 1, 1]), p(&[2]), p(&[1, 1]), p(&[1]), Partition::empty()];
            let expansion: BTreeMap<Partition, BigInt> = keys
                .iter()
                .cloned()
                .zip(cs.into_iter().map(int))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            let poly = TruncatedSymPoly::from_schur_expansion(3, 3, &expansion);
            prop_assert_eq!(poly.schur_expand().unwrap(), expansion);
        }
    }
}
