//! Ribbons (connected skew shapes with no 2x2 square) and their algebra:
//! concatenation, near concatenation, composition, reversal, factorization,
//! and the expansion of a ribbon's dual Grothendieck polynomial into ribbon
//! Schur functions.
//!
//! Internally a ribbon of `N` cells is also a word of `N - 1` joins, read
//! from the bottom-left cell to the top-right one: [`Join::Horizontal`] when
//! the next cell is to the right, [`Join::Vertical`] when it is above.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::shapes::{parse_ribbon_reading, SkewShape};

/// How two consecutive cells of a ribbon are joined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Join {
    Horizontal,
    Vertical,
}

/// A ribbon stored by its row lengths, bottom row first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ribbon {
    rows: Vec<usize>,
}

impl Ribbon {
    /// A ribbon from its row reading. Parts must be positive.
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || rows.contains(&0) {
            return Err(Error::InvalidArg(format!(
                "ribbon rows must be a nonempty list of positive integers, got {rows:?}"
            )));
        }
        Ok(Ribbon { rows })
    }

    /// A ribbon from its column reading, left to right.
    pub fn from_columns(cols: &[usize]) -> Result<Self> {
        if cols.is_empty() || cols.contains(&0) {
            return Err(Error::InvalidArg(format!(
                "ribbon columns must be a nonempty list of positive integers, got {cols:?}"
            )));
        }
        let mut word = Vec::new();
        for (i, &c) in cols.iter().enumerate() {
            if i > 0 {
                word.push(Join::Horizontal);
            }
            word.extend(std::iter::repeat_n(Join::Vertical, c - 1));
        }
        Ok(Self::from_word(&word))
    }

    /// The ribbon whose join word is `word`; it has `word.len() + 1` cells.
    pub fn from_word(word: &[Join]) -> Self {
        let mut rows = vec![1];
        for &j in word {
            match j {
                Join::Horizontal => *rows.last_mut().expect("nonempty") += 1,
                Join::Vertical => rows.push(1),
            }
        }
        Ribbon { rows }
    }

    /// A single row of `n` cells.
    pub fn row(n: usize) -> Self {
        Ribbon { rows: vec![n.max(1)] }
    }

    /// A single column of `n` cells.
    pub fn column(n: usize) -> Self {
        Ribbon { rows: vec![1; n.max(1)] }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<usize> {
        let mut cols = vec![1];
        for j in self.word() {
            match j {
                Join::Vertical => *cols.last_mut().expect("nonempty") += 1,
                Join::Horizontal => cols.push(1),
            }
        }
        cols
    }

    pub fn word(&self) -> Vec<Join> {
        let mut w = Vec::with_capacity(self.size() - 1);
        for (i, &r) in self.rows.iter().enumerate() {
            if i > 0 {
                w.push(Join::Vertical);
            }
            w.extend(std::iter::repeat_n(Join::Horizontal, r - 1));
        }
        w
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_columns(&self) -> usize {
        self.size() - self.rows.len() + 1
    }

    pub fn is_row(&self) -> bool {
        self.rows.len() == 1
    }

    pub fn is_column(&self) -> bool {
        self.rows.iter().all(|&r| r == 1)
    }

    /// The skew shape of the ribbon.
    pub fn shape(&self) -> SkewShape {
        // spans bottom to top: each row starts in the last column of the row below
        let mut spans = Vec::with_capacity(self.rows.len());
        let mut start = 0;
        for &r in &self.rows {
            spans.push((start, start + r));
            start += r - 1;
        }
        spans.reverse();
        SkewShape::from_spans(&spans)
    }

    /// Rotation by 180 degrees: the row reading reversed.
    pub fn reverse(&self) -> Ribbon {
        let mut rows = self.rows.clone();
        rows.reverse();
        Ribbon { rows }
    }

    /// Reflection in the main diagonal.
    pub fn transpose(&self) -> Ribbon {
        let w: Vec<Join> = self
            .word()
            .into_iter()
            .rev()
            .map(|j| match j {
                Join::Horizontal => Join::Vertical,
                Join::Vertical => Join::Horizontal,
            })
            .collect();
        Ribbon::from_word(&w)
    }

    /// `self · other`: the rows of `other` stacked above those of `self`.
    pub fn concat(&self, other: &Ribbon) -> Ribbon {
        let mut rows = self.rows.clone();
        rows.extend_from_slice(&other.rows);
        Ribbon { rows }
    }

    /// `self ⊙ other`: the top row of `self` fused with the bottom row of `other`.
    pub fn near_concat(&self, other: &Ribbon) -> Ribbon {
        let mut rows = self.rows.clone();
        *rows.last_mut().expect("nonempty") += other.rows[0];
        rows.extend_from_slice(&other.rows[1..]);
        Ribbon { rows }
    }

    /// `self ∘ other`: every cell of `self` replaced by a copy of `other`,
    /// near-concatenated along rows of `self` and concatenated between them.
    pub fn compose(&self, other: &Ribbon) -> Ribbon {
        Ribbon::from_word(&compose_words(&self.word(), &other.word()))
    }

    /// All ribbons with `n` cells, i.e. all compositions of `n`, in
    /// lexicographic order of row readings.
    pub fn all_of_size(n: usize) -> Vec<Ribbon> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        compositions_rec(n, &mut current, &mut out);
        out
    }

    /// The column reading as text, `[1,1,2]`.
    pub fn column_string(&self) -> String {
        let cols: Vec<String> = self.columns().iter().map(|c| c.to_string()).collect();
        format!("[{}]", cols.join(","))
    }

    /// Splits `self = outer ∘ inner` with `inner` of size `q`, if possible.
    pub fn split(&self, q: usize) -> Option<(Ribbon, Ribbon)> {
        let n = self.size();
        if q == 0 || !n.is_multiple_of(q) {
            return None;
        }
        let word = self.word();
        let inner = &word[..q - 1];
        let mut outer = Vec::with_capacity(n / q - 1);
        for block in 0..n / q {
            let base = block * q;
            if &word[base..base + q - 1] != inner {
                return None;
            }
            if block + 1 < n / q {
                outer.push(word[base + q - 1]);
            }
        }
        Some((Ribbon::from_word(&outer), Ribbon::from_word(inner)))
    }

    /// All nontrivial ways of writing `self = outer ∘ inner`.
    pub fn nontrivial_splits(&self) -> Vec<(Ribbon, Ribbon)> {
        let n = self.size();
        (2..n)
            .filter_map(|q| self.split(q))
            .filter(|(b, c)| !is_trivial_split(b, c))
            .collect()
    }

    pub fn has_nontrivial_factorization(&self) -> bool {
        !self.nontrivial_splits().is_empty()
    }

    /// The unique irreducible factorization.
    pub fn irreducible_factorization(&self) -> Factorization {
        let mut factors = Vec::new();
        split_fully(self, &mut factors);
        Factorization {
            factors: merge_trivial_neighbours(factors),
        }
    }

    /// Schur equivalence: irreducible factorizations of equal length whose
    /// factors agree up to reversal.
    pub fn schur_equivalent(&self, other: &Ribbon) -> bool {
        let a = self.irreducible_factorization();
        let b = other.irreducible_factorization();
        a.factors.len() == b.factors.len()
            && a
                .factors
                .iter()
                .zip(&b.factors)
                .all(|(x, y)| x == y || *x == y.reverse())
    }

    /// Equality of dual stable Grothendieck polynomials: only a ribbon and
    /// its reverse share one.
    pub fn g_equivalent(&self, other: &Ribbon) -> bool {
        self == other || *self == other.reverse()
    }

    /// Coefficient of `s_c` in the ribbon Schur expansion of `g_self`:
    /// `∏ C(α_i - 1, α_i - γ_i)` over column readings, zero unless
    /// `c` has the same number of columns and `c ≤ self` columnwise.
    pub fn g_schur_coefficient(&self, c: &Ribbon) -> BigUint {
        let a = self.columns();
        let g = c.columns();
        if a.len() != g.len() || a.iter().zip(&g).any(|(x, y)| y > x) {
            return BigUint::ZERO;
        }
        a.iter()
            .zip(&g)
            .map(|(&x, &y)| num_integer::binomial(BigUint::from(x - 1), BigUint::from(x - y)))
            .product()
    }

    /// Every ribbon `γ ≤ self` with its coefficient in the ribbon Schur
    /// expansion of `g_self`, ordered by descending size then column reading.
    pub fn g_schur_expansion(&self) -> Vec<(Ribbon, BigUint)> {
        let a = self.columns();
        let mut out = Vec::new();
        let mut g = vec![1usize; a.len()];
        loop {
            let r = Ribbon::from_columns(&g).expect("positive columns");
            let coeff = self.g_schur_coefficient(&r);
            out.push((r, coeff));
            // odometer over 1 <= g_i <= a_i
            let mut i = g.len();
            loop {
                if i == 0 {
                    out.sort_by(|(x, _), (y, _)| {
                        y.size().cmp(&x.size()).then_with(|| y.columns().cmp(&x.columns()))
                    });
                    return out;
                }
                i -= 1;
                if g[i] < a[i] {
                    g[i] += 1;
                    break;
                }
                g[i] = 1;
            }
        }
    }
}

fn compositions_rec(n: usize, current: &mut Vec<usize>, out: &mut Vec<Ribbon>) {
    if n == 0 {
        if !current.is_empty() {
            out.push(Ribbon { rows: current.clone() });
        }
        return;
    }
    for p in 1..=n {
        current.push(p);
        compositions_rec(n - p, current, out);
        current.pop();
    }
}

/// Word of `outer ∘ inner`: copies of the inner word separated by the letters
/// of the outer word.
fn compose_words(outer: &[Join], inner: &[Join]) -> Vec<Join> {
    let mut w = Vec::with_capacity((outer.len() + 1) * (inner.len() + 1) - 1);
    w.extend_from_slice(inner);
    for &x in outer {
        w.push(x);
        w.extend_from_slice(inner);
    }
    w
}

/// A factorization `outer ∘ inner` is trivial when one side is a single cell,
/// or both are single rows, or both are single columns.
pub fn is_trivial_split(outer: &Ribbon, inner: &Ribbon) -> bool {
    outer.size() == 1
        || inner.size() == 1
        || (outer.is_row() && inner.is_row())
        || (outer.is_column() && inner.is_column())
}

fn split_fully(r: &Ribbon, out: &mut Vec<Ribbon>) {
    let n = r.size();
    let found = (2..n)
        .filter_map(|q| r.split(q))
        .find(|(b, c)| !is_trivial_split(b, c));
    match found {
        Some((outer, inner)) => {
            split_fully(&outer, out);
            split_fully(&inner, out);
        }
        None => out.push(r.clone()),
    }
}

/// Adjacent rows compose to a row, adjacent columns to a column.
fn merge_trivial_neighbours(factors: Vec<Ribbon>) -> Vec<Ribbon> {
    let mut out: Vec<Ribbon> = Vec::with_capacity(factors.len());
    for f in factors {
        if let Some(last) = out.last_mut() {
            if last.is_row() && f.is_row() {
                *last = Ribbon::row(last.size() * f.size());
                continue;
            }
            if last.is_column() && f.is_column() {
                *last = Ribbon::column(last.size() * f.size());
                continue;
            }
        }
        out.push(f);
    }
    out
}

/// A ribbon written as `f_1 ∘ f_2 ∘ … ∘ f_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<Ribbon>,
}

impl Factorization {
    pub fn new(factors: Vec<Ribbon>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidArg("a factorization needs at least one factor".into()));
        }
        Ok(Factorization { factors })
    }

    pub fn factors(&self) -> &[Ribbon] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Composes the factors back into a ribbon.
    pub fn compose(&self) -> Ribbon {
        let mut it = self.factors.iter();
        let first = it.next().expect("nonempty").clone();
        it.fold(first, |acc, f| acc.compose(f))
    }

    /// No factor has a nontrivial factorization and no adjacent pair is a
    /// trivial factorization.
    pub fn is_irreducible(&self) -> bool {
        self.factors.iter().all(|f| !f.has_nontrivial_factorization())
            && self.factors.windows(2).all(|w| !is_trivial_split(&w[0], &w[1]))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(" ∘ "))
    }
}

impl fmt::Display for Ribbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", rows.join(","))
    }
}

impl fmt::Debug for Ribbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ribbon{self}")
    }
}

impl serde::Serialize for Ribbon {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl FromStr for Ribbon {
    type Err = Error;

    /// Accepts a row reading `(6,5,3)`, a column reading `[1,1,2]`, or any
    /// shape syntax describing a ribbon.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('(') || t.starts_with('[') {
            return parse_ribbon_reading(t)?.to_ribbon();
        }
        let shape: SkewShape = t.parse()?;
        shape.ribbon_view().ok_or_else(|| Error::Parse {
            what: "ribbon",
            input: s.to_string(),
            token: t.to_string(),
        })
    }
}

/// Convenience for tests and examples: the ribbon with the given row reading.
pub fn ribbon(rows: &[usize]) -> Ribbon {
    Ribbon::new(rows.to_vec()).expect("positive parts")
}
