//! Partitions, skew shapes and the shape-level invariants used throughout the
//! crate: antipodal rotation, transposition, bottleneck edges and row overlap
//! compositions.
//!
//! Shapes are stored in a canonical form. Empty rows and empty columns are
//! removed, so a shape that is a translate of another (for example `4/2` and
//! `2`) compares equal to it. Rows are numbered from the top and columns from
//! the left, both starting at zero.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ribbons::Ribbon;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!(
                "parts {parts:?} contain an interior zero"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts arbitrary nonnegative integers into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The `i`-th part (zero based), or zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (0..width)
                .map(|c| self.0.iter().take_while(|&&p| p > c).count())
                .collect(),
        )
    }

    /// True when the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.0[i] <= self.0[i])
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        partitions_rec(n, n, &mut current, &mut out);
        out
    }

    /// All partitions contained in `self`, including the empty one and
    /// `self`, in reverse lexicographic order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        subpartitions_rec(self, 0, usize::MAX, &mut current, &mut out);
        out
    }
}

fn partitions_rec(n: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for p in (1..=n.min(max)).rev() {
        current.push(p);
        partitions_rec(n - p, p, current, out);
        current.pop();
    }
}

fn subpartitions_rec(
    outer: &Partition,
    row: usize,
    max: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row == outer.len() {
        out.push(Partition::from_unsorted(current.clone()));
        return;
    }
    let limit = outer.part(row).min(max);
    for p in (0..=limit).rev() {
        current.push(p);
        if p == 0 {
            // all later rows are zero as well
            out.push(Partition::from_unsorted(current.clone()));
        } else {
            subpartitions_rec(outer, row + 1, p, current, out);
        }
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list(s.trim().trim_start_matches('<').trim_end_matches('>'), "partition", s)?;
        Partition::new(parts).map_err(|_| Error::Parse {
            what: "partition",
            input: s.to_string(),
            token: s.trim().to_string(),
        })
    }
}

/// A skew shape `outer / inner` in canonical form: no empty rows, no empty
/// columns, and column zero occupied.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    /// Normalizes `outer / inner`. Fails when `inner` does not fit inside `outer`.
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!(
                "inner partition {inner} does not fit inside {outer}"
            )));
        }
        let spans: Vec<(usize, usize)> = (0..outer.len())
            .map(|j| (inner.part(j), outer.part(j)))
            .filter(|(a, b)| a < b)
            .collect();
        Ok(Self::from_spans(&spans))
    }

    /// Shorthand for `SkewShape::new` on raw part lists.
    pub fn from_parts(outer: &[usize], inner: &[usize]) -> Result<Self> {
        Self::new(Partition::new(outer.to_vec())?, Partition::new(inner.to_vec())?)
    }

    pub fn straight(outer: Partition) -> Self {
        Self::new(outer, Partition::empty()).expect("empty inner partition always fits")
    }

    /// The shape with no cells.
    pub fn empty() -> Self {
        SkewShape {
            outer: Partition::empty(),
            inner: Partition::empty(),
        }
    }

    /// Builds the canonical shape from nonempty row spans `[start, end)` listed
    /// top to bottom, with starts and ends weakly decreasing.
    pub(crate) fn from_spans(spans: &[(usize, usize)]) -> Self {
        if spans.is_empty() {
            return Self::empty();
        }
        // occupied columns; each span is contiguous so collapsing empty
        // columns maps spans to spans
        let width = spans[0].1;
        let mut occupied = vec![false; width];
        for &(a, b) in spans {
            occupied[a..b].iter_mut().for_each(|o| *o = true);
        }
        let mut rank = vec![0usize; width + 1];
        for c in 0..width {
            rank[c + 1] = rank[c] + usize::from(occupied[c]);
        }
        let outer = spans.iter().map(|&(_, b)| rank[b]).collect();
        let inner = spans.iter().map(|&(a, _)| rank[a]).collect();
        SkewShape {
            outer: Partition(outer),
            inner: Partition::from_unsorted(inner),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of rows, `m`.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Number of columns, `n`.
    pub fn cols(&self) -> usize {
        self.outer.part(0)
    }

    pub fn num_cells(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.outer.is_empty()
    }

    /// Occupied columns `[start, end)` of row `j`.
    pub fn row_span(&self, j: usize) -> (usize, usize) {
        (self.inner.part(j), self.outer.part(j))
    }

    /// Occupied rows `[top, bottom)` of column `c`.
    pub fn column_span(&self, c: usize) -> (usize, usize) {
        let top = self.inner.parts().iter().take_while(|&&p| p > c).count();
        let bottom = self.outer.parts().iter().take_while(|&&p| p > c).count();
        (top, bottom)
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        let (a, b) = self.row_span(row);
        row < self.rows() && a <= col && col < b
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows()).flat_map(move |j| {
            let (a, b) = self.row_span(j);
            (a..b).map(move |c| (j, c))
        })
    }

    /// Cells column by column, top to bottom within a column.
    pub fn cells_column_major(&self) -> Vec<(usize, usize)> {
        (0..self.cols())
            .flat_map(|c| {
                let (top, bottom) = self.column_span(c);
                (top..bottom).map(move |r| (r, c))
            })
            .collect()
    }

    /// Connected in the edge-adjacency sense.
    pub fn is_connected(&self) -> bool {
        self.row_overlaps(2).iter().all(|&r| r >= 1)
    }

    /// The shape rotated by 180 degrees.
    pub fn rotate180(&self) -> SkewShape {
        let n = self.cols();
        let spans: Vec<(usize, usize)> = (0..self.rows())
            .rev()
            .map(|j| {
                let (a, b) = self.row_span(j);
                (n - b, n - a)
            })
            .collect();
        Self::from_spans(&spans)
    }

    /// The shape reflected in its main diagonal.
    pub fn transpose(&self) -> SkewShape {
        Self::new(self.outer.conjugate(), self.inner.conjugate())
            .expect("conjugation preserves containment")
    }

    /// `b_i` for `i = 1..=n` (stored zero based): bottleneck edges per column.
    pub fn bottlenecks(&self) -> Vec<usize> {
        self.wide_bottlenecks(1)
    }

    /// Bottlenecks of width `w`, positions `1..=n-w+1` (stored zero based).
    pub fn wide_bottlenecks(&self, w: usize) -> Vec<usize> {
        let n = self.cols();
        if w == 0 || w > n {
            return Vec::new();
        }
        let mut out = vec![0; n - w + 1];
        for j in 0..self.rows().saturating_sub(1) {
            let start = self.inner.part(j);
            if self.outer.part(j + 1) == start + w {
                out[start] += 1;
            }
        }
        out
    }

    /// The `k`-row overlap composition: for each starting row, the number of
    /// columns occupied in all of the `k` consecutive rows.
    pub fn row_overlaps(&self, k: usize) -> Vec<usize> {
        let m = self.rows();
        if k == 0 || k > m {
            return Vec::new();
        }
        (0..=m - k)
            .map(|i| self.outer.part(i + k - 1).saturating_sub(self.inner.part(i)))
            .collect()
    }

    /// Bottleneck data with wide bottlenecks for widths `1..=max_width`.
    pub fn bottleneck_profile(&self, max_width: usize) -> Result<BottleneckProfile> {
        if max_width == 0 || (max_width > self.cols() && !self.is_empty()) {
            return Err(Error::InvalidArg(format!(
                "bottleneck width {max_width} outside 1..={}",
                self.cols()
            )));
        }
        let b = self.bottlenecks();
        let wide = (1..=max_width.min(self.cols()))
            .map(|w| (w, self.wide_bottlenecks(w)))
            .collect();
        let overlaps = (2..=self.rows()).map(|k| (k, self.row_overlaps(k))).collect();
        Ok(BottleneckProfile {
            pair_sums: pair_sums(&b),
            b,
            wide,
            overlaps,
        })
    }

    /// Height of column `c` of the outer partition (`λ'_{c+1}`).
    pub fn outer_column_height(&self, c: usize) -> usize {
        self.column_span(c).1
    }

    /// Height of column `c` of the inner partition (`μ'_{c+1}`).
    pub fn inner_column_height(&self, c: usize) -> usize {
        self.column_span(c).0
    }

    /// The row reading of `self` if it is a ribbon.
    pub fn ribbon_view(&self) -> Option<Ribbon> {
        if self.is_empty() || !self.row_overlaps(2).iter().all(|&r| r == 1) {
            return None;
        }
        let rows = (0..self.rows())
            .rev()
            .map(|j| {
                let (a, b) = self.row_span(j);
                b - a
            })
            .collect();
        Some(Ribbon::new(rows).expect("ribbon rows are positive"))
    }

    /// Syntax accepted by [`SkewShape::from_str`].
    pub fn syntax(&self) -> String {
        self.to_string()
    }
}

/// `f_i = b_i + b_{n-i+1}` for `i = 1..=ceil(n/2)`; the middle entry of an odd
/// length sequence is not doubled.
pub fn pair_sums(b: &[usize]) -> Vec<usize> {
    let n = b.len();
    (0..n.div_ceil(2))
        .map(|i| if i == n - 1 - i { b[i] } else { b[i] + b[n - 1 - i] })
        .collect()
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewShape({self})")
    }
}

impl Serialize for SkewShape {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// Accepts `6,3,1/3,1`, `6,3,1`, `<6,3,1>/<3,1>`, a ribbon row reading
    /// `(6,5,3)` or a ribbon column reading `[1,1,2]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('(') || t.starts_with('[') {
            return Ok(parse_ribbon_reading(t)?.to_ribbon()?.shape());
        }
        let (outer, inner) = match t.split_once('/') {
            Some((o, i)) => (o, i),
            None => (t, ""),
        };
        let strip = |p: &str| p.trim().trim_start_matches('<').trim_end_matches('>').to_string();
        let outer = parse_list(&strip(outer), "shape", s)?;
        let inner = parse_list(&strip(inner), "shape", s)?;
        let bad = |part: &str| Error::Parse {
            what: "shape",
            input: s.to_string(),
            token: part.trim().to_string(),
        };
        let outer_p = Partition::new(outer).map_err(|_| bad(t.split('/').next().unwrap_or(t)))?;
        let inner_p = Partition::new(inner).map_err(|_| bad(t.split('/').nth(1).unwrap_or("")))?;
        SkewShape::new(outer_p, inner_p).map_err(|_| bad(t))
    }
}

/// A ribbon written either by its rows (bottom to top) or by its columns
/// (left to right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RibbonReading {
    Rows(Vec<usize>),
    Columns(Vec<usize>),
}

impl RibbonReading {
    pub fn to_ribbon(&self) -> Result<Ribbon> {
        match self {
            RibbonReading::Rows(rows) => Ribbon::new(rows.clone()),
            RibbonReading::Columns(cols) => Ribbon::from_columns(cols),
        }
    }
}

/// Parses `(6,5,3)` as a row reading and `[1,1,2]` as a column reading.
pub fn parse_ribbon_reading(s: &str) -> Result<RibbonReading> {
    let t = s.trim();
    let err = |token: &str| Error::Parse {
        what: "ribbon",
        input: s.to_string(),
        token: token.to_string(),
    };
    let (body, columns) = if let Some(rest) = t.strip_prefix('(') {
        (rest.strip_suffix(')').ok_or_else(|| err(t))?, false)
    } else if let Some(rest) = t.strip_prefix('[') {
        (rest.strip_suffix(']').ok_or_else(|| err(t))?, true)
    } else {
        return Err(err(t.chars().next().map(String::from).as_deref().unwrap_or("")));
    };
    let parts = parse_list(body, "ribbon", s)?;
    if parts.is_empty() {
        return Err(err(t));
    }
    if parts.contains(&0) {
        return Err(err("0"));
    }
    Ok(if columns {
        RibbonReading::Columns(parts)
    } else {
        RibbonReading::Rows(parts)
    })
}

fn parse_list(s: &str, what: &'static str, input: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim().parse::<usize>().map_err(|_| Error::Parse {
                what,
                input: input.to_string(),
                token: tok.trim().to_string(),
            })
        })
        .collect()
}

/// Bottleneck and row-overlap data of a shape. Positions are stored zero
/// based: `b[0]` is the count for column 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BottleneckProfile {
    pub b: Vec<usize>,
    pub wide: BTreeMap<usize, Vec<usize>>,
    pub pair_sums: Vec<usize>,
    pub overlaps: BTreeMap<usize, Vec<usize>>,
}

impl BottleneckProfile {
    pub fn total(&self) -> usize {
        self.b.iter().sum()
    }

    pub fn sum_of_squares(&self) -> usize {
        self.b.iter().map(|x| x * x).sum()
    }
}

/// Every canonical skew shape with exactly `cells` cells, in a deterministic
/// order. Shapes are built bottom row first; each new row must overlap or
/// touch the span of the row below so no column is left empty.
pub fn all_skew_shapes(cells: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    if cells == 0 {
        out.push(SkewShape::empty());
        return out;
    }
    let mut spans = Vec::new();
    for len in 1..=cells {
        spans.push((0, len));
        grow_shapes(cells - len, &mut spans, &mut out);
        spans.pop();
    }
    out.sort();
    out
}

fn grow_shapes(remaining: usize, spans: &mut Vec<(usize, usize)>, out: &mut Vec<SkewShape>) {
    if remaining == 0 {
        let top_down: Vec<(usize, usize)> = spans.iter().rev().copied().collect();
        let shape = SkewShape::from_spans(&top_down);
        debug_assert_eq!(shape.num_cells(), top_down.iter().map(|(a, b)| b - a).sum::<usize>());
        out.push(shape);
        return;
    }
    let (below_start, below_end) = *spans.last().expect("at least one row");
    for start in below_start..=below_end {
        // end must reach at least the end of the row below
        let min_len = below_end.saturating_sub(start).max(1);
        for len in min_len..=remaining {
            spans.push((start, start + len));
            grow_shapes(remaining - len, spans, out);
            spans.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    /// Independent normalization: drop empty rows and columns of a cell set.
    fn normalize_cells(cells: &[(usize, usize)]) -> Vec<(usize, usize)> {
        let mut rows: Vec<usize> = cells.iter().map(|c| c.0).collect();
        let mut cols: Vec<usize> = cells.iter().map(|c| c.1).collect();
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        let mut out: Vec<(usize, usize)> = cells
            .iter()
            .map(|&(r, c)| {
                (
                    rows.iter().position(|&x| x == r).unwrap(),
                    cols.iter().position(|&x| x == c).unwrap(),
                )
            })
            .collect();
        out.sort_unstable();
        out
    }

    fn raw_cells(outer: &[usize], inner: &[usize]) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for (j, &l) in outer.iter().enumerate() {
            let a = inner.get(j).copied().unwrap_or(0);
            v.extend((a..l).map(|c| (j, c)));
        }
        v
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(SkewShape::from_parts(&[4], &[2]).unwrap(), shape("2"));
        assert_eq!(SkewShape::from_parts(&[3, 2], &[]).unwrap().to_string(), "3,2");
        let s = SkewShape::from_parts(&[3, 3, 1], &[3, 1]).unwrap();
        assert_eq!(s.to_string(), "3,1/1");
        assert_eq!(
            normalize_cells(&raw_cells(&[3, 3, 1], &[3, 1])),
            s.cells().collect::<Vec<_>>()
        );
    }

    #[test]
    fn normalize_rejects_non_containment() {
        assert!(matches!(
            SkewShape::from_parts(&[2, 1], &[3]),
            Err(Error::InvalidShape(_))
        ));
        assert!(SkewShape::from_parts(&[2], &[1, 1]).is_err());
    }

    #[test]
    fn normalize_matches_cell_oracle_and_is_idempotent() {
        for outer in Partition::all_of(6) {
            for inner in outer.subpartitions() {
                let s = SkewShape::new(outer.clone(), inner.clone()).unwrap();
                let expected = normalize_cells(&raw_cells(outer.parts(), inner.parts()));
                let mut got: Vec<_> = s.cells().collect();
                got.sort_unstable();
                assert_eq!(got, expected, "{outer}/{inner}");
                let again = SkewShape::new(s.outer().clone(), s.inner().clone()).unwrap();
                assert_eq!(again, s);
            }
        }
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(shape("6,3,1/3,1").rotate180(), shape("6,5,3/5,3"));
        assert_eq!(shape("2").rotate180(), shape("2"));
        assert_eq!(shape("(6,5,3)").rotate180(), shape("(3,5,6)"));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(shape("5,5,2").transpose(), shape("3,3,2,2,2"));
        assert_eq!(shape("4,3,1/2").transpose(), shape("3,2,2,1/1,1"));
        assert_eq!(shape("1").transpose(), shape("1"));
    }

    #[test]
    fn bottleneck_example() {
        let s = shape("5,5,4,2,2,2/4,2,1,1,1");
        let p = s.bottleneck_profile(2).unwrap();
        assert_eq!(p.b, vec![0, 3, 0, 0, 1]);
        assert_eq!(p.overlaps[&2], vec![1, 2, 1, 1, 1]);
        assert_eq!(p.overlaps[&3], vec![0, 0, 1, 1]);
        assert_eq!(p.overlaps[&4], vec![0, 0, 1]);
        assert_eq!(p.overlaps[&5], vec![0, 0]);
        assert_eq!(p.overlaps[&6], vec![0]);
        assert_eq!(p.wide[&2], vec![0, 0, 1, 0]);
        assert_eq!(s.wide_bottlenecks(3), vec![0, 0, 0]);
        assert_eq!(p.pair_sums, vec![1, 3, 0]);
    }

    #[test]
    fn ribbon_bottlenecks_are_column_lengths_minus_one() {
        let s = shape("[2,3,1]");
        assert_eq!(s.bottlenecks(), vec![1, 2, 0]);
    }

    #[test]
    fn ribbon_view_examples() {
        let r = shape("(6,5,3)").ribbon_view().unwrap();
        assert_eq!(r.rows(), &[6, 5, 3]);
        assert_eq!(r.columns(), vec![1, 1, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1]);
        assert!(shape("2,2").ribbon_view().is_none());
        assert!(shape("3,1/2").ribbon_view().is_none());
    }

    #[test]
    fn parse_errors_name_the_token() {
        match "6,x,1/3".parse::<SkewShape>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("{other:?}"),
        }
        match "(1,0,2)".parse::<SkewShape>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "0"),
            other => panic!("{other:?}"),
        }
        assert!("3,1/4".parse::<SkewShape>().is_err());
        assert!("1,3".parse::<SkewShape>().is_err());
    }

    #[test]
    fn shape_counts_are_stable() {
        // canonical skew shapes by size; checked against a brute-force
        // enumeration of (outer, inner) pairs in the unit test below
        let counts: Vec<usize> = (0..=6).map(|n| all_skew_shapes(n).len()).collect();
        for (n, shapes) in (0..=6).map(|n| (n, all_skew_shapes(n))) {
            let mut dedup = shapes.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), shapes.len(), "duplicates at size {n}");
            assert!(shapes.iter().all(|s| s.num_cells() == n));
        }
        assert_eq!(counts[0], 1);
        assert_eq!(counts[1], 1);
        assert_eq!(counts[2], 3);
    }

    #[test]
    fn enumeration_covers_pairs_of_partitions() {
        // Every normal form with n cells has |outer| <= n * n, so pairs of
        // partitions with outer of size up to that bound cover everything.
        for n in 1..=4 {
            let mut brute = std::collections::BTreeSet::new();
            for size in n..=n * n {
                for outer in Partition::all_of(size) {
                    if outer.len() > n || outer.part(0) > n * n {
                        continue;
                    }
                    for inner in outer.subpartitions() {
                        if outer.size() - inner.size() == n {
                            brute.insert(SkewShape::new(outer.clone(), inner).unwrap());
                        }
                    }
                }
            }
            let direct: std::collections::BTreeSet<_> = all_skew_shapes(n).into_iter().collect();
            assert_eq!(brute, direct, "size {n}");
        }
    }
}
