//! Semistandard tableaux, set-valued tableaux and reverse plane partitions
//! with bounded entries, their weight monomials, and the bijection between
//! reverse plane partitions with entries in {1, 2} and lattice paths.
//!
//! Enumeration is backtracking over cells in column-major order (left column
//! first, top to bottom within a column). Each cell only needs to be checked
//! against its left and upper neighbours, both of which come earlier in that
//! order. Fillings come out in lexicographic order of their flattened cell
//! contents.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::SkewShape;

/// Largest entry an enumerated filling may use; cell contents are bitmasks.
pub const MAX_ENTRY: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FillingKind {
    Ssyt,
    SetValued,
    Rpp,
}

/// A filling of a skew shape. Cell contents are stored as bitmasks (bit `v`
/// set when `v` is in the cell) in column-major cell order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: SkewShape,
    kind: FillingKind,
    entries: Vec<u64>,
}

impl Filling {
    /// Builds a filling from rows of cell sets, top row first, each row
    /// listed left to right. Checks the row and column conditions of `kind`.
    pub fn from_rows(shape: SkewShape, kind: FillingKind, rows: &[Vec<Vec<usize>>]) -> Result<Self> {
        if rows.len() != shape.rows() {
            return Err(Error::InvalidArg(format!(
                "expected {} rows, got {}",
                shape.rows(),
                rows.len()
            )));
        }
        let mut by_cell = std::collections::HashMap::new();
        for (j, row) in rows.iter().enumerate() {
            let (a, b) = shape.row_span(j);
            if row.len() != b - a {
                return Err(Error::InvalidArg(format!(
                    "row {j} needs {} cells, got {}",
                    b - a,
                    row.len()
                )));
            }
            for (k, set) in row.iter().enumerate() {
                let mut mask = 0u64;
                for &v in set {
                    if v == 0 || v > MAX_ENTRY {
                        return Err(Error::InvalidArg(format!("entry {v} outside 1..={MAX_ENTRY}")));
                    }
                    mask |= 1 << v;
                }
                if mask == 0 || (kind != FillingKind::SetValued && set.len() != 1) {
                    return Err(Error::InvalidArg(format!("bad cell contents {set:?} in row {j}")));
                }
                by_cell.insert((j, a + k), mask);
            }
        }
        let entries = shape.cells_column_major().iter().map(|c| by_cell[c]).collect();
        let f = Filling { shape, kind, entries };
        if !f.is_valid() {
            return Err(Error::InvalidArg(format!("filling violates the {kind:?} conditions")));
        }
        Ok(f)
    }

    /// Like [`Filling::from_rows`] with one value per cell.
    pub fn from_values(shape: SkewShape, kind: FillingKind, rows: &[Vec<usize>]) -> Result<Self> {
        let rows: Vec<Vec<Vec<usize>>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| vec![v]).collect())
            .collect();
        Self::from_rows(shape, kind, &rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn kind(&self) -> FillingKind {
        self.kind
    }

    /// The contents of each cell, keyed by `(row, column)`, column-major.
    pub fn cells(&self) -> Vec<((usize, usize), Vec<usize>)> {
        self.shape
            .cells_column_major()
            .into_iter()
            .zip(&self.entries)
            .map(|(c, &m)| (c, mask_values(m)))
            .collect()
    }

    /// Contents of the cell at `(row, col)`, if it belongs to the shape.
    pub fn get(&self, row: usize, col: usize) -> Option<Vec<usize>> {
        let idx = self
            .shape
            .cells_column_major()
            .iter()
            .position(|&c| c == (row, col))?;
        Some(mask_values(self.entries[idx]))
    }

    /// `|T|`: the total number of entries over all cells.
    pub fn size(&self) -> usize {
        self.entries.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// The weight monomial. SSYT and set-valued tableaux count every
    /// occurrence; reverse plane partitions count columns containing a value.
    pub fn weight(&self) -> ExponentVector {
        let mut exps = vec![0usize; MAX_ENTRY];
        match self.kind {
            FillingKind::Ssyt | FillingKind::SetValued => {
                for &m in &self.entries {
                    for v in mask_values(m) {
                        exps[v - 1] += 1;
                    }
                }
            }
            FillingKind::Rpp => {
                let cells = self.shape.cells_column_major();
                let mut column_union = vec![0u64; self.shape.cols()];
                for (&(_, c), &m) in cells.iter().zip(&self.entries) {
                    column_union[c] |= m;
                }
                for u in column_union {
                    for v in mask_values(u) {
                        exps[v - 1] += 1;
                    }
                }
            }
        }
        ExponentVector::new(exps)
    }

    fn is_valid(&self) -> bool {
        let cells = self.shape.cells_column_major();
        let index: std::collections::HashMap<(usize, usize), usize> =
            cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        cells.iter().enumerate().all(|(i, &(r, c))| {
            let lo = lower_bound(self.kind, &self.entries, Neighbours {
                left: c.checked_sub(1).and_then(|c| index.get(&(r, c)).copied()),
                above: r.checked_sub(1).and_then(|r| index.get(&(r, c)).copied()),
            });
            min_value(self.entries[i]) >= lo
        })
    }
}

impl fmt::Display for Filling {
    /// One line per row; set-valued cells are written `{1,2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.cells();
        for j in 0..self.shape.rows() {
            let (a, _) = self.shape.row_span(j);
            let row: Vec<String> = cells
                .iter()
                .filter(|((r, _), _)| *r == j)
                .map(|(_, vs)| {
                    if self.kind == FillingKind::SetValued {
                        let inner: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                        format!("{{{}}}", inner.join(","))
                    } else {
                        vs[0].to_string()
                    }
                })
                .collect();
            if j > 0 {
                writeln!(f)?;
            }
            write!(f, "{}{}", ". ".repeat(a), row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} of {}: {:?}", self.kind, self.shape, self.cells())
    }
}

fn mask_values(m: u64) -> Vec<usize> {
    (1..=MAX_ENTRY).filter(|&v| m & (1 << v) != 0).collect()
}

fn min_value(m: u64) -> usize {
    m.trailing_zeros() as usize
}

fn max_value(m: u64) -> usize {
    63 - m.leading_zeros() as usize
}

#[derive(Clone, Copy, Debug)]
struct Neighbours {
    left: Option<usize>,
    above: Option<usize>,
}

/// Smallest admissible minimum for a cell given its filled neighbours.
fn lower_bound(kind: FillingKind, entries: &[u64], nb: Neighbours) -> usize {
    let left = nb.left.map_or(1, |i| max_value(entries[i]));
    let above = nb.above.map_or(1, |i| match kind {
        FillingKind::Rpp => max_value(entries[i]),
        FillingKind::Ssyt | FillingKind::SetValued => max_value(entries[i]) + 1,
    });
    left.max(above).max(1)
}

/// A monomial `x_1^{e_1} x_2^{e_2} ⋯`, stored densely with trailing zeros removed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<usize>);

impl ExponentVector {
    pub fn new(mut exps: Vec<usize>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        ExponentVector(exps)
    }

    /// Exponent of `x_{i+1}`.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Index of the last variable with a positive exponent, plus one.
    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    /// The exponents sorted into a partition.
    pub fn sorted(&self) -> crate::shapes::Partition {
        crate::shapes::Partition::from_unsorted(self.0.clone())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", terms.join(" "))
        }
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ExponentVector {
    type Err = Error;

    /// Parses `x1^6 x2^6 x3^3 x4`; factors may also be separated by `*`.
    /// The constant monomial is `1`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |token: &str| Error::Parse {
            what: "monomial",
            input: s.to_string(),
            token: token.to_string(),
        };
        let t = s.trim();
        if t == "1" {
            return Ok(ExponentVector::default());
        }
        let mut exps = Vec::new();
        let factors: Vec<&str> = t.split(|c: char| c.is_whitespace() || c == '*').filter(|f| !f.is_empty()).collect();
        if factors.is_empty() {
            return Err(err(t));
        }
        for factor in factors {
            let body = factor.strip_prefix('x').ok_or_else(|| err(factor))?;
            let body = body.strip_prefix('_').unwrap_or(body);
            let (var, exp) = match body.split_once('^') {
                Some((v, e)) => (v, e.parse::<usize>().map_err(|_| err(factor))?),
                None => (body, 1),
            };
            let var: usize = var.parse().map_err(|_| err(factor))?;
            if var == 0 {
                return Err(err(factor));
            }
            if exps.len() < var {
                exps.resize(var, 0);
            }
            exps[var - 1] += exp;
        }
        Ok(ExponentVector::new(exps))
    }
}

/// Static description of a shape for enumeration.
#[derive(Clone, Debug)]
struct Plan {
    shape: SkewShape,
    neighbours: Vec<Neighbours>,
}

impl Plan {
    fn new(shape: &SkewShape) -> Self {
        let cells = shape.cells_column_major();
        let index: std::collections::HashMap<(usize, usize), usize> =
            cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let neighbours = cells
            .iter()
            .map(|&(r, c)| Neighbours {
                left: c.checked_sub(1).and_then(|c| index.get(&(r, c)).copied()),
                above: r.checked_sub(1).and_then(|r| index.get(&(r, c)).copied()),
            })
            .collect();
        Plan {
            shape: shape.clone(),
            neighbours,
        }
    }
}

/// Stream of fillings produced by [`enumerate_ssyt`], [`enumerate_rpp`] and
/// [`enumerate_svt`].
#[derive(Clone, Debug)]
pub struct Fillings {
    plan: Plan,
    kind: FillingKind,
    max_entry: usize,
    max_size: usize,
    entries: Vec<u64>,
    /// `used[i]`: total set size of cells `0..i`
    used: Vec<usize>,
    started: bool,
    done: bool,
}

impl Fillings {
    fn new(shape: &SkewShape, kind: FillingKind, max_entry: usize, max_size: usize) -> Result<Self> {
        if max_entry > MAX_ENTRY {
            return Err(Error::InvalidBound(format!(
                "entries above {MAX_ENTRY} are not supported, got max entry {max_entry}"
            )));
        }
        let n = shape.num_cells();
        Ok(Fillings {
            plan: Plan::new(shape),
            kind,
            max_entry,
            max_size,
            entries: vec![0; n],
            used: vec![0; n + 1],
            started: false,
            done: false,
        })
    }

    fn budget(&self, i: usize) -> usize {
        let remaining_after = self.entries.len() - i - 1;
        self.max_size
            .saturating_sub(self.used[i])
            .saturating_sub(remaining_after)
            .min(self.max_entry)
    }

    fn first(&self, i: usize) -> Option<u64> {
        let lo = lower_bound(self.kind, &self.entries, self.plan.neighbours[i]);
        if lo > self.max_entry || (self.kind == FillingKind::SetValued && self.budget(i) == 0) {
            return None;
        }
        Some(1 << lo)
    }

    fn successor(&self, i: usize) -> Option<u64> {
        let s = self.entries[i];
        let last = max_value(s);
        if self.kind != FillingKind::SetValued {
            return (last < self.max_entry).then(|| 1 << (last + 1));
        }
        // next sorted sequence in lexicographic order
        if (s.count_ones() as usize) < self.budget(i) && last < self.max_entry {
            return Some(s | 1 << (last + 1));
        }
        if last < self.max_entry {
            return Some((s & !(1 << last)) | 1 << (last + 1));
        }
        let rest = s & !(1 << last);
        if rest == 0 {
            return None;
        }
        let prev = max_value(rest);
        Some((rest & !(1 << prev)) | 1 << (prev + 1))
    }

    fn set(&mut self, i: usize, v: u64) {
        self.entries[i] = v;
        self.used[i + 1] = self.used[i] + v.count_ones() as usize;
    }

    /// Depth-first search from cell `i`; `advancing` means the cell before
    /// `i` must move to its next value.
    fn search(&mut self, mut i: usize, mut advancing: bool) -> bool {
        let n = self.entries.len();
        loop {
            if advancing {
                if i == 0 {
                    return false;
                }
                i -= 1;
                if let Some(v) = self.successor(i) {
                    self.set(i, v);
                    i += 1;
                    advancing = false;
                }
            } else {
                if i == n {
                    return true;
                }
                match self.first(i) {
                    Some(v) => {
                        self.set(i, v);
                        i += 1;
                    }
                    None => advancing = true,
                }
            }
        }
    }
}

impl Iterator for Fillings {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        if self.done {
            return None;
        }
        let found = if self.started {
            self.search(self.entries.len(), true)
        } else {
            self.started = true;
            self.search(0, false)
        };
        if !found {
            self.done = true;
            return None;
        }
        Some(Filling {
            shape: self.plan.shape.clone(),
            kind: self.kind,
            entries: self.entries.clone(),
        })
    }
}

/// Every semistandard tableau of `shape` with entries in `1..=max_entry`.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: usize) -> Result<Fillings> {
    Fillings::new(shape, FillingKind::Ssyt, max_entry, usize::MAX)
}

/// Every reverse plane partition of `shape` with entries in `1..=max_entry`.
pub fn enumerate_rpp(shape: &SkewShape, max_entry: usize) -> Result<Fillings> {
    Fillings::new(shape, FillingKind::Rpp, max_entry, usize::MAX)
}

/// Every set-valued tableau of `shape` with entries in `1..=max_entry` and
/// at most `max_size` entries in total.
pub fn enumerate_svt(shape: &SkewShape, max_entry: usize, max_size: usize) -> Result<Fillings> {
    if max_size < shape.num_cells() {
        return Err(Error::InvalidBound(format!(
            "size bound {max_size} is below the {} cells of {shape}",
            shape.num_cells()
        )));
    }
    Fillings::new(shape, FillingKind::SetValued, max_entry, max_size)
}

/// One unit step of a lattice path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Step {
    West,
    South,
}

/// A monotone lattice path through a shape from its upper-right corner to
/// its lower-left corner. Grid lines are numbered from the top (height 0)
/// and from the left (column 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    shape: SkewShape,
    /// height of the horizontal step over column `c`, weakly decreasing in `c`
    heights: Vec<usize>,
}

impl LatticePath {
    /// A path from the heights of its horizontal steps, one per column.
    pub fn from_heights(shape: &SkewShape, heights: Vec<usize>) -> Result<Self> {
        if heights.len() != shape.cols() {
            return Err(Error::InvalidArg(format!(
                "expected {} heights, got {}",
                shape.cols(),
                heights.len()
            )));
        }
        for (c, &h) in heights.iter().enumerate() {
            let (top, bottom) = shape.column_span(c);
            if h < top || h > bottom || (c > 0 && heights[c - 1] < h) {
                return Err(Error::InvalidArg(format!(
                    "height {h} over column {c} leaves the shape or is not monotone"
                )));
            }
        }
        Ok(LatticePath {
            shape: shape.clone(),
            heights,
        })
    }

    /// A path from its steps, starting at the upper-right corner.
    pub fn from_steps(shape: &SkewShape, steps: &[Step]) -> Result<Self> {
        let mut heights = vec![0; shape.cols()];
        let (mut x, mut y) = (shape.cols(), 0usize);
        for &s in steps {
            match s {
                Step::West => {
                    if x == 0 {
                        return Err(Error::InvalidArg("path leaves the shape on the left".into()));
                    }
                    x -= 1;
                    heights[x] = y;
                }
                Step::South => y += 1,
            }
        }
        if x != 0 || y != shape.rows() {
            return Err(Error::InvalidArg("path does not end at the lower-left corner".into()));
        }
        Self::from_heights(shape, heights)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn steps(&self) -> Vec<Step> {
        let mut steps = Vec::with_capacity(self.shape.rows() + self.shape.cols());
        let mut y = 0;
        for c in (0..self.shape.cols()).rev() {
            steps.extend(std::iter::repeat_n(Step::South, self.heights[c] - y));
            y = self.heights[c];
            steps.push(Step::West);
        }
        steps.extend(std::iter::repeat_n(Step::South, self.shape.rows() - y));
        steps
    }

    /// Horizontal steps strictly inside their column, as `(height, column)`.
    pub fn interior_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .heights
            .iter()
            .enumerate()
            .filter(|&(c, &h)| {
                let (top, bottom) = self.shape.column_span(c);
                top < h && h < bottom
            })
            .map(|(c, &h)| (h, c))
            .collect();
        edges.sort_unstable();
        edges
    }
}

/// The lattice path separating the 1's from the 2's of a reverse plane
/// partition with entries in {1, 2}.
pub fn rpp12_to_path(f: &Filling) -> Result<LatticePath> {
    if f.kind != FillingKind::Rpp || f.entries.iter().any(|&m| m & !0b110 != 0) {
        return Err(Error::InvalidArg(
            "expected a reverse plane partition with entries in {1, 2}".into(),
        ));
    }
    let shape = &f.shape;
    let cells = shape.cells_column_major();
    let mut heights: Vec<usize> = (0..shape.cols()).map(|c| shape.column_span(c).0).collect();
    for (&(_, c), &m) in cells.iter().zip(&f.entries) {
        if m == 0b10 {
            heights[c] += 1;
        }
    }
    LatticePath::from_heights(shape, heights)
}

/// Fills the cells above the path with 1 and those below it with 2.
pub fn path_to_rpp12(p: &LatticePath) -> Filling {
    let entries = p
        .shape
        .cells_column_major()
        .iter()
        .map(|&(r, c)| if r < p.heights[c] { 0b10 } else { 0b100 })
        .collect();
    Filling {
        shape: p.shape.clone(),
        kind: FillingKind::Rpp,
        entries,
    }
}

/// Every lattice path through `shape`, found by filtering all step words.
pub fn all_paths(shape: &SkewShape) -> Vec<LatticePath> {
    let (m, n) = (shape.rows(), shape.cols());
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(m + n);
    words_rec(shape, m, n, &mut steps, &mut out);
    out
}

fn words_rec(shape: &SkewShape, south: usize, west: usize, steps: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
    if south == 0 && west == 0 {
        if let Ok(p) = LatticePath::from_steps(shape, steps) {
            out.push(p);
        }
        return;
    }
    if west > 0 {
        steps.push(Step::West);
        words_rec(shape, south, west - 1, steps, out);
        steps.pop();
    }
    if south > 0 {
        steps.push(Step::South);
        words_rec(shape, south - 1, west, steps, out);
        steps.pop();
    }
}
