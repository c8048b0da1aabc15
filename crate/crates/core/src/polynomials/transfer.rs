//! Exact-weight counting of fillings by a transfer method over the values
//! 1, 2, 3, ...
//!
//! After processing the values up to `t`, the cells holding only values
//! `<= t` form a prefix `[a_j, e_j)` of every row `j`. For reverse plane
//! partitions and semistandard tableaux that prefix is the whole state. For
//! set-valued tableaux a row may also have one "open" cell at column `e_j`
//! that already holds a value `<= t` and will receive larger ones. Processing
//! value `t + 1` moves each row to a new state and contributes the number of
//! occurrences of `t + 1` (columns containing it, for plane partitions) to
//! the weight.
//!
//! Counting the fillings of weight `x^α` is a walk through these states with
//! step weights `α_1, α_2, ...`. Sharing walk prefixes between exponent
//! partitions gives every coefficient of a truncated symmetric polynomial in
//! one depth-first pass.

use std::collections::{BTreeMap, HashMap};

use crate::shapes::{Partition, SkewShape};
use crate::tableaux::FillingKind;

/// Row states packed one byte per row. For set-valued tableaux the byte is
/// `2 * e_j + open`.
type State = Vec<u8>;

type Layer = HashMap<State, i128>;

#[derive(Clone, Debug)]
pub(crate) struct Transfer {
    kind: FillingKind,
    starts: Vec<usize>,
    ends: Vec<usize>,
}

impl Transfer {
    pub(crate) fn new(kind: FillingKind, shape: &SkewShape) -> Self {
        assert!(shape.cols() <= 64, "shapes wider than 64 columns are not supported");
        let (starts, ends) = (0..shape.rows()).map(|j| shape.row_span(j)).unzip();
        Transfer { kind, starts, ends }
    }

    fn set_valued(&self) -> bool {
        self.kind == FillingKind::SetValued
    }

    fn encode(&self, e: usize, open: bool) -> u8 {
        if self.set_valued() {
            (2 * e + usize::from(open)) as u8
        } else {
            e as u8
        }
    }

    fn decode(&self, b: u8) -> (usize, bool) {
        if self.set_valued() {
            ((b / 2) as usize, b % 2 == 1)
        } else {
            (b as usize, false)
        }
    }

    fn initial(&self) -> State {
        self.starts.iter().map(|&a| self.encode(a, false)).collect()
    }

    fn terminal(&self) -> State {
        self.ends.iter().map(|&b| self.encode(b, false)).collect()
    }

    /// Lower bound on the total weight still needed to reach the terminal
    /// state: unfilled cells, or columns with unfilled cells for plane
    /// partitions.
    fn remaining(&self, s: &State) -> usize {
        match self.kind {
            FillingKind::Rpp => {
                let mut mask = 0u64;
                for (j, &b) in s.iter().enumerate() {
                    mask |= interval_mask(b as usize, self.ends[j]);
                }
                mask.count_ones() as usize
            }
            // an open cell still needs its larger values, so it counts too
            _ => s
                .iter()
                .enumerate()
                .map(|(j, &b)| self.ends[j] - self.decode(b).0)
                .sum(),
        }
    }

    /// Calls `emit(next, w)` for every successor of `s` with weight `w <= max_w`.
    fn step(&self, s: &State, max_w: usize, emit: &mut impl FnMut(&State, usize)) {
        let mut next = s.clone();
        match self.kind {
            FillingKind::Ssyt => self.step_ssyt(s, 0, 0, max_w, &mut next, emit),
            FillingKind::Rpp => self.step_rpp(s, 0, 0, max_w, &mut next, emit),
            FillingKind::SetValued => self.step_svt(s, 0, 0, max_w, &mut next, emit),
        }
    }

    /// Column bound for cells receiving the new value in row `j`: the cell
    /// above must already hold only smaller values.
    fn strict_cap(&self, old: &State, j: usize) -> usize {
        if j == 0 {
            self.ends[0]
        } else {
            self.ends[j].min(self.decode(old[j - 1]).0)
        }
    }

    fn step_ssyt(
        &self,
        old: &State,
        j: usize,
        w: usize,
        max_w: usize,
        next: &mut State,
        emit: &mut impl FnMut(&State, usize),
    ) {
        if j == old.len() {
            emit(next, w);
            return;
        }
        let e = old[j] as usize;
        let cap = self.strict_cap(old, j).max(e);
        for e2 in e..=cap.min(e + max_w - w) {
            next[j] = e2 as u8;
            self.step_ssyt(old, j + 1, w + e2 - e, max_w, next, emit);
        }
        next[j] = old[j];
    }

    fn step_rpp(
        &self,
        old: &State,
        j: usize,
        mask: u64,
        max_w: usize,
        next: &mut State,
        emit: &mut impl FnMut(&State, usize),
    ) {
        if j == old.len() {
            emit(next, mask.count_ones() as usize);
            return;
        }
        let e = old[j] as usize;
        // weak columns: bounded by the new prefix of the row above
        let cap = if j == 0 {
            self.ends[0]
        } else {
            self.ends[j].min(next[j - 1] as usize)
        }
        .max(e);
        for e2 in e..=cap {
            let m = mask | interval_mask(e, e2);
            if m.count_ones() as usize > max_w {
                break;
            }
            next[j] = e2 as u8;
            self.step_rpp(old, j + 1, m, max_w, next, emit);
        }
        next[j] = old[j];
    }

    fn step_svt(
        &self,
        old: &State,
        j: usize,
        w: usize,
        max_w: usize,
        next: &mut State,
        emit: &mut impl FnMut(&State, usize),
    ) {
        if j == old.len() {
            emit(next, w);
            return;
        }
        let (e, open) = self.decode(old[j]);
        let limit = self.strict_cap(old, j);
        let budget = max_w - w;
        let mut go = |state: u8, dw: usize, next: &mut State| {
            if dw <= budget {
                next[j] = state;
                self.step_svt(old, j + 1, w + dw, max_w, next, emit);
            }
        };
        if open {
            // no new value in this row
            go(self.encode(e, true), 0, next);
            // the open cell takes the value and stays open
            go(self.encode(e, true), 1, next);
            // the open cell takes the value as its maximum, then k new cells
            self.new_cells(e + 1, 1, limit, budget, &mut go, next);
        } else {
            self.new_cells(e, 0, limit, budget, &mut go, next);
        }
        next[j] = old[j];
    }

    /// New cells holding the value, starting at column `p`: all but the last
    /// are closed singletons; the last is closed or left open.
    fn new_cells(
        &self,
        p: usize,
        base: usize,
        limit: usize,
        budget: usize,
        go: &mut impl FnMut(u8, usize, &mut State),
        next: &mut State,
    ) {
        go(self.encode(p, false), base, next);
        let mut k = 1;
        while p + k <= limit && base + k <= budget {
            go(self.encode(p + k, false), base + k, next);
            go(self.encode(p + k - 1, true), base + k, next);
            k += 1;
        }
    }

    /// Number of fillings whose weight is exactly `exps` (a weak composition),
    /// unsigned.
    pub(crate) fn count(&self, exps: &[usize]) -> i128 {
        let mut layer: Layer = HashMap::new();
        layer.insert(self.initial(), 1);
        for &w in exps {
            let mut out: Layer = HashMap::new();
            for (s, &c) in &layer {
                self.step(s, w, &mut |ns, dw| {
                    if dw == w {
                        add(&mut out, ns, c);
                    }
                });
            }
            layer = out;
        }
        layer.get(&self.terminal()).copied().unwrap_or(0)
    }

    /// Counts of fillings for every partition weight with at most
    /// `num_vars` parts and degree in `min_deg..=max_deg`, unsigned.
    pub(crate) fn expand(&self, num_vars: usize, min_deg: usize, max_deg: usize) -> BTreeMap<Partition, i128> {
        let mut out = BTreeMap::new();
        let mut layer: Layer = HashMap::new();
        layer.insert(self.initial(), 1);
        let mut walk = Walk {
            tr: self,
            terminal: self.terminal(),
            num_vars,
            min_deg,
            max_deg,
            prefix: Vec::new(),
            out: &mut out,
        };
        walk.visit(&layer, 0);
        out
    }
}

struct Walk<'a> {
    tr: &'a Transfer,
    terminal: State,
    num_vars: usize,
    min_deg: usize,
    max_deg: usize,
    prefix: Vec<usize>,
    out: &'a mut BTreeMap<Partition, i128>,
}

impl Walk<'_> {
    fn visit(&mut self, layer: &Layer, deg: usize) {
        if deg >= self.min_deg {
            if let Some(&c) = layer.get(&self.terminal) {
                if c != 0 {
                    self.out.insert(Partition::from_unsorted(self.prefix.clone()), c);
                }
            }
        }
        if self.prefix.len() == self.num_vars {
            return;
        }
        let max_w = self
            .prefix
            .last()
            .copied()
            .unwrap_or(self.max_deg)
            .min(self.max_deg - deg);
        if max_w == 0 {
            return;
        }
        // variables left after this one
        let later = self.num_vars - self.prefix.len() - 1;
        let mut buckets: Vec<Layer> = vec![HashMap::new(); max_w + 1];
        for (s, &c) in layer {
            self.tr.step(s, max_w, &mut |ns, w| {
                if w == 0 {
                    return;
                }
                let need = self.tr.remaining(ns);
                if need <= w * later && need <= self.max_deg - deg - w {
                    add(&mut buckets[w], ns, c);
                }
            });
        }
        for (w, bucket) in buckets.into_iter().enumerate() {
            if bucket.is_empty() {
                continue;
            }
            self.prefix.push(w);
            self.visit(&bucket, deg + w);
            self.prefix.pop();
        }
    }
}

fn add(layer: &mut Layer, s: &State, c: i128) {
    match layer.get_mut(s) {
        Some(v) => *v = v.checked_add(c).expect("coefficient overflow"),
        None => {
            layer.insert(s.clone(), c);
        }
    }
}

/// Bits `lo..hi` set.
fn interval_mask(lo: usize, hi: usize) -> u64 {
    if hi <= lo {
        return 0;
    }
    let width = hi - lo;
    let ones = if width >= 64 { u64::MAX } else { (1u64 << width) - 1 };
    ones << lo
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::all_skew_shapes;
    use crate::tableaux::{enumerate_rpp, enumerate_ssyt, enumerate_svt};

    fn stream_counts(kind: FillingKind, shape: &SkewShape, vars: usize, max_size: usize) -> BTreeMap<Vec<usize>, i128> {
        let it = match kind {
            FillingKind::Ssyt => enumerate_ssyt(shape, vars).unwrap(),
            FillingKind::Rpp => enumerate_rpp(shape, vars).unwrap(),
            FillingKind::SetValued => enumerate_svt(shape, vars, max_size).unwrap(),
        };
        let mut out = BTreeMap::new();
        for f in it {
            let mut e = f.weight().exponents().to_vec();
            e.resize(vars, 0);
            *out.entry(e).or_insert(0) += 1;
        }
        out
    }

    fn all_weak_compositions(vars: usize, max_deg: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..vars {
            let mut next = Vec::new();
            for v in &out {
                let d: usize = v.iter().sum();
                for x in 0..=max_deg - d {
                    let mut w = v.clone();
                    w.push(x);
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn single_coefficients_match_streams() {
        for n in 1..=4 {
            for s in all_skew_shapes(n) {
                for kind in [FillingKind::Ssyt, FillingKind::Rpp, FillingKind::SetValued] {
                    let vars = 3;
                    let max_size = n + 2;
                    let expected = stream_counts(kind, &s, vars, max_size);
                    let tr = Transfer::new(kind, &s);
                    for e in all_weak_compositions(vars, max_size) {
                        let want = expected.get(&e).copied().unwrap_or(0);
                        assert_eq!(tr.count(&e), want, "{kind:?} {s} {e:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn expansion_matches_single_coefficients() {
        for n in 1..=5 {
            for s in all_skew_shapes(n) {
                for kind in [FillingKind::Ssyt, FillingKind::Rpp, FillingKind::SetValued] {
                    let tr = Transfer::new(kind, &s);
                    let (vars, max_deg) = (4, n + 2);
                    let got = tr.expand(vars, 0, max_deg);
                    for p in (0..=max_deg).flat_map(Partition::all_of) {
                        if p.len() > vars {
                            continue;
                        }
                        let want = tr.count(p.parts());
                        assert_eq!(got.get(&p).copied().unwrap_or(0), want, "{kind:?} {s} {p}");
                    }
                }
            }
        }
    }

    #[test]
    fn remaining_is_zero_only_at_terminal() {
        let s: SkewShape = "3,2,2/1".parse().unwrap();
        for kind in [FillingKind::Ssyt, FillingKind::Rpp, FillingKind::SetValued] {
            let tr = Transfer::new(kind, &s);
            assert_eq!(tr.remaining(&tr.terminal()), 0);
            assert_eq!(
                tr.remaining(&tr.initial()),
                if kind == FillingKind::Rpp { 3 } else { 6 }
            );
        }
    }
}
