//! Sparse exact elimination.
//!
//! Columns are pushed one at a time into an [`Echelon`]; each is reduced
//! against the pivots found so far, always eliminating on its smallest row
//! index. The order of pushes and this pivot rule make every result
//! deterministic.

use std::collections::HashMap;

use crate::field::Field;

/// Sparse vector: `(index, value)` pairs, strictly increasing index, no zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// `a + c·b`.
pub fn axpy<F: Field>(field: &F, a: &SparseVec<F::Elem>, c: &F::Elem, b: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, field.mul(c, &b[j].1)));
            j += 1;
        } else {
            let v = field.add(&a[i].1, &field.mul(c, &b[j].1));
            if !field.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale<F: Field>(field: &F, c: &F::Elem, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    if field.is_zero(c) {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, field.mul(c, x))).collect()
}

/// Builds a sparse vector from unsorted entries, summing duplicates.
pub fn collect_sparse<F: Field>(field: &F, entries: impl IntoIterator<Item = (usize, F::Elem)>) -> SparseVec<F::Elem> {
    let mut v: Vec<(usize, F::Elem)> = entries.into_iter().collect();
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = field.add(y, &x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !field.is_zero(x));
    out
}

/// Outcome of pushing a column.
#[derive(Debug, Clone, PartialEq)]
pub enum Pushed<E> {
    /// The column was independent and now owns this pivot row.
    Pivot(usize),
    /// The column is a combination of earlier ones; with tracking enabled the
    /// payload is a kernel vector over original column indices (its entry at
    /// the pushed column is 1).
    Dependent(Option<SparseVec<E>>),
}

/// Incremental column echelon form.
pub struct Echelon<'f, F: Field> {
    field: &'f F,
    pivot_of_row: HashMap<usize, usize>,
    reduced: Vec<SparseVec<F::Elem>>,
    transforms: Option<Vec<SparseVec<F::Elem>>>,
    pushed: usize,
}

impl<'f, F: Field> Echelon<'f, F> {
    /// `track` records how each pivot column is built from the original
    /// columns, which is needed for solving and for kernel vectors.
    pub fn new(field: &'f F, track: bool) -> Self {
        Echelon {
            field,
            pivot_of_row: HashMap::new(),
            reduced: Vec::new(),
            transforms: track.then(Vec::new),
            pushed: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.reduced.len()
    }

    pub fn columns_pushed(&self) -> usize {
        self.pushed
    }

    pub fn push(&mut self, column: SparseVec<F::Elem>) -> Pushed<F::Elem> {
        let f = self.field;
        let id = self.pushed;
        self.pushed += 1;
        let mut v = column;
        let mut t: Option<SparseVec<F::Elem>> = self.transforms.as_ref().map(|_| vec![(id, f.one())]);
        loop {
            let Some((row, lead)) = v.first().cloned() else {
                return Pushed::Dependent(t);
            };
            match self.pivot_of_row.get(&row) {
                Some(&p) => {
                    let c = f.neg(&lead);
                    v = axpy(f, &v, &c, &self.reduced[p]);
                    if let (Some(t), Some(ts)) = (t.as_mut(), self.transforms.as_ref()) {
                        *t = axpy(f, t, &c, &ts[p]);
                    }
                }
                None => {
                    let inv = f.inv(&lead);
                    let slot = self.reduced.len();
                    self.reduced.push(scale(f, &inv, &v));
                    if let (Some(t), Some(ts)) = (t, self.transforms.as_mut()) {
                        ts.push(scale(f, &inv, &t));
                    }
                    self.pivot_of_row.insert(row, slot);
                    return Pushed::Pivot(row);
                }
            }
        }
    }

    /// Reduces `v` against the current pivots. Returns the residual and, with
    /// tracking, coefficients `s` over original columns with `v = residual + Σ s_j col_j`.
    pub fn reduce(&self, v: &SparseVec<F::Elem>) -> (SparseVec<F::Elem>, Option<SparseVec<F::Elem>>) {
        let f = self.field;
        let mut v = v.clone();
        let mut s: Option<SparseVec<F::Elem>> = self.transforms.as_ref().map(|_| Vec::new());
        let mut residual: SparseVec<F::Elem> = Vec::new();
        while let Some((row, lead)) = v.first().cloned() {
            match self.pivot_of_row.get(&row) {
                Some(&p) => {
                    v = axpy(f, &v, &f.neg(&lead), &self.reduced[p]);
                    if let (Some(s), Some(ts)) = (s.as_mut(), self.transforms.as_ref()) {
                        *s = axpy(f, s, &lead, &ts[p]);
                    }
                }
                None => {
                    residual.push((row, lead));
                    v.remove(0);
                }
            }
        }
        (residual, s)
    }

    pub fn contains(&self, v: &SparseVec<F::Elem>) -> bool {
        self.reduce(v).0.is_empty()
    }
}

/// Rank of a set of columns.
pub fn rank<F: Field>(field: &F, columns: impl IntoIterator<Item = SparseVec<F::Elem>>) -> usize {
    let mut e = Echelon::new(field, false);
    for c in columns {
        e.push(c);
    }
    e.rank()
}

/// Basis of the kernel of the matrix with the given columns (vectors over column indices).
pub fn kernel<F: Field>(field: &F, columns: impl IntoIterator<Item = SparseVec<F::Elem>>) -> Vec<SparseVec<F::Elem>> {
    let mut e = Echelon::new(field, true);
    let mut out = Vec::new();
    for c in columns {
        if let Pushed::Dependent(Some(k)) = e.push(c) {
            out.push(k);
        }
    }
    out
}

/// Some `x` with `A x = b`, or `None`.
pub fn solve<F: Field>(
    field: &F,
    columns: impl IntoIterator<Item = SparseVec<F::Elem>>,
    b: &SparseVec<F::Elem>,
) -> Option<SparseVec<F::Elem>> {
    let mut e = Echelon::new(field, true);
    for c in columns {
        e.push(c);
    }
    let (residual, s) = e.reduce(b);
    residual.is_empty().then(|| s.expect("tracking enabled"))
}
