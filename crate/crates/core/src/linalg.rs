//! Exact sparse linear algebra over [`FieldElem`].
//!
//! [`Echelon`] is an incremental row-echelon form keyed by leading column:
//! every stored row has a leading coefficient of one and entries only in
//! columns to the right of its pivot. It serves as span membership test,
//! rank counter, coordinate solver and nullspace engine.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::FieldElem;

/// Sparse vector with strictly increasing indices and no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, FieldElem)>,
}

impl SparseVec {
    pub fn new() -> SparseVec {
        SparseVec::default()
    }

    pub fn unit(index: usize) -> SparseVec {
        SparseVec {
            entries: vec![(index, FieldElem::one())],
        }
    }

    /// Builds a vector from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_entries(mut entries: Vec<(usize, FieldElem)>) -> SparseVec {
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, FieldElem)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            match out.last_mut() {
                Some((j, w)) if *j == i => *w += &v,
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    /// Wraps entries that are already sorted, distinct and nonzero.
    pub fn from_sorted(entries: Vec<(usize, FieldElem)>) -> SparseVec {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(values: &[FieldElem]) -> SparseVec {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<FieldElem> {
        let mut out = vec![FieldElem::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, FieldElem)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, FieldElem)> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &FieldElem)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&FieldElem> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|p| &self.entries[p].1)
    }

    pub fn leading(&self) -> Option<(usize, &FieldElem)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn scale(&self, c: &FieldElem) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &FieldElem, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c * y));
                        b.next();
                    } else {
                        let s = x + &(c * y);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&FieldElem::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&FieldElem::from_int(-1), other)
    }

    pub fn dot(&self, other: &SparseVec) -> FieldElem {
        let mut acc = FieldElem::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc += &(x * y);
                a.next();
                b.next();
            }
        }
        acc
    }
}

/// Incremental row echelon form over an implicit column space.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
    // Row r equals sum_t combos[r][t] * (t-th inserted vector), when tracking.
    combos: Option<Vec<SparseVec>>,
    inserted: usize,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    /// An echelon form that remembers how each row was built from the
    /// inserted vectors, so that [`Echelon::coordinates`] can be answered.
    pub fn tracking() -> Echelon {
        Echelon {
            combos: Some(Vec::new()),
            ..Echelon::default()
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.leading().expect("rows are nonzero").0)
    }

    /// Reduces `v` against the stored rows. Returns the residual (zero in
    /// every pivot column) and the multipliers used, as `(row, coeff)`.
    fn reduce_with(&self, v: &SparseVec) -> (SparseVec, Vec<(usize, FieldElem)>) {
        let mut residual = v.clone();
        let mut used = Vec::new();
        let mut pos = 0;
        while pos < residual.entries.len() {
            let (col, coeff) = &residual.entries[pos];
            match self.pivot_row.get(col) {
                Some(&r) => {
                    let coeff = coeff.clone();
                    residual = residual.axpy(&-&coeff, &self.rows[r]);
                    used.push((r, coeff));
                    // Entries before `pos` are untouched since pivot rows only
                    // extend to the right of their pivot.
                }
                None => pos += 1,
            }
        }
        (residual, used)
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.reduce_with(v).0
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let index = self.inserted;
        self.inserted += 1;
        let (residual, used) = self.reduce_with(v);
        let Some((col, lead)) = residual.leading() else {
            return false;
        };
        let inv = lead.inv().expect("leading entry is nonzero");
        let row = residual.scale(&inv);
        if let Some(combos) = &mut self.combos {
            let mut combo = SparseVec::unit(index);
            for (r, c) in &used {
                combo = combo.axpy(&-c, &combos[*r]);
            }
            combos.push(combo.scale(&inv));
        }
        self.pivot_row.insert(col, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Coefficients `c` with `v = sum_t c[t] * (t-th inserted vector)`, or
    /// `None` if `v` is outside the span. Requires [`Echelon::tracking`].
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let combos = self
            .combos
            .as_ref()
            .expect("coordinates need a tracking echelon");
        let (residual, used) = self.reduce_with(v);
        if !residual.is_zero() {
            return None;
        }
        let mut out = SparseVec::new();
        for (r, c) in &used {
            out = out.axpy(c, &combos[*r]);
        }
        Some(out)
    }

    /// Basis of `{x : row . x = 0 for every stored row}` over columns `0..cols`.
    pub fn nullspace(&self, cols: usize) -> Vec<SparseVec> {
        // Back-substitute into reduced row echelon form, highest pivot first.
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r].leading().unwrap().0));
        let mut reduced: HashMap<usize, SparseVec> = HashMap::with_capacity(self.rows.len());
        for &r in &order {
            let row = &self.rows[r];
            let pivot = row.leading().unwrap().0;
            let mut out = row.clone();
            let mut pos = 1;
            while pos < out.entries.len() {
                let col = out.entries[pos].0;
                match reduced.get(&col) {
                    Some(other) => {
                        let c = out.entries[pos].1.clone();
                        out = out.axpy(&-&c, other);
                    }
                    None => pos += 1,
                }
            }
            reduced.insert(pivot, out);
        }
        let mut free: Vec<Vec<(usize, FieldElem)>> = vec![Vec::new(); cols];
        for (pivot, row) in &reduced {
            for (col, v) in row.entries.iter().skip(1) {
                free[*col].push((*pivot, -v));
            }
        }
        (0..cols)
            .filter(|c| !reduced.contains_key(c))
            .map(|c| {
                let mut e = std::mem::take(&mut free[c]);
                e.push((c, FieldElem::one()));
                SparseVec::from_entries(e)
            })
            .collect()
    }
}

/// Rank of a family of vectors.
pub fn rank(vectors: &[SparseVec]) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

/// Whether two families span the same subspace.
pub fn same_span(a: &[SparseVec], b: &[SparseVec]) -> bool {
    let mut ea = Echelon::new();
    for v in a {
        ea.insert(v);
    }
    let mut eb = Echelon::new();
    for v in b {
        eb.insert(v);
    }
    ea.rank() == eb.rank() && b.iter().all(|v| ea.contains(v))
}

/// Dense square matrix inverse by Gauss-Jordan elimination, pivoting on the
/// first nonzero entry of each column.
pub fn invert(matrix: &[Vec<FieldElem>]) -> Result<Vec<Vec<FieldElem>>> {
    let n = matrix.len();
    for row in matrix {
        if row.len() != n {
            return Err(Error::SizeMismatch {
                left: n,
                right: row.len(),
            });
        }
    }
    let mut a: Vec<Vec<FieldElem>> = matrix.to_vec();
    let mut inv: Vec<Vec<FieldElem>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { FieldElem::one() } else { FieldElem::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::Singular)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].inv()?;
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                if !a[col][j].is_zero() {
                    let t = &f * &a[col][j];
                    a[r][j] -= &t;
                }
                if !inv[col][j].is_zero() {
                    let t = &f * &inv[col][j];
                    inv[r][j] -= &t;
                }
            }
        }
    }
    Ok(inv)
}

pub fn mat_mul(a: &[Vec<FieldElem>], b: &[Vec<FieldElem>]) -> Vec<Vec<FieldElem>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|t| &row[t] * &b[t][j]).sum())
                .collect()
        })
        .collect()
}
