use std::collections::BTreeMap;

use crate::field::FieldElem;
use crate::linalg::SparseVec;

/// `W = V^{(x) k}` for `V = C^{n|n}`. Basis tuples `(b_1, .., b_k)` with
/// `b_j` in `0..2n` are indexed in base `2n`, slot 1 most significant;
/// `b_j >= n` marks an odd vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TensorSpace {
    pub n: usize,
    pub k: usize,
}

impl TensorSpace {
    pub fn new(n: usize, k: usize) -> TensorSpace {
        TensorSpace { n, k }
    }

    pub fn dim(&self) -> usize {
        (2 * self.n).pow(self.k as u32)
    }

    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let base = 2 * self.n;
        let mut out = vec![0; self.k];
        for slot in (0..self.k).rev() {
            out[slot] = index % base;
            index /= base;
        }
        out
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &d| acc * 2 * self.n + d)
    }

    pub fn parity(&self, digit: usize) -> u8 {
        (digit >= self.n) as u8
    }

    pub fn degree(&self, index: usize) -> u8 {
        (self.digits(index).iter().filter(|&&d| d >= self.n).count() % 2) as u8
    }

    pub fn grading(&self) -> Vec<u8> {
        (0..self.dim()).map(|i| self.degree(i)).collect()
    }

    /// `(dim W_0, dim W_1)`.
    pub fn graded_dim(&self) -> (usize, usize) {
        let odd = self.grading().iter().filter(|&&d| d == 1).count();
        (self.dim() - odd, odd)
    }
}

/// Square matrix stored by columns (column `j` is the image of basis vector
/// `j`), with an optional declared `Z_2`-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoMatrix {
    dim: usize,
    cols: Vec<SparseVec>,
    degree: Option<u8>,
}

impl EndoMatrix {
    pub fn from_columns(cols: Vec<SparseVec>, degree: Option<u8>) -> EndoMatrix {
        EndoMatrix {
            dim: cols.len(),
            cols,
            degree,
        }
    }

    /// From `(row, col, value)` triples.
    pub fn from_triples(dim: usize, triples: impl IntoIterator<Item = (usize, usize, FieldElem)>, degree: Option<u8>) -> EndoMatrix {
        let mut cols: Vec<Vec<(usize, FieldElem)>> = vec![Vec::new(); dim];
        for (r, c, v) in triples {
            cols[c].push((r, v));
        }
        EndoMatrix::from_columns(cols.into_iter().map(SparseVec::from_entries).collect(), degree)
    }

    pub fn zero(dim: usize) -> EndoMatrix {
        EndoMatrix::from_columns(vec![SparseVec::new(); dim], Some(0))
    }

    pub fn identity(dim: usize) -> EndoMatrix {
        EndoMatrix::from_columns((0..dim).map(SparseVec::unit).collect(), Some(0))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> Option<u8> {
        self.degree
    }

    pub fn with_degree(mut self, degree: Option<u8>) -> EndoMatrix {
        self.degree = degree;
        self
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn cols(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> FieldElem {
        self.cols[col].get(row).cloned().unwrap_or_default()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, FieldElem> = BTreeMap::new();
        for (t, c) in v.iter() {
            for (r, x) in self.cols[t].iter() {
                let term = c * x;
                let slot = acc.entry(r).or_default();
                *slot += &term;
            }
        }
        SparseVec::from_sorted(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect())
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &EndoMatrix) -> EndoMatrix {
        assert_eq!(self.dim, rhs.dim);
        let degree = match (self.degree, rhs.degree) {
            (Some(a), Some(b)) => Some((a + b) % 2),
            _ => None,
        };
        EndoMatrix::from_columns(rhs.cols.iter().map(|c| self.apply(c)).collect(), degree)
    }

    pub fn add(&self, rhs: &EndoMatrix) -> EndoMatrix {
        assert_eq!(self.dim, rhs.dim);
        let degree = if self.degree == rhs.degree { self.degree } else { None };
        EndoMatrix::from_columns(
            self.cols.iter().zip(&rhs.cols).map(|(a, b)| a.add(b)).collect(),
            degree,
        )
    }

    pub fn sub(&self, rhs: &EndoMatrix) -> EndoMatrix {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &FieldElem) -> EndoMatrix {
        EndoMatrix::from_columns(self.cols.iter().map(|v| v.scale(c)).collect(), self.degree)
    }

    pub fn neg(&self) -> EndoMatrix {
        EndoMatrix::from_columns(self.cols.iter().map(SparseVec::neg).collect(), self.degree)
    }

    pub fn trace(&self) -> FieldElem {
        self.cols
            .iter()
            .enumerate()
            .filter_map(|(j, c)| c.get(j).cloned())
            .sum()
    }

    /// `Some(alpha)` when every nonzero entry maps degree `beta` to `alpha + beta`.
    pub fn actual_degree(&self, grading: &[u8]) -> Option<u8> {
        let mut found: Option<u8> = None;
        for (j, col) in self.cols.iter().enumerate() {
            for (r, _) in col.iter() {
                let d = (grading[r] + grading[j]) % 2;
                match found {
                    None => found = Some(d),
                    Some(e) if e != d => return None,
                    _ => {}
                }
            }
        }
        Some(found.unwrap_or(0))
    }

    /// Entries flattened to a vector of length `dim^2`, index `col * dim + row`.
    pub fn to_vec(&self) -> SparseVec {
        SparseVec::from_sorted(
            self.cols
                .iter()
                .enumerate()
                .flat_map(|(j, c)| c.iter().map(move |(r, v)| (j * self.dim + r, v.clone())))
                .collect(),
        )
    }

    pub fn from_vec(dim: usize, v: &SparseVec, degree: Option<u8>) -> EndoMatrix {
        EndoMatrix::from_triples(dim, v.iter().map(|(idx, x)| (idx % dim, idx / dim, x.clone())), degree)
    }
}
