//! The action of `q(n)` and of `B_k` on `W`, and the diagonal torus action.

use super::space::{EndoMatrix, TensorSpace};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::sergeev::{BkElem, Perm};

/// Basis element of `q(n)`: `A_ij` (even) or `B_ij` (odd), `i, j` zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QnBasis {
    A(usize, usize),
    B(usize, usize),
}

impl QnBasis {
    pub fn degree(self) -> u8 {
        match self {
            QnBasis::A(..) => 0,
            QnBasis::B(..) => 1,
        }
    }

    /// Image of the basis vector `digit` of `V`, if nonzero.
    fn on_vector(self, n: usize, digit: usize) -> Option<usize> {
        let (i, j, odd_target) = match self {
            QnBasis::A(i, j) => (i, j, false),
            QnBasis::B(i, j) => (i, j, true),
        };
        let (col, from_odd) = if digit < n { (digit, false) } else { (digit - n, true) };
        (col == j).then(|| if from_odd != odd_target { i + n } else { i })
    }

    pub fn all(n: usize) -> Vec<QnBasis> {
        let mut out = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            for j in 0..n {
                out.push(QnBasis::A(i, j));
            }
        }
        for i in 0..n {
            for j in 0..n {
                out.push(QnBasis::B(i, j));
            }
        }
        out
    }
}

/// `sum_j (-1)^(alpha (beta_1 + .. + beta_{j-1})) 1 (x) .. (x) X (x) .. (x) 1`.
pub fn theta(space: TensorSpace, x: QnBasis) -> EndoMatrix {
    let alpha = x.degree();
    let mut triples = Vec::new();
    for col in 0..space.dim() {
        let digits = space.digits(col);
        let mut before = 0u8;
        for slot in 0..space.k {
            if let Some(target) = x.on_vector(space.n, digits[slot]) {
                let mut image = digits.clone();
                image[slot] = target;
                let sign = if alpha * before % 2 == 1 { -1 } else { 1 };
                triples.push((space.index(&image), col, FieldElem::from_int(sign)));
            }
            before += space.parity(digits[slot]);
        }
    }
    EndoMatrix::from_triples(space.dim(), triples, Some(alpha))
}

/// Images of all `2n^2` basis elements of `q(n)`.
pub fn theta_gens(n: usize, k: usize) -> Vec<EndoMatrix> {
    let space = TensorSpace::new(n, k);
    QnBasis::all(n).into_iter().map(|x| theta(space, x)).collect()
}

/// `Psi(tau)`: `P` in slot 1, `P e_j = i e_{n+j}`, `P e_{n+j} = -i e_j`.
pub fn psi_tau(space: TensorSpace) -> EndoMatrix {
    let n = space.n;
    let triples = (0..space.dim()).map(|col| {
        let mut digits = space.digits(col);
        let (target, c) = if digits[0] < n {
            (digits[0] + n, FieldElem::i())
        } else {
            (digits[0] - n, -FieldElem::i())
        };
        digits[0] = target;
        (space.index(&digits), col, c)
    });
    EndoMatrix::from_triples(space.dim(), triples.collect::<Vec<_>>(), Some(1))
}

/// `Psi(sigma_i)`: swaps slots `i`, `i+1` with sign `(-1)^(beta_i beta_{i+1})`.
pub fn psi_sigma(space: TensorSpace, i: usize) -> EndoMatrix {
    let triples = (0..space.dim()).map(|col| {
        let mut digits = space.digits(col);
        let sign = if space.parity(digits[i - 1]) * space.parity(digits[i]) == 1 { -1 } else { 1 };
        digits.swap(i - 1, i);
        (space.index(&digits), col, FieldElem::from_int(sign))
    });
    EndoMatrix::from_triples(space.dim(), triples.collect::<Vec<_>>(), Some(0))
}

/// `(Psi(tau), [Psi(sigma_1) .. Psi(sigma_{k-1})])`.
pub fn psi_gens(n: usize, k: usize) -> (EndoMatrix, Vec<EndoMatrix>) {
    let space = TensorSpace::new(n, k);
    (psi_tau(space), (1..k).map(|i| psi_sigma(space, i)).collect())
}

/// `Psi` extended to all of `B_k` along the normal form.
#[derive(Clone, Debug)]
pub struct PsiRep {
    pub space: TensorSpace,
    pub tau: EndoMatrix,
    pub sigma: Vec<EndoMatrix>,
    /// `Psi(tau_j)`, built by the defining conjugation.
    pub tau_i: Vec<EndoMatrix>,
}

impl PsiRep {
    pub fn new(n: usize, k: usize) -> PsiRep {
        let space = TensorSpace::new(n, k);
        let (tau, sigma) = psi_gens(n, k);
        let mut tau_i = vec![tau.clone()];
        for j in 1..k {
            let t = sigma[j - 1].mul(&tau_i[j - 1]).mul(&sigma[j - 1]);
            tau_i.push(t);
        }
        PsiRep {
            space,
            tau,
            sigma,
            tau_i,
        }
    }

    pub fn perm(&self, w: &Perm) -> EndoMatrix {
        w.reduced_word()
            .into_iter()
            .fold(EndoMatrix::identity(self.space.dim()), |acc, i| acc.mul(&self.sigma[i - 1]))
    }

    pub fn act(&self, x: &BkElem) -> Result<EndoMatrix> {
        if x.k() != self.space.k {
            return Err(Error::SizeMismatch {
                left: x.k(),
                right: self.space.k,
            });
        }
        let dim = self.space.dim();
        let mut acc = EndoMatrix::zero(dim).with_degree(x.degree());
        let mut perm_cache: Vec<(Perm, EndoMatrix)> = Vec::new();
        for (subset, w, c) in x.terms() {
            let pw = match perm_cache.iter().find(|(p, _)| p == w) {
                Some((_, m)) => m.clone(),
                None => {
                    let m = self.perm(w);
                    perm_cache.push((w.clone(), m.clone()));
                    m
                }
            };
            let mut term = EndoMatrix::identity(dim);
            for p in subset.points() {
                term = term.mul(&self.tau_i[p - 1]);
            }
            acc = acc.add(&term.mul(&pw).scale(c));
        }
        Ok(acc.with_degree(x.degree()))
    }
}

/// `Psi(x)` for `x` in `B_k`.
pub fn act_bk(x: &BkElem, n: usize) -> Result<EndoMatrix> {
    PsiRep::new(n, x.k()).act(x)
}

/// `diag(x_1, .., x_n)` acting in every slot.
pub fn diag_action(x: &[FieldElem], n: usize, k: usize) -> Result<EndoMatrix> {
    if x.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: x.len(),
        });
    }
    let space = TensorSpace::new(n, k);
    let triples = (0..space.dim()).map(|col| {
        let value = space
            .digits(col)
            .into_iter()
            .fold(FieldElem::one(), |acc, d| &acc * &x[d % n]);
        (col, col, value)
    });
    Ok(EndoMatrix::from_triples(space.dim(), triples.collect::<Vec<_>>(), Some(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SparseVec;
    use crate::sergeev::{bk_generators, theta_gamma};

    fn e(space: TensorSpace, digits: &[usize]) -> SparseVec {
        SparseVec::unit(space.index(digits))
    }

    fn supercommute(a: &EndoMatrix, b: &EndoMatrix) -> bool {
        let sign = a.degree().unwrap() * b.degree().unwrap();
        let ba = b.mul(a);
        a.mul(b) == if sign == 1 { ba.neg() } else { ba }
    }

    #[test]
    fn theta_examples() {
        let v = TensorSpace::new(1, 1);
        assert_eq!(theta(v, QnBasis::A(0, 0)), EndoMatrix::identity(2));
        let w = TensorSpace::new(1, 2);
        let b = theta(w, QnBasis::B(0, 0));
        let expected = e(w, &[0, 1]).sub(&e(w, &[1, 0]));
        assert_eq!(b.apply(&e(w, &[1, 1])), expected);
        let w = TensorSpace::new(2, 2);
        for (x, m) in QnBasis::all(2).into_iter().zip(theta_gens(2, 2)) {
            assert_eq!(m.actual_degree(&w.grading()), Some(x.degree()));
        }
        // A_11 counts the slots holding e_1 or e_3.
        let a11 = theta(w, QnBasis::A(0, 0));
        assert_eq!(a11.apply(&e(w, &[0, 2])), e(w, &[0, 2]).scale(&FieldElem::from_int(2)));
    }

    #[test]
    fn theta_is_a_representation() {
        // [B_ij, B_kl] = A_il delta_jk + A_kj delta_li as an anticommutator.
        let n = 2;
        let space = TensorSpace::new(n, 2);
        let b = |i, j| theta(space, QnBasis::B(i, j));
        let a = |i, j| theta(space, QnBasis::A(i, j));
        for (i, j, k, l) in [(0, 1, 1, 0), (0, 0, 0, 0), (1, 0, 1, 1), (0, 1, 0, 1)] {
            let anti = b(i, j).mul(&b(k, l)).add(&b(k, l).mul(&b(i, j)));
            let mut expected = EndoMatrix::zero(space.dim());
            if j == k {
                expected = expected.add(&a(i, l));
            }
            if l == i {
                expected = expected.add(&a(k, j));
            }
            assert_eq!(anti.with_degree(None), expected.with_degree(None), "{i}{j}{k}{l}");
        }
    }

    #[test]
    fn psi_examples() {
        let v = TensorSpace::new(1, 1);
        let (tau, _) = psi_gens(1, 1);
        assert_eq!(tau.apply(&e(v, &[0])), e(v, &[1]).scale(&FieldElem::i()));
        let w = TensorSpace::new(1, 2);
        let (_, s) = psi_gens(1, 2);
        assert_eq!(s[0].apply(&e(w, &[1, 1])), e(w, &[1, 1]).neg());
        assert_eq!(s[0].apply(&e(w, &[0, 1])), e(w, &[1, 0]));
    }

    #[test]
    fn homomorphism_on_generators() {
        for (n, k) in [(1, 2), (2, 2), (1, 3)] {
            let rep = PsiRep::new(n, k);
            let g = bk_generators(k);
            let dim = rep.space.dim();
            assert_eq!(rep.act(&BkElem::one(k)).unwrap(), EndoMatrix::identity(dim));
            let ts = (&g.tau * &g.sigma[0]).pow(4);
            assert_eq!(rep.act(&ts).unwrap(), EndoMatrix::identity(dim).neg());
            let gm = theta_gamma(1, k).unwrap();
            assert_eq!(rep.act(&(&gm * &gm)).unwrap(), EndoMatrix::identity(dim).neg().with_degree(Some(0)));
            for (j, t) in g.tau_i.iter().enumerate() {
                assert_eq!(rep.act(t).unwrap(), rep.tau_i[j]);
            }
        }
    }

    #[test]
    fn actions_supercommute() {
        for (n, k) in [(1, 2), (2, 2), (1, 3)] {
            let (tau, sigma) = psi_gens(n, k);
            for g in theta_gens(n, k) {
                assert!(supercommute(&g, &tau));
                for s in &sigma {
                    assert!(supercommute(&g, s));
                }
            }
        }
    }

    #[test]
    fn diagonal_action() {
        let t = FieldElem::from_int(7);
        let d = diag_action(std::slice::from_ref(&t), 1, 2).unwrap();
        assert_eq!(d.trace(), FieldElem::from_int(4 * 49));
        let (a, b) = (FieldElem::from_int(2), FieldElem::from_int(3));
        assert_eq!(diag_action(&[a, b], 2, 1).unwrap().trace(), FieldElem::from_int(10));
        assert_eq!(diag_action(&vec![FieldElem::one(); 2], 2, 2).unwrap(), EndoMatrix::identity(16));
        assert!(diag_action(&[t], 2, 2).is_err());
    }
}
