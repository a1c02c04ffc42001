//! The Clifford algebra `C_k` (elements of `B_k` with trivial permutation
//! part) and its simple graded module `X_k = C_k e`.

use super::bk::{BkElem, Subset};
use super::perm::Perm;
use crate::error::Result;
use crate::field::FieldElem;
use crate::linalg::{Echelon, SparseVec};
use crate::partitions::Partition;

pub type Matrix = Vec<Vec<FieldElem>>;

/// `e_i = (1/sqrt2)(1 + i xi_{2i-1} xi_{2i})`.
pub fn idempotent_factor(k: usize, i: usize) -> BkElem {
    let one = BkElem::one(k);
    let zeta = BkElem::xi(k, &[2 * i - 1, 2 * i]).scale(&FieldElem::i());
    (&one + &zeta).scale(&FieldElem::sqrt2_pow(-1))
}

#[derive(Clone, Debug)]
pub struct XkModule {
    pub k: usize,
    pub r: usize,
    /// `xi^eps` for `eps` in lexicographic order, then (odd `k`) the `xi^eps xi_k`.
    pub basis: Vec<BkElem>,
    pub degrees: Vec<u8>,
    /// Left multiplication by `xi_1 .. xi_k`, column `j` = image of `basis[j]`.
    pub xi: Vec<Matrix>,
    /// The odd endomorphism `z_k` for odd `k`.
    pub z: Option<Matrix>,
    coords: Echelon,
}

impl XkModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `(dim X_0, dim X_1)`.
    pub fn graded_dim(&self) -> (usize, usize) {
        let odd = self.degrees.iter().filter(|&&d| d == 1).count();
        (self.dim() - odd, odd)
    }

    fn coordinates(&self, x: &BkElem) -> SparseVec {
        self.coords
            .coordinates(&x.to_vec())
            .expect("X_k is a left ideal")
    }

    /// Matrix of left multiplication by a Clifford element.
    pub fn act(&self, c: &BkElem) -> Matrix {
        assert!(c.is_clifford(), "only C_k acts on X_k");
        let cols: Vec<Vec<FieldElem>> = self
            .basis
            .iter()
            .map(|b| self.coordinates(&(c * b)).to_dense(self.dim()))
            .collect();
        transpose(&cols)
    }

    /// `Ch[X_k](c)`, the trace of left multiplication by `c`.
    pub fn character(&self, c: &BkElem) -> FieldElem {
        assert!(c.is_clifford(), "only C_k acts on X_k");
        self.basis
            .iter()
            .enumerate()
            .map(|(j, b)| self.coordinates(&(c * b)).get(j).cloned().unwrap_or_default())
            .sum()
    }
}

fn transpose(m: &Matrix) -> Matrix {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i].clone()).collect()).collect()
}

pub fn xk_build(k: usize) -> XkModule {
    let r = k / 2;
    let factors: Vec<BkElem> = (1..=r).map(|i| idempotent_factor(k, i)).collect();
    for (i, e) in factors.iter().enumerate() {
        let zeta = BkElem::xi(k, &[2 * i + 1, 2 * i + 2]).scale(&FieldElem::i());
        assert_eq!(&zeta * e, *e, "e_{} is not an eigenprojection", i + 1);
    }
    let mut basis = Vec::new();
    let mut degrees = Vec::new();
    let mut signs = Vec::new();
    for m in 0..1usize << r {
        let eps: Vec<u8> = (0..r).map(|i| (m >> (r - 1 - i) & 1) as u8).collect();
        let mut x = BkElem::one(k);
        for (i, e) in factors.iter().enumerate() {
            if eps[i] == 1 {
                x = &x * &BkElem::xi(k, &[2 * i + 1]);
            }
            x = &x * e;
        }
        let weight = eps.iter().map(|&e| e as usize).sum::<usize>();
        basis.push(x);
        degrees.push((weight % 2) as u8);
        signs.push(weight % 2);
    }
    if k % 2 == 1 {
        let xk = BkElem::xi(k, &[k]);
        let half = basis.len();
        for j in 0..half {
            basis.push(&basis[j] * &xk);
            degrees.push(1 - degrees[j]);
        }
    }
    let mut coords = Echelon::tracking();
    for b in &basis {
        assert!(coords.insert(&b.to_vec()), "basis of X_{k} is dependent");
    }
    let mut module = XkModule {
        k,
        r,
        basis,
        degrees,
        xi: Vec::new(),
        z: None,
        coords,
    };
    module.xi = (1..=k).map(|i| module.act(&BkElem::xi(k, &[i]))).collect();
    if k % 2 == 1 {
        // z_k(xi^eps xi_k^a) = (-1)^(|eps| + a) xi^eps xi_k^(a+1).
        let half = 1usize << r;
        let n = 2 * half;
        let mut z = vec![vec![FieldElem::zero(); n]; n];
        for j in 0..half {
            let sign = if signs[j] == 0 { 1 } else { -1 };
            z[half + j][j] = FieldElem::from_int(sign);
            z[j][half + j] = FieldElem::from_int(-sign);
        }
        module.z = Some(z);
    }
    module
}

/// `Ch[X_k](c)` for a Clifford element `c` of `C_k`.
pub fn xk_char(k: usize, c: &BkElem) -> FieldElem {
    xk_build(k).character(c)
}

/// `(xi_1 - xi_2)(xi_2 - xi_3) .. (xi_{m-1} - xi_m)` moved to start after `offset` points.
pub fn xi_chain(k: usize, offset: usize, m: usize) -> BkElem {
    (offset + 1..offset + m).fold(BkElem::one(k), |acc, j| {
        &acc * &(&BkElem::xi(k, &[j]) - &BkElem::xi(k, &[j + 1]))
    })
}

/// The product of the chains over the blocks of `mu`.
pub fn xi_product(mu: &Partition) -> Result<BkElem> {
    mu.require_odd()?;
    let k = mu.weight();
    let mut acc = BkElem::one(k);
    let mut offset = 0;
    for &m in mu.parts() {
        acc = &acc * &xi_chain(k, offset, m);
        offset += m;
    }
    Ok(acc)
}

/// `Ch[X_k]` of the product of the chains over the blocks of `mu`.
pub fn xi_product_coeff(mu: &Partition) -> Result<FieldElem> {
    let x = xi_product(mu)?;
    Ok(xk_build(mu.weight()).character(&x))
}

/// Coefficient of `xi_{}` in a Clifford element.
pub fn scalar_part(c: &BkElem) -> FieldElem {
    c.coeff(Subset(0), &Perm::identity(c.k()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::mat_mul;

    fn mat_neg(m: &Matrix) -> Matrix {
        m.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
    }

    fn identity(n: usize) -> Matrix {
        (0..n)
            .map(|i| (0..n).map(|j| FieldElem::from_int((i == j) as i64)).collect())
            .collect()
    }

    #[test]
    fn dimensions() {
        for k in 1..=7 {
            let x = xk_build(k);
            assert_eq!(x.dim(), 1 << k.div_ceil(2), "k={k}");
            let (even, odd) = x.graded_dim();
            assert_eq!(even, odd);
        }
        assert_eq!(xk_build(2).graded_dim(), (1, 1));
        let x1 = xk_build(1);
        assert_eq!(x1.basis, vec![BkElem::one(1), BkElem::xi(1, &[1])]);
    }

    #[test]
    fn module_relations() {
        for k in 1..=5 {
            let x = xk_build(k);
            let n = x.dim();
            for a in 0..k {
                assert_eq!(mat_mul(&x.xi[a], &x.xi[a]), identity(n));
                for b in a + 1..k {
                    assert_eq!(mat_mul(&x.xi[a], &x.xi[b]), mat_neg(&mat_mul(&x.xi[b], &x.xi[a])));
                }
            }
            if let Some(z) = &x.z {
                assert_eq!(mat_mul(z, z), mat_neg(&identity(n)));
                for xi in &x.xi {
                    // z is an odd module endomorphism.
                    assert_eq!(mat_mul(z, xi), mat_neg(&mat_mul(xi, z)));
                }
                for j in 0..n {
                    for i in 0..n {
                        if !z[i][j].is_zero() {
                            assert_ne!(x.degrees[i], x.degrees[j]);
                        }
                    }
                }
            }
        }
        assert!(xk_build(4).z.is_none());
    }

    #[test]
    fn characters() {
        assert_eq!(xk_char(3, &BkElem::one(3)), FieldElem::from_int(4));
        let c = &(&BkElem::xi(3, &[1]) - &BkElem::xi(3, &[2])) * &(&BkElem::xi(3, &[2]) - &BkElem::xi(3, &[3]));
        assert_eq!(scalar_part(&c), FieldElem::from_int(-1));
        assert_eq!(xk_char(3, &c), FieldElem::from_int(-4));
        for k in 1..=5 {
            assert!(xk_char(k, &BkElem::xi(k, &[1])).is_zero());
        }
    }

    #[test]
    fn chain_products() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(xi_product_coeff(&p(&[3])).unwrap(), FieldElem::from_int(-4));
        assert_eq!(xi_product_coeff(&p(&[1, 1])).unwrap(), FieldElem::from_int(2));
        assert_eq!(xi_product_coeff(&p(&[3, 1])).unwrap(), FieldElem::from_int(-4));
        assert!(xi_product_coeff(&p(&[2])).is_err());
    }
}
