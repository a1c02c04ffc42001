//! The images of the `gamma_j` and the class representatives `gamma^mu`,
//! `sigma^(lambda, mu)`.

use super::bk::{bk_generators, BkElem, Subset};
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::partitions::Partition;

/// `(1/sqrt2)(tau_j - tau_{j+1}) sigma_j`, the image of `gamma_j` in `B_k`.
pub fn theta_gamma(j: usize, k: usize) -> Result<BkElem> {
    let s = Perm::transposition(k, j)?;
    let c = FieldElem::sqrt2_pow(-1);
    Ok(BkElem::from_terms(
        k,
        [
            ((Subset::from_points(&[j]), s.clone()), c.clone()),
            ((Subset::from_points(&[j + 1]), s), -c),
        ],
    ))
}

pub fn theta_gammas(k: usize) -> Vec<BkElem> {
    (1..k).map(|j| theta_gamma(j, k).expect("1 <= j < k")).collect()
}

/// Blocks `(start, len)` of consecutive points, `start` zero-based.
fn blocks(parts: &[usize], offset: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    parts.iter().scan(offset, |a, &len| {
        let start = *a;
        *a += len;
        Some((start, len))
    })
}

/// `(gamma_1 .. gamma_{mu_1 - 1})(gamma_{mu_1 + 1} ..) ..`, left to right.
pub fn gamma_mu(mu: &Partition, k: usize) -> Result<BkElem> {
    mu.check_weight(k)?;
    let gammas = theta_gammas(k);
    let mut acc = BkElem::one(k);
    for (a, len) in blocks(mu.parts(), 0) {
        for j in a + 1..a + len {
            acc = &acc * &gammas[j - 1];
        }
    }
    Ok(acc)
}

/// `x_1 x_2 .. y_1 y_2 ..` with `x_i` a run of `sigma`s over a block of
/// `lambda` and `y_i` a run over a block of `mu` followed by the last `tau`.
pub fn sigma_class(lambda: &Partition, mu: &Partition, k: usize) -> Result<BkElem> {
    let total = lambda.weight() + mu.weight();
    if total != k {
        return Err(Error::WeightMismatch {
            partition: format!("{lambda};{mu}"),
            expected: k,
            actual: total,
        });
    }
    let g = bk_generators(k);
    let mut acc = BkElem::one(k);
    for (a, len) in blocks(lambda.parts(), 0) {
        for j in a + 1..a + len {
            acc = &acc * &g.sigma[j - 1];
        }
    }
    for (b, len) in blocks(mu.parts(), lambda.weight()) {
        for j in b + 1..b + len {
            acc = &acc * &g.sigma[j - 1];
        }
        acc = &acc * &g.tau_i[b + len - 1];
    }
    Ok(acc)
}

/// Product of the `gamma` images along the lexicographically smallest
/// reduced word of `w`.
pub fn gamma_word(w: &Perm) -> BkElem {
    let k = w.k();
    let gammas = theta_gammas(k);
    w.reduced_word()
        .into_iter()
        .fold(BkElem::one(k), |acc, i| &acc * &gammas[i - 1])
}
