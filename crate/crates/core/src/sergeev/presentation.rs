//! Certifies that the normal-form model satisfies the defining relations,
//! and that the images of `C_k` and `A_k` together fill `B_k`.

use super::bk::{bk_generators, dimension, BkElem, Subset};
use super::classes::{gamma_word, theta_gammas};
use super::perm::Perm;
use crate::exec::Strategy;
use crate::linalg::Echelon;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub pass: bool,
}

fn check(out: &mut Vec<RelationCheck>, name: String, lhs: BkElem, rhs: BkElem) {
    out.push(RelationCheck {
        name,
        pass: lhs == rhs,
    });
}

/// Every defining relation of `B_k`, the Clifford relations for the
/// `tau_i`, the spin relations for the `gamma` images, and the
/// anticommutation of `tau_i` with the `gamma` images.
pub fn check_presentation(k: usize) -> Vec<RelationCheck> {
    let one = BkElem::one(k);
    let minus_one = -&one;
    let g = bk_generators(k);
    let mut out = Vec::new();
    check(&mut out, "tau^2=1".into(), &g.tau * &g.tau, one.clone());
    if k < 2 {
        return out;
    }
    let s = &g.sigma;
    for i in 1..k {
        check(&mut out, format!("sigma{i}^2=1"), &s[i - 1] * &s[i - 1], one.clone());
    }
    for i in 1..k - 1 {
        check(
            &mut out,
            format!("(sigma{i}*sigma{})^3=1", i + 1),
            (&s[i - 1] * &s[i]).pow(3),
            one.clone(),
        );
    }
    for i in 1..k {
        for j in i + 2..k {
            check(
                &mut out,
                format!("(sigma{i}*sigma{j})^2=1"),
                (&s[i - 1] * &s[j - 1]).pow(2),
                one.clone(),
            );
        }
    }
    for i in 2..k {
        check(
            &mut out,
            format!("(tau*sigma{i})^2=1"),
            (&g.tau * &s[i - 1]).pow(2),
            one.clone(),
        );
    }
    check(
        &mut out,
        "(tau*sigma1)^4=-1".into(),
        (&g.tau * &s[0]).pow(4),
        minus_one.clone(),
    );

    let t = &g.tau_i;
    for i in 1..=k {
        check(&mut out, format!("tau{i}^2=1"), &t[i - 1] * &t[i - 1], one.clone());
        for j in i + 1..=k {
            check(
                &mut out,
                format!("tau{i}*tau{j}=-tau{j}*tau{i}"),
                &t[i - 1] * &t[j - 1],
                -&(&t[j - 1] * &t[i - 1]),
            );
        }
    }

    let gm = theta_gammas(k);
    for i in 1..k {
        check(
            &mut out,
            format!("gamma{i}^2=-1"),
            &gm[i - 1] * &gm[i - 1],
            minus_one.clone(),
        );
    }
    for i in 1..k - 1 {
        check(
            &mut out,
            format!("(gamma{i}*gamma{})^3=-1", i + 1),
            (&gm[i - 1] * &gm[i]).pow(3),
            minus_one.clone(),
        );
    }
    for i in 1..k {
        for j in i + 2..k {
            check(
                &mut out,
                format!("(gamma{i}*gamma{j})^2=-1"),
                (&gm[i - 1] * &gm[j - 1]).pow(2),
                minus_one.clone(),
            );
        }
    }
    for i in 1..=k {
        for j in 1..k {
            check(
                &mut out,
                format!("tau{i}*gamma{j}=-gamma{j}*tau{i}"),
                &t[i - 1] * &gm[j - 1],
                -&(&gm[j - 1] * &t[i - 1]),
            );
        }
    }
    out
}

/// Rank of `{xi_I * gamma_w : I subset of [k], w in S_k}` inside `B_k`;
/// equals `2^k k!` exactly when the images of `C_k` and `A_k` fill `B_k`.
pub fn theta_image_rank(k: usize, strategy: Strategy) -> usize {
    let perms = Perm::all(k);
    let blocks: Vec<Vec<BkElem>> = strategy.map(&perms, |w| {
        let gw = gamma_word(w);
        (0u32..1 << k)
            .map(|m| &BkElem::basis(k, Subset(m), Perm::identity(k)) * &gw)
            .collect()
    });
    let mut ech = Echelon::new();
    for x in blocks.iter().flatten() {
        ech.insert(&x.to_vec());
    }
    ech.rank()
}

/// Whether the isomorphism test succeeds for `k`.
pub fn theta_is_isomorphism(k: usize, strategy: Strategy) -> bool {
    theta_image_rank(k, strategy) == dimension(k)
}

/// Basis (as found) of the unital subalgebra generated by `gens`.
pub fn subalgebra_basis(k: usize, gens: &[BkElem]) -> Vec<BkElem> {
    let mut ech = Echelon::new();
    let mut basis = vec![BkElem::one(k)];
    ech.insert(&basis[0].to_vec());
    let mut next = 0;
    while next < basis.len() {
        let x = basis[next].clone();
        next += 1;
        for g in gens {
            let y = &x * g;
            if ech.insert(&y.to_vec()) {
                basis.push(y);
            }
        }
    }
    basis
}

pub fn subalgebra_dim(k: usize, gens: &[BkElem]) -> usize {
    subalgebra_basis(k, gens).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sergeev::perm::factorial;

    #[test]
    fn relations_hold() {
        for k in 1..=5 {
            let report = check_presentation(k);
            let failed: Vec<_> = report.iter().filter(|c| !c.pass).collect();
            assert!(failed.is_empty(), "k={k}: {failed:?}");
        }
        let k1 = check_presentation(1);
        assert_eq!(k1.len(), 1);
        assert_eq!(k1[0].name, "tau^2=1");
        let names: Vec<String> = check_presentation(4).into_iter().map(|c| c.name).collect();
        for expected in [
            "(tau*sigma1)^4=-1",
            "(sigma1*sigma2)^3=1",
            "(gamma1*gamma3)^2=-1",
            "tau1*gamma1=-gamma1*tau1",
        ] {
            assert!(names.iter().any(|n| n == expected), "{expected}");
        }
    }

    #[test]
    fn small_subalgebras() {
        let g2 = bk_generators(2);
        assert_eq!(subalgebra_dim(2, &[g2.tau.clone(), g2.sigma[0].clone()]), 8);
        assert_eq!(subalgebra_dim(3, &bk_generators(3).tau_i), 8);
        assert_eq!(subalgebra_dim(3, &theta_gammas(3)), 6);
        assert_eq!(subalgebra_dim(3, &[]), 1);
        for k in 2..=4 {
            assert_eq!(subalgebra_dim(k, &theta_gammas(k)), factorial(k));
        }
    }

    #[test]
    fn isomorphism_small() {
        for k in 1..=4 {
            assert_eq!(
                theta_image_rank(k, Strategy::Sequential),
                theta_image_rank(k, Strategy::Parallel)
            );
            assert!(theta_is_isomorphism(k, Strategy::default()), "k={k}");
        }
    }
}
