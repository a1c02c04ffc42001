//! The full verification suite, grouped into numbered criteria.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::duality::{self, solve::zeta_eigenspaces};
use crate::exec::Strategy;
use crate::field::FieldElem;
use crate::partitions::{self, Partition};
use crate::qfunctions::{char_table, expansion_mismatches, phi_table, psi_from_phi, psi_table, TableKind};
use crate::report::{Check, Report};
use crate::sergeev::{
    check_presentation, clifford, perm::factorial, subalgebra_dim, theta_gammas, theta_image_rank, xi_product_coeff,
    xk_build, BkElem, Subset,
};

/// The `(n, k)` sizes at which the duality is verified.
pub const DUALITY_SIZES: [(usize, usize); 6] = [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (2, 3)];

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub kmax: usize,
    pub nmax: usize,
    pub seed: u64,
    /// Evaluation points per `(n, k)` for the Schur identity.
    pub points: usize,
    pub strategy: Strategy,
    pub fail_fast: bool,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            kmax: 10,
            nmax: 2,
            seed: 0,
            points: 3,
            strategy: Strategy::default(),
            fail_fast: false,
        }
    }
}

fn cap(limit: usize, kmax: usize) -> std::ops::RangeInclusive<usize> {
    1..=limit.min(kmax)
}

/// Both tables solve their defining expansions identically.
pub fn schur_expansions(config: &SuiteConfig) -> Report {
    let ks: Vec<usize> = cap(10, config.kmax).collect();
    let mut report = Report::new();
    for kind in [TableKind::Phi, TableKind::Psi] {
        let tables = config.strategy.map(&ks, |&k| char_table(k, kind));
        for t in tables {
            let bad = expansion_mismatches(&t);
            let detail = if bad.is_empty() {
                format!("{} columns", t.cols.len())
            } else {
                format!("mismatched columns {bad:?}")
            };
            report.push(Check::new(format!("{kind}-expansion"), bad.is_empty(), detail).k(t.k));
            let integral = t.entries.iter().flatten().all(|v| v.classify().is_rational_integer());
            report.note(format!(
                "integrality {kind} k={}: {}",
                t.k,
                if integral { "all entries are rational integers" } else { "some entries are not rational integers" }
            ));
        }
    }
    report
}

/// Frozen values, each derived by hand and recomputed by an independent oracle in the tests.
pub const GOLDEN: [(TableKind, &str, &str, i64); 6] = [
    (TableKind::Phi, "(2)", "(1,1)", 2),
    (TableKind::Phi, "(3)", "(1,1,1)", 2),
    (TableKind::Phi, "(3)", "(3)", 1),
    (TableKind::Phi, "(2,1)", "(1,1,1)", 2),
    (TableKind::Phi, "(2,1)", "(3)", -2),
    (TableKind::Psi, "(2)", "(1,1)", 4),
];

pub fn golden_values(config: &SuiteConfig) -> Report {
    GOLDEN
        .iter()
        .filter_map(|&(kind, nu, mu, value)| {
            let nu: Partition = nu.parse().expect("golden label");
            let mu: Partition = mu.parse().expect("golden label");
            let k = nu.weight();
            (k <= config.kmax).then(|| {
                let table = char_table(k, kind);
                let got = table.get(&nu, &mu).cloned().unwrap_or_default();
                Check::new(
                    format!("golden-{kind}"),
                    got == FieldElem::from_int(value),
                    format!("nu={nu} mu={mu} value={got} expected={value}"),
                )
                .k(k)
            })
        })
        .collect()
}

/// The relation between the two tables through `X_k`.
pub fn table_bridge(config: &SuiteConfig) -> Report {
    let ks: Vec<usize> = (2..=8.min(config.kmax)).collect();
    let rows = config.strategy.map(&ks, |&k| {
        let phi = phi_table(k);
        let psi = psi_table(k);
        let mut bad = Vec::new();
        for (r, nu) in phi.rows.iter().enumerate() {
            for (c, mu) in phi.cols.iter().enumerate() {
                if psi.entries[r][c] != psi_from_phi(k, nu, mu, &phi.entries[r][c]) {
                    bad.push(format!("{nu};{mu}"));
                }
            }
        }
        let detail = if bad.is_empty() {
            format!("{} entries", phi.rows.len() * phi.cols.len())
        } else {
            format!("mismatches {}", bad.join(" "))
        };
        Check::new("phi-psi-bridge", bad.is_empty(), detail).k(k)
    });
    rows.into_iter().collect()
}

/// Defining relations, the isomorphism dimension count and `dim A_k = k!`.
pub fn presentation_and_isomorphism(config: &SuiteConfig) -> Report {
    let mut report = Report::new();
    for k in 2..=6.min(config.kmax) {
        for rel in check_presentation(k) {
            report.push(Check::new("presentation", rel.pass, "").k(k).label(rel.name));
        }
    }
    let ks: Vec<usize> = (2..=5.min(config.kmax)).collect();
    let ranks = config.strategy.map(&ks, |&k| theta_image_rank(k, Strategy::Sequential));
    for (&k, rank) in ks.iter().zip(ranks) {
        let expected = (1usize << k) * factorial(k);
        report.push(Check::new("theta-isomorphism", rank == expected, format!("rank {rank} of {expected}")).k(k));
    }
    let dims = config.strategy.map(&ks, |&k| subalgebra_dim(k, &theta_gammas(k)));
    for (&k, dim) in ks.iter().zip(dims) {
        report.push(Check::new("spin-subalgebra-dim", dim == factorial(k), format!("{dim} = {}!", k)).k(k));
    }
    report
}

fn random_field(rng: &mut ChaCha8Rng) -> FieldElem {
    let mut c = || crate::field::Rat::from_int(rng.random_range(-3..=3));
    FieldElem::new(c(), c(), c(), c())
}

/// A random element of `C_k` with about half of the `xi_I` present.
pub fn random_clifford(k: usize, rng: &mut ChaCha8Rng) -> BkElem {
    let mut terms = Vec::new();
    for m in 0u32..1 << k {
        if rng.random_bool(0.5) {
            terms.push(((Subset(m), crate::sergeev::Perm::identity(k)), random_field(rng)));
        }
    }
    BkElem::from_terms(k, terms)
}

/// `dim X_k`, the trace formula on random elements, and the chain products.
pub fn clifford_module(config: &SuiteConfig) -> Report {
    let mut report = Report::new();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for k in cap(6, config.kmax) {
        let x = xk_build(k);
        let expected_dim = 1usize << k.div_ceil(2);
        report.push(Check::new("clifford-module-dim", x.dim() == expected_dim, format!("{} = {expected_dim}", x.dim())).k(k));
        let factor = FieldElem::from_int(1 << k.div_ceil(2));
        let mut bad = 0;
        for _ in 0..200 {
            let c = random_clifford(k, &mut rng);
            if x.character(&c) != &factor * &clifford::scalar_part(&c) {
                bad += 1;
            }
        }
        report.push(Check::new("clifford-trace-formula", bad == 0, format!("{bad} of 200 random elements differ")).k(k));
    }
    for k in cap(8, config.kmax) {
        let mut bad = Vec::new();
        for mu in partitions::odd(k) {
            let l = mu.len();
            let sign = if ((k - l) / 2) % 2 == 0 { 1 } else { -1 };
            let expected = FieldElem::from_int(sign * (1 << k.div_ceil(2)));
            if xi_product_coeff(&mu).expect("odd partition") != expected {
                bad.push(mu.to_string());
            }
        }
        report.push(Check::new("chain-product-character", bad.is_empty(), bad.join(" ")).k(k));
    }
    report
}

/// The sizes in `DUALITY_SIZES` allowed by the configured limits.
pub fn duality_sizes(config: &SuiteConfig) -> Vec<(usize, usize)> {
    DUALITY_SIZES
        .iter()
        .copied()
        .filter(|&(n, k)| n <= config.nmax && k <= config.kmax.min(3))
        .collect()
}

/// Supercentralizer equalities, the Schur identity and the multiplicity accounting.
pub fn duality_checks(config: &SuiteConfig) -> (Report, Report, Report) {
    let sizes = duality_sizes(config);
    let results = config.strategy.map(&sizes, |&(n, k)| {
        let points = duality::default_points(n, config.points);
        (
            duality::verify_duality(n, k, config.strategy),
            duality::schur_identity_check(n, k, &points, config.strategy),
            duality::multiplicity_accounting(n, k, config.strategy),
        )
    });
    let mut out = (Report::new(), Report::new(), Report::new());
    for (a, b, c) in results {
        out.0.extend(a);
        out.1.extend(b);
        out.2.extend(c);
    }
    out
}

/// Euler's identity on counts and equal eigenspace dimensions.
pub fn combinatorics(config: &SuiteConfig) -> Report {
    let mut report = Report::new();
    for k in cap(30, 3 * config.kmax) {
        let (dp, op) = (partitions::strict(k).len(), partitions::odd(k).len());
        report.push(Check::new("strict-odd-count", dp == op, format!("{dp} = {op}")).k(k));
    }
    for (n, k) in duality_sizes(config) {
        let spaces = zeta_eigenspaces(n, k).expect("graded eigenspaces");
        let expected = duality::verify::tensor_dim(n, k) >> (k / 2);
        let dims: Vec<usize> = spaces.iter().map(|(_, s)| s.dim()).collect();
        report.push(
            Check::new("eigenspace-dims", dims.iter().all(|&d| d == expected), format!("{dims:?} each {expected}"))
                .n(n)
                .k(k),
        );
    }
    report
}

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "character tables solve the Q-function expansions"),
    (2, "hand-derived table values"),
    (3, "phi/psi bridge through X_k"),
    (4, "presentation and isomorphism"),
    (5, "Clifford module"),
    (6, "mutual supercentralizers"),
    (7, "Schur identity from the duality"),
    (8, "multiplicity accounting"),
    (9, "combinatorial sanity"),
];

/// Runs every criterion in order; stops after the first failing one when
/// `fail_fast` is set.
pub fn verify_all(config: &SuiteConfig) -> Vec<(u8, Report)> {
    let mut out: Vec<(u8, Report)> = Vec::new();
    let stop = |out: &Vec<(u8, Report)>| config.fail_fast && out.iter().any(|(_, r)| !r.all_pass());
    type Criterion = fn(&SuiteConfig) -> Report;
    let simple: [(u8, Criterion); 5] = [
        (1, schur_expansions),
        (2, golden_values),
        (3, table_bridge),
        (4, presentation_and_isomorphism),
        (5, clifford_module),
    ];
    for (id, f) in simple {
        out.push((id, f(config)));
        if stop(&out) {
            return out;
        }
    }
    let (sc, schur, mult) = duality_checks(config);
    for (id, r) in [(6, sc), (7, schur), (8, mult)] {
        out.push((id, r));
        if stop(&out) {
            return out;
        }
    }
    out.push((9, combinatorics(config)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_range_has_no_checks() {
        let config = SuiteConfig {
            kmax: 0,
            ..SuiteConfig::default()
        };
        let total: usize = verify_all(&config).iter().map(|(_, r)| r.checks.len()).sum();
        assert_eq!(total, 0);
    }

    #[test]
    fn small_suite_passes() {
        let config = SuiteConfig {
            kmax: 3,
            nmax: 1,
            points: 1,
            ..SuiteConfig::default()
        };
        for (id, r) in verify_all(&config) {
            assert!(r.all_pass(), "criterion {id}: {r}");
        }
    }

    #[test]
    fn seeded_elements_are_reproducible() {
        let a = random_clifford(4, &mut ChaCha8Rng::seed_from_u64(7));
        let b = random_clifford(4, &mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a, b);
        assert!(a.is_clifford());
    }
}
