//! End-to-end checks of the duality between `A_k` (inside `B_k`) and `q(n)`.

use super::actions::{diag_action, theta_gens, PsiRep};
use super::solve::{
    closure, format_eps, same_span, sign_vectors, span_dim, supercentralizer, trace_on, zeta_eigenspace, zetas,
    Subspace,
};
use super::space::{EndoMatrix, TensorSpace};
use crate::exec::Strategy;
use crate::field::FieldElem;
use crate::linalg::SparseVec;
use crate::partitions::{self, Partition};
use crate::qfunctions::{phi_table, OmegaElem, QBasis};
use crate::report::{Check, Report};
use crate::sergeev::{gamma_mu, theta_gammas};

/// `count` points of length `n` whose coordinates are consecutive primes.
pub fn default_points(n: usize, count: usize) -> Vec<Vec<FieldElem>> {
    let mut primes = Vec::new();
    let mut candidate = 2i64;
    while primes.len() < n * count {
        if (2..candidate).take_while(|d| d * d <= candidate).all(|d| candidate % d != 0) {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
        .chunks(n.max(1))
        .take(count)
        .map(|c| c.iter().map(|&p| FieldElem::from_int(p)).collect())
        .collect()
}

fn format_point(x: &[FieldElem]) -> String {
    let body: Vec<String> = x.iter().map(ToString::to_string).collect();
    format!("({})", body.join(","))
}

/// Shared per-`(n, k)` data.
struct Setup {
    n: usize,
    k: usize,
    rep: PsiRep,
    grading: Vec<u8>,
    theta: Vec<EndoMatrix>,
    gammas: Vec<EndoMatrix>,
    zetas: Vec<EndoMatrix>,
    spaces: Vec<(Vec<u8>, Subspace)>,
}

impl Setup {
    fn new(n: usize, k: usize) -> Setup {
        let rep = PsiRep::new(n, k);
        let grading = rep.space.grading();
        let gammas = theta_gammas(k)
            .iter()
            .map(|g| rep.act(g).expect("same k"))
            .collect();
        let zetas = zetas(&rep);
        let spaces = sign_vectors(k / 2)
            .into_iter()
            .map(|eps| {
                let s = zeta_eigenspace(&rep, &zetas, &eps).expect("zeta is even");
                (eps, s)
            })
            .collect();
        Setup {
            n,
            k,
            theta: theta_gens(n, k),
            grading,
            gammas,
            zetas,
            spaces,
            rep,
        }
    }

    fn psi_gens(&self) -> Vec<EndoMatrix> {
        let mut g = vec![self.rep.tau.clone()];
        g.extend(self.rep.sigma.iter().cloned());
        g
    }

    fn check(&self, name: &str, pass: bool, detail: String) -> Check {
        Check::new(name, pass, detail).n(self.n).k(self.k)
    }
}

fn supercommutes(a: &EndoMatrix, b: &EndoMatrix) -> bool {
    let ba = b.mul(a);
    let sign_flip = a.degree().unwrap_or(0) * b.degree().unwrap_or(0) == 1;
    a.mul(b).with_degree(None) == if sign_flip { ba.neg() } else { ba }.with_degree(None)
}

fn restrict_all(s: &Subspace, ms: &[EndoMatrix]) -> Vec<EndoMatrix> {
    ms.iter()
        .map(|m| s.restrict(m).expect("operator stabilizes the eigenspace"))
        .collect()
}

enum Task<'a> {
    Whole,
    Eigen(&'a [u8], &'a Subspace),
}

fn whole_space_checks(setup: &Setup) -> Vec<Check> {
    let dim = setup.rep.space.dim();
    let psi = setup.psi_gens();
    let mut out = Vec::new();
    let sc = supercentralizer(&setup.theta, &setup.grading).expect("homogeneous generators");
    let cl = closure(dim, &psi);
    out.push(setup.check(
        "supercentralizer(theta)=closure(psi)",
        same_span(&sc, &cl),
        format!("dims {} {}", sc.len(), cl.len()),
    ));
    let sc = supercentralizer(&psi, &setup.grading).expect("homogeneous generators");
    let cl = closure(dim, &setup.theta);
    out.push(setup.check(
        "supercentralizer(psi)=closure(theta)",
        same_span(&sc, &cl),
        format!("dims {} {}", sc.len(), cl.len()),
    ));
    out
}

fn eigenspace_checks(setup: &Setup, eps: &[u8], s: &Subspace) -> Vec<Check> {
    let tag = |c: Check| c.eps(format_eps(eps));
    let mut out = Vec::new();
    let theta = restrict_all(s, &setup.theta);
    let gammas = restrict_all(s, &setup.gammas);
    let grading = s.degrees();
    let dim = s.dim();
    if setup.k % 2 == 0 {
        let sc = supercentralizer(&theta, grading).expect("homogeneous generators");
        let cl = closure(dim, &gammas);
        out.push(tag(setup.check(
            "eigenspace-supercentralizer(theta)=closure(gamma)",
            same_span(&sc, &cl),
            format!("dims {} {}", sc.len(), cl.len()),
        )));
        let sc = supercentralizer(&gammas, grading).expect("homogeneous generators");
        let cl = closure(dim, &theta);
        out.push(tag(setup.check(
            "eigenspace-supercentralizer(gamma)=closure(theta)",
            same_span(&sc, &cl),
            format!("dims {} {}", sc.len(), cl.len()),
        )));
    } else {
        let unit = s
            .restrict(&setup.rep.tau_i[setup.k - 1])
            .expect("tau_k commutes with every zeta");
        let unit_ok = unit.actual_degree(grading) == Some(1)
            && unit.mul(&unit) == EndoMatrix::identity(dim)
            && theta.iter().chain(&gammas).all(|g| supercommutes(&unit, g));
        out.push(tag(setup.check("eigenspace-odd-unit", unit_ok, "tau_k restricted".into())));

        let sc = supercentralizer(&theta, grading).expect("homogeneous generators");
        let cl = closure(dim, &gammas);
        let a_dim = span_dim(&cl);
        out.push(tag(setup.check(
            "eigenspace-dimension-doubling",
            sc.len() == 2 * a_dim,
            format!("{} = 2*{}", sc.len(), a_dim),
        )));
        let mut with_unit = gammas.clone();
        with_unit.push(unit.clone());
        let cl = closure(dim, &with_unit);
        out.push(tag(setup.check(
            "eigenspace-supercentralizer(theta)=closure(gamma,unit)",
            same_span(&sc, &cl),
            format!("dims {} {}", sc.len(), cl.len()),
        )));
        let sc = supercentralizer(&gammas, grading).expect("homogeneous generators");
        let mut with_unit = theta.clone();
        with_unit.push(unit);
        let cl = closure(dim, &with_unit);
        out.push(tag(setup.check(
            "eigenspace-supercentralizer(gamma)=closure(theta,unit)",
            same_span(&sc, &cl),
            format!("dims {} {}", sc.len(), cl.len()),
        )));
    }
    out
}

fn eigenspace_structure(setup: &Setup) -> Vec<Check> {
    let dim = setup.rep.space.dim();
    let id = EndoMatrix::identity(dim);
    let mut out = Vec::new();
    let mut zeta_ok = true;
    for (i, z) in setup.zetas.iter().enumerate() {
        zeta_ok &= z.mul(z).with_degree(Some(0)) == id;
        zeta_ok &= z.actual_degree(&setup.grading) == Some(0);
        for w in &setup.zetas[i + 1..] {
            zeta_ok &= z.mul(w) == w.mul(z);
        }
        for g in setup.theta.iter().chain(&setup.gammas) {
            zeta_ok &= z.mul(g).with_degree(None) == g.mul(z).with_degree(None);
        }
    }
    out.push(setup.check(
        "zeta-commuting-involutions",
        zeta_ok,
        format!("{} involutions", setup.zetas.len()),
    ));
    let expected = dim >> (setup.k / 2);
    let dims: Vec<usize> = setup.spaces.iter().map(|(_, s)| s.dim()).collect();
    let all: Vec<SparseVec> = setup.spaces.iter().flat_map(|(_, s)| s.basis().to_vec()).collect();
    let rank = crate::linalg::rank(&all);
    out.push(setup.check(
        "eigenspace-decomposition",
        rank == dim && dims.iter().all(|&d| d == expected),
        format!("dims {dims:?} rank {rank} of {dim}"),
    ));
    out
}

/// Mutual supercentralizer equalities on `W` and on every `W^eps`.
pub fn verify_duality(n: usize, k: usize, strategy: Strategy) -> Report {
    let setup = Setup::new(n, k);
    let mut tasks = vec![Task::Whole];
    tasks.extend(setup.spaces.iter().map(|(e, s)| Task::Eigen(e, s)));
    let mut report: Report = eigenspace_structure(&setup).into_iter().collect();
    for checks in strategy.map(&tasks, |t| match t {
        Task::Whole => whole_space_checks(&setup),
        Task::Eigen(eps, s) => eigenspace_checks(&setup, eps, s),
    }) {
        report.checks.extend(checks);
    }
    report
}

fn power_sum_monomial(mu: &Partition, x: &[FieldElem]) -> FieldElem {
    OmegaElem::p_monomial(mu).expect("odd").evaluate(x)
}

/// Traces of `Psi(gamma^mu) diag(x)` on each `W^eps` against both sides of
/// the expansion of `(sqrt2)^l(mu) p_mu` in Q-functions.
pub fn schur_identity_check(n: usize, k: usize, points: &[Vec<FieldElem>], strategy: Strategy) -> Report {
    let setup = Setup::new(n, k);
    let table = phi_table(k);
    let basis = QBasis::new(k);
    let qs: Vec<OmegaElem> = table.rows.iter().map(|nu| basis.schur_q(nu).expect("strict")).collect();
    let odd_factor = if k % 2 == 1 { FieldElem::sqrt2() } else { FieldElem::one() };
    let mut jobs = Vec::new();
    for (c, mu) in table.cols.iter().enumerate() {
        for x in points {
            jobs.push((c, mu, x));
        }
    }
    let gamma_ops: Vec<EndoMatrix> = strategy.map(&table.cols, |mu| {
        setup.rep.act(&gamma_mu(mu, k).expect("weight k")).expect("same k")
    });
    let results = strategy.map(&jobs, |&(c, mu, x)| {
        let mut out = Vec::new();
        if x.len() != n {
            out.push(setup.check("schur-identity", false, format!("point {} has wrong length", format_point(x))));
            return out;
        }
        let t = gamma_ops[c].mul(&diag_action(x, n, k).expect("length checked"));
        let direct = &(&FieldElem::sqrt2_pow(mu.len() as i32) * &power_sum_monomial(mu, x)) * &odd_factor;
        let via_q: FieldElem = table
            .rows
            .iter()
            .zip(&table.entries)
            .zip(&qs)
            .map(|((nu, row), q)| {
                let w = FieldElem::sqrt2_pow(-((nu.len() + nu.epsilon() as usize) as i32));
                &(&row[c] * &w) * &q.evaluate(x)
            })
            .sum::<FieldElem>();
        let via_q = &via_q * &odd_factor;
        for (eps, s) in &setup.spaces {
            let check = match trace_on(s, &t) {
                Ok(trace) => setup.check(
                    "schur-identity",
                    trace == direct && trace == via_q,
                    format!(
                        "mu={mu} x={} trace={trace} power-sum={direct} q-expansion={via_q}",
                        format_point(x)
                    ),
                ),
                Err(e) => setup.check("schur-identity", false, format!("mu={mu}: {e}")),
            };
            out.push(check.eps(format_eps(eps)));
        }
        out
    });
    results.into_iter().flatten().collect()
}

/// `(sqrt2)^(d(nu) - l(nu)) Q_nu(1, .., 1)` with `n` ones.
pub fn predicted_dim_u(nu: &Partition, n: usize, basis: &QBasis) -> FieldElem {
    let q = basis.schur_q(nu).expect("strict");
    let ones = vec![FieldElem::one(); n];
    &FieldElem::sqrt2_pow(nu.d() as i32 - nu.len() as i32) * &q.evaluate(&ones)
}

/// Character accounting of each `W^eps` as a sum over strict partitions.
pub fn multiplicity_accounting(n: usize, k: usize, strategy: Strategy) -> Report {
    let setup = Setup::new(n, k);
    let table = phi_table(k);
    let basis = QBasis::new(k);
    let mut report = Report::new();
    let dim_u: Vec<FieldElem> = table.rows.iter().map(|nu| predicted_dim_u(nu, n, &basis)).collect();
    for (nu, d) in table.rows.iter().zip(&dim_u) {
        report.push(setup.check(
            "dimU-vanishing",
            d.is_zero() == (nu.len() > n),
            format!("nu={nu} l={} dimU={d}", nu.len()),
        ));
    }
    let half = FieldElem::frac(1, 2);
    let weights: Vec<FieldElem> = table
        .rows
        .iter()
        .zip(&dim_u)
        .map(|(nu, d)| {
            if k % 2 == 0 && nu.epsilon() == 1 {
                d * &half
            } else {
                d.clone()
            }
        })
        .collect();
    let ones = Partition::ones(k);
    let id_col = table.cols.iter().position(|m| *m == ones).expect("(1^k) is odd");
    let predicted_dim: FieldElem = weights
        .iter()
        .zip(&table.entries)
        .map(|(w, row)| w * &row[id_col])
        .sum();
    for (eps, s) in &setup.spaces {
        report.push(
            setup
                .check(
                    "eigenspace-dimension",
                    FieldElem::from_int(s.dim() as i64) == predicted_dim,
                    format!("{} = {predicted_dim}", s.dim()),
                )
                .eps(format_eps(eps)),
        );
    }
    let jobs: Vec<(usize, &Partition)> = table.cols.iter().enumerate().collect();
    let results = strategy.map(&jobs, |&(c, mu)| {
        let op = setup.rep.act(&gamma_mu(mu, k).expect("weight k")).expect("same k");
        let predicted: FieldElem = weights
            .iter()
            .zip(&table.entries)
            .map(|(w, row)| w * &row[c])
            .sum();
        setup
            .spaces
            .iter()
            .map(|(eps, s)| {
                let check = match trace_on(s, &op) {
                    Ok(t) => setup.check(
                        "character-accounting",
                        t == predicted,
                        format!("mu={mu} trace={t} predicted={predicted}"),
                    ),
                    Err(e) => setup.check("character-accounting", false, format!("mu={mu}: {e}")),
                };
                check.eps(format_eps(eps))
            })
            .collect::<Vec<_>>()
    });
    report.checks.extend(results.into_iter().flatten());
    report
}

/// All three duality reports for one `(n, k)`.
pub fn run_duality(n: usize, k: usize, points: &[Vec<FieldElem>], strategy: Strategy) -> Report {
    let mut report = verify_duality(n, k, strategy);
    report.extend(schur_identity_check(n, k, points, strategy));
    report.extend(multiplicity_accounting(n, k, strategy));
    report
}

/// `dim W = (2n)^k`.
pub fn tensor_dim(n: usize, k: usize) -> usize {
    TensorSpace::new(n, k).dim()
}

/// Strict partitions of `k` with at most `n` parts.
pub fn occurring(n: usize, k: usize) -> Vec<Partition> {
    partitions::strict(k).into_iter().filter(|nu| nu.len() <= n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_pass(report: &Report) {
        let failures: Vec<String> = report.failures().map(ToString::to_string).collect();
        assert!(failures.is_empty(), "{}", failures.join("\n"));
        assert!(!report.checks.is_empty());
    }

    #[test]
    fn primes() {
        let pts = default_points(2, 3);
        let f = |v: i64| FieldElem::from_int(v);
        assert_eq!(pts, vec![vec![f(2), f(3)], vec![f(5), f(7)], vec![f(11), f(13)]]);
    }

    #[test]
    fn smallest_cases() {
        for (n, k) in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3)] {
            assert_pass(&run_duality(n, k, &default_points(n, 2), Strategy::default()));
        }
    }

    #[test]
    fn hand_values() {
        let basis = QBasis::new(3);
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(predicted_dim_u(&p(&[2]), 1, &basis), FieldElem::from_int(2));
        assert_eq!(predicted_dim_u(&p(&[3]), 2, &basis), FieldElem::from_int(12));
        assert_eq!(predicted_dim_u(&p(&[2, 1]), 2, &basis), FieldElem::from_int(4));
        assert!(predicted_dim_u(&p(&[2, 1]), 1, &basis).is_zero());
        assert_eq!(occurring(1, 3), vec![p(&[3])]);
    }
}
