//! Exact solvers on `End(W)`: generated subalgebras, supercentralizers,
//! simultaneous eigenspaces and restriction to invariant subspaces.

use std::collections::HashMap;

use super::actions::PsiRep;
use super::space::{EndoMatrix, TensorSpace};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::linalg::{Echelon, SparseVec};

/// Basis of the unital algebra generated by `gens`, found by multiplying
/// known elements on the right by generators until nothing new appears.
pub fn closure(dim: usize, gens: &[EndoMatrix]) -> Vec<EndoMatrix> {
    let mut ech = Echelon::new();
    let mut basis = vec![EndoMatrix::identity(dim)];
    ech.insert(&basis[0].to_vec());
    let mut next = 0;
    while next < basis.len() {
        let x = basis[next].clone();
        next += 1;
        for g in gens {
            let y = x.mul(g);
            if ech.insert(&y.to_vec()) {
                basis.push(y);
            }
        }
    }
    basis
}

/// Homogeneous basis of `{f : f g = (-1)^(deg f deg g) g f for all g}`,
/// degree 0 part first. `grading` gives the degree of each basis vector.
pub fn supercentralizer(gens: &[EndoMatrix], grading: &[u8]) -> Result<Vec<EndoMatrix>> {
    let dim = grading.len();
    let mut degrees = Vec::with_capacity(gens.len());
    for (idx, g) in gens.iter().enumerate() {
        match g.actual_degree(grading) {
            Some(d) if g.degree().is_none_or(|declared| declared == d) => degrees.push(d),
            _ => return Err(Error::NonHomogeneous(idx)),
        }
    }
    // Generators with few entries per column come first, so that their
    // (often single-variable) equations prune unknowns early.
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by_key(|&i| (gens[i].nnz(), i));
    let rows_of: Vec<Vec<SparseVec>> = gens.iter().map(transpose_cols).collect();

    let mut out = Vec::new();
    for alpha in 0..2u8 {
        // Unknown f[a, b] exists when deg a = deg b + alpha.
        let mut var: HashMap<(usize, usize), usize> = HashMap::new();
        let mut vars = Vec::new();
        for b in 0..dim {
            for a in 0..dim {
                if grading[a] == (grading[b] + alpha) % 2 {
                    var.insert((a, b), vars.len());
                    vars.push((a, b));
                }
            }
        }
        let mut ech = Echelon::new();
        for &gi in &order {
            let g = &gens[gi];
            let sign = if alpha * degrees[gi] == 1 {
                -FieldElem::one()
            } else {
                FieldElem::one()
            };
            let target = (alpha + degrees[gi]) % 2;
            // (f g)[a, b] - sign (g f)[a, b] = 0 for every (a, b) of degree alpha + deg g.
            for b in 0..dim {
                for a in 0..dim {
                    if grading[a] != (grading[b] + target) % 2 {
                        continue;
                    }
                    let mut eq = Vec::new();
                    for (t, x) in g.col(b).iter() {
                        if let Some(&v) = var.get(&(a, t)) {
                            eq.push((v, x.clone()));
                        }
                    }
                    for (t, x) in rows_of[gi][a].iter() {
                        if let Some(&v) = var.get(&(t, b)) {
                            eq.push((v, -&(&sign * x)));
                        }
                    }
                    let eq = SparseVec::from_entries(eq);
                    if !eq.is_zero() {
                        ech.insert(&eq);
                    }
                }
            }
        }
        for sol in ech.nullspace(vars.len()) {
            let triples = sol.iter().map(|(v, x)| {
                let (a, b) = vars[v];
                (a, b, x.clone())
            });
            out.push(EndoMatrix::from_triples(dim, triples.collect::<Vec<_>>(), Some(alpha)));
        }
    }
    Ok(out)
}

/// Row `a` of `m` as a sparse vector over columns.
fn transpose_cols(m: &EndoMatrix) -> Vec<SparseVec> {
    let mut rows: Vec<Vec<(usize, FieldElem)>> = vec![Vec::new(); m.dim()];
    for (j, col) in m.cols().iter().enumerate() {
        for (r, v) in col.iter() {
            rows[r].push((j, v.clone()));
        }
    }
    rows.into_iter().map(SparseVec::from_sorted).collect()
}

/// Whether two families of matrices span the same subspace of `End`.
pub fn same_span(a: &[EndoMatrix], b: &[EndoMatrix]) -> bool {
    let va: Vec<SparseVec> = a.iter().map(EndoMatrix::to_vec).collect();
    let vb: Vec<SparseVec> = b.iter().map(EndoMatrix::to_vec).collect();
    crate::linalg::same_span(&va, &vb)
}

pub fn span_dim(a: &[EndoMatrix]) -> usize {
    let v: Vec<SparseVec> = a.iter().map(EndoMatrix::to_vec).collect();
    crate::linalg::rank(&v)
}

/// A graded subspace of `W` with a homogeneous column basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
    degrees: Vec<u8>,
    coords: Echelon,
}

impl Subspace {
    pub fn new(ambient_grading: &[u8], basis: Vec<SparseVec>) -> Result<Subspace> {
        let mut degrees = Vec::with_capacity(basis.len());
        let mut coords = Echelon::tracking();
        for (idx, v) in basis.iter().enumerate() {
            let mut ds = v.iter().map(|(i, _)| ambient_grading[i]);
            let d = ds.next().unwrap_or(0);
            if ds.any(|e| e != d) {
                return Err(Error::NonHomogeneous(idx));
            }
            degrees.push(d);
            if !coords.insert(v) {
                return Err(Error::Singular);
            }
        }
        Ok(Subspace {
            ambient: ambient_grading.len(),
            basis,
            degrees,
            coords,
        })
    }

    pub fn whole(grading: &[u8]) -> Subspace {
        Subspace::new(grading, (0..grading.len()).map(SparseVec::unit).collect()).expect("unit vectors")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn degrees(&self) -> &[u8] {
        &self.degrees
    }

    pub fn graded_dim(&self) -> (usize, usize) {
        let odd = self.degrees.iter().filter(|&&d| d == 1).count();
        (self.dim() - odd, odd)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.coords.contains(v)
    }

    /// Matrix of `m` on this subspace, in the coordinates of its basis.
    pub fn restrict(&self, m: &EndoMatrix) -> Result<EndoMatrix> {
        let cols = self
            .basis
            .iter()
            .map(|v| self.coords.coordinates(&m.apply(v)).ok_or(Error::NotInvariant))
            .collect::<Result<Vec<_>>>()?;
        Ok(EndoMatrix::from_columns(cols, m.degree()))
    }
}

/// Trace of `m` restricted to `s`; fails unless `m` stabilizes `s`.
pub fn trace_on(s: &Subspace, m: &EndoMatrix) -> Result<FieldElem> {
    Ok(s.restrict(m)?.trace())
}

/// `Psi(zeta_i) = i Psi(tau_{2i-1}) Psi(tau_{2i})` for `i = 1..floor(k/2)`.
pub fn zetas(rep: &PsiRep) -> Vec<EndoMatrix> {
    (1..=rep.space.k / 2)
        .map(|i| {
            rep.tau_i[2 * i - 2]
                .mul(&rep.tau_i[2 * i - 1])
                .scale(&FieldElem::i())
        })
        .collect()
}

/// All `eps` in `Z_2^r`, lexicographic.
pub fn sign_vectors(r: usize) -> Vec<Vec<u8>> {
    (0..1usize << r)
        .map(|m| (0..r).map(|i| (m >> (r - 1 - i) & 1) as u8).collect())
        .collect()
}

pub fn format_eps(eps: &[u8]) -> String {
    let body: Vec<String> = eps.iter().map(u8::to_string).collect();
    format!("({})", body.join(","))
}

/// `W^eps = intersection of ker(Psi(zeta_i) - (-1)^eps_i)`, kernels taken
/// in the order `zeta_1, zeta_2, ..`.
pub fn zeta_eigenspace(rep: &PsiRep, zetas: &[EndoMatrix], eps: &[u8]) -> Result<Subspace> {
    let space = rep.space;
    let dim = space.dim();
    let mut ech = Echelon::new();
    for (z, &e) in zetas.iter().zip(eps) {
        let shift = FieldElem::from_int(if e == 0 { 1 } else { -1 });
        let m = z.sub(&EndoMatrix::identity(dim).scale(&shift));
        for row in transpose_cols(&m) {
            if !row.is_zero() {
                ech.insert(&row);
            }
        }
    }
    Subspace::new(&space.grading(), ech.nullspace(dim))
}

/// Every `W^eps`, keyed by `eps` in lexicographic order.
pub fn zeta_eigenspaces(n: usize, k: usize) -> Result<Vec<(Vec<u8>, Subspace)>> {
    let rep = PsiRep::new(n, k);
    let z = zetas(&rep);
    sign_vectors(k / 2)
        .into_iter()
        .map(|eps| zeta_eigenspace(&rep, &z, &eps).map(|s| (eps, s)))
        .collect()
}

pub fn whole_space(n: usize, k: usize) -> Subspace {
    Subspace::whole(&TensorSpace::new(n, k).grading())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::actions::{psi_gens, theta_gens};

    #[test]
    fn closures() {
        assert_eq!(closure(4, &[]).len(), 1);
        let (tau, _) = psi_gens(1, 1);
        assert_eq!(closure(2, &[tau]).len(), 2);
        let (tau, sigma) = psi_gens(2, 2);
        let mut gens = vec![tau];
        gens.extend(sigma);
        assert_eq!(closure(16, &gens).len(), 8);
    }

    #[test]
    fn centralizer_of_identity_is_everything() {
        let grading = TensorSpace::new(1, 2).grading();
        let sc = supercentralizer(&[EndoMatrix::identity(4)], &grading).unwrap();
        assert_eq!(sc.len(), 16);
        assert_eq!(sc.iter().filter(|m| m.degree() == Some(1)).count(), 8);
    }

    #[test]
    fn mixed_generator_is_rejected() {
        let grading = [0, 1];
        let m = EndoMatrix::from_triples(2, [(0, 0, FieldElem::one()), (0, 1, FieldElem::one())], None);
        assert_eq!(supercentralizer(&[m], &grading), Err(Error::NonHomogeneous(0)));
    }

    #[test]
    fn mutual_centralizers_small() {
        let (n, k) = (1, 2);
        let grading = TensorSpace::new(n, k).grading();
        let theta = theta_gens(n, k);
        let (tau, sigma) = psi_gens(n, k);
        let mut psi = vec![tau];
        psi.extend(sigma);
        let sc = supercentralizer(&theta, &grading).unwrap();
        assert!(same_span(&sc, &closure(4, &psi)));
        let sc = supercentralizer(&psi, &grading).unwrap();
        assert!(same_span(&sc, &closure(4, &theta)));
    }

    #[test]
    fn eigenspaces() {
        let spaces = zeta_eigenspaces(1, 2).unwrap();
        assert_eq!(spaces.len(), 2);
        for (_, s) in &spaces {
            assert_eq!(s.dim(), 2);
            assert_eq!(trace_on(s, &EndoMatrix::identity(4)).unwrap(), FieldElem::from_int(2));
        }
        let all: Vec<SparseVec> = spaces.iter().flat_map(|(_, s)| s.basis().to_vec()).collect();
        assert_eq!(crate::linalg::rank(&all), 4);
        let w = whole_space(2, 2);
        assert_eq!(trace_on(&w, &EndoMatrix::identity(16)).unwrap(), FieldElem::from_int(16));
        let (tau, _) = psi_gens(2, 2);
        assert!(trace_on(&w, &tau).unwrap().is_zero());
        // tau_1 swaps the two eigenspaces.
        assert_eq!(trace_on(&spaces[0].1, &psi_gens(1, 2).0), Err(Error::NotInvariant));
    }
}
