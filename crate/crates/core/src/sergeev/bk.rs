//! The Sergeev algebra `B_k` in the normal form `sum c_{I,w} xi_I sigma_w`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};

use super::perm::{factorial, Perm};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::linalg::SparseVec;

static SIGN_FAULT: AtomicBool = AtomicBool::new(false);

/// Test hook: when set, the Clifford reordering sign is dropped in every
/// product, so the verification suite has something to catch.
#[doc(hidden)]
pub fn inject_sign_fault(on: bool) {
    SIGN_FAULT.store(on, AtomicOrdering::SeqCst);
}

/// Subset of `{1..k}` as a bitmask, bit `j-1` for the point `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub fn from_points(points: &[usize]) -> Subset {
        Subset(points.iter().fold(0, |m, &p| m | 1 << (p - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, point: usize) -> bool {
        self.0 >> (point - 1) & 1 == 1
    }

    /// Points in ascending order, 1-based.
    pub fn points(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |b| self.0 >> b & 1 == 1).map(|b| b + 1)
    }
}

impl Ord for Subset {
    /// By cardinality, then lexicographically on the ascending point lists.
    fn cmp(&self, other: &Subset) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.points().cmp(other.points()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Subset) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("xi{")?;
        for (n, p) in self.points().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Product of two normal-form basis elements:
/// `(xi_I s_w)(xi_J s_v) = sign * xi_{I ^ w(J)} s_{w o v}`.
/// Returns `(negative, subset, perm)`.
pub fn mul_basis(i: Subset, w: &Perm, j: Subset, v: &Perm) -> (bool, Subset, Perm) {
    // s_w xi_J s_w^-1 is the ordered product of xi_{w(j)}, j in J ascending;
    // sorting the word `I ++ w(J)` costs one sign per inversion of distinct points.
    let moved: Vec<usize> = j.points().map(|p| w.apply(p - 1) + 1).collect();
    let mut inversions = 0usize;
    let mut wj_mask = 0u32;
    for (n, &a) in moved.iter().enumerate() {
        inversions += (i.0 >> a).count_ones() as usize;
        inversions += moved[..n].iter().filter(|&&b| b > a).count();
        wj_mask |= 1 << (a - 1);
    }
    let mut negative = inversions % 2 == 1;
    if SIGN_FAULT.load(AtomicOrdering::Relaxed) && inversions > 0 {
        negative = false;
    }
    (negative, Subset(i.0 ^ wj_mask), w.compose(v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BkElem {
    k: usize,
    terms: BTreeMap<(Subset, Perm), FieldElem>,
}

impl BkElem {
    pub fn zero(k: usize) -> BkElem {
        BkElem {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize) -> BkElem {
        BkElem::basis(k, Subset(0), Perm::identity(k))
    }

    pub fn scalar(k: usize, c: FieldElem) -> BkElem {
        BkElem::one(k).scale(&c)
    }

    pub fn basis(k: usize, subset: Subset, perm: Perm) -> BkElem {
        assert_eq!(perm.k(), k);
        assert!(subset.0 >> k == 0, "subset outside 1..={k}");
        let mut terms = BTreeMap::new();
        terms.insert((subset, perm), FieldElem::one());
        BkElem { k, terms }
    }

    /// The Clifford monomial `xi_I` (ascending product).
    pub fn xi(k: usize, points: &[usize]) -> BkElem {
        BkElem::basis(k, Subset::from_points(points), Perm::identity(k))
    }

    /// `sigma_w` for a permutation `w`.
    pub fn sigma(perm: Perm) -> BkElem {
        BkElem::basis(perm.k(), Subset(0), perm)
    }

    pub fn from_terms(k: usize, terms: impl IntoIterator<Item = ((Subset, Perm), FieldElem)>) -> BkElem {
        let mut out = BkElem::zero(k);
        for (key, c) in terms {
            out.add_term(key, c);
        }
        out
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Subset, &Perm, &FieldElem)> {
        self.terms.iter().map(|((s, p), c)| (s, p, c))
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, subset: Subset, perm: &Perm) -> FieldElem {
        self.terms
            .get(&(subset, perm.clone()))
            .cloned()
            .unwrap_or_default()
    }

    /// Whether every permutation component is the identity.
    pub fn is_clifford(&self) -> bool {
        self.terms.keys().all(|(_, p)| p.is_identity())
    }

    /// `Some(alpha)` when every term has `|I| = alpha mod 2`; zero counts as even.
    pub fn degree(&self) -> Option<u8> {
        let mut degrees = self.terms.keys().map(|(s, _)| (s.len() % 2) as u8);
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, key: (Subset, Perm), c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &FieldElem) -> BkElem {
        if c.is_zero() {
            return BkElem::zero(self.k);
        }
        BkElem {
            k: self.k,
            terms: self.terms.iter().map(|(key, v)| (key.clone(), v * c)).collect(),
        }
    }

    fn check_size(&self, other: &BkElem) -> Result<()> {
        if self.k != other.k {
            return Err(Error::SizeMismatch {
                left: self.k,
                right: other.k,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &BkElem) -> Result<BkElem> {
        self.check_size(other)?;
        let mut out = self.clone();
        for (key, c) in &other.terms {
            out.add_term(key.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &BkElem) -> Result<BkElem> {
        self.check_size(other)?;
        let mut out = BkElem::zero(self.k);
        for ((i, w), a) in &self.terms {
            for ((j, v), b) in &other.terms {
                let (negative, s, p) = mul_basis(*i, w, *j, v);
                let c = a * b;
                out.add_term((s, p), if negative { -c } else { c });
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> BkElem {
        (0..e).fold(BkElem::one(self.k), |acc, _| &acc * self)
    }

    /// Coordinates on the basis ordered by `(rank(w), mask(I))`.
    pub fn to_vec(&self) -> SparseVec {
        let width = 1usize << self.k;
        SparseVec::from_entries(
            self.terms
                .iter()
                .map(|((s, p), c)| (p.rank() * width + s.0 as usize, c.clone()))
                .collect(),
        )
    }

    pub fn from_vec(k: usize, v: &SparseVec) -> BkElem {
        let width = 1usize << k;
        BkElem::from_terms(
            k,
            v.iter()
                .map(|(idx, c)| ((Subset((idx % width) as u32), Perm::unrank(k, idx / width)), c.clone())),
        )
    }
}

/// `dim B_k = 2^k k!`.
pub fn dimension(k: usize) -> usize {
    (1usize << k) * factorial(k)
}

impl fmt::Display for BkElem {
    /// `c * xi{1,3} * s(2 1 3)` terms joined by `+`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, ((s, p), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) * {s} * {p}")?;
        }
        Ok(())
    }
}

impl Add for &BkElem {
    type Output = BkElem;
    fn add(self, rhs: &BkElem) -> BkElem {
        self.try_add(rhs).expect("same k")
    }
}

impl Sub for &BkElem {
    type Output = BkElem;
    fn sub(self, rhs: &BkElem) -> BkElem {
        self.try_add(&-rhs).expect("same k")
    }
}

impl Neg for &BkElem {
    type Output = BkElem;
    fn neg(self) -> BkElem {
        self.scale(&FieldElem::from_int(-1))
    }
}

impl Mul for &BkElem {
    type Output = BkElem;
    fn mul(self, rhs: &BkElem) -> BkElem {
        self.try_mul(rhs).expect("same k")
    }
}

/// Product of two elements, failing on different `k`.
pub fn bk_mul(x: &BkElem, y: &BkElem) -> Result<BkElem> {
    x.try_mul(y)
}

/// `tau`, the `sigma_i` and the `tau_i` of `B_k`.
#[derive(Clone, Debug)]
pub struct Generators {
    pub tau: BkElem,
    pub sigma: Vec<BkElem>,
    /// `tau_j = sigma_{j-1} .. sigma_1 tau sigma_1 .. sigma_{j-1}`.
    pub tau_i: Vec<BkElem>,
}

pub fn bk_generators(k: usize) -> Generators {
    let tau = BkElem::xi(k, &[1]);
    let sigma: Vec<BkElem> = (1..k)
        .map(|i| BkElem::sigma(Perm::transposition(k, i).expect("1 <= i < k")))
        .collect();
    let mut tau_i = vec![tau.clone()];
    for j in 1..k {
        let prev = &tau_i[j - 1];
        tau_i.push(&(&sigma[j - 1] * prev) * &sigma[j - 1]);
    }
    Generators { tau, sigma, tau_i }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn basis_strategy(k: usize) -> impl Strategy<Value = BkElem> {
        (0u32..1 << k, 0..factorial(k), -3i64..=3)
            .prop_map(move |(m, r, c)| BkElem::basis(k, Subset(m), Perm::unrank(k, r)).scale(&FieldElem::from_int(c)))
    }

    #[test]
    fn clifford_relations() {
        let k = 3;
        let x1 = BkElem::xi(k, &[1]);
        let x2 = BkElem::xi(k, &[2]);
        assert_eq!(&x1 * &x1, BkElem::one(k));
        assert_eq!(&x2 * &x1, -&BkElem::xi(k, &[1, 2]));
        assert_eq!(&x1 * &x2, BkElem::xi(k, &[1, 2]));
    }

    #[test]
    fn conjugation_rule() {
        let k = 2;
        let s1 = BkElem::sigma(Perm::transposition(k, 1).unwrap());
        let x1 = BkElem::xi(k, &[1]);
        let expected = BkElem::basis(k, Subset::from_points(&[2]), Perm::transposition(k, 1).unwrap());
        assert_eq!(&s1 * &x1, expected);
        // Moving s1 across xi_{12} reverses the order of the two generators.
        let x12 = BkElem::xi(k, &[1, 2]);
        assert_eq!(&s1 * &x12, -&(&x12 * &s1));
    }

    #[test]
    fn generators() {
        for k in 1..=5 {
            let g = bk_generators(k);
            assert_eq!(g.tau_i[0], g.tau);
            for (j, t) in g.tau_i.iter().enumerate() {
                assert_eq!(*t, BkElem::xi(k, &[j + 1]));
            }
        }
    }

    #[test]
    fn size_mismatch() {
        assert!(matches!(
            bk_mul(&BkElem::one(2), &BkElem::one(3)),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn vector_round_trip_and_display() {
        let g = bk_generators(3);
        let x = &(&g.tau_i[2] * &g.sigma[0]) + &g.sigma[1].scale(&FieldElem::i());
        assert_eq!(BkElem::from_vec(3, &x.to_vec()), x);
        assert_eq!(
            BkElem::basis(3, Subset::from_points(&[1, 3]), Perm::transposition(3, 1).unwrap()).to_string(),
            "(1) * xi{1,3} * s(2 1 3)"
        );
        assert_eq!(BkElem::zero(2).to_string(), "0");
    }

    #[test]
    fn subset_order() {
        let mut v = vec![Subset(0b110), Subset(0b001), Subset(0b011), Subset(0), Subset(0b101)];
        v.sort();
        assert_eq!(v, vec![Subset(0), Subset(0b001), Subset(0b011), Subset(0b101), Subset(0b110)]);
    }

    proptest! {
        #[test]
        fn associative(a in basis_strategy(4), b in basis_strategy(4), c in basis_strategy(4)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn grading(a in basis_strategy(4), b in basis_strategy(4)) {
            let prod = &a * &b;
            if !prod.is_zero() {
                prop_assert_eq!(prod.degree().unwrap(), (a.degree().unwrap() + b.degree().unwrap()) % 2);
            }
        }
    }
}
