//! The ring `Omega` spanned by odd power sums, Schur Q-functions, and the
//! character tables obtained by expanding `p_mu` in the Q basis.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::field::{FieldElem, Rat};
use crate::linalg;
use crate::partitions::{self, Partition};

/// Homogeneous element of `Omega^k` in coordinates on the `p_mu` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaElem {
    degree: usize,
    coords: BTreeMap<Partition, FieldElem>,
}

impl OmegaElem {
    pub fn zero(degree: usize) -> OmegaElem {
        OmegaElem {
            degree,
            coords: BTreeMap::new(),
        }
    }

    pub fn one() -> OmegaElem {
        OmegaElem::p_monomial(&Partition::empty()).expect("empty partition is odd")
    }

    /// The basis element `p_mu`.
    pub fn p_monomial(mu: &Partition) -> Result<OmegaElem> {
        mu.require_odd()?;
        let mut coords = BTreeMap::new();
        coords.insert(mu.clone(), FieldElem::one());
        Ok(OmegaElem {
            degree: mu.weight(),
            coords,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, mu: &Partition) -> FieldElem {
        self.coords.get(mu).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &FieldElem)> {
        self.coords.iter()
    }

    pub fn scale(&self, c: &FieldElem) -> OmegaElem {
        let mut out = OmegaElem::zero(self.degree);
        if !c.is_zero() {
            for (mu, v) in &self.coords {
                out.coords.insert(mu.clone(), v * c);
            }
        }
        out
    }

    fn add_term(&mut self, mu: Partition, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.coords.entry(mu) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Substitutes `p_r -> sum_i x_i^r` and evaluates.
    pub fn evaluate(&self, x: &[FieldElem]) -> FieldElem {
        let max = self.coords.keys().flat_map(|mu| mu.parts().first()).copied().max().unwrap_or(0);
        let mut power_sums = vec![FieldElem::zero(); max + 1];
        let mut powers: Vec<FieldElem> = x.to_vec();
        for r in 1..=max {
            if r > 1 {
                for (p, xi) in powers.iter_mut().zip(x) {
                    *p = &*p * xi;
                }
            }
            power_sums[r] = powers.iter().cloned().sum();
        }
        self.coords
            .iter()
            .map(|(mu, c)| {
                mu.parts()
                    .iter()
                    .fold(c.clone(), |acc, &part| &acc * &power_sums[part])
            })
            .sum()
    }
}

impl fmt::Display for OmegaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return f.write_str("0");
        }
        for (i, (mu, c)) in self.coords.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*p{mu}")?;
        }
        Ok(())
    }
}

impl Add for &OmegaElem {
    type Output = OmegaElem;
    fn add(self, rhs: &OmegaElem) -> OmegaElem {
        assert_eq!(self.degree, rhs.degree, "adding elements of different degree");
        let mut out = self.clone();
        for (mu, c) in &rhs.coords {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }
}

impl Sub for &OmegaElem {
    type Output = OmegaElem;
    fn sub(self, rhs: &OmegaElem) -> OmegaElem {
        assert_eq!(self.degree, rhs.degree, "subtracting elements of different degree");
        let mut out = self.clone();
        for (mu, c) in &rhs.coords {
            out.add_term(mu.clone(), -c);
        }
        out
    }
}

impl Mul for &OmegaElem {
    type Output = OmegaElem;
    fn mul(self, rhs: &OmegaElem) -> OmegaElem {
        let mut out = OmegaElem::zero(self.degree + rhs.degree);
        for (a, x) in &self.coords {
            for (b, y) in &rhs.coords {
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }
}

/// The generators `q_0, ..., q_max` defined by
/// `sum_r q_r t^r = exp(2 sum_{s odd} p_s t^s / s)`.
pub fn q_sequence(max: usize) -> Vec<OmegaElem> {
    // Differentiating the generating function gives r q_r = 2 sum_{s odd} p_s q_{r-s}.
    let mut q = vec![OmegaElem::one()];
    for r in 1..=max {
        let mut acc = OmegaElem::zero(r);
        for s in (1..=r).step_by(2) {
            let ps = OmegaElem::p_monomial(&Partition::from_parts(vec![s])).expect("odd");
            acc = &acc + &(&ps * &q[r - s]);
        }
        q.push(acc.scale(&FieldElem::frac(2, r as i64)));
    }
    q
}

pub fn q_gen(r: usize) -> OmegaElem {
    q_sequence(r).pop().expect("nonempty")
}

/// Schur Q-functions up to a fixed degree, sharing the `q_r` and two-row values.
#[derive(Clone, Debug)]
pub struct QBasis {
    q: Vec<OmegaElem>,
}

impl QBasis {
    pub fn new(max_degree: usize) -> QBasis {
        QBasis {
            q: q_sequence(max_degree),
        }
    }

    pub fn q(&self, r: usize) -> &OmegaElem {
        &self.q[r]
    }

    /// `Q_(a,b)` for `a > b >= 0`, and `q_a` when `b = 0`.
    fn two_row(&self, a: usize, b: usize) -> OmegaElem {
        debug_assert!(a > b);
        let mut acc = &self.q[a] * &self.q[b];
        for i in 1..=b {
            let term = (&self.q[a + i] * &self.q[b - i]).scale(&FieldElem::from_int(2));
            acc = if i % 2 == 1 { &acc - &term } else { &acc + &term };
        }
        acc
    }

    /// Pfaffian of the antisymmetric matrix `(Q_(parts[i], parts[j]))_{i<j}`.
    fn pfaffian(&self, parts: &[usize], cache: &mut BTreeMap<(usize, usize), OmegaElem>) -> OmegaElem {
        if parts.is_empty() {
            return OmegaElem::one();
        }
        let weight: usize = parts.iter().sum();
        let mut acc = OmegaElem::zero(weight);
        let first = parts[0];
        for j in 1..parts.len() {
            let entry = cache
                .entry((first, parts[j]))
                .or_insert_with(|| self.two_row(first, parts[j]))
                .clone();
            let rest: Vec<usize> = parts[1..]
                .iter()
                .enumerate()
                .filter(|(t, _)| t + 1 != j)
                .map(|(_, &p)| p)
                .collect();
            let term = &entry * &self.pfaffian(&rest, cache);
            acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    pub fn schur_q(&self, lambda: &Partition) -> Result<OmegaElem> {
        lambda.require_strict()?;
        if lambda.weight() >= self.q.len() {
            return Err(Error::OutOfRange {
                index: lambda.weight(),
                lo: 0,
                hi: self.q.len() - 1,
            });
        }
        let mut parts = lambda.parts().to_vec();
        if parts.len() % 2 == 1 {
            parts.push(0);
        }
        Ok(self.pfaffian(&parts, &mut BTreeMap::new()))
    }
}

/// Schur's Q-function `Q_lambda` for a strict partition.
pub fn schur_q(lambda: &Partition) -> Result<OmegaElem> {
    QBasis::new(lambda.weight()).schur_q(lambda)
}

/// `M` with `Q_nu = sum_mu M[nu][mu] p_mu`, rows `DP_k`, columns `OP_k`.
pub fn transition(k: usize) -> Vec<Vec<FieldElem>> {
    let basis = QBasis::new(k);
    let cols = partitions::odd(k);
    partitions::strict(k)
        .iter()
        .map(|nu| {
            let q = basis.schur_q(nu).expect("strict partition of k");
            cols.iter().map(|mu| q.coeff(mu)).collect()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableKind {
    /// Characters of the spin symmetric group algebra at `gamma^mu`.
    Phi,
    /// Characters of the Sergeev algebra at `sigma^(mu, 0)`.
    Psi,
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::Phi => "phi",
            TableKind::Psi => "psi",
        })
    }
}

impl FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<TableKind> {
        match s {
            "phi" => Ok(TableKind::Phi),
            "psi" => Ok(TableKind::Psi),
            other => Err(Error::Parse(format!("unknown table kind {other:?}"))),
        }
    }
}

/// Square character table, rows `DP_k` and columns `OP_k` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    pub k: usize,
    pub kind: TableKind,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<FieldElem>>,
}

impl CharTable {
    pub fn get(&self, nu: &Partition, mu: &Partition) -> Option<&FieldElem> {
        let r = self.rows.iter().position(|x| x == nu)?;
        let c = self.cols.iter().position(|x| x == mu)?;
        Some(&self.entries[r][c])
    }

    /// Plain-text grid: a header of column labels, then one labelled row per `nu`.
    pub fn to_grid(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect();
        let label_w = self
            .rows
            .iter()
            .map(|r| r.to_string().len())
            .chain([format!("{}", self.kind).len() + 4])
            .max()
            .unwrap_or(0);
        let col_w: Vec<usize> = self
            .cols
            .iter()
            .enumerate()
            .map(|(j, c)| cells.iter().map(|r| r[j].len()).chain([c.to_string().len()]).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        let _ = write!(out, "{:<label_w$}", format!("{} k={}", self.kind, self.k));
        for (c, w) in self.cols.iter().zip(&col_w) {
            let _ = write!(out, "  {:>w$}", c.to_string());
        }
        out.push('\n');
        for (nu, row) in self.rows.iter().zip(&cells) {
            let _ = write!(out, "{:<label_w$}", nu.to_string());
            for (v, w) in row.iter().zip(&col_w) {
                let _ = write!(out, "  {v:>w$}");
            }
            out.push('\n');
        }
        out
    }

    /// Records `k;kind;nu;mu;value`, one per entry, rows then columns.
    pub fn to_records(&self) -> String {
        let mut out = String::new();
        for (nu, row) in self.rows.iter().zip(&self.entries) {
            for (mu, v) in self.cols.iter().zip(row) {
                let _ = writeln!(out, "{};{};{};{};{}", self.k, self.kind, nu, mu, v.to_record());
            }
        }
        out
    }

    pub fn from_records(text: &str) -> Result<CharTable> {
        let mut header: Option<(usize, TableKind)> = None;
        let mut values: BTreeMap<(Partition, Partition), FieldElem> = BTreeMap::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let fields: Vec<&str> = line.split(';').collect();
            if fields.len() != 5 {
                return Err(Error::Parse(format!("expected 5 fields in {line:?}")));
            }
            let k: usize = fields[0]
                .parse()
                .map_err(|_| Error::Parse(format!("bad k in {line:?}")))?;
            let kind: TableKind = fields[1].parse()?;
            match header {
                None => header = Some((k, kind)),
                Some(h) if h != (k, kind) => {
                    return Err(Error::Parse(format!("mixed tables in records at {line:?}")))
                }
                _ => {}
            }
            let nu: Partition = fields[2].parse()?;
            let mu: Partition = fields[3].parse()?;
            values.insert((nu, mu), FieldElem::from_record(fields[4])?);
        }
        let (k, kind) = header.ok_or_else(|| Error::Parse("no records".into()))?;
        let rows = partitions::strict(k);
        let cols = partitions::odd(k);
        let entries = rows
            .iter()
            .map(|nu| {
                cols.iter()
                    .map(|mu| {
                        values
                            .remove(&(nu.clone(), mu.clone()))
                            .ok_or_else(|| Error::Parse(format!("missing entry {nu};{mu}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(((nu, mu), _)) = values.into_iter().next() {
            return Err(Error::Parse(format!("unexpected entry {nu};{mu}")));
        }
        Ok(CharTable {
            k,
            kind,
            rows,
            cols,
            entries,
        })
    }
}

fn exp_i32(n: usize) -> i32 {
    i32::try_from(n).expect("small exponent")
}

/// Solves the defining expansion for either table kind.
pub fn char_table(k: usize, kind: TableKind) -> CharTable {
    let rows = partitions::strict(k);
    let cols = partitions::odd(k);
    let m = transition(k);
    let m_inv = linalg::invert(&m).expect("Q functions form a basis of Omega^k");
    let entries = rows
        .iter()
        .enumerate()
        .map(|(r, nu)| {
            cols.iter()
                .enumerate()
                .map(|(c, mu)| {
                    let scale = match kind {
                        TableKind::Phi => FieldElem::sqrt2_pow(exp_i32(mu.len() + nu.len() + nu.epsilon() as usize)),
                        TableKind::Psi => FieldElem::sqrt2_pow(exp_i32(2 * mu.len() + nu.len() + nu.d() as usize)),
                    };
                    &scale * &m_inv[c][r]
                })
                .collect()
        })
        .collect();
    CharTable {
        k,
        kind,
        rows,
        cols,
        entries,
    }
}

/// `phi_nu(gamma^mu)` for `nu` in `DP_k`, `mu` in `OP_k`.
pub fn phi_table(k: usize) -> CharTable {
    char_table(k, TableKind::Phi)
}

/// `psi_nu(sigma^(mu, 0))` for `nu` in `DP_k`, `mu` in `OP_k`.
pub fn psi_table(k: usize) -> CharTable {
    char_table(k, TableKind::Psi)
}

/// Tables for several `k`, computed independently.
pub fn tables(ks: &[usize], kind: TableKind, strategy: Strategy) -> Vec<CharTable> {
    strategy.map(ks, |&k| char_table(k, kind))
}

/// Left-hand side of the defining expansion for column `mu`:
/// `(sqrt2)^l(mu) p_mu` for phi, `2^l(mu) p_mu` for psi.
pub fn expansion_lhs(kind: TableKind, mu: &Partition) -> Result<OmegaElem> {
    let p = OmegaElem::p_monomial(mu)?;
    let exp = match kind {
        TableKind::Phi => mu.len(),
        TableKind::Psi => 2 * mu.len(),
    };
    Ok(p.scale(&FieldElem::sqrt2_pow(exp_i32(exp))))
}

/// Weight of `Q_nu` in the expansion: `(sqrt2)^(-l-eps)` or `(sqrt2)^(-l-d)`.
pub fn q_weight(kind: TableKind, nu: &Partition) -> FieldElem {
    let shift = match kind {
        TableKind::Phi => nu.epsilon(),
        TableKind::Psi => nu.d(),
    } as usize;
    FieldElem::sqrt2_pow(-exp_i32(nu.len() + shift))
}

/// Substitutes the table back into its defining expansion; returns the
/// columns `mu` on which both sides differ.
pub fn expansion_mismatches(table: &CharTable) -> Vec<Partition> {
    let basis = QBasis::new(table.k);
    let qs: Vec<OmegaElem> = table
        .rows
        .iter()
        .map(|nu| {
            basis
                .schur_q(nu)
                .expect("strict row label")
                .scale(&q_weight(table.kind, nu))
        })
        .collect();
    table
        .cols
        .iter()
        .enumerate()
        .filter_map(|(c, mu)| {
            let rhs = table
                .entries
                .iter()
                .zip(&qs)
                .fold(OmegaElem::zero(table.k), |acc, (row, q)| &acc + &q.scale(&row[c]));
            let lhs = expansion_lhs(table.kind, mu).expect("odd column label");
            (lhs != rhs).then(|| mu.clone())
        })
        .collect()
}

/// Predicted value of `psi` from `phi` through the Clifford-module bridge:
/// `(sqrt2)^l(mu) phi` for even `k`, `2^-eps (sqrt2)^(l(mu)+1) phi` for odd `k`.
pub fn psi_from_phi(k: usize, nu: &Partition, mu: &Partition, phi: &FieldElem) -> FieldElem {
    let l = exp_i32(mu.len());
    if k % 2 == 0 {
        &FieldElem::sqrt2_pow(l) * phi
    } else {
        let eps = exp_i32(nu.epsilon() as usize);
        &FieldElem::sqrt2_pow(l + 1 - 2 * eps) * phi
    }
}

impl From<Rat> for OmegaElem {
    fn from(r: Rat) -> OmegaElem {
        OmegaElem::one().scale(&FieldElem::from_rat(r))
    }
}
