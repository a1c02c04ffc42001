//! Integer partitions: all, strict (distinct parts) and odd (all parts odd).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    All,
    Strict,
    Odd,
}

/// Sign statistics of a partition of `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stats {
    pub length: usize,
    /// `(-1)^(k - length)`.
    pub sign: i8,
    /// 0 on `DP+`, 1 on `DP-`; only defined for strict partitions.
    pub epsilon: Option<u8>,
    /// Parity of the length.
    pub d: u8,
    pub strict: bool,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "{parts:?} is not a weakly decreasing sequence of positive integers"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts into decreasing order and drops zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// `(1, 1, ..., 1)` with `k` ones.
    pub fn ones(k: usize) -> Partition {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    /// Partition obtained by merging the parts of both.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_parts(parts)
    }

    pub fn check_weight(&self, k: usize) -> Result<()> {
        if self.weight() != k {
            return Err(Error::WeightMismatch {
                partition: self.to_string(),
                expected: k,
                actual: self.weight(),
            });
        }
        Ok(())
    }

    pub fn require_strict(&self) -> Result<()> {
        if self.is_strict() {
            Ok(())
        } else {
            Err(Error::NotStrict(self.to_string()))
        }
    }

    pub fn require_odd(&self) -> Result<()> {
        if self.is_odd() {
            Ok(())
        } else {
            Err(Error::NotOdd(self.to_string()))
        }
    }

    /// `(-1)^(k - l)`.
    pub fn sign(&self) -> i8 {
        if (self.weight() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// 0 for `DP+` and 1 for `DP-`.
    pub fn epsilon(&self) -> u8 {
        debug_assert!(self.is_strict());
        ((self.weight() - self.len()) % 2) as u8
    }

    /// Parity of the length.
    pub fn d(&self) -> u8 {
        (self.len() % 2) as u8
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(3,1)`, `3,1`, `()` and the empty string.
    fn from_str(s: &str) -> Result<Partition> {
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body);
        if body.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `k` in the family, in reverse lexicographic order.
pub fn enumerate(k: usize, family: Family) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(k, k, family, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max: usize, family: Family, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max.min(remaining)).rev() {
        if family == Family::Odd && part % 2 == 0 {
            continue;
        }
        current.push(part);
        let next_max = if family == Family::Strict { part - 1 } else { part };
        fill(remaining - part, next_max, family, current, out);
        current.pop();
    }
}

pub fn strict(k: usize) -> Vec<Partition> {
    enumerate(k, Family::Strict)
}

pub fn odd(k: usize) -> Vec<Partition> {
    enumerate(k, Family::Odd)
}

pub fn stats(nu: &Partition, k: usize) -> Result<Stats> {
    nu.check_weight(k)?;
    let strict = nu.is_strict();
    let parity = ((k - nu.len()) % 2) as u8;
    Ok(Stats {
        length: nu.len(),
        sign: if parity == 0 { 1 } else { -1 },
        epsilon: strict.then_some(parity),
        d: nu.d(),
        strict,
    })
}
