use std::fmt;

use crate::error::{Error, Result};

/// Permutation of `{1..k}` stored as zero-based images: `images[j] = w(j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(k: usize) -> Perm {
        Perm((0..k as u8).collect())
    }

    /// The simple transposition `s_i = (i, i+1)`, with `1 <= i < k`.
    pub fn transposition(k: usize, i: usize) -> Result<Perm> {
        if i == 0 || i >= k {
            return Err(Error::OutOfRange {
                index: i,
                lo: 1,
                hi: k.saturating_sub(1),
            });
        }
        let mut p = Perm::identity(k);
        p.0.swap(i - 1, i);
        Ok(p)
    }

    /// From zero-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &x in &images {
            if x >= k || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm(images.into_iter().map(|x| x as u8).collect()))
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Image of the zero-based point `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.0[j] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&x| x as usize)
    }

    /// `self o other`, i.e. `j -> self(other(j))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.k(), other.k());
        Perm(other.0.iter().map(|&j| self.0[j as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0u8; self.k()];
        for (j, &x) in self.0.iter().enumerate() {
            out[x as usize] = j as u8;
        }
        Perm(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(j, &x)| j == x as usize)
    }

    pub fn inversions(&self) -> usize {
        let mut n = 0;
        for a in 0..self.k() {
            for b in a + 1..self.k() {
                if self.0[a] > self.0[b] {
                    n += 1;
                }
            }
        }
        n
    }

    /// Position in the lexicographic listing of all permutations of `k` points.
    pub fn rank(&self) -> usize {
        let k = self.k();
        let mut rank = 0;
        for a in 0..k {
            let smaller = self.0[a + 1..].iter().filter(|&&x| x < self.0[a]).count();
            rank = rank * (k - a) + smaller;
        }
        rank
    }

    pub fn unrank(k: usize, mut rank: usize) -> Perm {
        let mut digits = vec![0usize; k];
        for a in (0..k).rev() {
            let base = k - a;
            digits[a] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<u8> = (0..k as u8).collect();
        Perm(digits.into_iter().map(|d| pool.remove(d)).collect())
    }

    /// All permutations of `k` points in lexicographic order.
    pub fn all(k: usize) -> Vec<Perm> {
        (0..factorial(k)).map(|r| Perm::unrank(k, r)).collect()
    }

    /// The lexicographically smallest reduced word `[a_1, .., a_l]` (1-based)
    /// with `self = s_{a_1} o .. o s_{a_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(w.inversions());
        loop {
            let inv = w.inverse();
            // Left descents are the i with w^-1(i) > w^-1(i+1).
            let Some(i) = (0..w.k().saturating_sub(1)).find(|&i| inv.0[i] > inv.0[i + 1]) else {
                break;
            };
            word.push(i + 1);
            // s_i o w swaps the values i and i+1.
            for x in w.0.iter_mut() {
                if *x as usize == i {
                    *x += 1;
                } else if *x as usize == i + 1 {
                    *x -= 1;
                }
            }
        }
        word
    }
}

pub fn factorial(k: usize) -> usize {
    (1..=k).product()
}

impl fmt::Display for Perm {
    /// One-line notation with 1-based points: `s(2 1 3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("s(")?;
        for (j, x) in self.0.iter().enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_round_trip_and_order() {
        for k in 0..=5 {
            let all = Perm::all(k);
            assert_eq!(all.len(), factorial(k));
            for (r, p) in all.iter().enumerate() {
                assert_eq!(p.rank(), r);
            }
            let mut sorted = all.clone();
            sorted.sort();
            assert_eq!(sorted, all);
        }
    }

    #[test]
    fn composition_convention() {
        let s1 = Perm::transposition(3, 1).unwrap();
        let s2 = Perm::transposition(3, 2).unwrap();
        // (s1 o s2)(3) = s1(2) = 1, zero-based 2 -> 0.
        assert_eq!(s1.compose(&s2).apply(2), 0);
        assert_eq!(s1.compose(&s1), Perm::identity(3));
        assert!(Perm::transposition(3, 3).is_err());
        assert!(Perm::transposition(3, 0).is_err());
    }

    #[test]
    fn reduced_words_are_reduced_and_minimal() {
        for k in 1..=5 {
            for w in Perm::all(k) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.inversions());
                let rebuilt = word
                    .iter()
                    .fold(Perm::identity(k), |acc, &i| acc.compose(&Perm::transposition(k, i).unwrap()));
                assert_eq!(rebuilt, w);
            }
        }
        let w = Perm::from_images(vec![2, 1, 0]).unwrap();
        assert_eq!(w.reduced_word(), vec![1, 2, 1]);
    }

    #[test]
    fn display() {
        assert_eq!(Perm::transposition(3, 1).unwrap().to_string(), "s(2 1 3)");
        assert!(Perm::from_images(vec![0, 0]).is_err());
    }
}
