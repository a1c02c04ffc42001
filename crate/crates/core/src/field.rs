//! Exact arithmetic in the number field `Q(i, sqrt 2)`.
//!
//! Elements are stored as four rational coordinates over the basis
//! `{1, i, r2, ir2}` where `r2 = sqrt 2` and `ir2 = i * sqrt 2`. Coordinates
//! are arbitrary precision; small values stay on an `i64` fast path and are
//! promoted to big rationals only when an intermediate result overflows.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number with an inline fast path.
///
/// `Small(n, d)` is always in lowest terms with `d > 0`; `Big` is only used
/// when the value does not fit that form.
#[derive(Clone, Debug)]
pub enum Rat {
    Small(i64, i64),
    Big(BigRational),
}

impl Rat {
    pub const ZERO: Rat = Rat::Small(0, 1);
    pub const ONE: Rat = Rat::Small(1, 1);

    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        Rat::from_i128(num as i128, den as i128)
    }

    pub fn from_int(n: i64) -> Rat {
        Rat::Small(n, 1)
    }

    fn from_i128(num: i128, den: i128) -> Rat {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rat::Small(n, d),
            _ => Rat::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d))),
        }
    }

    pub fn from_big(r: BigRational) -> Rat {
        // BigRational arithmetic keeps values reduced with a positive denominator.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(n, d),
            _ => Rat::Big(r),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Small(_, d) => *d == 1,
            Rat::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small(n, _) => *n < 0,
            Rat::Big(r) => r.is_negative(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rat::Small(n, _) => BigInt::from(*n),
            Rat::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rat::Small(_, d) => BigInt::from(*d),
            Rat::Big(r) => r.denom().clone(),
        }
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Result<Rat> {
        match self {
            Rat::Small(0, _) => Err(Error::DivisionByZero),
            Rat::Small(n, d) => Ok(Rat::from_i128(*d as i128, *n as i128)),
            Rat::Big(r) => Ok(Rat::from_big(r.recip())),
        }
    }

    /// Lowest-terms `num/den` form used by the record serialization.
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::ZERO
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Rat::Small(a, b), Rat::Small(c, d)) => a == c && b == d,
            (Rat::Big(a), Rat::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Rat {}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Rat::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Rat::Big(r) => {
                1u8.hash(state);
                r.hash(state);
            }
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{n}"),
            Rat::Small(n, d) => write!(f, "{n}/{d}"),
            Rat::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Rat::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rat> {
        let s = s.trim();
        let parse_int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
        };
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (parse_int(n)?, parse_int(d)?),
            None => (parse_int(s)?, BigInt::one()),
        };
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat::from_big(BigRational::new(n, d)))
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match self {
            Rat::Small(n, d) => match n.checked_neg() {
                Some(m) => Rat::Small(m, *d),
                None => Rat::from_i128(-(*n as i128), *d as i128),
            },
            Rat::Big(r) => Rat::from_big(-r),
        }
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
    }
}

impl Add for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        match (self, rhs) {
            (Rat::Small(0, _), _) => rhs.clone(),
            (_, Rat::Small(0, _)) => self.clone(),
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                if b == d {
                    Rat::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    Rat::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Rat::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for &Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        match (self, rhs) {
            (_, Rat::Small(0, _)) => self.clone(),
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rat::from_i128(a * d - c * b, b * d)
            }
            _ => Rat::from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl Mul for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        match (self, rhs) {
            (Rat::Small(0, _), _) | (_, Rat::Small(0, _)) => Rat::ZERO,
            (Rat::Small(1, 1), _) => rhs.clone(),
            (_, Rat::Small(1, 1)) => self.clone(),
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rat::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$m(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Rat, Add, add);
forward_owned!(Rat, Sub, sub);
forward_owned!(Rat, Mul, mul);

/// Which subfield of `Q(i, sqrt 2)` an element lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subfield {
    Rational,
    Gaussian,
    RealQuadratic,
    Generic,
}

impl fmt::Display for Subfield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subfield::Rational => "rational",
            Subfield::Gaussian => "gaussian",
            Subfield::RealQuadratic => "real-quadratic",
            Subfield::Generic => "generic",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub subfield: Subfield,
    /// All four coordinates are integers.
    pub integral: bool,
}

impl Classification {
    pub fn is_rational_integer(&self) -> bool {
        self.subfield == Subfield::Rational && self.integral
    }
}

/// `a + b i + c sqrt2 + d i sqrt2` with rational coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FieldElem {
    coords: [Rat; 4],
}

// (target coordinate, integer factor) for basis_i * basis_j over {1, i, r2, ir2}.
const MUL_TABLE: [[(usize, i64); 4]; 4] = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, 1), (0, -1), (3, 1), (2, -1)],
    [(2, 1), (3, 1), (0, 2), (1, 2)],
    [(3, 1), (2, -1), (1, 2), (0, -2)],
];

impl FieldElem {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> FieldElem {
        FieldElem {
            coords: [a, b, c, d],
        }
    }

    pub fn zero() -> FieldElem {
        FieldElem::default()
    }

    pub fn one() -> FieldElem {
        FieldElem::from_int(1)
    }

    pub fn from_int(n: i64) -> FieldElem {
        FieldElem::from_rat(Rat::from_int(n))
    }

    pub fn from_rat(r: Rat) -> FieldElem {
        FieldElem::new(r, Rat::ZERO, Rat::ZERO, Rat::ZERO)
    }

    pub fn frac(n: i64, d: i64) -> FieldElem {
        FieldElem::from_rat(Rat::new(n, d))
    }

    /// The imaginary unit.
    pub fn i() -> FieldElem {
        FieldElem::new(Rat::ZERO, Rat::ONE, Rat::ZERO, Rat::ZERO)
    }

    pub fn sqrt2() -> FieldElem {
        FieldElem::new(Rat::ZERO, Rat::ZERO, Rat::ONE, Rat::ZERO)
    }

    /// `(sqrt 2)^m` for any integer `m`.
    pub fn sqrt2_pow(m: i32) -> FieldElem {
        let half = m.div_euclid(2);
        let odd = m.rem_euclid(2) == 1;
        let scale = if half >= 0 {
            Rat::from_i128(1i128 << half, 1)
        } else {
            Rat::from_i128(1, 1i128 << (-half))
        };
        if odd {
            FieldElem::new(Rat::ZERO, Rat::ZERO, scale, Rat::ZERO)
        } else {
            FieldElem::from_rat(scale)
        }
    }

    pub fn coords(&self) -> &[Rat; 4] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Rat::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rat> {
        self.coords[1..]
            .iter()
            .all(Rat::is_zero)
            .then_some(&self.coords[0])
    }

    fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Rat::is_zero)
    }

    /// Image under `i -> -i`.
    pub fn conj_i(&self) -> FieldElem {
        let [a, b, c, d] = &self.coords;
        FieldElem::new(a.clone(), -b, c.clone(), -d)
    }

    /// Image under `sqrt2 -> -sqrt2`.
    pub fn conj_sqrt2(&self) -> FieldElem {
        let [a, b, c, d] = &self.coords;
        FieldElem::new(a.clone(), b.clone(), -c, -d)
    }

    pub fn scale(&self, r: &Rat) -> FieldElem {
        if r.is_one() {
            return self.clone();
        }
        FieldElem {
            coords: [
                &self.coords[0] * r,
                &self.coords[1] * r,
                &self.coords[2] * r,
                &self.coords[3] * r,
            ],
        }
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(FieldElem::from_rat(self.coords[0].recip()?));
        }
        // x * conj_i(x) lies in Q(sqrt 2); multiplying by its sqrt2-conjugate lands in Q.
        let xi = self.conj_i();
        let y = self * &xi;
        let y_bar = y.conj_sqrt2();
        let norm = &y * &y_bar;
        let norm = norm
            .as_rational()
            .expect("norm of an element lies in Q")
            .recip()?;
        Ok((&xi * &y_bar).scale(&norm))
    }

    pub fn pow(&self, e: u32) -> FieldElem {
        let mut acc = FieldElem::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn classify(&self) -> Classification {
        let [_, b, c, d] = &self.coords;
        let subfield = match (b.is_zero(), c.is_zero(), d.is_zero()) {
            (true, true, true) => Subfield::Rational,
            (false, true, true) => Subfield::Gaussian,
            (true, false, true) => Subfield::RealQuadratic,
            _ => Subfield::Generic,
        };
        Classification {
            subfield,
            integral: self.coords.iter().all(Rat::is_integer),
        }
    }

    /// Record form `a/b + c/d*i + e/f*r2 + g/h*ir2`, always with all four
    /// coordinates in lowest terms.
    pub fn to_record(&self) -> String {
        let [a, b, c, d] = &self.coords;
        format!(
            "{} + {}*i + {}*r2 + {}*ir2",
            a.to_fraction_string(),
            b.to_fraction_string(),
            c.to_fraction_string(),
            d.to_fraction_string()
        )
    }

    pub fn from_record(s: &str) -> Result<FieldElem> {
        let parts: Vec<&str> = s.split(" + ").collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("expected 4 terms in {s:?}")));
        }
        let strip = |t: &str, suffix: &str| -> Result<Rat> {
            let body = if suffix.is_empty() {
                t
            } else {
                t.strip_suffix(suffix)
                    .ok_or_else(|| Error::Parse(format!("term {t:?} lacks {suffix}")))?
            };
            body.parse()
        };
        Ok(FieldElem::new(
            strip(parts[0], "")?,
            strip(parts[1], "*i")?,
            strip(parts[2], "*r2")?,
            strip(parts[3], "*ir2")?,
        ))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["", "i", "r2", "ir2"];
        let mut first = true;
        for (c, name) in self.coords.iter().zip(NAMES) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (name, mag.is_one()) {
                ("", _) => write!(f, "{mag}")?,
                (name, true) => f.write_str(name)?,
                (name, false) => write!(f, "{mag}*{name}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for FieldElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<FieldElem> {
        FieldElem::from_record(s)
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> FieldElem {
        FieldElem::from_int(n)
    }
}

impl From<Rat> for FieldElem {
    fn from(r: Rat) -> FieldElem {
        FieldElem::from_rat(r)
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        FieldElem {
            coords: std::array::from_fn(|t| &self.coords[t] + &rhs.coords[t]),
        }
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        FieldElem {
            coords: std::array::from_fn(|t| &self.coords[t] - &rhs.coords[t]),
        }
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        if self.is_rational() {
            return rhs.scale(&self.coords[0]);
        }
        if rhs.is_rational() {
            return self.scale(&rhs.coords[0]);
        }
        let mut out: [Rat; 4] = Default::default();
        for (s, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (t, b) in rhs.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (target, factor) = MUL_TABLE[s][t];
                let term = a * b;
                let term = if factor == 1 {
                    term
                } else {
                    &term * &Rat::from_int(factor)
                };
                out[target] = &out[target] + &term;
            }
        }
        FieldElem { coords: out }
    }
}

impl Div for &FieldElem {
    type Output = FieldElem;
    /// Panics on division by zero; use [`FieldElem::inv`] to handle it.
    fn div(self, rhs: &FieldElem) -> FieldElem {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            coords: std::array::from_fn(|t| -&self.coords[t]),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

forward_owned!(FieldElem, Add, add);
forward_owned!(FieldElem, Sub, sub);
forward_owned!(FieldElem, Mul, mul);
forward_owned!(FieldElem, Div, div);

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        for t in 0..4 {
            if !rhs.coords[t].is_zero() {
                self.coords[t] = &self.coords[t] + &rhs.coords[t];
            }
        }
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        for t in 0..4 {
            if !rhs.coords[t].is_zero() {
                self.coords[t] = &self.coords[t] - &rhs.coords[t];
            }
        }
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, rhs: &FieldElem) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for FieldElem {
    fn sum<I: Iterator<Item = FieldElem>>(iter: I) -> FieldElem {
        iter.fold(FieldElem::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl std::iter::Product for FieldElem {
    fn product<I: Iterator<Item = FieldElem>>(iter: I) -> FieldElem {
        iter.fold(FieldElem::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fe(a: i64, b: i64, c: i64, d: i64) -> FieldElem {
        FieldElem::new(
            Rat::from_int(a),
            Rat::from_int(b),
            Rat::from_int(c),
            Rat::from_int(d),
        )
    }

    #[test]
    fn defining_relations() {
        assert_eq!(FieldElem::sqrt2() * FieldElem::sqrt2(), FieldElem::from_int(2));
        assert_eq!(FieldElem::i() * FieldElem::i(), FieldElem::from_int(-1));
        assert_eq!(fe(1, 0, 1, 0) * fe(-1, 0, 1, 0), FieldElem::one());
    }

    #[test]
    fn inverses() {
        assert_eq!(
            FieldElem::sqrt2().inv().unwrap(),
            FieldElem::sqrt2().scale(&Rat::new(1, 2))
        );
        assert_eq!(FieldElem::i().inv().unwrap(), -FieldElem::i());
        assert_eq!(
            fe(1, 1, 0, 0).inv().unwrap(),
            FieldElem::new(Rat::new(1, 2), Rat::new(-1, 2), Rat::ZERO, Rat::ZERO)
        );
        assert_eq!(FieldElem::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn classification() {
        let c = FieldElem::from_int(2).classify();
        assert_eq!(c.subfield, Subfield::Rational);
        assert!(c.integral);
        let c = FieldElem::sqrt2_pow(-1).classify();
        assert_eq!(c.subfield, Subfield::RealQuadratic);
        assert!(!c.integral);
        assert_eq!(fe(1, 0, 0, 1).classify().subfield, Subfield::Generic);
        assert_eq!(fe(3, -1, 0, 0).classify().subfield, Subfield::Gaussian);
    }

    #[test]
    fn sqrt2_powers() {
        assert_eq!(FieldElem::sqrt2_pow(0), FieldElem::one());
        assert_eq!(FieldElem::sqrt2_pow(4), FieldElem::from_int(4));
        assert_eq!(FieldElem::sqrt2_pow(3), FieldElem::sqrt2().scale(&Rat::from_int(2)));
        assert_eq!(FieldElem::sqrt2_pow(-2), FieldElem::frac(1, 2));
        assert_eq!(FieldElem::sqrt2_pow(-3) * FieldElem::sqrt2_pow(3), FieldElem::one());
    }

    #[test]
    fn small_path_overflow_promotes() {
        let big = Rat::from_int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Rat::Big(_)));
        let back = &sq * &Rat::new(1, i64::MAX);
        assert_eq!(back, big);
        assert!(matches!(back, Rat::Small(..)));
        assert_eq!(-Rat::from_int(i64::MIN), &Rat::from_int(i64::MAX) + &Rat::ONE);
    }

    #[test]
    fn display_and_record() {
        assert_eq!(FieldElem::from_int(-4).to_string(), "-4");
        assert_eq!(FieldElem::sqrt2_pow(-1).to_string(), "1/2*r2");
        assert_eq!(fe(1, -1, 0, 2).to_string(), "1 - i + 2*ir2");
        assert_eq!(FieldElem::zero().to_string(), "0");
        let x = FieldElem::new(Rat::new(-3, 4), Rat::ONE, Rat::ZERO, Rat::new(5, 6));
        assert_eq!(x.to_record(), "-3/4 + 1/1*i + 0/1*r2 + 5/6*ir2");
        assert_eq!(FieldElem::from_record(&x.to_record()).unwrap(), x);
        assert!(FieldElem::from_record("1/2 + 3").is_err());
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| Rat::new(n, d))
    }

    fn arb_elem() -> impl Strategy<Value = FieldElem> {
        (arb_rat(), arb_rat(), arb_rat(), arb_rat()).prop_map(|(a, b, c, d)| FieldElem::new(a, b, c, d))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_elem(), y in arb_elem(), z in arb_elem()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), FieldElem::one());
            }
        }

        #[test]
        fn conjugations_are_homomorphisms(x in arb_elem(), y in arb_elem()) {
            prop_assert_eq!((&x * &y).conj_i(), &x.conj_i() * &y.conj_i());
            prop_assert_eq!((&x + &y).conj_i(), &x.conj_i() + &y.conj_i());
            prop_assert_eq!((&x * &y).conj_sqrt2(), &x.conj_sqrt2() * &y.conj_sqrt2());
            prop_assert_eq!((&x + &y).conj_sqrt2(), &x.conj_sqrt2() + &y.conj_sqrt2());
        }

        #[test]
        fn record_round_trip(x in arb_elem()) {
            prop_assert_eq!(FieldElem::from_record(&x.to_record()).unwrap(), x);
        }
    }
}
