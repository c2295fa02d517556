//! Coefficient fields: exact rationals and prime fields.

use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::{Error, Result};

/// An exact field. Elements are values; a field instance that needs
/// run-time data (the modulus of `GF(p)`) exposes it through [`Field::Params`].
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Params: Copy + fmt::Debug + PartialEq + Eq + Send + Sync + 'static;

    fn zero(p: Self::Params) -> Self;
    fn one(p: Self::Params) -> Self;
    fn from_i64(v: i64, p: Self::Params) -> Self;
    fn params(&self) -> Self::Params;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        rhs.inv().map(|r| self.mul(&r)).ok_or(Error::DivisionByZero)
    }

    /// Human readable field name, e.g. `QQ` or `GF(32003)`.
    fn label(p: Self::Params) -> String;
}

/// Arbitrary precision rational number in lowest terms.
///
/// Values whose numerator and denominator fit in an `i64` are kept inline;
/// only larger ones allocate. The representation is canonical, so derived
/// equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_i128(num as i128, den as i128))
    }

    pub fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(num), Some(den)) => Rational::Small { num, den },
            _ => Rational::Big(Box::new(r)),
        }
    }

    fn from_i128(mut num: i128, mut den: i128) -> Self {
        debug_assert!(den != 0);
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(num), Ok(den)) => Rational::Small { num, den },
            _ => Rational::Big(Box::new(BigRational::new_raw(BigInt::from(num), BigInt::from(den)))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small { num, .. } => BigInt::from(*num),
            Rational::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small { den, .. } => BigInt::from(*den),
            Rational::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small { den, .. } => *den == 1,
            Rational::Big(b) => b.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rational::Small { num, .. } => *num < 0,
            Rational::Big(b) => b.is_negative(),
        }
    }
}

impl Field for Rational {
    type Params = ();

    #[inline]
    fn zero(_: ()) -> Self {
        Rational::Small { num: 0, den: 1 }
    }

    #[inline]
    fn one(_: ()) -> Self {
        Rational::Small { num: 1, den: 1 }
    }

    fn from_i64(v: i64, _: ()) -> Self {
        Rational::Small { num: v, den: 1 }
    }

    fn params(&self) {}

    #[inline]
    fn is_zero(&self) -> bool {
        matches!(self, Rational::Small { num: 0, .. })
    }

    #[inline]
    fn is_one(&self) -> bool {
        matches!(self, Rational::Small { num: 1, den: 1 })
    }

    fn add(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (&Rational::Small { num: a, den: b }, &Rational::Small { num: c, den: d }) => {
                if b == 1 && d == 1 {
                    if let Some(s) = a.checked_add(c) {
                        return Rational::Small { num: s, den: 1 };
                    }
                }
                let (a, b, c, d) = (a as i128, b as i128, c as i128, d as i128);
                match a.checked_mul(d).zip(c.checked_mul(b)).and_then(|(x, y)| x.checked_add(y)) {
                    Some(n) => Self::from_i128(n, b * d),
                    None => Self::from_big(self.to_big() + rhs.to_big()),
                }
            }
            _ => Self::from_big(self.to_big() + rhs.to_big()),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (&Rational::Small { num: a, den: b }, &Rational::Small { num: c, den: d }) => {
                if b == 1 && d == 1 {
                    if let Some(p) = a.checked_mul(c) {
                        return Rational::Small { num: p, den: 1 };
                    }
                }
                // i64 * i64 always fits in i128
                Self::from_i128(a as i128 * c as i128, b as i128 * d as i128)
            }
            _ => Self::from_big(self.to_big() * rhs.to_big()),
        }
    }

    fn neg(&self) -> Self {
        match self {
            &Rational::Small { num, den } => match num.checked_neg() {
                Some(n) => Rational::Small { num: n, den },
                None => Self::from_big(-self.to_big()),
            },
            Rational::Big(b) => Self::from_big(-(**b).clone()),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            &Rational::Small { num, den } => Self::from_i128(den as i128, num as i128),
            Rational::Big(b) => Self::from_big(b.recip()),
        })
    }

    fn label(_: ()) -> String {
        "QQ".into()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small { num, den: 1 } => write!(f, "{num}"),
            Rational::Small { num, den } => write!(f, "{num}/{den}"),
            Rational::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Rational::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero(())
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_i64(v, ())
    }
}

/// Default modulus for prime field runs.
pub const DEFAULT_PRIME: u32 = 32003;

/// Residue class modulo a prime `p < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u32,
    p: u32,
}

impl Fp {
    /// Checks that `p` is a prime below `2^31`.
    pub fn check_modulus(p: u32) -> Result<()> {
        if !(2..1 << 31).contains(&p) {
            return Err(Error::InvalidParameter(alloc::format!("modulus {p} must be in 2..2^31")));
        }
        let mut d = 2u64;
        while d * d <= p as u64 {
            if (p as u64).is_multiple_of(d) {
                return Err(Error::InvalidParameter(alloc::format!("modulus {p} is not prime")));
            }
            d += 1;
        }
        Ok(())
    }

    pub fn new(v: i64, p: u32) -> Self {
        Fp { v: v.rem_euclid(p as i64) as u32, p }
    }

    pub fn value(self) -> u32 {
        self.v
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.v as u64;
        let mut acc = 1u64;
        let p = self.p as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp { v: acc as u32, p: self.p }
    }
}

impl Field for Fp {
    type Params = u32;

    fn zero(p: u32) -> Self {
        Fp { v: 0, p }
    }

    fn one(p: u32) -> Self {
        Fp { v: 1 % p, p }
    }

    fn from_i64(v: i64, p: u32) -> Self {
        Fp::new(v, p)
    }

    fn params(&self) -> u32 {
        self.p
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.v == 0
    }

    #[inline]
    fn is_one(&self) -> bool {
        self.v == 1
    }

    #[inline]
    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let s = self.v as u64 + rhs.v as u64;
        let p = self.p as u64;
        Fp { v: if s >= p { (s - p) as u32 } else { s as u32 }, p: self.p }
    }

    #[inline]
    fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let v = if self.v >= rhs.v { self.v - rhs.v } else { self.v + (self.p - rhs.v) };
        Fp { v, p: self.p }
    }

    #[inline]
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp { v: (self.v as u64 * rhs.v as u64 % self.p as u64) as u32, p: self.p }
    }

    #[inline]
    fn neg(&self) -> Self {
        Fp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }

    fn inv(&self) -> Option<Self> {
        (self.v != 0).then(|| self.pow(self.p as u64 - 2))
    }

    fn label(p: u32) -> String {
        alloc::format!("GF({p})")
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.v, self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn rational_canonical_form() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(q(0, -5), Rational::zero(()));
        assert!(Rational::new(1, 0).is_err());
        assert_eq!(alloc::format!("{}", q(-6, 4)), "-3/2");
    }

    #[test]
    fn rational_overflow_promotes() {
        let big = Rational::from_i64(i64::MAX, ());
        let sum = big.add(&big);
        assert!(matches!(sum, Rational::Big(_)));
        assert_eq!(sum.sub(&big), big);
        let sq = big.mul(&big);
        assert_eq!(sq.div(&big).unwrap(), big);
        let m = Rational::from_i64(i64::MIN, ());
        assert_eq!(m.neg().neg(), m);
        assert_eq!(m.inv().unwrap().inv().unwrap(), m);
    }

    #[test]
    fn rational_division_by_zero() {
        assert_eq!(q(1, 2).div(&Rational::zero(())), Err(Error::DivisionByZero));
        assert!(Rational::zero(()).inv().is_none());
    }

    #[test]
    fn prime_field_arithmetic() {
        let p = 7;
        let a = Fp::new(3, p);
        let b = Fp::new(-2, p);
        assert_eq!(b.value(), 5);
        assert_eq!(a.add(&b).value(), 1);
        assert_eq!(a.sub(&b).value(), 5);
        assert_eq!(a.mul(&b).value(), 1);
        assert_eq!(a.inv().unwrap(), b);
        assert!(Fp::zero(p).inv().is_none());
        assert!(Fp::check_modulus(32003).is_ok());
        assert!(Fp::check_modulus(32004).is_err());
        assert!(Fp::check_modulus(1).is_err());
    }
}
