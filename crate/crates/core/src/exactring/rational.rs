use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BigRat(BigRational);

impl BigRat {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRat(BigRational::new(num.into(), den)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        BigRat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        BigRat(BigRational::zero())
    }

    pub fn one() -> Self {
        BigRat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn abs(&self) -> Self {
        BigRat(self.0.abs())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(BigRat(self.0.recip()))
        }
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let e = i32::try_from(k).map_err(|_| Error::InvalidArgument(format!("exponent {k}")))?;
        Ok(BigRat(num_traits::Pow::pow(&self.0, e)))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact square root when both numerator and denominator are perfect squares.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(BigRat(BigRational::new(n, d)))
        } else {
            None
        }
    }

    /// gcd of two rationals: gcd of numerators over lcm of denominators.
    pub fn gcd(&self, other: &Self) -> Self {
        let n = self.numer().gcd(other.numer());
        let d = self.denom().lcm(other.denom());
        BigRat(BigRational::new(n, d))
    }
}

impl From<i64> for BigRat {
    fn from(n: i64) -> Self {
        BigRat::from_int(n)
    }
}

impl From<BigInt> for BigRat {
    fn from(n: BigInt) -> Self {
        BigRat::from_int(n)
    }
}

impl From<BigRational> for BigRat {
    fn from(r: BigRational) -> Self {
        BigRat(r)
    }
}

impl FromStr for BigRat {
    type Err = Error;

    /// Parses `p` or `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("not a rational: `{s}`"));
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                BigRat::new(p, q)
            }
            None => Ok(BigRat::from_int(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

impl fmt::Display for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&BigRat> for &BigRat {
            type Output = BigRat;
            fn $m(self, rhs: &BigRat) -> BigRat {
                BigRat((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<BigRat> for BigRat {
            type Output = BigRat;
            fn $m(self, rhs: BigRat) -> BigRat {
                BigRat(self.0.$m(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div<&BigRat> for &BigRat {
    type Output = BigRat;
    /// Panics on a zero divisor; use [`BigRat::inv`] for a checked path.
    fn div(self, rhs: &BigRat) -> BigRat {
        BigRat(&self.0 / &rhs.0)
    }
}

impl Neg for BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        BigRat(-self.0)
    }
}

impl Neg for &BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        BigRat(-&self.0)
    }
}

impl AddAssign<&BigRat> for BigRat {
    fn add_assign(&mut self, rhs: &BigRat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&BigRat> for BigRat {
    fn sub_assign(&mut self, rhs: &BigRat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&BigRat> for BigRat {
    fn mul_assign(&mut self, rhs: &BigRat) {
        self.0 *= &rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adds_in_lowest_terms() {
        let a = BigRat::new(1, 2).unwrap();
        let b = BigRat::new(1, 3).unwrap();
        assert_eq!(&a + &b, BigRat::new(5, 6).unwrap());
        assert_eq!(BigRat::new(4, -6).unwrap(), BigRat::new(-2, 3).unwrap());
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(BigRat::new(1, 0), Err(Error::DivisionByZero));
        assert_eq!(BigRat::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn parses_fractions() {
        assert_eq!("-3/6".parse::<BigRat>().unwrap(), BigRat::new(-1, 2).unwrap());
        assert_eq!("7".parse::<BigRat>().unwrap(), BigRat::from(7));
        assert!("1/x".parse::<BigRat>().is_err());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(BigRat::new(9, 4).unwrap().sqrt_exact(), Some(BigRat::new(3, 2).unwrap()));
        assert_eq!(BigRat::from(5).sqrt_exact(), None);
    }

    #[test]
    fn negative_powers() {
        assert_eq!(BigRat::from(-2).pow(-3).unwrap(), BigRat::new(-1, 8).unwrap());
    }
}
