use std::fmt;

use super::mpoly::MPoly;
use super::quadext::QuadExt;
use super::rational::BigRat;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Which level of the arithmetic tower a coefficient lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingTag {
    Rational,
    Polynomial,
    RationalFunction,
    QuadraticExtension,
}

/// Coefficient ring contract used by the series engine.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const TAG: RingTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn from_ratfunc(r: &RatFunc) -> Result<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rat(&BigRat::from(n))
    }

    fn from_rat(c: &BigRat) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }
}

impl Ring for BigRat {
    const TAG: RingTag = RingTag::Rational;
    fn zero() -> Self {
        BigRat::zero()
    }
    fn one() -> Self {
        BigRat::one()
    }
    fn is_zero(&self) -> bool {
        BigRat::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        BigRat::inv(self)
    }
    fn from_ratfunc(r: &RatFunc) -> Result<Self> {
        r.as_constant()
            .ok_or_else(|| Error::Unsupported(format!("{r} is not a rational constant")))
    }
    fn from_rat(c: &BigRat) -> Self {
        c.clone()
    }
}

impl Ring for MPoly {
    const TAG: RingTag = RingTag::Polynomial;
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        match self.as_constant() {
            Some(c) => Ok(MPoly::constant(c.inv()?)),
            None => Err(Error::NotAUnit(self.to_string())),
        }
    }
    fn from_ratfunc(r: &RatFunc) -> Result<Self> {
        if r.is_polynomial() {
            Ok(r.num().clone())
        } else {
            Err(Error::Unsupported(format!("{r} is not a polynomial")))
        }
    }
    fn from_rat(c: &BigRat) -> Self {
        MPoly::constant(c.clone())
    }
}

impl Ring for RatFunc {
    const TAG: RingTag = RingTag::RationalFunction;
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        RatFunc::inv(self)
    }
    fn from_ratfunc(r: &RatFunc) -> Result<Self> {
        Ok(r.clone())
    }
    fn from_rat(c: &BigRat) -> Self {
        RatFunc::constant(c.clone())
    }
}

impl Ring for QuadExt {
    const TAG: RingTag = RingTag::QuadraticExtension;
    fn zero() -> Self {
        QuadExt::zero()
    }
    fn one() -> Self {
        QuadExt::one()
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        QuadExt::inv(self)
    }
    fn from_ratfunc(r: &RatFunc) -> Result<Self> {
        Ok(QuadExt::from(r.clone()))
    }
    fn from_rat(c: &BigRat) -> Self {
        QuadExt::from(RatFunc::constant(c.clone()))
    }
}
