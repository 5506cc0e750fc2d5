use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Pow;

use super::rational::BigRat;
use super::ratfunc::RatFunc;
use super::var::Var;
use crate::error::{Error, Result};

/// `a + b*delta` with `delta^2 = s^2 + 4t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: RatFunc,
    b: RatFunc,
}

/// The discriminant `s^2 + 4t`.
pub fn disc() -> RatFunc {
    let s = RatFunc::var(Var::S);
    &(&s * &s) + &RatFunc::var(Var::T).scale(&BigRat::from(4))
}

/// `phi = (s + delta)/2`.
pub fn phi() -> QuadExt {
    let half = BigRat::new(1, 2).expect("nonzero");
    QuadExt::new(RatFunc::var(Var::S).scale(&half), RatFunc::constant(half))
}

/// `phi' = (s - delta)/2 = conj(phi)`.
pub fn phi_prime() -> QuadExt {
    phi().conj()
}

/// Result of evaluating an extension element at numeric `(s, t)`.
#[derive(Clone, Debug, PartialEq)]
pub enum ExtValue {
    Exact(BigRat),
    /// `s^2 + 4t` is not a rational square; value rounded to f64 from a
    /// rational approximation of the square root good to `digits` digits.
    Float { value: f64, digits: u32 },
}

impl ExtValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            ExtValue::Exact(r) => r.to_f64(),
            ExtValue::Float { value, .. } => *value,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ExtValue::Exact(_))
    }
}

const SQRT_DIGITS: u32 = 40;

impl QuadExt {
    pub fn new(a: RatFunc, b: RatFunc) -> Self {
        QuadExt { a, b }
    }

    pub fn zero() -> Self {
        QuadExt::new(RatFunc::zero(), RatFunc::zero())
    }

    pub fn one() -> Self {
        QuadExt::from(RatFunc::one())
    }

    pub fn delta() -> Self {
        QuadExt::new(RatFunc::zero(), RatFunc::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadExt::new(self.a.clone(), -&self.b)
    }

    pub fn symmetric_part(&self) -> &RatFunc {
        &self.a
    }

    pub fn delta_part(&self) -> &RatFunc {
        &self.b
    }

    /// The base-field value when the delta part vanishes.
    pub fn as_base(&self) -> Option<&RatFunc> {
        self.b.is_zero().then_some(&self.a)
    }

    /// `x * conj(x) = a^2 - b^2 (s^2 + 4t)`.
    pub fn norm(&self) -> RatFunc {
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * &disc())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.b.is_zero() {
            return Ok(QuadExt::from(self.a.inv()?));
        }
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let ni = n.inv()?;
        Ok(QuadExt::new(&self.a * &ni, -&(&self.b * &ni)))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut result = QuadExt::one();
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        QuadExt::new(&self.a * c, &self.b * c)
    }

    /// Substitutes values for generators other than `s` and `t` in both parts.
    pub fn eval_vars(&self, values: &[(Var, BigRat)]) -> Result<Self> {
        Ok(QuadExt::new(self.a.eval_vars(values)?, self.b.eval_vars(values)?))
    }

    /// Numeric value at `(s0, t0)`. Exact when `s0^2 + 4 t0` is a rational
    /// square, otherwise a flagged float.
    pub fn eval_at(&self, s0: &BigRat, t0: &BigRat) -> Result<ExtValue> {
        let pt = [(Var::S, s0.clone()), (Var::T, t0.clone())];
        let a = self.a.eval_const(&pt)?;
        let b = self.b.eval_const(&pt)?;
        let d = &(s0 * s0) + &(t0 * &BigRat::from(4));
        if d.is_zero() {
            return Err(Error::Degenerate);
        }
        if b.is_zero() {
            return Ok(ExtValue::Exact(a));
        }
        if let Some(r) = d.sqrt_exact() {
            return Ok(ExtValue::Exact(&a + &(&b * &r)));
        }
        if d.is_negative() {
            return Err(Error::Unsupported(format!("complex value: s^2+4t = {d}")));
        }
        let r = sqrt_approx(&d, SQRT_DIGITS);
        Ok(ExtValue::Float { value: (&a + &(&b * &r)).to_f64(), digits: SQRT_DIGITS })
    }
}

/// Rational approximation of `sqrt(d)` with absolute error below `10^-digits`.
fn sqrt_approx(d: &BigRat, digits: u32) -> BigRat {
    let scale: BigInt = Pow::pow(BigInt::from(10), digits as usize);
    let scaled = d.numer() * &scale * &scale / d.denom();
    let root = scaled.sqrt();
    BigRat::new(root, scale).expect("nonzero scale")
}

impl Add<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        QuadExt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        QuadExt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        if self.b.is_zero() {
            return QuadExt::new(&self.a * &rhs.a, &self.a * &rhs.b);
        }
        if rhs.b.is_zero() {
            return QuadExt::new(&self.a * &rhs.a, &self.b * &rhs.a);
        }
        let a = &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &disc());
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        QuadExt::new(a, b)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-&self.a, -&self.b)
    }
}

impl From<RatFunc> for QuadExt {
    fn from(a: RatFunc) -> Self {
        QuadExt::new(a, RatFunc::zero())
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "({})*d", self.b),
            (false, false) => write!(f, "{} + ({})*d", self.a, self.b),
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt({self})")
    }
}
