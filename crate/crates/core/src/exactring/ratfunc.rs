use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::mpoly::{render_ascending, MPoly};
use super::rational::BigRat;
use super::var::{Monomial, Var};
use crate::error::{Error, Result};

/// Quotient of polynomials in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: MPoly::zero(), den: MPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(MPoly::one())
    }

    pub fn int(n: i64) -> Self {
        RatFunc::from_poly(MPoly::int(n))
    }

    pub fn constant(c: BigRat) -> Self {
        RatFunc::from_poly(MPoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        RatFunc::from_poly(MPoly::var(v))
    }

    pub fn from_poly(p: MPoly) -> Self {
        RatFunc { num: p, den: MPoly::one() }
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(reduce(num, den))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRat> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn contains(&self, v: Var) -> bool {
        self.num.contains(v) || self.den.contains(v)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (lm, lc) = self.num.leading().expect("nonzero");
        let _ = lm;
        let c = lc.inv()?;
        Ok(RatFunc { num: self.den.scale(&c), den: self.num.scale(&c) })
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let k = u32::try_from(k).map_err(|_| Error::InvalidArgument(format!("exponent {k}")))?;
        Ok(RatFunc { num: self.num.pow(k), den: self.den.pow(k) })
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Substitutes a rational value for `v`.
    pub fn eval_var(&self, v: Var, value: &BigRat) -> Result<Self> {
        let c = MPoly::constant(value.clone());
        let den = self.den.subst(v, &c);
        if den.is_zero() {
            return Err(Error::Pole(self.den.to_string()));
        }
        Ok(reduce(self.num.subst(v, &c), den))
    }

    pub fn eval_vars(&self, values: &[(Var, BigRat)]) -> Result<Self> {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for (v, c) in values {
            let c = MPoly::constant(c.clone());
            num = num.subst(*v, &c);
            den = den.subst(*v, &c);
        }
        if den.is_zero() {
            return Err(Error::Pole(self.den.to_string()));
        }
        Ok(reduce(num, den))
    }

    /// Value at a point where every generator present is assigned.
    pub fn eval_const(&self, values: &[(Var, BigRat)]) -> Result<BigRat> {
        let r = self.eval_vars(values)?;
        r.as_constant()
            .ok_or_else(|| Error::InvalidArgument(format!("unassigned symbols in {r}")))
    }

    /// Substitutes a rational function for `v`.
    pub fn subst(&self, v: Var, value: &RatFunc) -> Result<Self> {
        if !self.contains(v) {
            return Ok(self.clone());
        }
        let num = horner(&self.num, v, value);
        let den = horner(&self.den, v, value);
        if den.is_zero() {
            return Err(Error::Pole(self.den.to_string()));
        }
        num.checked_div(&den)
    }

    /// `v -> c*v` for a rational constant `c`.
    pub fn scale_var(&self, v: Var, c: &BigRat) -> Result<Self> {
        if !self.contains(v) {
            return Ok(self.clone());
        }
        let den = self.den.scale_var(v, c);
        if den.is_zero() {
            return Err(Error::Pole(self.den.to_string()));
        }
        Ok(reduce(self.num.scale_var(v, c), den))
    }

    /// Splits as `sum_e c_e v^e / d` with `c_e` and `d` free of `v`, when the
    /// denominator has the form `v^k * d`.
    pub fn laurent_in(&self, v: Var) -> Option<(Vec<(i32, MPoly)>, MPoly)> {
        let k = self.den.monomial_content().exp(v);
        let d = self.den.div_monomial(&Monomial::var(v, k));
        if d.contains(v) {
            return None;
        }
        let coeffs = self
            .num
            .to_univariate(v)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as i32 - k as i32, c))
            .collect();
        Some((coeffs, d))
    }

    /// Inverse of [`RatFunc::laurent_in`].
    pub fn from_laurent(v: Var, coeffs: &[(i32, RatFunc)], d: &MPoly) -> Result<Self> {
        let mut acc = RatFunc::zero();
        let vv = RatFunc::var(v);
        for (e, c) in coeffs {
            acc = &acc + &(c * &vv.pow(*e as i64)?);
        }
        acc.checked_div(&RatFunc::from_poly(d.clone()))
    }

    /// Canonical text with ascending coefficients, e.g. `1+q` or `(1+q)/(1-q)`.
    pub fn render_compact(&self) -> String {
        if self.den.is_one() {
            render_ascending(&self.num)
        } else {
            let n = render_ascending(&self.num);
            let n = if self.num.len() > 1 { format!("({n})") } else { n };
            format!("{n}/({})", render_ascending(&self.den))
        }
    }
}

fn horner(p: &MPoly, v: Var, value: &RatFunc) -> RatFunc {
    let coeffs = p.to_univariate(v);
    let mut acc = RatFunc::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * value) + &RatFunc::from_poly(c.clone());
    }
    acc
}

fn normalize_den(num: MPoly, den: MPoly) -> RatFunc {
    match den.leading() {
        Some((_, c)) if !c.is_one() => {
            let inv = c.inv().expect("nonzero leading coefficient");
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
        _ => RatFunc { num, den },
    }
}

/// Cancels common factors; `den` must be nonzero.
fn reduce(num: MPoly, den: MPoly) -> RatFunc {
    if num.is_zero() {
        return RatFunc::zero();
    }
    if let Some(c) = den.as_constant() {
        return RatFunc { num: num.scale(&c.inv().expect("nonzero")), den: MPoly::one() };
    }
    let g = if den.len() == 1 || num.len() == 1 {
        let m = num.monomial_content().meet(&den.monomial_content());
        MPoly::term(m, BigRat::one())
    } else {
        MPoly::gcd(&num, &den)
    };
    if g.is_one() {
        return normalize_den(num, den);
    }
    let n = num.div_exact(&g).expect("gcd divides numerator");
    let d = den.div_exact(&g).expect("gcd divides denominator");
    normalize_den(n, d)
}

fn add_ratfunc(a: &RatFunc, b: &RatFunc, negate_b: bool) -> RatFunc {
    let bn = if negate_b { -&b.num } else { b.num.clone() };
    if a.is_zero() {
        return RatFunc { num: bn, den: b.den.clone() };
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        if a.den.is_one() {
            return RatFunc::from_poly(&a.num + &bn);
        }
        return reduce(&a.num + &bn, a.den.clone());
    }
    if b.den.is_one() {
        // (p + c q) / q stays reduced when p / q is.
        return normalize_den(&a.num + &(&bn * &a.den), a.den.clone());
    }
    if a.den.is_one() {
        return normalize_den(&(&a.num * &b.den) + &bn, b.den.clone());
    }
    let g = if a.den.len() == 1 && b.den.len() == 1 {
        MPoly::term(a.den.monomial_content().meet(&b.den.monomial_content()), BigRat::one())
    } else {
        MPoly::gcd(&a.den, &b.den)
    };
    let ad = a.den.div_exact(&g).expect("gcd divides");
    let bd = b.den.div_exact(&g).expect("gcd divides");
    let num = &(&a.num * &bd) + &(&bn * &ad);
    let den = &ad * &b.den;
    if g.is_one() {
        normalize_den(num, den)
    } else {
        // Only factors of g can cancel.
        let h = if num.is_zero() { g.clone() } else { MPoly::gcd(&num, &g) };
        if h.is_one() || num.is_zero() {
            reduce(num, den)
        } else {
            normalize_den(num.div_exact(&h).expect("divides"), den.div_exact(&h).expect("divides"))
        }
    }
}

fn cancel_pair(n: &MPoly, d: &MPoly) -> (MPoly, MPoly) {
    if d.is_one() || n.is_constant() {
        return (n.clone(), d.clone());
    }
    if d.is_constant() {
        return (n.clone(), d.clone());
    }
    let g = if n.len() == 1 || d.len() == 1 {
        MPoly::term(n.monomial_content().meet(&d.monomial_content()), BigRat::one())
    } else {
        MPoly::gcd(n, d)
    };
    if g.is_one() {
        (n.clone(), d.clone())
    } else {
        (n.div_exact(&g).expect("divides"), d.div_exact(&g).expect("divides"))
    }
}

fn mul_ratfunc(a: &RatFunc, b: &RatFunc) -> RatFunc {
    if a.is_zero() || b.is_zero() {
        return RatFunc::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return RatFunc::from_poly(&a.num * &b.num);
    }
    let (an, bd) = cancel_pair(&a.num, &b.den);
    let (bn, ad) = cancel_pair(&b.num, &a.den);
    normalize_den(&an * &bn, &ad * &bd)
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        add_ratfunc(self, rhs, false)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        add_ratfunc(self, rhs, true)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        mul_ratfunc(self, rhs)
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    /// Panics on a zero divisor; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl From<MPoly> for RatFunc {
    fn from(p: MPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<BigRat> for RatFunc {
    fn from(c: BigRat) -> Self {
        RatFunc::constant(c)
    }
}

impl From<Var> for RatFunc {
    fn from(v: Var) -> Self {
        RatFunc::var(v)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::int(n)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.len() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> RatFunc {
        RatFunc::var(x)
    }

    #[test]
    fn cancels_common_factors() {
        let s = v(Var::S);
        let t = v(Var::T);
        let a = &(&s * &s) - &(&t * &t);
        let b = &s - &t;
        let r = a.checked_div(&b).unwrap();
        assert_eq!(r, &s + &t);
        assert!(r.is_polynomial());
    }

    #[test]
    fn inverse_of_negative_t() {
        let mt = -&v(Var::T);
        let r = mt.pow(-1).unwrap();
        assert_eq!(r.num(), &MPoly::int(-1));
        assert_eq!(r.den(), &MPoly::var(Var::T));
    }

    #[test]
    fn sums_over_different_denominators() {
        let q = v(Var::Q);
        let one = RatFunc::one();
        let a = one.checked_div(&(&one - &q)).unwrap();
        let b = one.checked_div(&(&one + &q)).unwrap();
        let expect = RatFunc::int(2).checked_div(&(&one - &(&q * &q))).unwrap();
        assert_eq!(&a + &b, expect);
    }

    #[test]
    fn pole_is_reported() {
        let q = v(Var::Q);
        let f = RatFunc::one().checked_div(&(&RatFunc::one() - &q)).unwrap();
        assert!(matches!(f.eval_var(Var::Q, &BigRat::one()), Err(Error::Pole(_))));
    }

    #[test]
    fn laurent_round_trip() {
        let x = v(Var::X);
        let f = &(&x + &v(Var::T)).checked_div(&(&(&x * &x) * &v(Var::S))).unwrap() + &RatFunc::one();
        let (coeffs, d) = f.laurent_in(Var::X).unwrap();
        let lifted: Vec<(i32, RatFunc)> =
            coeffs.into_iter().map(|(e, c)| (e, RatFunc::from_poly(c))).collect();
        assert_eq!(RatFunc::from_laurent(Var::X, &lifted, &d).unwrap(), f);
    }
}
