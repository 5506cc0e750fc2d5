//! Truncated power series in one formal variable over any ring of the tower.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactring::{BigRat, RatFunc, Ring, RingTag, Var};
use crate::stcore::STContext;

/// `c_0 + c_1 e + ... + c_N e^N + O(e^(N+1))`.
#[derive(Clone, PartialEq)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    /// Pads with zeros or truncates so that the order is exactly `order`.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Series::new(vec![c], order)
    }

    /// `c e^k`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The formal variable itself.
    pub fn var(order: usize) -> Self {
        Series::monomial(R::one(), 1, order)
    }

    /// `1 + e + e^2 + ...`.
    pub fn geometric(order: usize) -> Self {
        Series { coeffs: vec![R::one(); order + 1] }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Series { coeffs: (0..=order).map(f).collect() }
    }

    pub fn try_from_fn(order: usize, f: impl FnMut(usize) -> Result<R>) -> Result<Self> {
        Ok(Series { coeffs: (0..=order).map(f).collect::<Result<_>>()? })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn ring_tag(&self) -> RingTag {
        R::TAG
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: R) {
        self.coeffs[n] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series::new(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl Fn(&R) -> Result<R>) -> Result<Self> {
        Ok(Series { coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series::from_fn(n, |i| self.coeffs[i].add(&other.coeffs[i]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series::from_fn(n, |i| self.coeffs[i].sub(&other.coeffs[i]))
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![R::zero(); n + 1];
        let vb = other.valuation().unwrap_or(n + 1);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for j in vb..=(n - i) {
                let b = &other.coeffs[j];
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Series { coeffs: out }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul(c))
    }

    /// Multiplies by `e^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        Series::from_fn(n, |i| if i >= k { self.coeffs[i - k].clone() } else { R::zero() })
    }

    /// Divides by `e^k`; the first `k` coefficients must vanish. The order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) || k > self.order() {
            return Err(Error::InvalidArgument(format!("series is not divisible by e^{k}")));
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coeffs[0].inv().map_err(|_| Error::NonUnitConstant)?;
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(c0.clone());
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc = acc.add(&a.mul(&out[k - j]));
                }
            }
            out.push(acc.mul(&c0).neg());
        }
        Ok(Series { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.reciprocal()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.reciprocal()?.pow(-k);
        }
        let mut result = Series::one(self.order());
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

    /// Shift operator `f(e) -> f(c e)`.
    pub fn scale_arg(&self, c: &R) -> Self {
        let mut p = R::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.mul(&p));
            p = p.mul(c);
        }
        Series { coeffs: out }
    }

    /// Coefficientwise operator `c_n e^n -> w(n) c_n e^(n-1)`; the order drops by one.
    fn lower_with(&self, w: impl Fn(usize) -> Result<R>) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Err(Error::InvalidArgument("cannot differentiate an order-0 series".into()));
        }
        Series::try_from_fn(n - 1, |i| Ok(self.coeffs[i + 1].mul(&w(i + 1)?)))
    }

    /// `(s,t)`-derivative: `e^n -> [[n]] e^(n-1)`.
    pub fn st_derive(&self, ctx: &STContext) -> Result<Self> {
        self.lower_with(|n| R::from_ratfunc(&ctx.fib(n as i64)))
    }

    /// Jackson q-derivative `(f(e) - f(qe)) / ((1-q) e)`: `e^n -> [n]_q e^(n-1)`.
    pub fn q_derive(&self, q: &R) -> Result<Self> {
        self.lower_with(|n| {
            let mut acc = R::zero();
            let mut p = R::one();
            for _ in 0..n {
                acc = acc.add(&p);
                p = p.mul(q);
            }
            Ok(acc)
        })
    }

    /// Unnormalized q-difference `(f(e) - f(qe)) / e`: `e^n -> (1 - q^n) e^(n-1)`.
    pub fn q_difference(&self, q: &R) -> Result<Self> {
        self.lower_with(|n| Ok(R::one().sub(&q.pow(n as i64)?)))
    }

    /// Formal derivative.
    pub fn derive(&self) -> Result<Self> {
        self.lower_with(|n| Ok(R::from_int(n as i64)))
    }

    /// Composition `f(g(e))` for `g` without constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument("inner series has a constant term".into()));
        }
        let n = self.order().min(g.order());
        let mut acc = Series::zero(n);
        for c in self.coeffs.iter().take(n + 1).rev() {
            acc = acc.mul(g).add(&Series::constant(c.clone(), n));
        }
        Ok(acc)
    }
}

/// `prod_k (1 - a_k e)` as a series.
pub fn product_linear<R: Ring>(factors: &[R], order: usize) -> Series<R> {
    let mut acc = Series::one(order);
    for a in factors {
        acc = acc.mul(&Series::new(vec![R::one(), a.neg()], order));
    }
    acc
}

/// Symbol-level operators on rational-function coefficients. Each works on
/// inputs of the form `sum_e c_e v^e / d` with `d` free of `v`.
pub mod symbolic {
    use super::*;

    fn laurent_map(
        f: &RatFunc,
        v: Var,
        w: impl Fn(i32) -> Result<(i32, RatFunc)>,
    ) -> Result<RatFunc> {
        if !f.contains(v) {
            // Constant in v: only e = 0 contributes.
            let (e, c) = w(0)?;
            let vv = RatFunc::var(v).pow(e as i64)?;
            return Ok(&(f * &c) * &vv);
        }
        let (coeffs, d) = f
            .laurent_in(v)
            .ok_or_else(|| Error::Unsupported(format!("{f} is not Laurent in {v}")))?;
        let mut out = Vec::with_capacity(coeffs.len());
        for (e, c) in coeffs {
            let (e2, m) = w(e)?;
            if !m.is_zero() {
                out.push((e2, &m * &RatFunc::from_poly(c)));
            }
        }
        RatFunc::from_laurent(v, &out, &d)
    }

    /// `(s,t)`-derivative in the symbol `v`: `v^e -> [[e]] v^(e-1)`, any integer `e`.
    pub fn st_derive_var(f: &RatFunc, v: Var, ctx: &STContext) -> Result<RatFunc> {
        laurent_map(f, v, |e| Ok((e - 1, ctx.fib(e as i64))))
    }

    /// `v -> c v`: `v^e -> c^e v^e`.
    pub fn scale_var(f: &RatFunc, v: Var, c: &RatFunc) -> Result<RatFunc> {
        if let Some(k) = c.as_constant() {
            return f.scale_var(v, &k);
        }
        laurent_map(f, v, |e| Ok((e, c.pow(e as i64)?)))
    }

    /// Unnormalized q-difference in `v`: `v^e -> (1 - q^e) v^(e-1)`.
    pub fn q_difference_var(f: &RatFunc, v: Var, q: &RatFunc) -> Result<RatFunc> {
        laurent_map(f, v, |e| Ok((e - 1, &RatFunc::one() - &q.pow(e as i64)?)))
    }

    /// Jackson q-derivative in `v`: `v^e -> [e]_q v^(e-1)`.
    pub fn q_derive_var(f: &RatFunc, v: Var, q: &RatFunc) -> Result<RatFunc> {
        let one = RatFunc::one();
        let den = &one - q;
        laurent_map(f, v, |e| Ok((e - 1, (&one - &q.pow(e as i64)?).checked_div(&den)?)))
    }

    /// Applies a coefficient operator to every coefficient of a series.
    pub fn on_coeffs(
        f: &Series<RatFunc>,
        op: impl Fn(&RatFunc) -> Result<RatFunc>,
    ) -> Result<Series<RatFunc>> {
        f.try_map(|c| if c.is_zero() { Ok(RatFunc::zero()) } else { op(c) })
    }
}

impl<R: Ring> fmt::Display for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*e")?,
                _ => write!(f, "({c})*e^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(e^{})", self.order() + 1)
    }
}

impl<R: Ring> fmt::Debug for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{:?}]({self})", R::TAG)
    }
}

/// Convenience: a rational constant lifted into any ring.
pub fn rat<R: Ring>(n: i64, d: i64) -> R {
    R::from_rat(&BigRat::new(n, d).expect("nonzero denominator"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::{phi, phi_prime, QuadExt};

    fn r(n: i64) -> BigRat {
        BigRat::from(n)
    }

    #[test]
    fn one_plus_x_times_one_minus_x() {
        let a = Series::new(vec![r(1), r(1)], 4);
        let b = Series::new(vec![r(1), r(-1)], 4);
        assert_eq!(a.mul(&b), Series::new(vec![r(1), r(0), r(-1)], 4));
    }

    #[test]
    fn geometric_reciprocal() {
        let g: Series<BigRat> = Series::geometric(5);
        assert_eq!(g.mul(&Series::new(vec![r(1), r(-1)], 5)), Series::one(5));
        assert_eq!(Series::new(vec![r(1), r(-1)], 5).reciprocal().unwrap(), g);
    }

    #[test]
    fn non_unit_constant_is_an_error() {
        let s: Series<BigRat> = Series::var(3);
        assert_eq!(s.reciprocal(), Err(Error::NonUnitConstant));
    }

    #[test]
    fn st_derive_of_square() {
        let ctx = STContext::symbolic();
        let x2: Series<RatFunc> = Series::monomial(RatFunc::one(), 2, 4);
        let d = x2.st_derive(&ctx).unwrap();
        assert_eq!(d, Series::monomial(RatFunc::var(Var::S), 1, 3));
    }

    #[test]
    fn functional_form_of_derivative() {
        let ctx = STContext::symbolic();
        let f: Series<QuadExt> = Series::from_fn(6, |i| QuadExt::from(RatFunc::int(i as i64 * i as i64 - 3)));
        let lhs = f.st_derive(&ctx).unwrap();
        let diff = f.scale_arg(&phi()).sub(&f.scale_arg(&phi_prime()));
        let dinv = QuadExt::delta().inv().unwrap();
        let rhs = diff.shift_down(1).unwrap().scale(&dinv);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_linear_empty_and_pochhammer() {
        let e: Series<RatFunc> = product_linear(&[], 4);
        assert_eq!(e, Series::one(4));
        let q = RatFunc::var(Var::Q);
        let p = product_linear(&[RatFunc::one(), q.clone(), &q * &q], 4);
        assert_eq!(p.order(), 4);
        assert_eq!(p.coeff(3), &-&q.pow(3).unwrap());
    }

    #[test]
    fn symbol_derivative_of_negative_power() {
        let ctx = STContext::symbolic();
        let x = RatFunc::var(Var::X);
        let f = x.pow(-2).unwrap();
        let d = symbolic::st_derive_var(&f, Var::X, &ctx).unwrap();
        assert_eq!(d, &ctx.fib(-2) * &x.pow(-3).unwrap());
    }
}
