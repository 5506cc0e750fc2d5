//! Deformed exponentials, deformed binomial and trinomial series, the deformed
//! translation operator and derivatives of the partial theta function.
//!
//! Nested series such as `(x (+)_{u,1} (y (+)_{v,w} z))^(alpha)` are evaluated
//! umbrally through [`Term`]: every node knows its own deformed powers and a
//! sum node expands its power with Fibonomials.

use crate::error::{Error, Result};
use crate::exactring::{RatFunc, Ring, Var};
use crate::pseries::{symbolic, Series};
use crate::stcore::STContext;

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

#[derive(Clone, Debug)]
enum Kind {
    Atom(Series<RatFunc>),
    Sum(Box<Term>, Box<Term>),
    Scaled(Series<RatFunc>, Box<Term>),
}

/// A node of a nested deformed binomial expression.
///
/// The `m`-th power of a node is `deform^C(m,2)` times
/// - `value^m` for an atom,
/// - `sum_k {m over k} left^(m-k) right^(k)` for a sum,
/// - `factor^m inner^(m)` for a scaled node.
#[derive(Clone, Debug)]
pub struct Term {
    kind: Kind,
    deform: RatFunc,
}

impl Term {
    pub fn atom(value: Series<RatFunc>) -> Term {
        Term { kind: Kind::Atom(value), deform: RatFunc::one() }
    }

    pub fn scaled(factor: Series<RatFunc>, inner: Term) -> Term {
        Term { kind: Kind::Scaled(factor, Box::new(inner)), deform: RatFunc::one() }
    }

    /// Replaces this node's deformation parameter.
    pub fn with_deform(mut self, d: RatFunc) -> Term {
        self.deform = d;
        self
    }

    /// `(left (+)_{u,v} right)`.
    pub fn oplus(left: Term, right: Term, u: RatFunc, v: RatFunc) -> Term {
        Term {
            kind: Kind::Sum(Box::new(left.with_deform(u)), Box::new(right.with_deform(v))),
            deform: RatFunc::one(),
        }
    }

    /// `(left (-)_{u,v} right)`: the right argument is negated.
    pub fn ominus(left: Term, right: Term, u: RatFunc, v: RatFunc) -> Term {
        let order = right.order();
        let neg = Term::scaled(Series::constant(RatFunc::int(-1), order), right);
        Term::oplus(left, neg, u, v)
    }

    fn order(&self) -> usize {
        match &self.kind {
            Kind::Atom(v) => v.order(),
            Kind::Sum(l, r) => l.order().min(r.order()),
            Kind::Scaled(f, i) => f.order().min(i.order()),
        }
    }

    /// The deformed power `self^(m)` as a series.
    pub fn power(&self, m: i64, ctx: &STContext) -> Result<Series<RatFunc>> {
        let order = self.order();
        let body = match &self.kind {
            Kind::Atom(v) => v.pow(m)?,
            Kind::Scaled(f, inner) => f.pow(m)?.mul(&inner.power(m, ctx)?),
            Kind::Sum(l, r) => {
                let kmax = if m >= 0 {
                    m as usize
                } else {
                    // Infinite expansion: the right argument must be small.
                    let r1 = r.power(1, ctx)?;
                    if r1.valuation().is_some_and(|v| v == 0) {
                        return Err(Error::NotAUnit(
                            "negative power needs a right argument without constant term".into(),
                        ));
                    }
                    order
                };
                let mut acc = Series::zero(order);
                for k in 0..=kmax {
                    let rk = r.power(k as i64, ctx)?;
                    if rk.is_zero() {
                        if m < 0 {
                            break;
                        }
                        continue;
                    }
                    let c = ctx.st_binom(m, k)?;
                    if c.is_zero() {
                        continue;
                    }
                    let lk = l.power(m - k as i64, ctx)?;
                    acc = acc.add(&lk.mul(&rk).scale(&c));
                }
                acc
            }
        };
        if self.deform.is_one() {
            Ok(body)
        } else {
            Ok(body.scale(&self.deform.pow(binom2(m))?))
        }
    }
}

/// `exp_{s,t}(z, u) = sum u^C(n,2) z^n / [[n]]!`, and `1 + z` when `u = 0`.
/// `z` must have no constant term unless `u = 0`.
pub fn deformed_exp(z: &Series<RatFunc>, u: &RatFunc, ctx: &STContext) -> Result<Series<RatFunc>> {
    let order = z.order();
    if u.is_zero() {
        return Ok(Series::one(order).add(z));
    }
    if !z.coeff(0).is_zero() {
        return Err(Error::InvalidArgument("exponential argument needs zero constant term".into()));
    }
    let mut acc = Series::zero(order);
    let mut zn = Series::one(order);
    for n in 0..=order as i64 {
        let c = u.pow(binom2(n))?.checked_div(&ctx.fib_factorial(n as usize))?;
        acc = acc.add(&zn.scale(&c));
        zn = zn.mul(z);
    }
    Ok(acc)
}

/// `(x (+)_{u,v} y)^(alpha) = sum_n {alpha over n} u^C(alpha-n,2) v^C(n,2) x^(alpha-n) y^n`.
pub fn deformed_binom(
    x: &Series<RatFunc>,
    y: &Series<RatFunc>,
    u: &RatFunc,
    v: &RatFunc,
    alpha: i64,
    ctx: &STContext,
) -> Result<Series<RatFunc>> {
    if alpha < 0 && x.coeff(0).is_zero() {
        return Err(Error::NotAUnit("leading argument of a negative power".into()));
    }
    Term::oplus(Term::atom(x.clone()), Term::atom(y.clone()), u.clone(), v.clone()).power(alpha, ctx)
}

/// `(x (-)_{u,v} y)^(alpha)`, the binomial series with `y -> -y`.
pub fn deformed_binom_minus(
    x: &Series<RatFunc>,
    y: &Series<RatFunc>,
    u: &RatFunc,
    v: &RatFunc,
    alpha: i64,
    ctx: &STContext,
) -> Result<Series<RatFunc>> {
    deformed_binom(x, &y.neg(), u, v, alpha, ctx)
}

/// `(x (+)_{u,1} (y (+)_{v,w} z))^(alpha)`.
#[allow(clippy::too_many_arguments)]
pub fn deformed_trinom(
    x: &Series<RatFunc>,
    y: &Series<RatFunc>,
    z: &Series<RatFunc>,
    u: &RatFunc,
    v: &RatFunc,
    w: &RatFunc,
    alpha: i64,
    ctx: &STContext,
) -> Result<Series<RatFunc>> {
    if alpha < 0 && x.coeff(0).is_zero() {
        return Err(Error::NotAUnit("leading argument of a negative power".into()));
    }
    let inner = Term::oplus(Term::atom(y.clone()), Term::atom(z.clone()), v.clone(), w.clone());
    Term::oplus(Term::atom(x.clone()), inner, u.clone(), RatFunc::one()).power(alpha, ctx)
}

/// `(T_{u^-1} D_{s,t})` in the symbol `v`, applied to every coefficient.
pub fn shifted_derivative(
    f: &Series<RatFunc>,
    v: Var,
    u: &RatFunc,
    ctx: &STContext,
) -> Result<Series<RatFunc>> {
    let uinv = u.inv()?;
    symbolic::on_coeffs(f, |c| symbolic::scale_var(&symbolic::st_derive_var(c, v, ctx)?, v, &uinv))
}

/// Deformed translation operator `e(y T_{u^-1} D, v) = sum_n v^C(n,2) y^n / [[n]]! (T_{u^-1} D)^n`
/// with `D` acting on the symbol `var`. The sum stops when `(T D)^n` kills the
/// target or when `y^n` leaves the truncation window; no tail term can reach
/// below the order in either case.
pub fn translation_apply(
    var: Var,
    y: &Series<RatFunc>,
    u: &RatFunc,
    v: &RatFunc,
    target: &Series<RatFunc>,
    ctx: &STContext,
) -> Result<Series<RatFunc>> {
    const MAX_TERMS: usize = 512;
    if u.is_zero() {
        return Err(Error::NotAUnit("u".into()));
    }
    let order = target.order().min(y.order());
    let mut acc = Series::zero(order);
    let mut dn = target.truncate(order);
    let mut yn = Series::one(order);
    for n in 0..MAX_TERMS as i64 {
        if dn.is_zero() || yn.is_zero() {
            return Ok(acc);
        }
        let c = v.pow(binom2(n))?.checked_div(&ctx.fib_factorial(n as usize))?;
        acc = acc.add(&yn.mul(&dn).scale(&c));
        dn = shifted_derivative(&dn, var, u, ctx)?;
        yn = yn.mul(y);
    }
    Err(Error::Unsupported("translation operator did not terminate".into()))
}

/// `Theta_0(z, q) = sum q^C(n,2) z^n` for a series argument `z` without constant term.
pub fn theta_partial_at<R: Ring>(z: &Series<R>, q: &R) -> Result<Series<R>> {
    if !z.coeff(0).is_zero() {
        return Err(Error::InvalidArgument("theta argument needs zero constant term".into()));
    }
    let order = z.order();
    let mut acc = Series::zero(order);
    let mut zn = Series::one(order);
    for n in 0..=order as i64 {
        acc = acc.add(&zn.scale(&q.pow(binom2(n))?));
        zn = zn.mul(z);
    }
    Ok(acc)
}

/// `Theta_0(x, q)` in the formal variable, to order `order`.
pub fn theta_partial<R: Ring>(q: &R, order: usize) -> Result<Series<R>> {
    Series::try_from_fn(order, |n| q.pow(binom2(n as i64)))
}

/// How [`theta_deriv`] computes `D^n Theta_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaMode {
    /// `[[n]]! q^C(n,2) (1 (+)_{1,-tq} (-tq)^n t x)^(-n-1)`.
    Closed,
    /// `n` successive `(s,t)`-derivatives of the theta series.
    Direct,
}

/// `n`-th `(s,t)`-derivative of `Theta_0(x, q)` in the formal variable, to order `order`.
pub fn theta_deriv(
    n: usize,
    q: &RatFunc,
    mode: ThetaMode,
    ctx: &STContext,
    order: usize,
) -> Result<Series<RatFunc>> {
    match mode {
        ThetaMode::Direct => {
            let mut f = theta_partial(q, order + n)?;
            for _ in 0..n {
                f = f.st_derive(ctx)?;
            }
            Ok(f)
        }
        ThetaMode::Closed => {
            let t = ctx.t();
            let mtq = -&(t * q);
            let arg = Series::monomial(&mtq.pow(n as i64)? * t, 1, order);
            let one = Series::one(order);
            let body = deformed_binom(&one, &arg, &RatFunc::one(), &mtq, -(n as i64) - 1, ctx)?;
            let c = &ctx.fib_factorial(n) * &q.pow(binom2(n as i64))?;
            Ok(body.scale(&c))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::BigRat;

    fn sym(v: Var) -> RatFunc {
        RatFunc::var(v)
    }

    fn c(v: RatFunc, order: usize) -> Series<RatFunc> {
        Series::constant(v, order)
    }

    fn e(v: RatFunc, order: usize) -> Series<RatFunc> {
        Series::monomial(v, 1, order)
    }

    #[test]
    fn exp_with_zero_u() {
        let ctx = STContext::symbolic();
        let z = e(RatFunc::one(), 4);
        let got = deformed_exp(&z, &RatFunc::zero(), &ctx).unwrap();
        assert_eq!(got, Series::new(vec![RatFunc::one(), RatFunc::one()], 4));
    }

    #[test]
    fn exp_at_integers_is_classical() {
        let ctx = STContext::specialized(BigRat::from(2), BigRat::from(-1));
        let got = deformed_exp(&e(RatFunc::one(), 3), &RatFunc::one(), &ctx).unwrap();
        let expect = Series::new(
            [(1, 1), (1, 1), (1, 2), (1, 6)]
                .map(|(a, b)| RatFunc::constant(BigRat::new(a, b).unwrap()))
                .to_vec(),
            3,
        );
        assert_eq!(got, expect);
    }

    #[test]
    fn binomial_square() {
        let ctx = STContext::symbolic();
        let (x, y, u, v) = (sym(Var::X), sym(Var::Y), sym(Var::U), sym(Var::V));
        let got = deformed_binom(&c(x.clone(), 3), &e(y.clone(), 3), &u, &v, 2, &ctx).unwrap();
        let expect = Series::new(
            vec![&u * &(&x * &x), &(&ctx.fib(2) * &x) * &y, &v * &(&y * &y)],
            3,
        );
        assert_eq!(got, expect);
    }

    #[test]
    fn theta_is_a_binomial_series() {
        let ctx = STContext::symbolic();
        let (q, t) = (sym(Var::Q), ctx.t().clone());
        let lhs = theta_partial(&q, 8).unwrap();
        let mtq = -&(&t * &q);
        let rhs =
            deformed_binom(&Series::one(8), &e(t.clone(), 8), &RatFunc::one(), &mtq, -1, &ctx).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn theta_small_cases() {
        let q = sym(Var::Q);
        let th = theta_partial(&q, 4).unwrap();
        let expect: Vec<RatFunc> = [0, 0, 1, 3, 6].iter().map(|&k| q.pow(k).unwrap()).collect();
        assert_eq!(th.coeffs(), &expect[..]);
        let zero = theta_partial(&RatFunc::zero(), 4).unwrap();
        assert_eq!(zero, Series::new(vec![RatFunc::one(), RatFunc::one()], 4));
    }

    #[test]
    fn theta_first_derivative_closed_form() {
        let ctx = STContext::symbolic();
        let q = sym(Var::Q);
        let closed = theta_deriv(1, &q, ThetaMode::Closed, &ctx, 6).unwrap();
        let direct = theta_deriv(1, &q, ThetaMode::Direct, &ctx, 6).unwrap();
        assert_eq!(closed, direct);
        for m in 0..=6i64 {
            let expect = &ctx.fib(m + 1) * &q.pow((m + 1) * m / 2).unwrap();
            assert_eq!(direct.coeff(m as usize), &expect);
        }
    }

    #[test]
    fn negative_power_needs_unit() {
        let ctx = STContext::symbolic();
        let r = deformed_binom(&e(RatFunc::one(), 3), &c(RatFunc::one(), 3), &RatFunc::one(), &RatFunc::one(), -1, &ctx);
        assert!(matches!(r, Err(Error::NotAUnit(_))));
    }

    #[test]
    fn translation_of_square() {
        let ctx = STContext::symbolic();
        let (x, y, u, v) = (sym(Var::X), sym(Var::Y), sym(Var::U), sym(Var::V));
        let target = c(&u * &(&x * &x), 3);
        let got = translation_apply(Var::X, &e(y.clone(), 3), &u, &v, &target, &ctx).unwrap();
        let expect = deformed_binom(&c(x, 3), &e(y, 3), &u, &v, 2, &ctx).unwrap();
        assert_eq!(got, expect);
    }
}
