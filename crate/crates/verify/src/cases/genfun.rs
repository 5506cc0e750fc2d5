//! Generating functions of the generalized simplicial polytopic numbers.

use stcalc_core::deformed::{theta_deriv, theta_partial, ThetaMode};
use stcalc_core::exactring::{BigRat, RatFunc, Var};
use stcalc_core::pseries::Series;
use stcalc_core::qrs::{q_factorial, q_pochhammer_series};
use stcalc_core::Result;

use super::theta::phi_pochhammer_recip;
use super::*;
use crate::env::{Env, QuadBuf, RatBuf, Value};
use crate::registry::TheoremCase;

pub fn cases() -> Vec<TheoremCase> {
    vec![
        TheoremCase::holds(
            "gfn_u_free",
            "sum {n+d over d} (-t)^-C(n+d,2) (-y/t)^n = Theta_0^(d)(-y/t, -1/t) / [[d]]!",
            gfn,
        ),
        TheoremCase::holds(
            "cor2_t_minus_one",
            "sum_n {n+d over d}_{s,-1} x^n = 1/(phi^d x; q)_{d+1}",
            |e| cor2(e, true),
        )
        .quad(),
        TheoremCase::holds(
            "cor2_all_t",
            "sum_n {n+d over d} x^n = 1/(phi^d x; q)_{d+1} for general t",
            |e| cor2(e, false),
        )
        .quad()
        .note("the t = -1 restriction is not needed"),
        TheoremCase::holds(
            "cor3",
            "sum_n [n+d over d]_q q^-C(n+d,2) y^n = D_q^d Theta_0(y, 1/q) / [d]_q!",
            cor3,
        )
        .note("D_q is the Jackson derivative here, matching the [d]_q! normalization"),
        TheoremCase::holds(
            "gfd",
            "\"the q-deformed generating function\": sum_d {n+d over d} q^C(n+d,2) x^d = Theta_0^(n)(x,q) / [[n]]!",
            gfd,
        ),
        TheoremCase::holds(
            "cor4",
            "sum_d [n+d over d]_q q^-C(n+d,2) x^d = D_q^n Theta_0(x, 1/q) / (q;q)_n",
            cor4,
        ),
        TheoremCase::holds(
            "cor5",
            "sum_d {n+d over d} x^d = 1/(phi^n x; q)_{n+1}",
            cor5,
        )
        .quad(),
        TheoremCase::holds(
            "bivariate_1",
            "sum_{n,d} [n+d over d]_q q^-C(n+d,2) x^d y^n = (1 (-)_{1,1} q(x (+)_{1,1} y))_q^(-1)",
            |e| bivariate(e, Biv::First),
        ),
        TheoremCase::typo(
            "bivariate_2_printed",
            "sum_{d,n} [n+d over d]_q q^-C(n+d,2) x^n y^d = (1 (-)_{1,1} q(x (+)_{1,1} (1-q)y))_q^(-1) as printed",
            "the factor (1-q) must not appear; the double sum is symmetric in x and y",
            |e| bivariate(e, Biv::SecondPrinted),
        ),
        TheoremCase::holds(
            "bivariate_2",
            "sum_{d,n} [n+d over d]_q q^-C(n+d,2) x^n y^d = (1 (-)_{1,1} q(x (+)_{1,1} y))_q^(-1)",
            |e| bivariate(e, Biv::Second),
        ),
        TheoremCase::typo(
            "squared_binomial_ogf_printed",
            "\"The ordinary generating function of sequence\" [n+1 over 2]_q^2 as printed",
            "the printed rational function is wrong from x^2 on; the generating function is (x + q(1+q)^2 x^2 + q^4 x^3)/((1-x)(qx;q)_4)",
            |e| squared(e, Squared::Printed),
        ),
        TheoremCase::holds(
            "squared_binomial_ogf",
            "sum [n+1 over 2]_q^2 x^n = (x + q(1+q)^2 x^2 + q^4 x^3)/((1-x)(qx;q)_4)",
            |e| squared(e, Squared::Corrected),
        ),
        TheoremCase::holds(
            "squared_binomial_operator",
            "sum [n+1 over 2]_q^2 x^n = 1/(1-q^2 x) (x D_q)^2 (x D_{q^2}) {x/(1-x)}",
            |e| squared(e, Squared::Operator),
        )
        .note("D_q is the Jackson derivative"),
    ]
}

fn gfn(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let t = ctx.t().clone();
    let mt = -&t;
    let y = env.val(Var::Y);
    let arg = -&y.checked_div(&t)?;
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for d in 0..=3usize {
        let di = d as i64;
        let lhs = Series::try_from_fn(env.order, |n| {
            let n = n as i64;
            Ok(&(&ctx.st_binom(n + di, d)? * &mt.pow(-binom2(n + di))?) * &arg.pow(n)?)
        })?;
        let fact = ctx.fib_factorial(d).inv()?;
        let qq = mt.inv()?;
        for mode in [ThetaMode::Direct, ThetaMode::Closed] {
            let th = theta_deriv(d, &qq, mode, ctx, env.order)?;
            l.series(&lhs);
            r.series(&th.scale_arg(&arg).scale(&fact));
        }
    }
    Ok((l.done(), r.done()))
}

fn cor2(env: &Env, t_minus_one: bool) -> Result<(Value, Value)> {
    let ctx = sym_ctx();
    let (mut l, mut r) = (QuadBuf::new(), QuadBuf::new());
    for d in 0..=4usize {
        let lhs = Series::try_from_fn(env.order, |n| stb(&ctx, n as i64 + d as i64, d))?;
        l.series(&lhs);
        r.series(&phi_pochhammer_recip(d, env.order)?);
    }
    let (l, r) = (l.done(), r.done());
    if t_minus_one {
        let at = [(Var::T, BigRat::from(-1))];
        return Ok((crate::env::specialize(&l, &at)?, crate::env::specialize(&r, &at)?));
    }
    Ok((l, r))
}

fn cor5(env: &Env) -> Result<(Value, Value)> {
    let ctx = sym_ctx();
    let (mut l, mut r) = (QuadBuf::new(), QuadBuf::new());
    for n in 0..=5usize {
        let lhs = Series::try_from_fn(env.order, |d| stb(&ctx, n as i64 + d as i64, d))?;
        l.series(&lhs);
        r.series(&phi_pochhammer_recip(n, env.order)?);
    }
    Ok((l.done(), r.done()))
}

fn cor3(env: &Env) -> Result<(Value, Value)> {
    let q = env.q();
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for d in 0..=4usize {
        let di = d as i64;
        let lhs = Series::try_from_fn(env.order, |n| {
            let n = n as i64;
            Ok(&gauss(n + di, d, &q)? * &q.pow(-binom2(n + di))?)
        })?;
        let mut f = theta_partial(&q.inv()?, env.order + d)?;
        for _ in 0..d {
            f = f.q_derive(&q)?;
        }
        l.series(&lhs);
        r.series(&f.scale(&q_factorial(d, &q)?.inv()?));
    }
    Ok((l.done(), r.done()))
}

fn gfd(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let q = env.q();
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=4usize {
        let ni = n as i64;
        let lhs = Series::try_from_fn(env.order, |d| {
            let d = d as i64;
            Ok(&ctx.st_binom(ni + d, n)? * &q.pow(binom2(ni + d))?)
        })?;
        let fact = ctx.fib_factorial(n).inv()?;
        for mode in [ThetaMode::Direct, ThetaMode::Closed] {
            l.series(&lhs);
            r.series(&theta_deriv(n, &q, mode, ctx, env.order)?.scale(&fact));
        }
    }
    Ok((l.done(), r.done()))
}

fn cor4(env: &Env) -> Result<(Value, Value)> {
    let q = env.q();
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=4usize {
        let ni = n as i64;
        let lhs = Series::try_from_fn(env.order, |d| {
            let d = d as i64;
            Ok(&gauss(ni + d, n, &q)? * &q.pow(-binom2(ni + d))?)
        })?;
        let mut f = theta_partial(&q.inv()?, env.order + n)?;
        for _ in 0..n {
            f = f.q_difference(&q)?;
        }
        l.series(&lhs);
        r.series(&f.scale(&qq(&q, n).inv()?));
    }
    Ok((l.done(), r.done()))
}

#[derive(Clone, Copy, PartialEq)]
enum Biv {
    First,
    SecondPrinted,
    Second,
}

/// Both variables carry `e`: `x = X e`, `y = Y e`.
fn bivariate(env: &Env, which: Biv) -> Result<(Value, Value)> {
    let q = env.q();
    let (x, y) = (env.val(Var::X), env.val(Var::Y));
    // Exponent of x is n in the second statement and d in the first.
    let lhs = Series::try_from_fn(env.order, |m| {
        let m = m as i64;
        let mut acc = RatFunc::zero();
        for d in 0..=m {
            let n = m - d;
            let (ex, ey) = if which == Biv::First { (d, n) } else { (n, d) };
            acc = &acc + &(&gauss(m, d as usize, &q)? * &(&x.pow(ex)? * &y.pow(ey)?));
        }
        Ok(&acc * &q.pow(-binom2(m))?)
    })?;
    let one = RatFunc::one();
    let ycoef = if which == Biv::SecondPrinted { &(&one - &q) * &y } else { y.clone() };
    let inner = plus(atom(env.mono(x, 1)), atom(env.mono(ycoef, 1)), &one, &one);
    let rhs = minus(atom(super::one(env)), times(env.cst(q.clone()), inner), &one, &one).power(-1, &env.qctx())?;
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    l.series(&lhs);
    r.series(&rhs);
    Ok((l.done(), r.done()))
}

#[derive(Clone, Copy)]
enum Squared {
    Printed,
    Corrected,
    Operator,
}

/// `x D_q f`, keeping the order of `f`.
fn x_d(f: &Series<RatFunc>, q: &RatFunc) -> Result<Series<RatFunc>> {
    let d = f.q_derive(q)?;
    let mut c = vec![RatFunc::zero()];
    c.extend(d.into_coeffs());
    Ok(Series::new(c, f.order()))
}

fn squared(env: &Env, which: Squared) -> Result<(Value, Value)> {
    let q = env.q();
    let order = env.order;
    let lhs = Series::try_from_fn(order, |n| {
        if n == 0 {
            return Ok(RatFunc::zero());
        }
        let g = gauss(n as i64 + 1, 2, &q)?;
        Ok(&g * &g)
    })?;
    let x = env.eps();
    let one = Series::one(order);
    let poly = |cs: &[RatFunc]| Series::new(cs.to_vec(), order);
    let q2 = q.pow(2)?;
    let rhs = match which {
        Squared::Printed => {
            let num = poly(&[
                RatFunc::zero(),
                RatFunc::one(),
                &(&q2 - &(&int(3) * &q.pow(4)?)) + &q.pow(6)?,
                &(&q2 - &q.pow(3)?) + &(&int(2) * &q.pow(4)?),
                &q.pow(6)? + &q.pow(7)?,
            ]);
            let den = one
                .sub(&x)
                .mul(&one.sub(&x.scale(&q2)))
                .mul(&q_pochhammer_series(&x.scale(&q), &q, 4));
            num.div(&den)?
        }
        Squared::Corrected => {
            let opq = &RatFunc::one() + &q;
            let num = poly(&[RatFunc::zero(), RatFunc::one(), &q * &(&opq * &opq), q.pow(4)?]);
            let den = one.sub(&x).mul(&q_pochhammer_series(&x.scale(&q), &q, 4));
            num.div(&den)?
        }
        Squared::Operator => {
            let f = x.mul(&one.sub(&x).reciprocal()?);
            let g = x_d(&x_d(&x_d(&f, &q2)?, &q)?, &q)?;
            g.div(&one.sub(&x.scale(&q2)))?
        }
    };
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    l.series(&lhs);
    r.series(&rhs);
    Ok((l.done(), r.done()))
}

