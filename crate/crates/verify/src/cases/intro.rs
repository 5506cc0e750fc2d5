//! Classical q-identities: Leibniz rule, Rogers-Szego generating functions,
//! inversion of the base.

use stcalc_core::exactring::{RatFunc, Var};
use stcalc_core::pseries::Series;
use stcalc_core::qrs::{q_pochhammer, q_pochhammer_inf, q_pochhammer_inf_recip, rogers_szego_r};
use stcalc_core::Result;

use super::*;
use crate::env::{Env, RatBuf, Value};
use crate::registry::TheoremCase;

pub fn cases() -> Vec<TheoremCase> {
    vec![
        TheoremCase::holds(
            "q_leibniz",
            "Leibniz rule for the q-difference operator: \"the Leibniz rule for D_q\" (without the q^{k(n-k)} weight)",
            q_leibniz,
        ),
        TheoremCase::typo(
            "q_leibniz_printed",
            "Leibniz rule for D_q as printed, with weight q^{k(n-k)}",
            "the weight q^{k(n-k)} breaks the rule from n = 2 on; it holds with weight 1",
            q_leibniz_printed,
        ),
        TheoremCase::holds(
            "rs_h_generating_function",
            "h_n(x;q) \"has the following generating function\" 1/(t, xt; q)_inf",
            h_generating,
        ),
        TheoremCase::holds("rs_mehler", "\"The Mehler's formula for\" h_n(x;q)", mehler).budget(8),
        TheoremCase::holds("rs_rogers", "\"The Rogers formula for\" h_n(x;q)", rogers).budget(8),
        TheoremCase::holds(
            "q_inversion",
            "For |q| > 1: (x; q^-1)_n = q^{-C(n,2)} (-x)^n (x^-1; q)_n",
            inversion,
        ),
    ]
}

/// `f` and `g` with generic coefficients; `g` is a unit.
fn leibniz_pair(env: &Env) -> Result<(Series<RatFunc>, Series<RatFunc>)> {
    let (x, y, z) = (env.val(Var::X), env.val(Var::Y), env.val(Var::Z));
    let n = env.order;
    let f = Series::new(vec![RatFunc::one(), y.clone()], n).div(&Series::new(vec![RatFunc::one(), -&x], n))?;
    let g = Series::new(vec![RatFunc::one(), -&z], n).pow(-2)?.add(&env.mono(x, 3));
    Ok((f, g))
}

fn leibniz_with(env: &Env, weighted: bool) -> Result<(Value, Value)> {
    let q = env.q();
    let (f, g) = leibniz_pair(env)?;
    let (mut lhs, mut rhs) = (RatBuf::new(), RatBuf::new());
    for n in 0..=4usize.min(env.order - 1) {
        let mut fg = f.mul(&g);
        for _ in 0..n {
            fg = fg.q_difference(&q)?;
        }
        let mut sum = Series::zero(env.order - n);
        for k in 0..=n {
            let mut dk = f.clone();
            for _ in 0..k {
                dk = dk.q_difference(&q)?;
            }
            let mut gk = g.clone();
            for _ in 0..n - k {
                gk = gk.q_difference(&q)?;
            }
            let mut c = gauss(n as i64, k, &q)?;
            if weighted {
                c = &c * &q.pow((k * (n - k)) as i64)?;
            }
            let gk = gk.scale_arg(&q.pow(k as i64)?);
            sum = sum.add(&dk.truncate(env.order - n).mul(&gk.truncate(env.order - n)).scale(&c));
        }
        lhs.series(&fg);
        rhs.series(&sum);
    }
    Ok((lhs.done(), rhs.done()))
}

fn q_leibniz(env: &Env) -> Result<(Value, Value)> {
    leibniz_with(env, false)
}

fn q_leibniz_printed(env: &Env) -> Result<(Value, Value)> {
    leibniz_with(env, true)
}

/// `sum_n h_n(x) e^n / (q;q)_n`, with `h_n` evaluated at `x`.
fn h_series(env: &Env, x: &RatFunc, scale: &RatFunc) -> Result<Series<RatFunc>> {
    let q = env.q();
    Series::try_from_fn(env.order, |n| {
        let h = rogers_szego_r(n, &q)?.eval(x, &RatFunc::one())?;
        (&h * &scale.pow(n as i64)?).checked_div(&qq(&q, n))
    })
}

fn h_generating(env: &Env) -> Result<(Value, Value)> {
    let (q, x) = (env.q(), env.val(Var::X));
    let lhs = h_series(env, &x, &RatFunc::one())?;
    let rhs = q_pochhammer_inf_recip(&env.eps(), &q)?.mul(&q_pochhammer_inf_recip(&env.mono(x, 1), &q)?);
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    l.series(&lhs);
    r.series(&rhs);
    Ok((l.done(), r.done()))
}

fn mehler(env: &Env) -> Result<(Value, Value)> {
    let (q, x, y) = (env.q(), env.val(Var::X), env.val(Var::Y));
    let lhs = Series::try_from_fn(env.order, |n| {
        let r = rogers_szego_r(n, &q)?;
        let hx = r.eval(&x, &RatFunc::one())?;
        let hy = r.eval(&y, &RatFunc::one())?;
        (&hx * &hy).checked_div(&qq(&q, n))
    })?;
    let xy = &x * &y;
    let mut rhs = q_pochhammer_inf(&env.mono(xy.clone(), 2), &q)?;
    for a in [RatFunc::one(), x, y, xy] {
        rhs = rhs.mul(&q_pochhammer_inf_recip(&env.mono(a, 1), &q)?);
    }
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    l.series(&lhs);
    r.series(&rhs);
    Ok((l.done(), r.done()))
}

/// Two generating variables `a e` and `c e`.
fn rogers(env: &Env) -> Result<(Value, Value)> {
    let (q, x, a, c) = (env.q(), env.val(Var::X), env.val(Var::Y), env.val(Var::Z));
    let lhs = Series::try_from_fn(env.order, |total| {
        let h = rogers_szego_r(total, &q)?.eval(&x, &RatFunc::one())?;
        let mut acc = RatFunc::zero();
        for n in 0..=total {
            let m = total - n;
            let w = (&a.pow(n as i64)? * &c.pow(m as i64)?).checked_div(&(&qq(&q, n) * &qq(&q, m)))?;
            acc = &acc + &w;
        }
        Ok(&acc * &h)
    })?;
    let mut rhs = q_pochhammer_inf(&env.mono(&(&x * &a) * &c, 2), &q)?;
    for f in [a.clone(), &x * &a, c.clone(), &x * &c] {
        rhs = rhs.mul(&q_pochhammer_inf_recip(&env.mono(f, 1), &q)?);
    }
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    l.series(&lhs);
    r.series(&rhs);
    Ok((l.done(), r.done()))
}

fn inversion(env: &Env) -> Result<(Value, Value)> {
    let (q, x) = (env.q(), env.val(Var::X));
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    let qi = q.inv()?;
    for n in 0..=env.order {
        l.push(q_pochhammer(&x, &qi, n));
        let sign = (-&x).pow(n as i64)?;
        r.push(&(&q.pow(-binom2(n as i64))? * &sign) * &q_pochhammer(&x.inv()?, &q, n));
    }
    Ok((l.done(), r.done()))
}
