//! The shifted derivative `T_{u^-1} D`, the deformed Taylor formula and the
//! deformed translation operator. The operator acts on the symbol `x`; its
//! parameter `y` carries the formal variable.

use stcalc_core::deformed::{deformed_binom, shifted_derivative, translation_apply};
use stcalc_core::exactring::{RatFunc, Var};
use stcalc_core::pseries::Series;
use stcalc_core::Result;

use super::*;
use crate::env::{Env, RatBuf, Value};
use crate::registry::TheoremCase;

pub fn cases() -> Vec<TheoremCase> {
    vec![
        TheoremCase::holds(
            "shifted_derivative_powers",
            "\"A direct calculation shows that\" (T_a D)^k u^C(n,2) x^n = [[n]]!/[[n-k]]! u^C(n-k,2) x^(n-k), a = 1/u",
            shifted_powers,
        ),
        TheoremCase::holds(
            "deformed_taylor_formula",
            "\"The (u,v)-deformed (s,t)-Taylor formula\" f(x (+)_{u,v} y) = sum v^C(n,2) y^n/[[n]]! (T_{u^-1} D)^n f(x,u)",
            taylor,
        )
        .budget(10),
        TheoremCase::holds(
            "translation_of_powers",
            "\"Define the deformed translation operator\": e(y T_{u^-1} D, v) u^C(alpha,2) x^alpha = (x (+)_{u,v} y)^(alpha)",
            translation_powers,
        )
        .budget(10),
        TheoremCase::holds(
            "translation_of_exponential",
            "e(y T_{u^-1} D, v) exp(x,u) = exp(x (+)_{u,v} y)",
            translation_exp,
        )
        .budget(10),
    ]
}

fn shifted_powers(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let u = env.val(Var::U);
    let x = env.sym(Var::X);
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=env.order.min(6) as i64 {
        for k in 0..=n + 1 {
            let mut f = Series::constant(&u.pow(binom2(n))? * &x.pow(n)?, 0);
            for _ in 0..k {
                f = shifted_derivative(&f, Var::X, &u, ctx)?;
            }
            let rhs = if k <= n {
                let c = ctx.fib_factorial(n as usize).checked_div(&ctx.fib_factorial((n - k) as usize))?;
                &(&c * &u.pow(binom2(n - k))?) * &x.pow(n - k)?
            } else {
                RatFunc::zero()
            };
            l.push(f.coeff(0).clone());
            r.push(rhs);
        }
    }
    Ok((l.done(), r.done()))
}

/// `f(x,u) = sum_{n<=N} u^C(n,2) a_n x^n` against `sum a_n (x (+)_{u,v} y)^(n)`.
fn taylor_with(env: &Env, a: impl Fn(usize) -> Result<RatFunc>) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let (u, v) = (env.val(Var::U), env.val(Var::V));
    let x = env.sym(Var::X);
    let y = env.mono(env.val(Var::Y), 1);
    let mut f = RatFunc::zero();
    let mut lhs = Series::zero(env.order);
    for n in 0..=env.order {
        let an = a(n)?;
        f = &f + &(&(&u.pow(binom2(n as i64))? * &an) * &x.pow(n as i64)?);
        lhs = lhs.add(&deformed_binom(&env.cst(x.clone()), &y, &u, &v, n as i64, ctx)?.scale(&an));
    }
    let rhs = translation_apply(Var::X, &y, &u, &v, &env.cst(f), ctx)?;
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    l.series(&lhs);
    r.series(&rhs);
    Ok((l.done(), r.done()))
}

fn taylor(env: &Env) -> Result<(Value, Value)> {
    let z = env.val(Var::Z);
    taylor_with(env, |n| Ok(&z.pow(n as i64)? + &RatFunc::int(n as i64)))
}

fn translation_powers(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let (u, v) = (env.val(Var::U), env.val(Var::V));
    let x = env.sym(Var::X);
    let y = env.mono(env.val(Var::Y), 1);
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for alpha in [0i64, 1, 3, -1, -2] {
        let target = env.cst(&u.pow(binom2(alpha))? * &x.pow(alpha)?);
        l.series(&translation_apply(Var::X, &y, &u, &v, &target, ctx)?);
        r.series(&deformed_binom(&env.cst(x.clone()), &y, &u, &v, alpha, ctx)?);
    }
    Ok((l.done(), r.done()))
}

fn translation_exp(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    taylor_with(env, |n| RatFunc::one().checked_div(&ctx.fib_factorial(n)))
}
