//! Rogers-Szego polynomials through the q-exponential operator.

use stcalc_core::deformed::{deformed_binom, theta_partial};
use stcalc_core::exactring::{RatFunc, Var};
use stcalc_core::pseries::{symbolic, Series};
use stcalc_core::qrs::{phi21_truncated, q_exp_operator, q_pochhammer, q_pochhammer_series, rogers_szego_r};
use stcalc_core::stcore::STContext;
use stcalc_core::Result;

use super::*;
use crate::env::{Env, RatBuf, Value};
use crate::registry::TheoremCase;

pub fn cases() -> Vec<TheoremCase> {
    vec![
        TheoremCase::holds(
            "rs_operator_monomials",
            "T(b D_q){x^n} = r_n(x,b;q) = (x (+)_{1,1} b)_q^(n)",
            operator_monomials,
        ),
        TheoremCase::holds(
            "rs_deformed_ogf",
            "\"The deformed ordinary generating function\": sum q^-C(n,2) r_n(x,b;q) y^n = (1 (-)_{1,1} qy(b (+)_{1,1} x))_q^(-1)",
            trsp,
        ),
        TheoremCase::holds(
            "rs_operator_pochhammer",
            "T(D_q){(q;q)_n/(x;q)_{n+1}} = 1/(1-x) (q;q)_n/(qx;q)_n 2phi1(q^{n+1}, 0; q^{n+1}x; q, b)",
            operator_pochhammer,
        )
        .budget(10),
        TheoremCase::holds(
            "rs_ogf",
            "\"The ordinary generating function of\" r_n: sum r_n(x,b;q) y^n = 1/(1-xy) 2phi1(q, 0; qyx; q, by)",
            rs_ogf,
        ),
        TheoremCase::holds(
            "theta_q_derivatives",
            "D_q^n Theta_0(x, 1/q) = (q;q)_n q^-C(n,2) (1 (-)_{1,1} qx)_q^(-n-1)",
            theta_q_derivatives,
        ),
        TheoremCase::holds(
            "rs_operator_theta",
            "T(b D_q){D_u^k Theta_0(xy, 1/u)} = u^-C(k+1,2) (u;u)_k q^k y^k (1 (-)_{1,1} qy(b (+)_{1,1} x))_q^(-k-1), at u = q",
            |e| dtrsp(e, false),
        )
        .note("the identity needs u = q: the proof replaces D_u^n Theta_0(xy, 1/u) by the q-form"),
        TheoremCase::typo(
            "rs_operator_theta_general_u",
            "the same identity with an independent base u",
            "with u different from q the two sides differ from k = 1 on",
            |e| dtrsp(e, true),
        ),
    ]
}

/// `(1 (-)_{1,1} c y (b (+)_{1,1} x))_q^(alpha)` with `y = e`.
pub(crate) fn rs_kernel(
    env: &Env,
    ctx: &STContext,
    c: &RatFunc,
    b: &RatFunc,
    x: &RatFunc,
    alpha: i64,
) -> Result<Series<RatFunc>> {
    let one = RatFunc::one();
    let inner = plus(atom(env.cst(b.clone())), atom(env.cst(x.clone())), &one, &one);
    let t = minus(atom(super::one(env)), times(env.mono(c.clone(), 1), inner), &one, &one);
    t.power(alpha, ctx)
}

fn operator_monomials(env: &Env) -> Result<(Value, Value)> {
    let q = env.q();
    let qctx = env.qctx();
    let x = env.sym(Var::X);
    let b = env.val(Var::B);
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=env.order {
        let target = Series::constant(x.pow(n as i64)?, 0);
        let out = q_exp_operator(&Series::constant(b.clone(), 0), Var::X, &q, &target)?;
        let rn = rogers_szego_r(n, &q)?.eval(&x, &b)?;
        let binom = deformed_binom(
            &Series::constant(x.clone(), 0),
            &Series::constant(b.clone(), 0),
            &RatFunc::one(),
            &RatFunc::one(),
            n as i64,
            &qctx,
        )?;
        l.push(out.coeff(0).clone());
        l.push(rn.clone());
        r.push(rn);
        r.push(binom.coeff(0).clone());
    }
    Ok((l.done(), r.done()))
}

fn trsp(env: &Env) -> Result<(Value, Value)> {
    let q = env.q();
    let (x, b) = (env.val(Var::X), env.val(Var::B));
    let lhs = Series::try_from_fn(env.order, |n| {
        Ok(&q.pow(-binom2(n as i64))? * &rogers_szego_r(n, &q)?.eval(&x, &b)?)
    })?;
    let rhs = rs_kernel(env, &env.qctx(), &q, &b, &x, -1)?;
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    l.series(&lhs);
    r.series(&rhs);
    Ok((l.done(), r.done()))
}

/// `1/(1 - a) * (q;q)_n / (qa;q)_n * 2phi1(q^{n+1}, 0; q^{n+1} a; q, z)` for series `a`, `z`.
pub(crate) fn phi21_side(
    env: &Env,
    q: &RatFunc,
    n: usize,
    a: &Series<RatFunc>,
    z: &Series<RatFunc>,
) -> Result<Series<RatFunc>> {
    let order = env.order;
    let one = Series::one(order);
    let qn1 = q.pow(n as i64 + 1)?;
    let pre = one
        .sub(a)
        .mul(&q_pochhammer_series(&a.scale(q), q, n))
        .reciprocal()?
        .scale(&qq(q, n));
    let phi = phi21_truncated(&env.cst(qn1.clone()), &Series::zero(order), &a.scale(&qn1), q, z, order)?;
    Ok(pre.mul(&phi))
}

fn operator_pochhammer(env: &Env) -> Result<(Value, Value)> {
    let q = env.q();
    let x = env.mono(env.sym(Var::X), 1);
    let b = env.val(Var::B);
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=3usize {
        let target = q_pochhammer_series(&x, &q, n + 1).reciprocal()?.scale(&qq(&q, n));
        l.series(&q_exp_operator(&env.cst(b.clone()), Var::X, &q, &target)?);
        r.series(&phi21_side(env, &q, n, &x, &env.mono(b.clone(), 1))?);
    }
    Ok((l.done(), r.done()))
}

fn rs_ogf(env: &Env) -> Result<(Value, Value)> {
    let q = env.q();
    let (x, b) = (env.val(Var::X), env.val(Var::B));
    let lhs = Series::try_from_fn(env.order, |n| rogers_szego_r(n, &q)?.eval(&x, &b))?;
    let rhs = phi21_side(env, &q, 0, &env.mono(x, 1), &env.mono(b, 1))?;
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    l.series(&lhs);
    r.series(&rhs);
    Ok((l.done(), r.done()))
}

fn theta_q_derivatives(env: &Env) -> Result<(Value, Value)> {
    let q = env.q();
    let qctx = env.qctx();
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=3usize {
        let mut f = theta_partial(&q.inv()?, env.order + n)?;
        for _ in 0..n {
            f = f.q_difference(&q)?;
        }
        let one = RatFunc::one();
        let body = minus(atom(super::one(env)), atom(env.mono(q.clone(), 1)), &one, &one).power(-(n as i64) - 1, &qctx)?;
        let c = &qq(&q, n) * &q.pow(-binom2(n as i64))?;
        l.series(&f);
        r.series(&body.scale(&c));
    }
    Ok((l.done(), r.done()))
}

/// `x` is the operator symbol, `y = e`, `b` unmarked.
fn dtrsp(env: &Env, general_u: bool) -> Result<(Value, Value)> {
    let q = env.q();
    let u = if general_u { env.val(Var::U) } else { q.clone() };
    let x = env.sym(Var::X);
    let b = env.val(Var::B);
    let ui = u.inv()?;
    let theta = Series::try_from_fn(env.order, |n| Ok(&ui.pow(binom2(n as i64))? * &x.pow(n as i64)?))?;
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for k in 0..=3usize {
        let mut f = theta.clone();
        for _ in 0..k {
            f = symbolic::on_coeffs(&f, |c| symbolic::q_difference_var(c, Var::X, &u))?;
        }
        let lhs = q_exp_operator(&env.cst(b.clone()), Var::X, &q, &f)?;
        let c = &(&u.pow(-binom2(k as i64 + 1))? * &q_pochhammer(&u, &u, k)) * &q.pow(k as i64)?;
        let rhs = rs_kernel(env, &env.qctx(), &q, &b, &x, -(k as i64) - 1)?.shift_up(k).scale(&c);
        l.series(&lhs);
        r.series(&rhs);
    }
    Ok((l.done(), r.done()))
}
