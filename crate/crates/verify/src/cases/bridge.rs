//! Rogers-Szego polynomials against the q-polytopic numbers.

use stcalc_core::exactring::{RatFunc, Var};
use stcalc_core::pseries::Series;
use stcalc_core::qrs::{rogers_szego_h, rogers_szego_r};
use stcalc_core::Result;

use super::rogers::{phi21_side, rs_kernel};
use super::*;
use crate::env::{Env, RatBuf, Value};
use crate::registry::TheoremCase;

pub fn cases() -> Vec<TheoremCase> {
    vec![
        TheoremCase::typo(
            "bridge_printed",
            "[(qyx)^d] sum q^-C(n,2) h_n(x,q) y^n = sum [n+d over d]_q q^-C(n+d,2) y^n as printed",
            "extracting (qyx)^d leaves an extra q^-d; the coefficient of (yx)^d is the right one",
            |e| bridge(e, true),
        ),
        TheoremCase::holds(
            "bridge",
            "[(yx)^d] sum q^-C(n,2) h_n(x,q) y^n = sum [n+d over d]_q q^-C(n+d,2) y^n",
            |e| bridge(e, false),
        ),
        TheoremCase::typo(
            "rn_q_deformed_printed",
            "sum_n [n+d over d]_q q^-C(n+d,2) r_n(x,b;q) y^n = q^-C(d,2) (1-q)^d (1 (-)_{1,1} qy(b (+)_{1,1} x))_q^(-d-1) as printed",
            "the factor (1-q)^d is spurious: the Jackson normalization of D_q^d Theta_0 cancels (q;q)_d against [d]_q!",
            |e| rn_deformed(e, true),
        ),
        TheoremCase::holds(
            "rn_q_deformed",
            "sum_n [n+d over d]_q q^-C(n+d,2) r_n(x,b;q) y^n = q^-C(d,2) (1 (-)_{1,1} qy(b (+)_{1,1} x))_q^(-d-1)",
            |e| rn_deformed(e, false),
        ),
        TheoremCase::holds(
            "rd_q_deformed",
            "sum_d [n+d over d]_q q^-C(n+d,2) r_d(x,b;q) y^d = q^-C(n,2) (1 (-)_{1,1} qy(b (+)_{1,1} x))_q^(-n-1)",
            rd_deformed,
        ),
        TheoremCase::typo(
            "shifted_printed",
            "sum_{n>=1} [n+d-1 over d]_q q^-C(n+d-1,2) r_n(x,b;q) y^n as printed, with q^2 y and bq in the first kernel",
            "the first kernel should be (1 (-)_{1,1} qy(b (+)_{1,1} x)) and the second (1 (-)_{1,1} qy(qb (+)_{1,1} x)), without (1-q) powers",
            |e| shifted(e, true),
        ),
        TheoremCase::holds(
            "shifted",
            "sum_{n>=1} [n+d-1 over d]_q q^-C(n+d-1,2) r_n(x,b;q) y^n = q^-C(d,2) [by (1 (-) qy(b (+) x))^(-d-1) + xy (1 (-) qy(qb (+) x))^(-d-1)]",
            |e| shifted(e, false),
        ),
        TheoremCase::typo(
            "final_phi21_printed",
            "sum_d [n+d over d]_q r_n(x,b;q) y^d = 1/((1-x)(qx;q)_n) 2phi1(q^{n+1}, 0; q^{n+1}x; q, b) as printed",
            "the sum must carry r_d, and the right side needs xy and by in place of x and b",
            |e| final_phi21(e, true),
        ),
        TheoremCase::holds(
            "final_phi21",
            "sum_d [n+d over d]_q r_d(x,b;q) y^d = 1/((1-xy)(qxy;q)_n) 2phi1(q^{n+1}, 0; q^{n+1}xy; q, by)",
            |e| final_phi21(e, false),
        ),
    ]
}

/// `x` stays symbolic so that the coefficient of `x^d` can be read off.
fn bridge(env: &Env, printed: bool) -> Result<(Value, Value)> {
    let q = env.q();
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for d in 0..=3usize {
        let di = d as i64;
        let big = env.order + d;
        let full = Series::try_from_fn(big, |n| {
            let h = rogers_szego_h(n, &q)?;
            Ok(&q.pow(-binom2(n as i64))? * &coeff_in(&h, Var::X, d as i32)?)
        })?;
        let mut lhs = full.shift_down(d)?.truncate(env.order);
        if printed {
            lhs = lhs.scale(&q.pow(-di)?);
        }
        let rhs = Series::try_from_fn(env.order, |n| {
            let n = n as i64;
            Ok(&gauss(n + di, d, &q)? * &q.pow(-binom2(n + di))?)
        })?;
        l.series(&lhs);
        r.series(&rhs);
    }
    Ok((l.done(), r.done()))
}

fn rn_deformed(env: &Env, printed: bool) -> Result<(Value, Value)> {
    let q = env.q();
    let (x, b) = (env.val(Var::X), env.val(Var::B));
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for d in 0..=3i64 {
        let lhs = Series::try_from_fn(env.order, |n| {
            let n = n as i64;
            let rn = rogers_szego_r(n as usize, &q)?.eval(&x, &b)?;
            Ok(&(&gauss(n + d, d as usize, &q)? * &q.pow(-binom2(n + d))?) * &rn)
        })?;
        let mut c = q.pow(-binom2(d))?;
        if printed {
            c = &c * &(&RatFunc::one() - &q).pow(d)?;
        }
        l.series(&lhs);
        r.series(&rs_kernel(env, &env.qctx(), &q, &b, &x, -d - 1)?.scale(&c));
    }
    Ok((l.done(), r.done()))
}

fn rd_deformed(env: &Env) -> Result<(Value, Value)> {
    let q = env.q();
    let (x, b) = (env.val(Var::X), env.val(Var::B));
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=3i64 {
        let lhs = Series::try_from_fn(env.order, |d| {
            let d = d as i64;
            let rd = rogers_szego_r(d as usize, &q)?.eval(&x, &b)?;
            Ok(&(&gauss(n + d, d as usize, &q)? * &q.pow(-binom2(n + d))?) * &rd)
        })?;
        l.series(&lhs);
        r.series(&rs_kernel(env, &env.qctx(), &q, &b, &x, -n - 1)?.scale(&q.pow(-binom2(n))?));
    }
    Ok((l.done(), r.done()))
}

fn shifted(env: &Env, printed: bool) -> Result<(Value, Value)> {
    let q = env.q();
    let qctx = env.qctx();
    let (x, b) = (env.val(Var::X), env.val(Var::B));
    let one_q = &RatFunc::one() - &q;
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for d in 1..=3i64 {
        let lhs = Series::try_from_fn(env.order, |n| {
            if n == 0 {
                return Ok(RatFunc::zero());
            }
            let n = n as i64;
            let rn = rogers_szego_r(n as usize, &q)?.eval(&x, &b)?;
            Ok(&(&gauss(n + d - 1, d as usize, &q)? * &q.pow(-binom2(n + d - 1))?) * &rn)
        })?;
        let c = q.pow(-binom2(d))?;
        let qb = &q * &b;
        let rhs = if printed {
            let first = rs_kernel(env, &qctx, &q.pow(2)?, &qb, &x, -d - 1)?
                .shift_up(1)
                .scale(&(&b * &one_q.pow(d - 1)?));
            let second = rs_kernel(env, &qctx, &q, &b, &x, -d - 1)?
                .shift_up(1)
                .scale(&(&x * &one_q.pow(d)?));
            first.add(&second).scale(&c)
        } else {
            let first = rs_kernel(env, &qctx, &q, &b, &x, -d - 1)?.shift_up(1).scale(&b);
            let second = rs_kernel(env, &qctx, &q, &qb, &x, -d - 1)?.shift_up(1).scale(&x);
            first.add(&second).scale(&c)
        };
        l.series(&lhs);
        r.series(&rhs);
    }
    Ok((l.done(), r.done()))
}

fn final_phi21(env: &Env, printed: bool) -> Result<(Value, Value)> {
    let q = env.q();
    let (x, b, y) = (env.val(Var::X), env.val(Var::B), env.val(Var::Y));
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=3usize {
        let ni = n as i64;
        let norm = qq(&q, n).inv()?;
        if printed {
            // x, b and y all carry e.
            let rn = rogers_szego_r(n, &q)?.eval(&x, &b)?;
            let lhs = Series::try_from_fn(env.order, |m| {
                if m < n {
                    return Ok(RatFunc::zero());
                }
                let d = (m - n) as i64;
                Ok(&(&gauss(ni + d, d as usize, &q)? * &rn) * &y.pow(d)?)
            })?;
            let rhs = phi21_side(env, &q, n, &env.mono(x.clone(), 1), &env.mono(b.clone(), 1))?.scale(&norm);
            l.series(&lhs);
            r.series(&rhs);
        } else {
            let lhs = Series::try_from_fn(env.order, |d| {
                let rd = rogers_szego_r(d, &q)?.eval(&x, &b)?;
                Ok(&gauss(ni + d as i64, d, &q)? * &rd)
            })?;
            let rhs = phi21_side(env, &q, n, &env.mono(x.clone(), 1), &env.mono(b.clone(), 1))?.scale(&norm);
            l.series(&lhs);
            r.series(&rhs);
        }
    }
    Ok((l.done(), r.done()))
}
