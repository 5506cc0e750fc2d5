//! The `(s,t)`-derivative: product and quotient rules, derivatives of the
//! geometric series and of the partial theta function, derivatives of
//! deformed binomial series.

use stcalc_core::deformed::{deformed_binom, deformed_binom_minus, theta_partial};
use stcalc_core::exactring::{phi, phi_prime, QuadExt, RatFunc, Var};
use stcalc_core::pseries::{symbolic, Series};
use stcalc_core::qrs::q_pochhammer_series;
use stcalc_core::Result;

use super::*;
use crate::env::{Env, QuadBuf, RatBuf, Value};
use crate::registry::TheoremCase;

pub fn cases() -> Vec<TheoremCase> {
    vec![
        TheoremCase::holds(
            "st_product_rule_phi",
            "product rule D(fg) = f(phi x) Dg + g(phi' x) Df",
            |e| product_rule(e, false),
        )
        .quad(),
        TheoremCase::holds(
            "st_product_rule_phi_prime",
            "product rule D(fg) = f(phi' x) Dg + g(phi x) Df",
            |e| product_rule(e, true),
        )
        .quad(),
        TheoremCase::holds(
            "st_quotient_rule_phi",
            "quotient rule with g(phi x) Df - f(phi x) Dg over g(phi x) g(phi' x)",
            |e| quotient_rule(e, false),
        )
        .quad(),
        TheoremCase::holds(
            "st_quotient_rule_phi_prime",
            "quotient rule with g(phi' x) Df - f(phi' x) Dg over g(phi x) g(phi' x)",
            |e| quotient_rule(e, true),
        )
        .quad(),
        TheoremCase::holds(
            "geometric_derivatives",
            "D^n (1/(1-x)) = [[n]]! / (phi^n x; q)_{n+1} with q = phi'/phi, n <= 6",
            geometric_derivatives,
        )
        .quad(),
        TheoremCase::holds(
            "theta_binomial_series",
            "Theta_0(x,q) = (1 (+)_{1,-tq} tx)^(-1)",
            theta_binomial,
        ),
        TheoremCase::holds(
            "theta_derivatives",
            "Theta_0^(n)(x,q) = [[n]]! q^C(n,2) (1 (+)_{1,-tq} (-tq)^n tx)^(-n-1)",
            theta_derivatives,
        )
        .budget(10),
        TheoremCase::holds(
            "theta_derivatives_q_one",
            "Theta_0^(n)(x,1) = [[n]]! / (phi^n x; q)_{n+1}",
            theta_q_one,
        )
        .quad(),
        TheoremCase::holds(
            "binomial_derivative_left",
            "D (x (+)_{u,v} a)^(alpha) = [[alpha]] (ux (+)_{u,v} a)^(alpha-1)",
            derivative_left,
        ),
        TheoremCase::holds(
            "binomial_derivative_right",
            "D (a (+)_{u,v} x)^(alpha) = [[alpha]] (a (+)_{u,v} vx)^(alpha-1)",
            derivative_right,
        ),
        TheoremCase::holds(
            "binomial_derivative_k_fold",
            "D^k (a (+)_{u,v} x)^(alpha) = v^C(k,2) [[k]]! {alpha over k} (a (+)_{u,v} v^k x)^(alpha-k)",
            derivative_k_fold,
        ),
        TheoremCase::holds(
            "binomial_derivative_minus",
            "D (a (-)_{u,v} x)^(alpha) = -[[alpha]] (a (-)_{u,v} vx)^(alpha-1)",
            |e| derivative_minus(e, false),
        ),
        TheoremCase::typo(
            "binomial_derivative_minus_printed",
            "D (a (-)_{u,v} x)^(alpha) = -[[alpha]] (a (+)_{u,v} vx)^(alpha-1) as printed",
            "with (-) meaning y -> -y, the right side must keep (-); the printed (+) fails at alpha = 2",
            |e| derivative_minus(e, true),
        ),
    ]
}

/// A generic series with leading coefficient 1 and the given seed symbols.
fn generic(env: &Env, a: Var, b: Var) -> Result<Series<QuadExt>> {
    let (a, b) = (env.val(a), env.val(b));
    let n = env.order;
    let f = Series::new(vec![RatFunc::one(), b], n)
        .div(&Series::new(vec![RatFunc::one(), -&a, RatFunc::int(2)], n))?;
    Ok(f.into_quad())
}

fn product_rule(env: &Env, swapped: bool) -> Result<(Value, Value)> {
    let ctx = sym_ctx();
    let f = generic(env, Var::X, Var::Y)?;
    let g = generic(env, Var::Z, Var::B)?;
    let (p, pp) = if swapped { (phi_prime(), phi()) } else { (phi(), phi_prime()) };
    let lhs = f.mul(&g).st_derive(&ctx)?;
    let rhs = f
        .scale_arg(&p)
        .mul(&g.st_derive(&ctx)?)
        .add(&g.scale_arg(&pp).mul(&f.st_derive(&ctx)?));
    let (mut l, mut r) = (QuadBuf::new(), QuadBuf::new());
    l.series(&lhs);
    r.series(&rhs);
    Ok((l.done(), r.done()))
}

fn quotient_rule(env: &Env, swapped: bool) -> Result<(Value, Value)> {
    let ctx = sym_ctx();
    let f = generic(env, Var::X, Var::Y)?;
    let g = generic(env, Var::Z, Var::B)?;
    let p = if swapped { phi_prime() } else { phi() };
    let lhs = f.div(&g)?.st_derive(&ctx)?;
    let num = g
        .scale_arg(&p)
        .mul(&f.st_derive(&ctx)?)
        .sub(&f.scale_arg(&p).mul(&g.st_derive(&ctx)?));
    let den = g.scale_arg(&phi()).mul(&g.scale_arg(&phi_prime()));
    let rhs = num.div(&den)?;
    let (mut l, mut r) = (QuadBuf::new(), QuadBuf::new());
    l.series(&lhs);
    r.series(&rhs);
    Ok((l.done(), r.done()))
}

/// `1 / (phi^n x; phi'/phi)_{n+1}` to `order`.
pub(crate) fn phi_pochhammer_recip(n: usize, order: usize) -> Result<Series<QuadExt>> {
    let qhat = &phi_prime() * &phi().inv()?;
    let a = qmono(phi().pow(n as i64)?, 1, order);
    q_pochhammer_series(&a, &qhat, n + 1).reciprocal()
}

fn geometric_derivatives(env: &Env) -> Result<(Value, Value)> {
    let ctx = sym_ctx();
    let (mut l, mut r) = (QuadBuf::new(), QuadBuf::new());
    for n in 1..=6usize {
        let mut f = Series::<QuadExt>::geometric(env.order + n);
        for _ in 0..n {
            f = f.st_derive(&ctx)?;
        }
        let rhs = phi_pochhammer_recip(n, env.order)?.scale(&QuadExt::from(ctx.fib_factorial(n)));
        l.series(&f);
        r.series(&rhs);
    }
    Ok((l.done(), r.done()))
}

fn theta_binomial(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let (q, t) = (env.q(), ctx.t().clone());
    let lhs = theta_partial(&q, env.order)?;
    let v = -&(&t * &q);
    let rhs = deformed_binom(&one(env), &env.mono(t, 1), &RatFunc::one(), &v, -1, ctx)?;
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    l.series(&lhs);
    r.series(&rhs);
    Ok((l.done(), r.done()))
}

fn theta_derivatives(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let (q, t) = (env.q(), ctx.t().clone());
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    let mtq = -&(&t * &q);
    for n in 0..=3usize {
        let mut f = theta_partial(&q, env.order + n)?;
        for _ in 0..n {
            f = f.st_derive(ctx)?;
        }
        let arg = env.mono(&mtq.pow(n as i64)? * &t, 1);
        let body = deformed_binom(&one(env), &arg, &RatFunc::one(), &mtq, -(n as i64) - 1, ctx)?;
        let c = &ctx.fib_factorial(n) * &q.pow(binom2(n as i64))?;
        l.series(&f);
        r.series(&body.scale(&c));
    }
    Ok((l.done(), r.done()))
}

fn theta_q_one(env: &Env) -> Result<(Value, Value)> {
    let ctx = sym_ctx();
    let (mut l, mut r) = (QuadBuf::new(), QuadBuf::new());
    for n in 0..=3usize {
        let mut f = theta_partial(&RatFunc::one(), env.order + n)?;
        for _ in 0..n {
            f = f.st_derive(&ctx)?;
        }
        let rhs = phi_pochhammer_recip(n, env.order)?.scale(&QuadExt::from(ctx.fib_factorial(n)));
        l.series(&f.into_quad());
        r.series(&rhs);
    }
    Ok((l.done(), r.done()))
}

const ALPHAS: [i64; 4] = [3, 4, -1, -2];

fn derivative_left(env: &Env) -> Result<(Value, Value)> {
    // The derivative acts on the symbol x in the leading slot; `a` carries e.
    let ctx = env.ctx();
    let (u, v, a) = (env.val(Var::U), env.val(Var::V), env.val(Var::Z));
    let x = env.sym(Var::X);
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for alpha in ALPHAS {
        let f = deformed_binom(&env.cst(x.clone()), &env.mono(a.clone(), 1), &u, &v, alpha, ctx)?;
        let lhs = symbolic::on_coeffs(&f, |c| symbolic::st_derive_var(c, Var::X, ctx))?;
        let rhs = deformed_binom(&env.cst(&u * &x), &env.mono(a.clone(), 1), &u, &v, alpha - 1, ctx)?
            .scale(&ctx.fib(alpha));
        l.series(&lhs);
        r.series(&rhs);
    }
    Ok((l.done(), r.done()))
}

fn derivative_right(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let (u, v, a) = (env.val(Var::U), env.val(Var::V), env.val(Var::Z));
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for alpha in ALPHAS {
        let lhs = deformed_binom(&env.cst(a.clone()), &env.eps(), &u, &v, alpha, ctx)?.st_derive(ctx)?;
        let m = env.order - 1;
        let rhs = deformed_binom(&Series::constant(a.clone(), m), &Series::monomial(v.clone(), 1, m), &u, &v, alpha - 1, ctx)?
            .scale(&ctx.fib(alpha));
        l.series(&lhs);
        r.series(&rhs);
    }
    Ok((l.done(), r.done()))
}

fn derivative_k_fold(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let (u, v, a) = (env.val(Var::U), env.val(Var::V), env.val(Var::Z));
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for alpha in ALPHAS {
        for k in 1..=4usize.min(env.order) {
            let mut lhs = deformed_binom(&env.cst(a.clone()), &env.eps(), &u, &v, alpha, ctx)?;
            for _ in 0..k {
                lhs = lhs.st_derive(ctx)?;
            }
            let m = env.order - k;
            let c = &(&v.pow(binom2(k as i64))? * &ctx.fib_factorial(k)) * &ctx.st_binom(alpha, k)?;
            let vk = Series::monomial(v.pow(k as i64)?, 1, m);
            let rhs = deformed_binom(&Series::constant(a.clone(), m), &vk, &u, &v, alpha - k as i64, ctx)?.scale(&c);
            l.series(&lhs);
            r.series(&rhs);
        }
    }
    Ok((l.done(), r.done()))
}

fn derivative_minus(env: &Env, printed: bool) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let (u, v, a) = (env.val(Var::U), env.val(Var::V), env.val(Var::Z));
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for alpha in ALPHAS.into_iter().chain([2]) {
        let lhs = deformed_binom_minus(&env.cst(a.clone()), &env.eps(), &u, &v, alpha, ctx)?.st_derive(ctx)?;
        let m = env.order - 1;
        let (ac, vx) = (Series::constant(a.clone(), m), Series::monomial(v.clone(), 1, m));
        let body = if printed {
            deformed_binom(&ac, &vx, &u, &v, alpha - 1, ctx)?
        } else {
            deformed_binom_minus(&ac, &vx, &u, &v, alpha - 1, ctx)?
        };
        l.series(&lhs);
        r.series(&body.scale(&-&ctx.fib(alpha)));
    }
    Ok((l.done(), r.done()))
}
