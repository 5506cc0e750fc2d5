//! Trinomial series: the definition, the twelve rearrangements, the minus
//! variant and the translation form.

use stcalc_core::deformed::{deformed_binom, deformed_trinom, translation_apply, Term};
use stcalc_core::exactring::{RatFunc, Var};
use stcalc_core::pseries::Series;
use stcalc_core::Result;

use super::*;
use crate::env::{Env, RatBuf, Value};
use crate::registry::TheoremCase;

pub fn cases() -> Vec<TheoremCase> {
    vec![
        TheoremCase::holds(
            "trinomial_definition",
            "\"a (u,v,w)-deformed (s,t)-trinomial series is defined as\" sum_k {alpha over k} u^C(alpha-k,2) x^(alpha-k) (y (+)_{v,w} z)^(k)",
            definition,
        ),
        TheoremCase::holds(
            "trinomial_rearrangements",
            "the twelve equal rearrangements of (x (+)_{u,1} (y (+)_{v,w} z))^(alpha), alpha in {0,1,2,3}",
            rearrangements_nonneg,
        )
        .budget(8),
        TheoremCase::holds(
            "trinomial_rearrangements_negative",
            "the twelve rearrangements for alpha in {-1,-2}, compared among forms with the same leading argument",
            rearrangements_negative,
        )
        .budget(8)
        .note("a negative power needs a unit leading argument, so forms 1-4, 5-8 and 9-12 are compared within their groups"),
        TheoremCase::holds(
            "trinomial_minus",
            "(x (-)_{u,1} (y (+)_{v,w} z))^(alpha) = ((x (-)_{u,v} y) (-)_{1,w} z)^(alpha)",
            |e| minus_assoc(e, false),
        ),
        TheoremCase::typo(
            "trinomial_minus_printed",
            "\"From the above proposition, we have\" (x (-)_{u,v} (y (+)_{1,w} z))^(alpha) = ((x (-)_{u,v} y) (-)_{1,w} z)^(alpha)",
            "the parameters on the left must read (-)_{u,1} and (+)_{v,w}; the printed form fails unless v = 1",
            |e| minus_assoc(e, true),
        ),
        TheoremCase::holds(
            "trinomial_translation",
            "(x (+)_{u,1} (y (+)_{v,w} z))^(alpha) = e(z T_{v^-1} D, w) {(x (+)_{u,v} y)^(alpha)}",
            translation,
        )
        .budget(10),
    ]
}

/// Brute-force double sum for the trinomial series with `x` a unit and `y, z` small.
fn definition(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let (u, v, w) = (env.val(Var::U), env.val(Var::V), env.val(Var::W));
    let x = env.cst(env.val(Var::X));
    let y = env.mono(env.val(Var::Y), 1);
    let z = env.mono(env.val(Var::Z), 1);
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for alpha in [0i64, 2, 3, -1, -2] {
        l.series(&deformed_trinom(&x, &y, &z, &u, &v, &w, alpha, ctx)?);
        let mut acc = Series::zero(env.order);
        for k in 0..=env.order {
            if alpha >= 0 && k as i64 > alpha {
                break;
            }
            let c = &ctx.st_binom(alpha, k)? * &u.pow(binom2(alpha - k as i64))?;
            let mut inner = Series::zero(env.order);
            for j in 0..=k {
                let cj = &(&ctx.st_binom(k as i64, j)? * &v.pow(binom2((k - j) as i64))?) * &w.pow(binom2(j as i64))?;
                inner = inner.add(&y.pow((k - j) as i64)?.mul(&z.pow(j as i64)?).scale(&cj));
            }
            acc = acc.add(&x.pow(alpha - k as i64)?.mul(&inner).scale(&c));
        }
        r.series(&acc);
    }
    Ok((l.done(), r.done()))
}

/// The twelve forms in their listed order.
fn forms(x: &Series<RatFunc>, y: &Series<RatFunc>, z: &Series<RatFunc>, u: &RatFunc, v: &RatFunc, w: &RatFunc) -> Vec<Term> {
    let one = RatFunc::one();
    let (a, b, c) = (|| atom(x.clone()), || atom(y.clone()), || atom(z.clone()));
    vec![
        plus(a(), plus(b(), c(), v, w), u, &one),
        plus(plus(a(), b(), u, v), c(), &one, w),
        plus(a(), plus(c(), b(), w, v), u, &one),
        plus(plus(a(), c(), u, w), b(), &one, v),
        plus(plus(b(), a(), v, u), c(), &one, w),
        plus(b(), plus(a(), c(), u, w), v, &one),
        plus(b(), plus(c(), a(), w, u), v, &one),
        plus(plus(b(), c(), v, w), a(), &one, u),
        plus(c(), plus(a(), b(), u, v), w, &one),
        plus(plus(c(), a(), w, u), b(), &one, v),
        plus(c(), plus(b(), a(), v, u), w, &one),
        plus(plus(c(), b(), w, v), a(), &one, u),
    ]
}

fn rearrangements_nonneg(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let (u, v, w) = (env.val(Var::U), env.val(Var::V), env.val(Var::W));
    let x = env.mono(env.val(Var::X), 1);
    let y = env.mono(env.val(Var::Y), 1);
    let z = env.mono(env.val(Var::Z), 1);
    let fs = forms(&x, &y, &z, &u, &v, &w);
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for alpha in 0..=3i64 {
        let first = fs[0].power(alpha, ctx)?;
        for f in &fs[1..] {
            l.series(&f.power(alpha, ctx)?);
            r.series(&first);
        }
    }
    Ok((l.done(), r.done()))
}

fn rearrangements_negative(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let (u, v, w) = (env.val(Var::U), env.val(Var::V), env.val(Var::W));
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for lead in 0..3usize {
        let mk = |var: Var, i: usize| {
            if i == lead {
                env.cst(env.val(var))
            } else {
                env.mono(env.val(var), 1)
            }
        };
        let fs = forms(&mk(Var::X, 0), &mk(Var::Y, 1), &mk(Var::Z, 2), &u, &v, &w);
        let group = &fs[4 * lead..4 * lead + 4];
        for alpha in [-1i64, -2] {
            let first = group[0].power(alpha, ctx)?;
            for f in &group[1..] {
                l.series(&f.power(alpha, ctx)?);
                r.series(&first);
            }
        }
    }
    Ok((l.done(), r.done()))
}

fn minus_assoc(env: &Env, printed: bool) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let one = RatFunc::one();
    let (u, v, w) = (env.val(Var::U), env.val(Var::V), env.val(Var::W));
    let x = env.cst(env.val(Var::X));
    let y = env.mono(env.val(Var::Y), 1);
    let z = env.mono(env.val(Var::Z), 1);
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for alpha in [2i64, 3, -1] {
        let left = if printed {
            minus(atom(x.clone()), plus(atom(y.clone()), atom(z.clone()), &one, &w), &u, &v)
        } else {
            minus(atom(x.clone()), plus(atom(y.clone()), atom(z.clone()), &v, &w), &u, &one)
        };
        let right = minus(minus(atom(x.clone()), atom(y.clone()), &u, &v), atom(z.clone()), &one, &w);
        l.series(&left.power(alpha, ctx)?);
        r.series(&right.power(alpha, ctx)?);
    }
    Ok((l.done(), r.done()))
}

/// The operator acts on the symbol `y`, which carries `e`; its parameter `z` is unmarked.
fn translation(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let (u, v, w) = (env.val(Var::U), env.val(Var::V), env.val(Var::W));
    let x = env.cst(env.val(Var::X));
    let ysym = env.sym(Var::Y);
    let zval = env.val(Var::Z);
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for alpha in [2i64, 3, -1] {
        let y = env.mono(ysym.clone(), 1);
        let z = env.mono(zval.clone(), 1);
        l.series(&deformed_trinom(&x, &y, &z, &u, &v, &w, alpha, ctx)?);
        let target = deformed_binom(&x, &y, &u, &v, alpha, ctx)?;
        r.series(&translation_apply(Var::Y, &env.cst(zval.clone()), &v, &w, &target, ctx)?);
    }
    Ok((l.done(), r.done()))
}

