//! Generalized simplicial polytopic numbers: Pascal-type recurrences, partial
//! sums, squares and cubes, and the printed sequence lists.

use stcalc_core::exactring::{phi, phi_prime, BigRat, QuadExt, RatFunc};
use stcalc_core::stcore::STContext;
use stcalc_core::Result;

use super::*;
use crate::env::{Env, QuadBuf, RatBuf, Value};
use crate::registry::TheoremCase;

pub fn cases() -> Vec<TheoremCase> {
    let mut v = vec![
        TheoremCase::holds(
            "fibonomial_pascal",
            "Pascal recurrences {alpha+1 over k} = phi^k {alpha over k} + phi'^(alpha+1-k) {alpha over k-1} and its conjugate",
            fibonomial_pascal,
        )
        .quad(),
        TheoremCase::holds(
            "polytopic_pascal_phi",
            "{n+d over d} = phi^d {n+d-1 over d} + phi'^n {n+d-1 over d-1}",
            |e| polytopic_pascal(e, Pascal::Phi),
        )
        .quad(),
        TheoremCase::holds(
            "polytopic_pascal_phi_prime",
            "{n+d over d} = phi'^d {n+d-1 over d} + phi^n {n+d-1 over d-1}",
            |e| polytopic_pascal(e, Pascal::PhiPrime),
        )
        .quad(),
        TheoremCase::typo(
            "polytopic_pascal_phi_prime_printed",
            "{n+d over d} = phi'^d {n+d-1 over d} + phi^n {n-d-1 over d-1} as printed",
            "the lower term must be {n+d-1 over d-1}; with {n-d-1 over d-1} the recurrence fails",
            |e| polytopic_pascal(e, Pascal::Printed),
        )
        .quad(),
        TheoremCase::holds(
            "polytopic_partial_sums",
            "\"The proof is by induction on n\": {n+d over d+1} = sum_k phi^((d+1)(n-k)) phi'^(k-1) {k+d-1 over d}, and conjugate",
            partial_sums,
        )
        .quad(),
        TheoremCase::holds(
            "polytopic_partial_sums_q",
            "[n+d over d+1]_q = sum q^(k-1) [k+d-1 over d]_q = sum q^((d+1)(n-k)) [k+d-1 over d]_q",
            partial_sums_q,
        ),
        TheoremCase::holds(
            "triangular_recurrences",
            "the four recurrence and sum displays for {n+1 over 2}",
            triangular_recurrences,
        )
        .quad(),
        TheoremCase::holds(
            "triangular_q_sum",
            "[n+1 over 2]_q = sum (1-q^k)/(1-q) q^(2(n-k)) = sum q^(k-1) (1-q^k)/(1-q)",
            triangular_q_sum,
        ),
        TheoremCase::holds(
            "alternating_squares_step",
            "{n+2 over 2} = t {n+1 over 2} + [[n+1]]^2",
            alternating_step,
        ),
        TheoremCase::holds(
            "alternating_squares",
            "\"alternating sum squares\": {n+1 over 2} = sum t^(n-k) [[k]]^2",
            alternating_sum,
        ),
        TheoremCase::holds(
            "alternating_squares_q_step",
            "[n+2 over 2]_q = -q [n+1 over 2]_q + ((1-q^{n+1})/(1-q))^2",
            alternating_q_step,
        ),
        TheoremCase::holds(
            "schlosser",
            "\"we get a Schlosser result\": [n+1 over 2]_q = sum (-q)^(n-k) ((1-q^k)/(1-q))^2, n <= 20",
            schlosser,
        ),
        TheoremCase::holds(
            "triangular_cube",
            "{n+2 over 2}^2 - t^2 {n+1 over 2}^2 = (([[n+2]] + t[[n]])/s) [[n+1]]^3",
            triangular_cube,
        ),
        TheoremCase::holds(
            "triangular_cube_q",
            "[n+2 over 2]_q^2 - q^2 [n+1 over 2]_q^2 = (1-q^{2(n+1)})/(1-q^2) ((1-q^{n+1})/(1-q))^2",
            triangular_cube_q,
        ),
        TheoremCase::holds(
            "sum_of_cubes",
            "sum t^(2(n-k)) (([[k+1]] + t[[k-1]])/s) [[k]]^3 = (sum phi^(2(n-k)) phi'^(k-1) [[k]])^2",
            sum_of_cubes,
        )
        .quad(),
        TheoremCase::holds(
            "cubes_fibonacci",
            "\"The Fibonacci analog of the sum of cubes\", n <= 20",
            |_| cubes(Cubes::Fibonacci),
        ),
        TheoremCase::holds("cubes_pell", "\"The Pell analog of the sum of cubes\", n <= 20", |_| cubes(Cubes::Pell)),
        TheoremCase::holds(
            "cubes_jacobsthal",
            "\"The Jacobsthal analog of the sum of cubes\", n <= 20",
            |_| cubes(Cubes::Jacobsthal),
        ),
        TheoremCase::holds(
            "cubes_mersenne",
            "\"The Mersenne analog of the sum of cubes\", n <= 20",
            |_| cubes(Cubes::Mersenne),
        ),
        TheoremCase::holds(
            "cubes_warnaar",
            "\"The q-identity of Warnaar\": sum q^(2(n-k)) (1-q^{2k})/(1-q^2) ((1-q^k)/(1-q))^2 = [n+1 over 2]_q^2, n <= 20",
            cubes_warnaar,
        ),
        TheoremCase::holds(
            "tetrahedral_recurrences",
            "the four recurrence and sum displays for {n+2 over 3}, last one read with {n+2 over 3} on the left",
            |e| tetrahedral_recurrences(e, false),
        )
        .quad(),
        TheoremCase::typo(
            "tetrahedral_sum_printed",
            "{n+3 over 3} = sum phi'^(3(n-k)) phi^(k-1) {k+1 over 2} as printed",
            "the left side must be {n+2 over 3}, as in the preceding display",
            |e| tetrahedral_recurrences(e, true),
        )
        .quad(),
        TheoremCase::holds(
            "tetrahedral_identity",
            "{n+3 over 3} = st {n+2 over 3} + [[n+1]] {n+2 over 2}",
            tetrahedral_identity,
        ),
        TheoremCase::holds(
            "tetrahedral_identity_q",
            "[n+3 over 3]_q = -(1+q) q [n+2 over 3]_q + (1-q^{n+1})/(1-q) [n+2 over 2]_q",
            tetrahedral_identity_q,
        ),
        TheoremCase::holds(
            "polytopic_closed_forms",
            "product forms F_n F_{n+1}, P_n P_{n+1}/2, J_n J_{n+1}, (2^n-1)(2^{n+1}-1)/3 and the tetrahedral analogues",
            closed_forms,
        ),
        TheoremCase::holds(
            "fibonacci_specializations",
            "[[n]] at (2,-1), (1,1), (p+q,-pq), (2t,-1), (3,-2), (P,-Q)",
            specializations,
        ),
    ];
    v.extend(sequence_cases());
    v
}

fn ctx_at(s: i64, t: i64) -> STContext {
    STContext::specialized(BigRat::from(s), BigRat::from(t))
}

fn q(x: &RatFunc) -> QuadExt {
    QuadExt::from(x.clone())
}

fn fibonomial_pascal(_env: &Env) -> Result<(Value, Value)> {
    let ctx = sym_ctx();
    let (p, pp) = (phi(), phi_prime());
    let (mut l, mut r) = (QuadBuf::new(), QuadBuf::new());
    for alpha in -3i64..=8 {
        for k in 1..=5usize {
            let lhs = stb(&ctx, alpha + 1, k)?;
            let a = stb(&ctx, alpha, k)?;
            let b = stb(&ctx, alpha, k - 1)?;
            let e = alpha + 1 - k as i64;
            l.push(lhs.clone());
            r.push(&(&p.pow(k as i64)? * &a) + &(&pp.pow(e)? * &b));
            l.push(lhs);
            r.push(&(&pp.pow(k as i64)? * &a) + &(&p.pow(e)? * &b));
        }
    }
    Ok((l.done(), r.done()))
}

#[derive(Clone, Copy, PartialEq)]
enum Pascal {
    Phi,
    PhiPrime,
    Printed,
}

fn polytopic_pascal(env: &Env, which: Pascal) -> Result<(Value, Value)> {
    let ctx = sym_ctx();
    let (p, pp) = match which {
        Pascal::Phi => (phi(), phi_prime()),
        _ => (phi_prime(), phi()),
    };
    let (mut l, mut r) = (QuadBuf::new(), QuadBuf::new());
    for d in 1..=4usize {
        for n in 0..=env.order as i64 {
            let di = d as i64;
            let low = if which == Pascal::Printed { n - di - 1 } else { n + di - 1 };
            l.push(stb(&ctx, n + di, d)?);
            r.push(&(&p.pow(di)? * &stb(&ctx, n + di - 1, d)?) + &(&pp.pow(n)? * &stb(&ctx, low, d - 1)?));
        }
    }
    Ok((l.done(), r.done()))
}

fn partial_sums(env: &Env) -> Result<(Value, Value)> {
    let ctx = sym_ctx();
    let (p, pp) = (phi(), phi_prime());
    let (mut l, mut r) = (QuadBuf::new(), QuadBuf::new());
    for d in 0..=3i64 {
        for n in 1..=env.order as i64 {
            let lhs = stb(&ctx, n + d, (d + 1) as usize)?;
            let (mut a, mut b) = (QuadExt::zero(), QuadExt::zero());
            for k in 1..=n {
                let term = stb(&ctx, k + d - 1, d as usize)?;
                a = &a + &(&(&p.pow((d + 1) * (n - k))? * &pp.pow(k - 1)?) * &term);
                b = &b + &(&(&pp.pow((d + 1) * (n - k))? * &p.pow(k - 1)?) * &term);
            }
            l.push(lhs.clone());
            r.push(a);
            l.push(lhs);
            r.push(b);
        }
    }
    Ok((l.done(), r.done()))
}

fn partial_sums_q(env: &Env) -> Result<(Value, Value)> {
    let qv = env.q();
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for d in 0..=3i64 {
        for n in 1..=env.order as i64 {
            let lhs = gauss(n + d, (d + 1) as usize, &qv)?;
            let (mut a, mut b) = (RatFunc::zero(), RatFunc::zero());
            for k in 1..=n {
                let term = gauss(k + d - 1, d as usize, &qv)?;
                a = &a + &(&qv.pow(k - 1)? * &term);
                b = &b + &(&qv.pow((d + 1) * (n - k))? * &term);
            }
            l.push(lhs.clone());
            r.push(a);
            l.push(lhs);
            r.push(b);
        }
    }
    Ok((l.done(), r.done()))
}

fn triangular_recurrences(env: &Env) -> Result<(Value, Value)> {
    let ctx = sym_ctx();
    let (p, pp) = (phi(), phi_prime());
    let f = |n: i64| q(&ctx.fib(n));
    let (mut l, mut r) = (QuadBuf::new(), QuadBuf::new());
    for n in 0..=env.order as i64 {
        let t2 = stb(&ctx, n + 2, 2)?;
        let t1 = stb(&ctx, n + 1, 2)?;
        l.push(t2.clone());
        r.push(&(&p.pow(2)? * &t1) + &(&pp.pow(n)? * &f(n + 1)));
        l.push(t2);
        r.push(&(&pp.pow(2)? * &t1) + &(&p.pow(n)? * &f(n + 1)));
        let (mut a, mut b) = (QuadExt::zero(), QuadExt::zero());
        for k in 1..=n {
            a = &a + &(&(&p.pow(2 * (n - k))? * &pp.pow(k - 1)?) * &f(k));
            b = &b + &(&(&pp.pow(2 * (n - k))? * &p.pow(k - 1)?) * &f(k));
        }
        l.push(t1.clone());
        r.push(a);
        l.push(t1);
        r.push(b);
    }
    Ok((l.done(), r.done()))
}

fn triangular_q_sum(env: &Env) -> Result<(Value, Value)> {
    let qv = env.q();
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=env.order as i64 {
        let lhs = gauss(n + 1, 2, &qv)?;
        let (mut a, mut b) = (RatFunc::zero(), RatFunc::zero());
        for k in 1..=n {
            a = &a + &(&qn(k, &qv)? * &qv.pow(2 * (n - k))?);
            b = &b + &(&qv.pow(k - 1)? * &qn(k, &qv)?);
        }
        l.push(lhs.clone());
        r.push(a);
        l.push(lhs);
        r.push(b);
    }
    Ok((l.done(), r.done()))
}

fn alternating_step(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let t = ctx.t().clone();
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=env.order as i64 {
        let f = ctx.fib(n + 1);
        l.push(ctx.st_binom(n + 2, 2)?);
        r.push(&(&t * &ctx.st_binom(n + 1, 2)?) + &(&f * &f));
    }
    Ok((l.done(), r.done()))
}

fn alternating_sum(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let t = ctx.t().clone();
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=env.order as i64 {
        let mut acc = RatFunc::zero();
        for k in 1..=n {
            let f = ctx.fib(k);
            acc = &acc + &(&t.pow(n - k)? * &(&f * &f));
        }
        l.push(ctx.st_binom(n + 1, 2)?);
        r.push(acc);
    }
    Ok((l.done(), r.done()))
}

fn alternating_q_step(env: &Env) -> Result<(Value, Value)> {
    let qv = env.q();
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=env.order as i64 {
        let f = qn(n + 1, &qv)?;
        l.push(gauss(n + 2, 2, &qv)?);
        r.push(&(&-&qv * &gauss(n + 1, 2, &qv)?) + &(&f * &f));
    }
    Ok((l.done(), r.done()))
}

fn schlosser(env: &Env) -> Result<(Value, Value)> {
    let qv = env.q();
    let mq = -&qv;
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=20i64 {
        let mut acc = RatFunc::zero();
        for k in 1..=n {
            let f = qn(k, &qv)?;
            acc = &acc + &(&mq.pow(n - k)? * &(&f * &f));
        }
        l.push(gauss(n + 1, 2, &qv)?);
        r.push(acc);
    }
    Ok((l.done(), r.done()))
}

fn triangular_cube(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let (s, t) = (ctx.s().clone(), ctx.t().clone());
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=env.order as i64 {
        let a = ctx.st_binom(n + 2, 2)?;
        let b = ctx.st_binom(n + 1, 2)?;
        l.push(&(&a * &a) - &(&t.pow(2)? * &(&b * &b)));
        let c = (&ctx.fib(n + 2) + &(&t * &ctx.fib(n))).checked_div(&s)?;
        r.push(&c * &ctx.fib(n + 1).pow(3)?);
    }
    Ok((l.done(), r.done()))
}

fn triangular_cube_q(env: &Env) -> Result<(Value, Value)> {
    let qv = env.q();
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=env.order as i64 {
        let a = gauss(n + 2, 2, &qv)?;
        let b = gauss(n + 1, 2, &qv)?;
        l.push(&(&a * &a) - &(&qv.pow(2)? * &(&b * &b)));
        let f = qn(n + 1, &qv)?;
        r.push(&qn(n + 1, &qv.pow(2)?)? * &(&f * &f));
    }
    Ok((l.done(), r.done()))
}

fn sum_of_cubes(env: &Env) -> Result<(Value, Value)> {
    let ctx = sym_ctx();
    let (s, t) = (ctx.s().clone(), ctx.t().clone());
    let (p, pp) = (phi(), phi_prime());
    let (mut l, mut r) = (QuadBuf::new(), QuadBuf::new());
    for n in 0..=env.order as i64 {
        let mut lhs = RatFunc::zero();
        let mut inner = QuadExt::zero();
        for k in 1..=n {
            let c = (&ctx.fib(k + 1) + &(&t * &ctx.fib(k - 1))).checked_div(&s)?;
            lhs = &lhs + &(&(&t.pow(2 * (n - k))? * &c) * &ctx.fib(k).pow(3)?);
            inner = &inner + &(&(&p.pow(2 * (n - k))? * &pp.pow(k - 1)?) * &q(&ctx.fib(k)));
        }
        l.push(q(&lhs));
        r.push(&inner * &inner);
    }
    Ok((l.done(), r.done()))
}

#[derive(Clone, Copy)]
enum Cubes {
    Fibonacci,
    Pell,
    Jacobsthal,
    Mersenne,
}

fn cubes(which: Cubes) -> Result<(Value, Value)> {
    let ctx = match which {
        Cubes::Fibonacci => ctx_at(1, 1),
        Cubes::Pell => ctx_at(2, 1),
        Cubes::Jacobsthal => ctx_at(1, 2),
        Cubes::Mersenne => ctx_at(3, -2),
    };
    let f = |n: i64| ctx.fib(n);
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    let four = int(4);
    let two = int(2);
    for n in 1..=20i64 {
        let mut acc = RatFunc::zero();
        for k in 1..=n {
            let term = match which {
                Cubes::Fibonacci => &(&f(k + 1) + &f(k - 1)) * &f(k).pow(3)?,
                Cubes::Pell => &(&f(k + 1) + &f(k - 1)) * &f(k).pow(3)?,
                Cubes::Jacobsthal => &(&four.pow(n - k)? * &(&f(k + 1) + &(&two * &f(k - 1)))) * &f(k).pow(3)?,
                Cubes::Mersenne => {
                    let p = two.pow(k)?;
                    &(&four.pow(n - k)? * &(&p + &int(1))) * &(&p - &int(1)).pow(3)?
                }
            };
            acc = &acc + &term;
        }
        let sq = &f(n).pow(2)? * &f(n + 1).pow(2)?;
        let rhs = match which {
            Cubes::Fibonacci | Cubes::Jacobsthal => sq,
            Cubes::Pell => sq.checked_div(&two)?,
            Cubes::Mersenne => {
                let a = &two.pow(n)? - &int(1);
                let b = &two.pow(n + 1)? - &int(1);
                (&a.pow(2)? * &b.pow(2)?).checked_div(&int(3))?
            }
        };
        l.push(acc);
        r.push(rhs);
    }
    Ok((l.done(), r.done()))
}

fn cubes_warnaar(env: &Env) -> Result<(Value, Value)> {
    let qv = env.q();
    let q2 = qv.pow(2)?;
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=20i64 {
        let mut acc = RatFunc::zero();
        for k in 1..=n {
            let f = qn(k, &qv)?;
            acc = &acc + &(&(&q2.pow(n - k)? * &qn(k, &q2)?) * &(&f * &f));
        }
        let g = gauss(n + 1, 2, &qv)?;
        l.push(acc);
        r.push(&g * &g);
    }
    Ok((l.done(), r.done()))
}

fn tetrahedral_recurrences(env: &Env, printed: bool) -> Result<(Value, Value)> {
    let ctx = sym_ctx();
    let (p, pp) = (phi(), phi_prime());
    let (mut l, mut r) = (QuadBuf::new(), QuadBuf::new());
    for n in 0..=env.order as i64 {
        let (mut a, mut b) = (QuadExt::zero(), QuadExt::zero());
        for k in 1..=n {
            let tk = stb(&ctx, k + 1, 2)?;
            a = &a + &(&(&p.pow(3 * (n - k))? * &pp.pow(k - 1)?) * &tk);
            b = &b + &(&(&pp.pow(3 * (n - k))? * &p.pow(k - 1)?) * &tk);
        }
        if printed {
            l.push(stb(&ctx, n + 3, 3)?);
            r.push(b);
            continue;
        }
        let t3 = stb(&ctx, n + 3, 3)?;
        let t2 = stb(&ctx, n + 2, 3)?;
        let s2 = stb(&ctx, n + 2, 2)?;
        l.push(t3.clone());
        r.push(&(&p.pow(3)? * &t2) + &(&pp.pow(n)? * &s2));
        l.push(t3);
        r.push(&(&pp.pow(3)? * &t2) + &(&p.pow(n)? * &s2));
        l.push(t2.clone());
        r.push(a);
        l.push(t2);
        r.push(b);
    }
    Ok((l.done(), r.done()))
}

fn tetrahedral_identity(env: &Env) -> Result<(Value, Value)> {
    let ctx = env.ctx();
    let st = ctx.s() * ctx.t();
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=env.order as i64 {
        l.push(ctx.st_binom(n + 3, 3)?);
        r.push(&(&st * &ctx.st_binom(n + 2, 3)?) + &(&ctx.fib(n + 1) * &ctx.st_binom(n + 2, 2)?));
    }
    Ok((l.done(), r.done()))
}

fn tetrahedral_identity_q(env: &Env) -> Result<(Value, Value)> {
    let qv = env.q();
    let c = -&(&(&int(1) + &qv) * &qv);
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    for n in 0..=env.order as i64 {
        l.push(gauss(n + 3, 3, &qv)?);
        r.push(&(&c * &gauss(n + 2, 3, &qv)?) + &(&qn(n + 1, &qv)? * &gauss(n + 2, 2, &qv)?));
    }
    Ok((l.done(), r.done()))
}

fn closed_forms(env: &Env) -> Result<(Value, Value)> {
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    let two = int(2);
    for (s, t, c2, c3) in [(1i64, 1i64, 1i64, 2i64), (2, 1, 2, 10), (1, 2, 1, 3), (3, -2, 3, 21)] {
        let ctx = ctx_at(s, t);
        let f = |n: i64| ctx.fib(n);
        for n in 0..=env.order as i64 {
            l.push(ctx.st_binom(n + 1, 2)?);
            r.push((&f(n) * &f(n + 1)).checked_div(&int(c2))?);
            l.push(ctx.st_binom(n + 2, 3)?);
            r.push((&(&f(n) * &f(n + 1)) * &f(n + 2)).checked_div(&int(c3))?);
        }
    }
    // Mersenne triangular numbers are Gaussian binomials at q = 2.
    let ctx = ctx_at(3, -2);
    for n in 0..=env.order as i64 {
        l.push(ctx.st_binom(n + 1, 2)?);
        r.push(gauss(n + 1, 2, &two)?);
        let m = |k: i64| -> Result<RatFunc> { Ok(&two.pow(k)? - &int(1)) };
        l.push(ctx.st_binom(n + 1, 2)?);
        r.push((&m(n)? * &m(n + 1)?).checked_div(&int(3))?);
    }
    Ok((l.done(), r.done()))
}

fn specializations(env: &Env) -> Result<(Value, Value)> {
    let (mut l, mut r) = (RatBuf::new(), RatBuf::new());
    let n_max = env.order as i64 + 4;
    // Integers and Mersenne numbers.
    let (nat, mer) = (ctx_at(2, -1), ctx_at(3, -2));
    for n in 0..=n_max {
        l.push(nat.fib(n));
        r.push(int(n));
        l.push(mer.fib(n));
        r.push(&int(2).pow(n)? - &int(1));
    }
    // Fibonacci numbers by direct iteration.
    let fibc = ctx_at(1, 1);
    let (mut a, mut b) = (0i64, 1i64);
    for n in 0..=n_max {
        l.push(fibc.fib(n));
        r.push(int(a));
        (a, b) = (b, a + b);
    }
    // (p,q)-numbers.
    let (p, qv) = (env.val(stcalc_core::exactring::Var::U), env.val(stcalc_core::exactring::Var::V));
    if p != qv {
        let pq = STContext::general(&p + &qv, -&(&p * &qv));
        for n in 0..=n_max {
            l.push(pq.fib(n));
            r.push((&p.pow(n)? - &qv.pow(n)?).checked_div(&(&p - &qv))?);
        }
    }
    // Chebyshev U_{n-1}(x) from U_0 = 1, U_1 = 2x.
    let x = env.val(stcalc_core::exactring::Var::X);
    let cheb = STContext::general(&int(2) * &x, int(-1));
    let (mut u0, mut u1) = (RatFunc::zero(), RatFunc::one());
    for n in 0..=n_max {
        l.push(cheb.fib(n));
        r.push(u0.clone());
        let next = &(&(&int(2) * &x) * &u1) - &u0;
        (u0, u1) = (u1, next);
    }
    // (P,-Q)-Fibonacci: U_{n+2} = P U_{n+1} - Q U_n.
    let (bp, bq) = (env.val(stcalc_core::exactring::Var::B), env.val(stcalc_core::exactring::Var::W));
    let lucas = STContext::general(bp.clone(), -&bq);
    let (mut v0, mut v1) = (RatFunc::zero(), RatFunc::one());
    for n in 0..=n_max {
        l.push(lucas.fib(n));
        r.push(v0.clone());
        let next = &(&bp * &v1) - &(&bq * &v0);
        (v0, v1) = (v1, next);
    }
    Ok((l.done(), r.done()))
}

/// A printed list of values, read as `{n+d-1 over d}` at `(s, t)`
/// for `n = first_n, first_n + 1, ...`.
#[derive(Clone, Copy, Debug)]
pub struct SeqSpec {
    pub id: &'static str,
    pub reference: &'static str,
    pub s: i64,
    pub t: i64,
    pub d: usize,
    pub first_n: i64,
    pub printed: &'static [i64],
    /// Whether the printed list is correct.
    pub holds: bool,
    pub note: &'static str,
}

const SEQUENCES: &[SeqSpec] = &[
    SeqSpec { id: "seq_golden_rectangle", reference: "\"known as Golden rectangle numbers, A001654\": {n+1 over 2} at (1,1)", s: 1, t: 1, d: 2, first_n: 0, printed: &[0, 1, 2, 6, 15, 40, 104, 273], holds: true, note: "" },
    SeqSpec { id: "seq_pell_triangular", reference: "\"Pell triangles, A084158\": {n+1 over 2} at (2,1)", s: 2, t: 1, d: 2, first_n: 0, printed: &[0, 1, 5, 30, 174, 1015, 5915], holds: true, note: "" },
    SeqSpec { id: "seq_jacobsthal_triangular", reference: "\"Jacobsthal oblong numbers, A084175\": {n+1 over 2} at (1,2)", s: 1, t: 2, d: 2, first_n: 0, printed: &[0, 1, 2, 6, 15, 55, 231, 903, 3655], holds: false, note: "the list should read 0,1,3,15,55,231,903,3655,14535 (it is J_n J_{n+1})" },
    SeqSpec { id: "seq_mersenne_triangular", reference: "Gaussian binomials at q = 2, A006095: {n+1 over 2} at (3,-2)", s: 3, t: -2, d: 2, first_n: 0, printed: &[0, 1, 7, 35, 155, 651, 2667, 10795, 43435, 174251], holds: true, note: "" },
    SeqSpec { id: "seq_fibonacci_tetrahedral", reference: "A001655: {n+2 over 3} at (1,1)", s: 1, t: 1, d: 3, first_n: 0, printed: &[0, 1, 3, 15, 60, 260, 1092, 4641, 19635], holds: true, note: "" },
    SeqSpec { id: "seq_pell_tetrahedral", reference: "A099930: {n+2 over 3} at (2,1)", s: 2, t: 1, d: 3, first_n: 1, printed: &[1, 12, 174, 2436, 34307, 482664], holds: true, note: "the list starts at n = 1; the other lists start at n = 0" },
    SeqSpec { id: "seq_jacobsthal_tetrahedral", reference: "{n+2 over 3} at (1,2)", s: 1, t: 2, d: 3, first_n: 0, printed: &[0, 1, 5, 55, 385, 3311, 25585, 208335], holds: true, note: "" },
    SeqSpec { id: "seq_mersenne_tetrahedral", reference: "A006096: {n+2 over 3} at (3,-2)", s: 3, t: -2, d: 3, first_n: 0, printed: &[0, 1, 15, 155, 1395, 11811, 97155], holds: true, note: "" },
    SeqSpec { id: "seq_naturals", reference: "simplicial numbers N", s: 2, t: -1, d: 1, first_n: 0, printed: &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9], holds: true, note: "" },
    SeqSpec { id: "seq_triangular", reference: "simplicial numbers T", s: 2, t: -1, d: 2, first_n: 0, printed: &[0, 1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66], holds: true, note: "" },
    SeqSpec { id: "seq_tetrahedral", reference: "simplicial numbers Te", s: 2, t: -1, d: 3, first_n: 0, printed: &[0, 1, 4, 10, 20, 35, 56, 84, 120, 165], holds: true, note: "" },
    SeqSpec { id: "seq_pentachoron", reference: "simplicial numbers P", s: 2, t: -1, d: 4, first_n: 0, printed: &[0, 1, 5, 15, 35, 70, 126, 210, 330, 495, 715], holds: true, note: "" },
    SeqSpec { id: "seq_jacobsthal_numbers", reference: "\"J_n=(0,1,1,2,3,5,11,21,43,85,...) are the Jacobsthal numbers\"", s: 1, t: 2, d: 1, first_n: 0, printed: &[0, 1, 1, 2, 3, 5, 11, 21, 43, 85], holds: false, note: "the list has a spurious 2; [[n]] at (1,2) is 0,1,1,3,5,11,21,43,85" },
    SeqSpec { id: "seq_hexateron", reference: "simplicial numbers H", s: 2, t: -1, d: 5, first_n: 0, printed: &[0, 1, 6, 21, 56, 126, 252, 462, 792, 1287], holds: true, note: "" },
];

/// The printed lists, compared entry by entry with `{n+d-1 over d}`.
pub fn sequence_cases() -> Vec<TheoremCase> {
    SEQUENCES
        .iter()
        .enumerate()
        .map(|(i, spec)| {
            let build = SEQ_BUILDERS[i];
            if spec.holds {
                TheoremCase::holds(spec.id, spec.reference, build).note(spec.note)
            } else {
                TheoremCase::typo(spec.id, spec.reference, spec.note, build)
            }
        })
        .collect()
}

fn seq_values(i: usize) -> Result<(Value, Value)> {
    let spec = &SEQUENCES[i];
    let ctx = ctx_at(spec.s, spec.t);
    let mut l = Vec::new();
    for (j, _) in spec.printed.iter().enumerate() {
        let n = spec.first_n + j as i64;
        l.push(ctx.st_binom(n + spec.d as i64 - 1, spec.d)?);
    }
    Ok((Value::Rat(l), Value::Rat(spec.printed.iter().map(|&k| int(k)).collect())))
}

/// Every printed list, sorted as registered.
pub fn printed_sequences() -> &'static [SeqSpec] {
    SEQUENCES
}

/// The printed list for a given `(s, t, d)`, if there is one.
pub fn printed_sequence_for(s: i64, t: i64, d: usize) -> Option<&'static SeqSpec> {
    SEQUENCES.iter().find(|p| p.s == s && p.t == t && p.d == d)
}

macro_rules! seq_builders {
    ($($i:literal),*) => { [$(|_: &Env| seq_values($i)),*] };
}

const SEQ_BUILDERS: [crate::registry::Builder; 14] = seq_builders!(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13);
