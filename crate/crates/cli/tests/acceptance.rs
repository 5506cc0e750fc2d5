//! Acceptance suite. Prints one PASS/FAIL line per criterion, then fails if
//! any criterion failed. Every comparison is exact.

use std::fmt::Display;
use std::io::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stcalc_core::deformed::Term;
use stcalc_core::exactring::{phi, phi_prime, BigRat, MPoly, QuadExt, RatFunc, Ring, Var};
use stcalc_core::pseries::{product_linear, Series};
use stcalc_core::stcore::STContext;
use stcalc_verify::env::Env;
use stcalc_verify::{registry, run_all, run_with, Expect, Injection, RunConfig, Status, VerifyReport};

type Outcome = Result<String, String>;

fn err<T, E: Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn stcalc(args: &[&str]) -> Result<(i32, String), String> {
    let o = err(Command::new(env!("CARGO_BIN_EXE_stcalc")).args(args).output())?;
    let code = o.status.code().unwrap_or(-1);
    Ok((code, String::from_utf8_lossy(&o.stdout).into_owned()))
}

// 1. Printed sequences.

fn sequences() -> Outcome {
    let lists: [(&str, &[&str], &str); 7] = [
        ("golden rectangle", &["triangular", "--s", "1", "--t", "1", "--count", "8"], "0,1,2,6,15,40,104,273"),
        ("Pell triangles", &["triangular", "--s", "2", "--t", "1", "--count", "7"], "0,1,5,30,174,1015,5915"),
        (
            "Mersenne Gaussian binomials",
            &["qbinom-column", "--d", "2", "--q", "2", "--count", "10"],
            "0,1,7,35,155,651,2667,10795,43435,174251",
        ),
        (
            "Mersenne triangular",
            &["triangular", "--s", "3", "--t", "-2", "--count", "10"],
            "0,1,7,35,155,651,2667,10795,43435,174251",
        ),
        (
            "Fibonacci tetrahedral",
            &["tetrahedral", "--s", "1", "--t", "1", "--count", "9"],
            "0,1,3,15,60,260,1092,4641,19635",
        ),
        ("Pell tetrahedral", &["tetrahedral", "--s", "2", "--t", "1", "--count", "6"], "1,12,174,2436,34307,482664"),
        (
            "Mersenne tetrahedral",
            &["tetrahedral", "--s", "3", "--t", "-2", "--count", "7"],
            "0,1,15,155,1395,11811,97155",
        ),
    ];
    let start = Instant::now();
    for (name, args, want) in lists {
        let mut full = vec!["seq"];
        full.extend_from_slice(args);
        let (code, out) = stcalc(&full)?;
        check(code == 0, || format!("{name}: exit {code}"))?;
        let got = out.lines().next().unwrap_or_default();
        check(got == want, || format!("{name}: got {got}, printed {want}"))?;
    }
    let mut reported = 0;
    for (family, id, differs) in [
        ("fib", "seq_jacobsthal_numbers", true),
        ("triangular", "seq_jacobsthal_triangular", true),
        ("tetrahedral", "seq_jacobsthal_tetrahedral", false),
    ] {
        let (code, out) = stcalc(&["seq", family, "--s", "1", "--t", "2"])?;
        check(code == 0, || format!("jacobsthal {family}: exit {code}"))?;
        let tag = if differs { format!("# {id}: differs from the printed list") } else { format!("# {id}: agrees") };
        check(out.contains(&tag), || format!("jacobsthal {family}: no `{tag}` line in\n{out}"))?;
        reported += out.lines().filter(|l| l.contains("differs")).count();
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("7 lists exact, {reported} Jacobsthal discrepancies reported, {} ms", elapsed.as_millis()))
}

// 2. Full verification runs.

fn verify_json(order: usize) -> Result<(i32, VerifyReport, Duration), String> {
    let start = Instant::now();
    let o = order.to_string();
    let (code, out) = stcalc(&["verify", "--order", &o, "--seed", "42", "--format", "json"])?;
    let elapsed = start.elapsed();
    let report = err(VerifyReport::from_json(&out))?;
    Ok((code, report, elapsed))
}

fn full_runs() -> Outcome {
    let (code, r8, t8) = verify_json(8)?;
    check(code == 0, || format!("order 8: exit {code}"))?;
    check(r8.cases.len() >= 45, || format!("only {} cases", r8.cases.len()))?;
    for c in &r8.cases {
        let fine = match c.expect.as_str() {
            "holds" => c.status == Status::Pass,
            _ => matches!(c.status, Status::ExpectedFailure { .. }),
        };
        check(fine, || format!("order 8: {} {:?}", c.id, c.status))?;
    }
    // One representative per area of the theory.
    for id in [
        "fibonomial_pascal",
        "geometric_derivatives",
        "binomial_derivative_left",
        "trinomial_rearrangements",
        "translation_of_powers",
        "tetrahedral_recurrences",
        "squared_binomial_ogf",
        "rs_mehler",
        "theta_derivatives",
        "bridge",
    ] {
        check(r8.case(id).is_some(), || format!("order 8: no case {id}"))?;
    }
    check(t8 < Duration::from_secs(120), || format!("order 8 took {t8:?}"))?;

    let (code, r12, t12) = verify_json(12)?;
    check(code == 0 && r12.count("FAIL") == 0 && r12.count("SKIP") == 0, || {
        format!("order 12: exit {code}, {} fail, {} skipped", r12.count("FAIL"), r12.count("SKIP"))
    })?;
    check(t12 < Duration::from_secs(900), || format!("order 12 took {t12:?}"))?;
    let symbolic = r12.cases.iter().filter(|c| c.symbolic).count();
    Ok(format!(
        "order 8: {} cases ({} pass, {} expected failures) in {:.1} s; order 12: 0 fail ({} symbolic, {} by random points) in {:.1} s",
        r8.cases.len(),
        r8.count("PASS"),
        r8.count("XFAIL"),
        t8.as_secs_f64(),
        symbolic,
        r12.cases.len() - symbolic,
        t12.as_secs_f64()
    ))
}

// 3. Integer oracles for the q-identities and sums of cubes.

type IPoly = Vec<i128>;

fn padd(a: &IPoly, b: &IPoly) -> IPoly {
    let mut c = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        c[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        c[i] += x;
    }
    trim(c)
}

fn pmul(a: &IPoly, b: &IPoly) -> IPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    trim(c)
}

fn trim(mut c: IPoly) -> IPoly {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

/// `c q^e`.
fn mono(c: i128, e: usize) -> IPoly {
    let mut p = vec![0; e + 1];
    p[e] = c;
    trim(p)
}

/// `1 + q^step + ... + q^(step(k-1))`.
fn qint(k: usize, step: usize) -> IPoly {
    (0..k).fold(vec![], |acc, j| padd(&acc, &mono(1, step * j)))
}

/// `[n over 2]_q` for `n <= nmax` from the q-Pascal rule.
fn gauss2(nmax: usize) -> Vec<IPoly> {
    let mut row: Vec<IPoly> = vec![vec![1], vec![], vec![]];
    let mut out = vec![vec![]];
    for _ in 1..=nmax {
        let mut next = vec![vec![1]; 3];
        for k in 1..=2 {
            next[k] = padd(&row[k - 1], &pmul(&mono(1, k), &row[k]));
        }
        row = next;
        out.push(row[2].clone());
    }
    out
}

fn lucas_sequence(s: i128, t: i128, n: usize) -> Vec<i128> {
    let mut f = vec![0, 1];
    while f.len() <= n {
        let k = f.len();
        f.push(s * f[k - 1] + t * f[k - 2]);
    }
    f
}

fn cube_identities() -> Result<(), String> {
    let fib = lucas_sequence(1, 1, 22);
    let pell = lucas_sequence(2, 1, 22);
    let jac = lucas_sequence(1, 2, 22);
    for n in 1..=20usize {
        let sum = |f: &dyn Fn(usize) -> i128| (1..=n).map(f).sum::<i128>();
        let sq = |x: &[i128]| x[n] * x[n] * x[n + 1] * x[n + 1];
        let f = sum(&|k| (fib[k + 1] + fib[k - 1]) * fib[k].pow(3));
        check(f == sq(&fib), || format!("Fibonacci cubes at n = {n}"))?;
        let p = sum(&|k| (pell[k + 1] + pell[k - 1]) * pell[k].pow(3));
        check(2 * p == sq(&pell), || format!("Pell cubes at n = {n}"))?;
        let j = sum(&|k| 4i128.pow((n - k) as u32) * (jac[k + 1] + 2 * jac[k - 1]) * jac[k].pow(3));
        check(j == sq(&jac), || format!("Jacobsthal cubes at n = {n}"))?;
        let m = sum(&|k| {
            let p = 1i128 << k;
            4i128.pow((n - k) as u32) * (p + 1) * (p - 1).pow(3)
        });
        let (a, b) = ((1i128 << n) - 1, (1i128 << (n + 1)) - 1);
        check(3 * m == a * a * b * b, || format!("Mersenne cubes at n = {n}"))?;
    }
    Ok(())
}

fn q_identities() -> Outcome {
    let g = gauss2(21);
    for n in 0..=20usize {
        let mut warnaar = vec![];
        let mut schlosser = vec![];
        for k in 1..=n {
            let f = qint(k, 1);
            let term = pmul(&pmul(&mono(1, 2 * (n - k)), &qint(k, 2)), &pmul(&f, &f));
            warnaar = padd(&warnaar, &term);
            let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
            schlosser = padd(&schlosser, &pmul(&mono(sign, n - k), &pmul(&f, &f)));
        }
        check(warnaar == pmul(&g[n + 1], &g[n + 1]), || format!("Warnaar identity at n = {n}"))?;
        check(schlosser == g[n + 1], || format!("Schlosser identity at n = {n}"))?;
    }
    cube_identities()?;
    let mut ids = vec![];
    for filter in ["cubes", "schlosser"] {
        let r = err(run_all(8, 42, Some(filter)))?;
        for c in &r.cases {
            check(c.status == Status::Pass, || format!("{}: {:?}", c.id, c.status))?;
            ids.push(c.id.clone());
        }
    }
    check(ids.len() == 7, || format!("expected 7 registry cases, ran {ids:?}"))?;
    Ok(format!("integer oracles agree for n <= 20; registry cases {} pass", ids.join(", ")))
}

// 4. D^n of the geometric series.

fn fib_rat(n: usize) -> Vec<RatFunc> {
    let (s, t) = (MPoly::var(Var::S), MPoly::var(Var::T));
    let mut f = vec![MPoly::zero(), MPoly::one()];
    while f.len() <= n {
        let k = f.len();
        let next = &(&s * &f[k - 1]) + &(&t * &f[k - 2]);
        f.push(next);
    }
    f.into_iter().map(RatFunc::from_poly).collect()
}

fn geometric_derivatives() -> Outcome {
    const ORDER: usize = 12;
    let ctx = STContext::symbolic();
    let fib = fib_rat(ORDER + 8);
    // [[b]]! / [[a]]!
    let falling = |a: usize, b: usize| (a + 1..=b).fold(RatFunc::one(), |acc, j| &acc * &fib[j]);
    let mut coeffs = 0;
    for n in 0..=6usize {
        let mut lhs = Series::<QuadExt>::geometric(ORDER + n);
        for _ in 0..n {
            lhs = err(lhs.st_derive(&ctx))?;
        }
        check(lhs.order() == ORDER, || format!("n = {n}: order {}", lhs.order()))?;
        let factors: Vec<QuadExt> = (0..=n as i64)
            .map(|k| Ok(&phi().pow(n as i64 - k)? * &phi_prime().pow(k)?))
            .collect::<stcalc_core::Result<_>>()
            .map_err(|e| e.to_string())?;
        let rhs = err(product_linear(&factors, ORDER).reciprocal())?.scale(&QuadExt::from(falling(0, n)));
        check(lhs == rhs, || format!("n = {n}: D^n(1/(1-x)) differs from the product form"))?;
        for (k, c) in lhs.coeffs().iter().enumerate() {
            check(c.delta_part().is_zero(), || format!("n = {n}, x^{k}: nonzero delta part"))?;
            check(*c == QuadExt::from(falling(k, n + k)), || format!("n = {n}, x^{k}: {c:?}"))?;
            coeffs += 1;
        }
    }
    Ok(format!("n = 0..6 at order {ORDER}: {coeffs} coefficients equal [[n+k]]!/[[k]]!, all with zero delta part"))
}

// 5. Generating function of the squared Gaussian binomials.

fn gauss2_rat(nmax: usize, q: &RatFunc) -> Vec<RatFunc> {
    let mut row = vec![RatFunc::one(), RatFunc::zero(), RatFunc::zero()];
    let mut out = vec![RatFunc::zero()];
    for _ in 1..=nmax {
        let next = vec![
            RatFunc::one(),
            &row[0] + &(q * &row[1]),
            &row[1] + &(&(q * q) * &row[2]),
        ];
        row = next;
        out.push(row[2].clone());
    }
    out
}

fn squared_binomial_ogf() -> Outcome {
    const ORDER: usize = 12;
    let q = RatFunc::var(Var::Q);
    let qp = |k: i64| q.pow(k).unwrap();
    let g = gauss2_rat(ORDER + 1, &q);
    let lhs = Series::from_fn(ORDER, |n| if n == 0 { RatFunc::zero() } else { &g[n + 1] * &g[n + 1] });
    let poch4 = [qp(1), qp(2), qp(3), qp(4)];

    let printed_num = Series::new(
        vec![
            RatFunc::zero(),
            RatFunc::one(),
            &(&qp(2) - &(&RatFunc::int(3) * &qp(4))) + &qp(6),
            &(&qp(2) - &qp(3)) + &(&RatFunc::int(2) * &qp(4)),
            &qp(6) + &qp(7),
        ],
        ORDER,
    );
    let mut den = vec![RatFunc::one(), qp(2)];
    den.extend_from_slice(&poch4);
    let printed = err(printed_num.div(&product_linear(&den, ORDER)))?;

    let corrected_num = Series::new(
        vec![RatFunc::zero(), RatFunc::one(), &q * &(&RatFunc::one() + &q).pow(2).unwrap(), qp(4)],
        ORDER,
    );
    let mut den = vec![RatFunc::one()];
    den.extend_from_slice(&poch4);
    let corrected = err(corrected_num.div(&product_linear(&den, ORDER)))?;
    let corrected_ok = corrected == lhs;

    match (0..=ORDER).find(|&k| printed.coeff(k) != lhs.coeff(k)) {
        None => Ok(format!("closed form equals sum [n+1 over 2]_q^2 x^n to order {ORDER}")),
        Some(k) => Err(format!(
            "the closed form with numerator x + (q^2-3q^4+q^6)x^2 + (q^2-q^3+2q^4)x^3 + (q^6+q^7)x^4 over \
             (1-x)(1-q^2x)(qx;q)_4 differs at x^{k}: {} vs {}; the form (x + q(1+q)^2 x^2 + q^4 x^3)/((1-x)(qx;q)_4) {} to order {ORDER}",
            printed.coeff(k),
            lhs.coeff(k),
            if corrected_ok { "agrees" } else { "also disagrees" },
        )),
    }
}

// 6. Trinomial rearrangements.

fn trinomial_forms() -> Outcome {
    const ORDER: usize = 6;
    let mut cfg = RunConfig::new(ORDER, 42);
    cfg.filter = Some("trinomial_rearrangements".into());
    let r = err(run_with(&cfg))?;
    check(r.cases.len() == 2, || format!("ran {:?}", r.cases.iter().map(|c| &c.id).collect::<Vec<_>>()))?;
    for c in &r.cases {
        check(c.status == Status::Pass && c.symbolic, || format!("{}: {:?}, symbolic {}", c.id, c.status, c.symbolic))?;
    }
    // A form led by y, with x a unit and y, z small, as the other forms need.
    let ctx = STContext::symbolic();
    let (u, v, w) = (RatFunc::var(Var::U), RatFunc::var(Var::V), RatFunc::var(Var::W));
    let x = Term::atom(Series::constant(RatFunc::var(Var::X), ORDER));
    let y = Term::atom(Series::monomial(RatFunc::var(Var::Y), 1, ORDER));
    let z = Term::atom(Series::monomial(RatFunc::var(Var::Z), 1, ORDER));
    let form5 = Term::oplus(Term::oplus(y, x, v, u), z, RatFunc::one(), w);
    let cross = match form5.power(-1, &ctx) {
        Ok(_) => return Ok("all twelve forms agree for every alpha".into()),
        Err(e) => e.to_string(),
    };
    Err(format!(
        "alpha in {{0,1,2,3}}: all 12 forms agree; alpha in {{-1,-2}}: forms agree within the groups led by x (1-4), \
         y (5-8) and z (9-12), but a negative power exists as a formal series only when its leading argument is a unit, \
         so no assignment makes all 12 defined at once (form 5 with x a unit: {cross})"
    ))
}

// 7. Property suites.

fn integer_coefficients(p: &MPoly) -> bool {
    p.terms().all(|(_, c)| c.is_integer())
}

fn fibonomial_properties() -> Result<(), String> {
    let ctx = STContext::symbolic();
    for n in 0..=16i64 {
        for k in 0..=n as usize {
            let b = err(ctx.st_binom(n, k))?;
            check(b.is_polynomial() && integer_coefficients(b.num()), || format!("{{{n}, {k}}} = {b}"))?;
            check(b == err(ctx.st_binom(n, n as usize - k))?, || format!("symmetry at {n}, {k}"))?;
        }
    }
    let (p, pp) = (phi(), phi_prime());
    for n in 1..=12i64 {
        for k in 1..n {
            let b = |m: i64, j: i64| err(ctx.st_binom(m, j as usize)).map(QuadExt::from);
            let (whole, upper, lower) = (b(n, k)?, b(n - 1, k)?, b(n - 1, k - 1)?);
            let pw = |x: &QuadExt, e: i64| err(x.pow(e));
            let left = &(&pw(&p, k)? * &upper) + &(&pw(&pp, n - k)? * &lower);
            let right = &(&pw(&pp, k)? * &upper) + &(&pw(&p, n - k)? * &lower);
            check(left == whole && right == whole, || format!("Pascal rule at {n}, {k}"))?;
        }
    }
    Ok(())
}

fn random_poly<R: Ring>(rng: &mut ChaCha8Rng, degree: usize) -> Series<R> {
    Series::from_fn(degree, |_| R::from_int(rng.gen_range(-9..=9)))
}

fn st_derive_trials() -> Result<(), String> {
    let ctx = STContext::symbolic();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let dinv = err((&phi() - &phi_prime()).inv())?;
    for trial in 0..200 {
        let f = random_poly::<QuadExt>(&mut rng, 10);
        let functional = err(f.scale_arg(&phi()).sub(&f.scale_arg(&phi_prime())).scale(&dinv).shift_down(1))?;
        let coeffwise = err(f.st_derive(&ctx))?;
        check(coeffwise == functional, || format!("st_derive trial {trial}"))?;
    }
    Ok(())
}

/// Row `n` of `[n, k]` at a rational `q`.
fn gauss_row(n: usize, q: &BigRat) -> Vec<BigRat> {
    let mut row = vec![BigRat::from(1)];
    for m in 1..=n {
        let mut next = vec![BigRat::from(1); m + 1];
        for k in 1..m {
            next[k] = &row[k - 1] + &(&q.pow(k as i64).unwrap() * &row[k]);
        }
        row = next;
    }
    row
}

fn q_leibniz_trials() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let dq = |f: &Series<BigRat>, q: &BigRat, k: usize| {
        (0..k).try_fold(f.clone(), |g, _| g.sub(&g.scale_arg(q)).shift_down(1)).map_err(|e| e.to_string())
    };
    for trial in 0..100 {
        let q = loop {
            let q = BigRat::new(rng.gen_range(-9..=9), rng.gen_range(1..=9)).unwrap();
            if !q.is_zero() && q.abs() != BigRat::from(1) {
                break q;
            }
        };
        let (df, dg) = (rng.gen_range(0..=8), rng.gen_range(0..=8));
        let order = df + dg + 5;
        let f = Series::new(random_poly::<BigRat>(&mut rng, df).into_coeffs(), order);
        let g = Series::new(random_poly::<BigRat>(&mut rng, dg).into_coeffs(), order);
        for n in 0..=4usize {
            let lhs = dq(&f.mul(&g), &q, n)?;
            let row = gauss_row(n, &q);
            let mut rhs = Series::zero(order - n);
            for (k, c) in row.iter().enumerate() {
                let a = dq(&f, &q, k)?.truncate(order - n);
                let b = dq(&g, &q, n - k)?.scale_arg(&err(q.pow(k as i64))?).truncate(order - n);
                rhs = rhs.add(&a.mul(&b).scale(c));
            }
            check(lhs == rhs, || format!("q-Leibniz trial {trial}, n = {n}, q = {q}"))?;
        }
    }
    Ok(())
}

fn property_suites() -> Outcome {
    fibonomial_properties()?;
    st_derive_trials()?;
    q_leibniz_trials()?;
    Ok("Fibonomials integral and symmetric (n <= 16), Pascal rules in the extension (n <= 12), \
        200 st_derive trials, 100 q-Leibniz trials"
        .into())
}

// 8. Fault injection.

fn fault_injection() -> Outcome {
    const ORDER: usize = 6;
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut cases: Vec<_> = registry().into_iter().filter(|c| c.expect == Expect::Holds).collect();
    cases.shuffle(&mut rng);
    let mut caught = vec![];
    for case in cases.iter().take(20) {
        let (lhs, _) = err((case.build)(&Env::symbolic(ORDER)))?;
        let index = rng.gen_range(0..lhs.len());
        let num = rng.gen_range(1..=9i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let delta = BigRat::new(num, rng.gen_range(1..=9i64)).unwrap();
        let mut cfg = RunConfig::new(ORDER, 42);
        cfg.filter = Some(case.id.into());
        cfg.injection = Some(Injection { case_id: case.id.into(), index, delta: delta.clone() });
        let r = err(run_with(&cfg))?;
        let got = r.case(case.id).map(|c| c.status.clone());
        match got {
            Some(Status::Fail { witness }) if witness.index == Some(index) => caught.push(format!("{}[{index}]", case.id)),
            other => return Err(format!("{} + {delta} at {index}: {other:?}", case.id)),
        }
    }
    check(caught.len() == 20, || format!("only {} distinct cases", caught.len()))?;
    Ok(format!("20/20 corruptions caught at the corrupted index: {}", caught.join(", ")))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(u8, &str, fn() -> Outcome); 8] = [
        (1, "printed sequences", sequences),
        (2, "full verification runs", full_runs),
        (3, "q-identities and sums of cubes", q_identities),
        (4, "D^n of 1/(1-x) in the extension", geometric_derivatives),
        (5, "generating function of [n+1 over 2]_q^2", squared_binomial_ogf),
        (6, "trinomial associativity forms", trinomial_forms),
        (7, "property suites", property_suites),
        (8, "fault injection", fault_injection),
    ];
    let mut failed = vec![];
    // The harness has already printed `test acceptance_criteria ... ` without a newline.
    std::io::stdout().write_all(b"\n").unwrap();
    for (n, title, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let line = match &outcome {
            Ok(detail) => format!("criterion {n}: PASS  {title}: {detail}\n"),
            Err(detail) => {
                failed.push(n);
                format!("criterion {n}: FAIL  {title}: {detail}\n")
            }
        };
        // Straight to the process stdout so the lines show without --nocapture.
        let mut out = std::io::stdout().lock();
        out.write_all(line.as_bytes()).unwrap();
        out.flush().unwrap();
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
