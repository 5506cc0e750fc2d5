use proptest::prelude::*;
use stcalc_core::exactring::{phi, phi_prime, BigRat, MPoly, QuadExt, RatFunc, Var};
use stcalc_core::stcore::STContext;

/// Fibonacci polynomials straight from the recurrence.
fn fib_table(n: usize) -> Vec<MPoly> {
    let (s, t) = (MPoly::var(Var::S), MPoly::var(Var::T));
    let mut f = vec![MPoly::zero(), MPoly::one()];
    while f.len() <= n {
        let k = f.len();
        let next = &(&s * &f[k - 1]) + &(&t * &f[k - 2]);
        f.push(next);
    }
    f
}

fn has_integer_coefficients(p: &MPoly) -> bool {
    p.terms().all(|(_, c)| c.is_integer())
}

#[test]
fn fibonacci_polynomials_match_recurrence() {
    let ctx = STContext::symbolic();
    for (n, f) in fib_table(20).iter().enumerate() {
        assert_eq!(ctx.fib_poly(n as i64).unwrap(), *f, "n = {n}");
    }
}

#[test]
fn fibonomials_are_integral_and_symmetric() {
    let ctx = STContext::symbolic();
    for n in 0..=16i64 {
        for k in 0..=n as usize {
            let b = ctx.st_binom(n, k).unwrap();
            assert!(b.is_polynomial(), "{{{n}, {k}}} = {b}");
            assert!(has_integer_coefficients(b.num()), "{{{n}, {k}}} = {b}");
            assert_eq!(b, ctx.st_binom(n, n as usize - k).unwrap(), "symmetry at {n}, {k}");
        }
    }
}

#[test]
fn fibonomial_equals_product_quotient() {
    let ctx = STContext::symbolic();
    let f = fib_table(12);
    for n in 0..=12usize {
        for k in 0..=n {
            let mut num = MPoly::one();
            let mut den = MPoly::one();
            for i in 0..k {
                num = &num * &f[n - i];
                den = &den * &f[i + 1];
            }
            let want = RatFunc::new(num, den).unwrap();
            assert_eq!(ctx.st_binom(n as i64, k).unwrap(), want, "{n}, {k}");
        }
    }
}

#[test]
fn pascal_recurrences_in_the_extension() {
    let ctx = STContext::symbolic();
    let (p, pp) = (phi(), phi_prime());
    for n in 1..=12i64 {
        for k in 1..n as usize {
            let ki = k as i64;
            let whole = QuadExt::from(ctx.st_binom(n, k).unwrap());
            let upper = QuadExt::from(ctx.st_binom(n - 1, k).unwrap());
            let lower = QuadExt::from(ctx.st_binom(n - 1, k - 1).unwrap());
            let left = &(&p.pow(ki).unwrap() * &upper) + &(&pp.pow(n - ki).unwrap() * &lower);
            let right = &(&pp.pow(ki).unwrap() * &upper) + &(&p.pow(n - ki).unwrap() * &lower);
            assert_eq!(left, whole, "left form at {n}, {k}");
            assert_eq!(right, whole, "right form at {n}, {k}");
            assert_eq!(ctx.pascal_left(n - 1, k).unwrap(), whole);
            assert_eq!(ctx.pascal_right(n - 1, k).unwrap(), whole);
        }
    }
}

#[test]
fn binet_form_reproduces_fibonacci_polynomials() {
    let f = fib_table(8);
    let dinv = QuadExt::delta().inv().unwrap();
    for (n, fn_) in f.iter().enumerate() {
        let b = &(&phi().pow(n as i64).unwrap() - &phi_prime().pow(n as i64).unwrap()) * &dinv;
        assert!(b.delta_part().is_zero());
        assert_eq!(*b.symmetric_part(), RatFunc::from_poly(fn_.clone()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn integer_points_give_integers(s in -4i64..=4, t in -4i64..=4, n in 0i64..=16, k in 0usize..=16) {
        prop_assume!(k as i64 <= n);
        let ctx = STContext::specialized(BigRat::from(s), BigRat::from(t));
        match ctx.st_binom(n, k) {
            Ok(b) => {
                let c = b.as_constant().unwrap();
                prop_assert!(c.is_integer(), "{{{}, {}}}_{{{},{}}} = {}", n, k, s, t, c);
            }
            // A vanishing denominator at this point; the symbolic value still specializes.
            Err(_) => {
                let sym = STContext::symbolic().st_binom(n, k).unwrap();
                let v = sym.eval_const(&[(Var::S, BigRat::from(s)), (Var::T, BigRat::from(t))]).unwrap();
                prop_assert!(v.is_integer());
            }
        }
    }
}
