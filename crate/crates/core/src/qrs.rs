//! q-Pochhammer symbols, Gaussian binomials, Rogers-Szego polynomials, the
//! q-exponential operator and truncated 2phi1 sums.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactring::{BigRat, MPoly, RatFunc, Ring, Var};
use crate::pseries::{symbolic, Series};

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// `(a; q)_n = prod_{k<n} (1 - a q^k)`.
pub fn q_pochhammer<R: Ring>(a: &R, q: &R, n: usize) -> R {
    let mut acc = R::one();
    let mut aq = a.clone();
    for _ in 0..n {
        acc = acc.mul(&R::one().sub(&aq));
        aq = aq.mul(q);
    }
    acc
}

/// `(a; q)_n` for a series argument `a`.
pub fn q_pochhammer_series<R: Ring>(a: &Series<R>, q: &R, n: usize) -> Series<R> {
    let order = a.order();
    let mut acc = Series::one(order);
    let mut aq = a.clone();
    for _ in 0..n {
        acc = acc.mul(&Series::one(order).sub(&aq));
        aq = aq.scale(q);
    }
    acc
}

fn require_small(z: &Series<RatFunc>) -> Result<()> {
    if z.coeff(0).is_zero() {
        Ok(())
    } else {
        Err(Error::InvalidArgument("infinite product needs an argument without constant term".into()))
    }
}

/// `(z; q)_inf` expanded formally as `sum_m (-1)^m q^C(m,2) z^m / (q;q)_m`.
pub fn q_pochhammer_inf(z: &Series<RatFunc>, q: &RatFunc) -> Result<Series<RatFunc>> {
    require_small(z)?;
    let order = z.order();
    let mut acc = Series::zero(order);
    let mut zm = Series::one(order);
    for m in 0..=order as i64 {
        let c = q.pow(binom2(m))?.checked_div(&q_pochhammer(q, q, m as usize))?;
        let c = if m % 2 == 0 { c } else { -&c };
        acc = acc.add(&zm.scale(&c));
        zm = zm.mul(z);
    }
    Ok(acc)
}

/// `1 / (z; q)_inf` expanded as `sum_m z^m / (q;q)_m`.
pub fn q_pochhammer_inf_recip(z: &Series<RatFunc>, q: &RatFunc) -> Result<Series<RatFunc>> {
    require_small(z)?;
    let order = z.order();
    let mut acc = Series::zero(order);
    let mut zm = Series::one(order);
    for m in 0..=order {
        acc = acc.add(&zm.scale(&q_pochhammer(q, q, m).inv()?));
        zm = zm.mul(z);
    }
    Ok(acc)
}

/// `[n]_q = 1 + q + ... + q^(n-1)`; `[-n]_q = -q^(-n) [n]_q`.
pub fn q_int(n: i64, q: &RatFunc) -> Result<RatFunc> {
    if n < 0 {
        return Ok(-&(&q.pow(n)? * &q_int(-n, q)?));
    }
    let mut acc = RatFunc::zero();
    let mut p = RatFunc::one();
    for _ in 0..n {
        acc = &acc + &p;
        p = &p * q;
    }
    Ok(acc)
}

pub fn q_factorial(n: usize, q: &RatFunc) -> Result<RatFunc> {
    let mut acc = RatFunc::one();
    for k in 1..=n as i64 {
        acc = &acc * &q_int(k, q)?;
    }
    Ok(acc)
}

/// Gaussian binomial. Nonnegative `n` is built by the q-Pascal rule
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]` so no division occurs; negative `n` uses
/// `[-m, k] = (-1)^k q^(-mk - C(k,2)) [m+k-1, k]`.
pub fn q_binom(n: i64, k: usize, q: &RatFunc) -> Result<RatFunc> {
    let ki = k as i64;
    if n < 0 {
        let m = -n;
        let c = &q.pow(-m * ki - binom2(ki))? * &q_binom(m + ki - 1, k, q)?;
        return Ok(if k % 2 == 0 { c } else { -&c });
    }
    if ki > n {
        return Ok(RatFunc::zero());
    }
    Ok(q_binom_row(n as usize, q)?.swap_remove(k))
}

/// Row `[n, 0..=n]_q` of Gaussian binomials.
pub fn q_binom_row(n: usize, q: &RatFunc) -> Result<Vec<RatFunc>> {
    let mut row = vec![RatFunc::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(RatFunc::one());
        for k in 1..m {
            next.push(&row[k - 1] + &(&q.pow(k as i64)? * &row[k]));
        }
        next.push(RatFunc::one());
        row = next;
    }
    Ok(row)
}

/// `r_n(x, b; q) = sum_k [n,k]_q b^(n-k) x^k`, stored as its coefficient list.
#[derive(Clone, Debug, PartialEq)]
pub struct RSPoly {
    n: usize,
    /// `coeffs[k]` multiplies `b^(n-k) x^k`.
    coeffs: Vec<RatFunc>,
}

impl RSPoly {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    /// Value at ring elements `x`, `b`.
    pub fn eval<R: Ring>(&self, x: &R, b: &R) -> Result<R> {
        let mut acc = R::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let term = R::from_ratfunc(c)?
                .mul(&b.pow((self.n - k) as i64)?)
                .mul(&x.pow(k as i64)?);
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// The polynomial in the generators `x` and `b`.
    pub fn to_ratfunc(&self) -> RatFunc {
        self.eval(&RatFunc::var(Var::X), &RatFunc::var(Var::B)).expect("polynomial evaluation")
    }

    /// Classical `h_n(x; q)`, the `b = 1` case.
    pub fn h(&self, x: &RatFunc) -> RatFunc {
        self.eval(x, &RatFunc::one()).expect("polynomial evaluation")
    }
}

impl fmt::Display for RSPoly {
    /// Descending powers of `b`, coefficients rendered compactly: `b^2 + (1+q)*b*x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = MPoly::term(
                crate::exactring::Monomial::var(Var::B, (self.n - k) as u16)
                    .mul(&crate::exactring::Monomial::var(Var::X, k as u16)),
                BigRat::one(),
            );
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let cs = c.render_compact();
            let cs = if cs.contains(['+', '-', '/']) { format!("({cs})") } else { cs };
            match (c.is_one(), mono.is_one()) {
                (true, _) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{cs}")?,
                (false, false) => write!(f, "{cs}*{mono}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn rogers_szego_r(n: usize, q: &RatFunc) -> Result<RSPoly> {
    Ok(RSPoly { n, coeffs: q_binom_row(n, q)? })
}

/// `h_n(x; q)` as a polynomial in the generator `x`.
pub fn rogers_szego_h(n: usize, q: &RatFunc) -> Result<RatFunc> {
    Ok(rogers_szego_r(n, q)?.h(&RatFunc::var(Var::X)))
}

/// Chen's operator `T(b D_q) = sum_n b^n D_q^n / (q;q)_n`, where `D_q` is the
/// unnormalized q-difference in the symbol `v` acting on every coefficient of
/// `target`. `b` may itself be a series (for a graded parameter). The sum stops
/// once `D_q^n` kills the target or `b^n` leaves the truncation window.
pub fn q_exp_operator(
    b: &Series<RatFunc>,
    v: Var,
    q: &RatFunc,
    target: &Series<RatFunc>,
) -> Result<Series<RatFunc>> {
    const MAX_TERMS: usize = 512;
    let order = target.order().min(b.order());
    let mut acc = Series::zero(order);
    let mut dn = target.truncate(order);
    let mut bn = Series::one(order);
    let bval = b.valuation();
    for n in 0..MAX_TERMS {
        if dn.is_zero() || bn.is_zero() {
            return Ok(acc);
        }
        let c = q_pochhammer(q, q, n).inv()?;
        acc = acc.add(&bn.mul(&dn).scale(&c));
        if bval.is_some_and(|k| k > 0) && (n + 1) * bval.unwrap_or(0) > order {
            return Ok(acc);
        }
        dn = symbolic::on_coeffs(&dn, |c| symbolic::q_difference_var(c, v, q))?;
        bn = bn.mul(b);
    }
    Err(Error::Unsupported("q-exponential operator did not terminate".into()))
}

/// Series-level `T(b D_q)` where `D_q` acts on the formal variable. Exact when
/// the target is a polynomial of degree at most its order.
pub fn q_exp_operator_series<R: Ring>(b: &R, q: &R, target: &Series<R>) -> Result<Series<R>> {
    let order = target.order();
    let mut acc = Series::zero(order);
    let mut dn = target.clone();
    let mut bn = R::one();
    for n in 0..=order {
        let c = q_pochhammer(q, q, n).inv()?;
        acc = acc.add(&Series::new(dn.coeffs().to_vec(), order).scale(&bn.mul(&c)));
        if dn.order() == 0 {
            break;
        }
        dn = dn.q_difference(q)?;
        bn = bn.mul(b);
    }
    Ok(acc)
}

/// `sum_{n<=terms} (a1;q)_n (a2;q)_n / ((q;q)_n (b1;q)_n) z^n` with series arguments.
pub fn phi21_truncated<R: Ring>(
    a1: &Series<R>,
    a2: &Series<R>,
    b1: &Series<R>,
    q: &R,
    z: &Series<R>,
    terms: usize,
) -> Result<Series<R>> {
    let order = z.order().min(a1.order()).min(a2.order()).min(b1.order());
    let mut acc = Series::zero(order);
    let mut num = Series::one(order);
    let mut den = Series::one(order);
    let mut zn = Series::one(order);
    let one = Series::one(order);
    let (mut a1q, mut a2q, mut b1q) = (a1.clone(), a2.clone(), b1.clone());
    let mut qq = R::one();
    let mut qk = q.clone();
    for n in 0..=terms {
        if n > 0 {
            num = num.mul(&one.sub(&a1q)).mul(&one.sub(&a2q));
            den = den.mul(&one.sub(&b1q));
            qq = qq.mul(&R::one().sub(&qk));
            qk = qk.mul(q);
            a1q = a1q.scale(q);
            a2q = a2q.scale(q);
            b1q = b1q.scale(q);
            zn = zn.mul(z);
        }
        if qq.is_zero() || den.coeff(0).is_zero() {
            return Err(Error::VanishingDenominator(n));
        }
        if zn.is_zero() {
            break;
        }
        let term = num.mul(&zn).div(&den)?.scale(&qq.inv()?);
        acc = acc.add(&term);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stcore::STContext;

    fn q() -> RatFunc {
        RatFunc::var(Var::Q)
    }

    fn qpoly(cs: &[i64]) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (i, c) in cs.iter().enumerate() {
            acc = &acc + &q().pow(i as i64).unwrap().scale(&BigRat::from(*c));
        }
        acc
    }

    #[test]
    fn pochhammer_basics() {
        assert!(q_pochhammer(&q(), &q(), 0).is_one());
        let expect = &(&qpoly(&[1, -1]) * &qpoly(&[1, 0, -1])) * &qpoly(&[1, 0, 0, -1]);
        assert_eq!(q_pochhammer(&q(), &q(), 3), expect);
    }

    #[test]
    fn gaussian_four_two() {
        assert_eq!(q_binom(4, 2, &q()).unwrap(), qpoly(&[1, 1, 2, 1, 1]));
        assert!(q_binom(7, 0, &q()).unwrap().is_one());
    }

    #[test]
    fn gaussian_at_two() {
        let two = RatFunc::int(2);
        let got: Vec<RatFunc> = (0..6).map(|n| q_binom(n, 2, &two).unwrap()).collect();
        let expect: Vec<RatFunc> = [0, 0, 1, 7, 35, 155].map(RatFunc::int).to_vec();
        assert_eq!(got, expect);
    }

    #[test]
    fn negative_upper_index_matches_fibonomial() {
        let ctx = STContext::qnum();
        for n in -4..0 {
            for k in 0..5 {
                assert_eq!(q_binom(n, k, &q()).unwrap(), ctx.st_binom(n, k).unwrap());
            }
        }
    }

    #[test]
    fn rogers_szego_two() {
        let r2 = rogers_szego_r(2, &q()).unwrap();
        assert_eq!(r2.to_string(), "b^2 + (1+q)*b*x + x^2");
        let r1 = rogers_szego_r(1, &q()).unwrap();
        assert_eq!(r1.to_ratfunc(), &RatFunc::var(Var::B) + &RatFunc::var(Var::X));
    }

    #[test]
    fn exp_operator_on_square() {
        let x2: Series<RatFunc> = Series::constant(RatFunc::var(Var::X).pow(2).unwrap(), 0);
        let b = Series::constant(RatFunc::var(Var::B), 0);
        let out = q_exp_operator(&b, Var::X, &q(), &x2).unwrap();
        assert_eq!(out.coeff(0), &rogers_szego_r(2, &q()).unwrap().to_ratfunc());
    }

    #[test]
    fn phi21_trivial_cases() {
        let z: Series<RatFunc> = Series::zero(4);
        let a = Series::constant(q(), 4);
        let o = Series::zero(4);
        assert_eq!(phi21_truncated(&a, &o, &a, &q(), &z, 6).unwrap(), Series::one(4));
        let z = Series::var(4);
        assert_eq!(phi21_truncated(&a, &o, &a, &q(), &z, 0).unwrap(), Series::one(4));
    }

    #[test]
    fn vanishing_denominator_names_index() {
        let z: Series<RatFunc> = Series::var(4);
        let a = Series::constant(q(), 4);
        let b1 = Series::constant(q().pow(-2).unwrap(), 4);
        let o = Series::zero(4);
        assert_eq!(phi21_truncated(&a, &o, &b1, &q(), &z, 4), Err(Error::VanishingDenominator(3)));
    }
}
