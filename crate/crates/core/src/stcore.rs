//! Generalized Fibonacci polynomials, Fibonomials and simplicial polytopic numbers.

use std::collections::HashMap;
use std::fmt;

use parking_lot::Mutex;

use crate::error::{Error, Result};
use crate::exactring::{phi, phi_prime, BigRat, MPoly, QuadExt, RatFunc, Var};

/// How the parameters `(s, t)` are realized.
#[derive(Clone, Debug, PartialEq)]
pub enum Mode {
    /// `s` and `t` are the generators `Var::S`, `Var::T`.
    Symbolic,
    /// Rational values.
    Specialized(BigRat, BigRat),
    /// `s = 1 + q`, `t = -q` with `q` symbolic, so that `[[n]] = [n]_q`.
    QNumber,
    /// Arbitrary rational functions.
    General,
}

/// Parameter pair `(s, t)` together with memo tables for `[[n]]` and `[[n]]!`.
pub struct STContext {
    mode: Mode,
    s: RatFunc,
    t: RatFunc,
    degenerate: bool,
    fib_memo: Mutex<HashMap<i64, RatFunc>>,
    fact_memo: Mutex<Vec<RatFunc>>,
}

impl fmt::Debug for STContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "STContext({:?}, s = {}, t = {})", self.mode, self.s, self.t)
    }
}

impl Clone for STContext {
    fn clone(&self) -> Self {
        STContext::build(self.mode.clone(), self.s.clone(), self.t.clone())
    }
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

impl STContext {
    fn build(mode: Mode, s: RatFunc, t: RatFunc) -> Self {
        let disc = &(&s * &s) + &t.scale(&BigRat::from(4));
        STContext {
            mode,
            degenerate: disc.is_zero(),
            s,
            t,
            fib_memo: Mutex::new(HashMap::new()),
            fact_memo: Mutex::new(vec![RatFunc::one()]),
        }
    }

    pub fn symbolic() -> Self {
        STContext::build(Mode::Symbolic, RatFunc::var(Var::S), RatFunc::var(Var::T))
    }

    pub fn specialized(s0: BigRat, t0: BigRat) -> Self {
        let (s, t) = (RatFunc::constant(s0.clone()), RatFunc::constant(t0.clone()));
        STContext::build(Mode::Specialized(s0, t0), s, t)
    }

    pub fn qnum() -> Self {
        let q = RatFunc::var(Var::Q);
        STContext::build(Mode::QNumber, &RatFunc::one() + &q, -&q)
    }

    /// `s = 1 + q`, `t = -q` for an arbitrary `q`.
    pub fn q_of(q: &RatFunc) -> Self {
        STContext::general(&RatFunc::one() + q, -q)
    }

    pub fn general(s: RatFunc, t: RatFunc) -> Self {
        match (s.as_constant(), t.as_constant()) {
            (Some(s0), Some(t0)) => STContext::specialized(s0, t0),
            _ => STContext::build(Mode::General, s, t),
        }
    }

    pub fn mode(&self) -> &Mode {
        &self.mode
    }

    pub fn s(&self) -> &RatFunc {
        &self.s
    }

    pub fn t(&self) -> &RatFunc {
        &self.t
    }

    pub fn is_symbolic(&self) -> bool {
        self.mode == Mode::Symbolic
    }

    /// True when `s^2 + 4t = 0`.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// `[[n]]` for every integer `n`; negative indices use `[[-m]] = -(-t)^(-m) [[m]]`.
    pub fn fib(&self, n: i64) -> RatFunc {
        if let Some(v) = self.fib_memo.lock().get(&n) {
            return v.clone();
        }
        let v = if n < 0 {
            let mt = -&self.t;
            let f = self.fib(-n);
            -&(&mt.pow(n).expect("t is a unit") * &f)
        } else {
            self.fib_forward(n)
        };
        self.fib_memo.lock().insert(n, v.clone());
        v
    }

    fn fib_forward(&self, n: i64) -> RatFunc {
        let (mut a, mut b) = (RatFunc::zero(), RatFunc::one());
        let start = {
            // Resume from the largest memoized consecutive pair below n.
            let memo = self.fib_memo.lock();
            let mut k = n - 1;
            while k >= 1 && !(memo.contains_key(&k) && memo.contains_key(&(k - 1))) {
                k -= 1;
            }
            if k >= 1 {
                a = memo[&(k - 1)].clone();
                b = memo[&k].clone();
                k
            } else {
                1
            }
        };
        if n == 0 {
            return RatFunc::zero();
        }
        for _ in start..n {
            let c = &(&self.s * &b) + &(&self.t * &a);
            a = b;
            b = c;
        }
        b
    }

    /// `[[n]]` for negative `n` by running the recurrence backwards,
    /// `[[n]] = ([[n+2]] - s [[n+1]]) / t`.
    pub fn fib_backward(&self, n: i64) -> RatFunc {
        if n >= 0 {
            return self.fib(n);
        }
        let (mut hi, mut lo) = (RatFunc::one(), RatFunc::zero()); // [[1]], [[0]]
        let tinv = self.t.inv().expect("t is a unit");
        for _ in 0..(-n) {
            let next = &(&hi - &(&self.s * &lo)) * &tinv;
            hi = lo;
            lo = next;
        }
        lo
    }

    /// Confluent value `n (s/2)^(n-1)`, valid when `s^2 + 4t = 0`.
    pub fn fib_confluent(&self, n: i64) -> Result<RatFunc> {
        if !self.degenerate {
            return Err(Error::InvalidArgument("context is not degenerate".into()));
        }
        let half_s = self.s.scale(&BigRat::new(1, 2)?);
        Ok(half_s.pow(n - 1)?.scale(&BigRat::from(n)))
    }

    /// `[[n]]! = [[1]] [[2]] ... [[n]]`.
    pub fn fib_factorial(&self, n: usize) -> RatFunc {
        {
            let memo = self.fact_memo.lock();
            if let Some(v) = memo.get(n) {
                return v.clone();
            }
        }
        let mut memo = self.fact_memo.lock();
        while memo.len() <= n {
            let k = memo.len();
            let next = memo.last().expect("seeded") * &self.fib(k as i64);
            memo.push(next);
        }
        memo[n].clone()
    }

    /// Fibonomial `{alpha over k}` for any integer `alpha`.
    pub fn st_binom(&self, alpha: i64, k: usize) -> Result<RatFunc> {
        if k == 0 {
            return Ok(RatFunc::one());
        }
        let ki = k as i64;
        if alpha < 0 {
            let a = -alpha;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let mt = -&self.t;
            let w = mt.pow(-a * ki - binom2(ki))?;
            return Ok((&w * &self.st_binom(a + ki - 1, k)?).scale(&BigRat::from(sign)));
        }
        if ki > alpha {
            return Ok(RatFunc::zero());
        }
        let mut num = RatFunc::one();
        for i in 0..ki {
            num = &num * &self.fib(alpha - i);
        }
        let den = self.fib_factorial(k);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_polynomial() && den.is_polynomial() {
            // Integrality is checked, not assumed.
            let q = num
                .num()
                .div_exact(den.num())
                .unwrap_or_else(|| panic!("Fibonomial {{{alpha} over {k}}} is not a polynomial"));
            return Ok(RatFunc::from_poly(q));
        }
        num.checked_div(&den)
    }

    /// `{alpha over k}` straight from the product definition, using negative
    /// Fibonacci values when `alpha < 0`.
    pub fn st_binom_product(&self, alpha: i64, k: usize) -> Result<RatFunc> {
        let mut num = RatFunc::one();
        for i in 0..k as i64 {
            num = &num * &self.fib(alpha - i);
        }
        num.checked_div(&self.fib_factorial(k))
    }

    fn require_symbolic(&self) -> Result<()> {
        if self.is_symbolic() {
            Ok(())
        } else {
            Err(Error::Unsupported("extension arithmetic needs symbolic (s, t)".into()))
        }
    }

    /// `phi^k {alpha over k} + phi'^(alpha+1-k) {alpha over k-1}`.
    pub fn pascal_left(&self, alpha: i64, k: usize) -> Result<QuadExt> {
        self.require_symbolic()?;
        let ki = k as i64;
        let a = phi().pow(ki)?.scale(&self.st_binom(alpha, k)?);
        let b = phi_prime().pow(alpha + 1 - ki)?.scale(&self.st_binom(alpha, k - 1)?);
        Ok(&a + &b)
    }

    /// `phi'^k {alpha over k} + phi^(alpha+1-k) {alpha over k-1}`.
    pub fn pascal_right(&self, alpha: i64, k: usize) -> Result<QuadExt> {
        self.require_symbolic()?;
        let ki = k as i64;
        let a = phi_prime().pow(ki)?.scale(&self.st_binom(alpha, k)?);
        let b = phi().pow(alpha + 1 - ki)?.scale(&self.st_binom(alpha, k - 1)?);
        Ok(&a + &b)
    }

    /// `{n+d-1 over d} = [[n]] [[n+1]] ... [[n+d-1]] / [[d]]!`.
    pub fn polytopic(&self, n: u64, d: usize) -> Result<RatFunc> {
        self.st_binom(n as i64 + d as i64 - 1, d)
    }

    /// The Fibonacci polynomial as an element of `Z[s, t]` (symbolic context only).
    pub fn fib_poly(&self, n: i64) -> Result<MPoly> {
        let f = self.fib(n);
        if f.is_polynomial() {
            Ok(f.num().clone())
        } else {
            Err(Error::Unsupported(format!("[[{n}]] = {f} is not a polynomial")))
        }
    }
}

/// Named parameter choices.
pub fn specialization(name: &str, params: &[BigRat]) -> Result<STContext> {
    let int = |n: i64| BigRat::from(n);
    let want = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("`{name}` takes {k} parameter(s)")))
        }
    };
    let ctx = match name.to_ascii_lowercase().as_str() {
        "integers" | "naturals" => {
            want(0)?;
            STContext::specialized(int(2), int(-1))
        }
        "fibonacci" => {
            want(0)?;
            STContext::specialized(int(1), int(1))
        }
        "pell" => {
            want(0)?;
            STContext::specialized(int(2), int(1))
        }
        "jacobsthal" => {
            want(0)?;
            STContext::specialized(int(1), int(2))
        }
        "mersenne" => {
            want(0)?;
            STContext::specialized(int(3), int(-2))
        }
        "pq" => {
            want(2)?;
            let (p, q) = (&params[0], &params[1]);
            STContext::specialized(p + q, -&(p * q))
        }
        "chebyshev" => {
            want(1)?;
            STContext::specialized(&params[0] * &int(2), int(-1))
        }
        "lucas" | "pq-fibonacci" => {
            want(2)?;
            STContext::specialized(params[0].clone(), -&params[1])
        }
        "qnum" => match params.len() {
            0 => STContext::qnum(),
            1 => STContext::specialized(&int(1) + &params[0], -&params[0]),
            _ => return Err(Error::InvalidArgument("`qnum` takes at most one parameter".into())),
        },
        "symbolic" => {
            want(0)?;
            STContext::symbolic()
        }
        _ => return Err(Error::UnknownSpecialization(name.to_string())),
    };
    Ok(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(ctx: &STContext, v: &RatFunc) -> BigRat {
        v.as_constant().unwrap_or_else(|| panic!("{ctx:?}: {v} is not constant"))
    }

    #[test]
    fn initial_values() {
        let c = STContext::symbolic();
        assert!(c.fib(0).is_zero());
        assert!(c.fib(1).is_one());
        assert_eq!(c.fib(2), RatFunc::var(Var::S));
    }

    #[test]
    fn negative_three() {
        let c = STContext::symbolic();
        let (s, t) = (RatFunc::var(Var::S), RatFunc::var(Var::T));
        let expect = (&(&s * &s) + &t).checked_div(&t.pow(3).unwrap()).unwrap();
        assert_eq!(c.fib(-3), expect);
        assert_eq!(c.fib_backward(-3), expect);
    }

    #[test]
    fn jacobsthal_values() {
        // The recurrence at (1, 2) gives 0, 1, 1, 3, 5, 11, 21, 43, 85. The
        // list 0,1,1,2,3,5,11,21,... found in print mixes in Fibonacci terms.
        let c = specialization("jacobsthal", &[]).unwrap();
        let got: Vec<BigRat> = (0..9).map(|n| at(&c, &c.fib(n))).collect();
        assert_eq!(got, [0, 1, 1, 3, 5, 11, 21, 43, 85].map(BigRat::from).to_vec());
        assert_ne!(got[6], BigRat::from(11));
    }

    #[test]
    fn factorials() {
        let c = STContext::symbolic();
        let s = MPoly::var(Var::S);
        let t = MPoly::var(Var::T);
        assert!(c.fib_factorial(0).is_one());
        assert_eq!(c.fib_factorial(3), RatFunc::from_poly(&s.pow(3) + &(&s * &t)));
        let f = specialization("fibonacci", &[]).unwrap();
        assert_eq!(at(&f, &f.fib_factorial(4)), BigRat::from(6));
    }

    #[test]
    fn golden_rectangle_entry() {
        let f = specialization("fibonacci", &[]).unwrap();
        assert_eq!(at(&f, &f.st_binom(4, 2).unwrap()), BigRat::from(6));
    }

    #[test]
    fn minus_one_over_k() {
        let c = STContext::symbolic();
        let mt = -&RatFunc::var(Var::T);
        for k in 0..6usize {
            let ki = k as i64;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let expect = mt.pow(-ki - ki * (ki - 1) / 2).unwrap().scale(&BigRat::from(sign));
            assert_eq!(c.st_binom(-1, k).unwrap(), expect);
        }
    }

    #[test]
    fn pascal_small_case() {
        let c = STContext::symbolic();
        assert_eq!(c.pascal_left(3, 1).unwrap(), QuadExt::from(c.fib(4)));
        assert_eq!(c.pascal_left(0, 1).unwrap(), QuadExt::one());
    }

    #[test]
    fn mersenne_tetrahedral() {
        let c = specialization("mersenne", &[]).unwrap();
        let got: Vec<BigRat> = (0..6).map(|n| at(&c, &c.polytopic(n, 3).unwrap())).collect();
        let expect: Vec<BigRat> = [0, 1, 15, 155, 1395, 11811].map(BigRat::from).to_vec();
        assert_eq!(got, expect);
    }

    #[test]
    fn chebyshev_values() {
        // U_{n-1}(3): 0, 1, 6, 35, 204
        let c = specialization("chebyshev", &[BigRat::from(3)]).unwrap();
        let got: Vec<BigRat> = (0..5).map(|n| at(&c, &c.fib(n))).collect();
        assert_eq!(got, [0, 1, 6, 35, 204].map(BigRat::from).to_vec());
    }

    #[test]
    fn degenerate_context_uses_confluent_values() {
        // s^2 + 4t = 0 at (2, -1)
        let c = STContext::specialized(BigRat::from(2), BigRat::from(-1));
        assert!(c.is_degenerate());
        for n in 1..8 {
            assert_eq!(c.fib(n), c.fib_confluent(n).unwrap());
        }
        assert!(!STContext::symbolic().is_degenerate());
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(specialization("lucky", &[]), Err(Error::UnknownSpecialization(_))));
    }
}
