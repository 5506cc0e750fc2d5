//! Case builders, grouped by topic.
//!
//! Conventions shared by every builder: `e` is the formal series variable.
//! When an operator acts on a symbol (`x`, `y`, ...), that symbol stays
//! symbolic at every evaluation point, its companion variable is marked with
//! `e`, and the operator's own parameter is left unmarked. Both sides then
//! stay homogeneous in `e`, so truncation is exact.

pub mod bridge;
pub mod genfun;
pub mod intro;
pub mod polytopic;
pub mod rogers;
pub mod theta;
pub mod translation;
pub mod trinomial;

use stcalc_core::deformed::Term;
use stcalc_core::exactring::{QuadExt, RatFunc, Var};
use stcalc_core::pseries::Series;
use stcalc_core::qrs::{q_binom, q_int, q_pochhammer};
use stcalc_core::stcore::STContext;
use stcalc_core::{Error, Result};

use crate::env::Env;

pub(crate) fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

pub(crate) fn int(n: i64) -> RatFunc {
    RatFunc::int(n)
}

/// `[n over k]_q`.
pub(crate) fn gauss(n: i64, k: usize, q: &RatFunc) -> Result<RatFunc> {
    q_binom(n, k, q)
}

/// `(1 - q^n) / (1 - q)`.
pub(crate) fn qn(n: i64, q: &RatFunc) -> Result<RatFunc> {
    q_int(n, q)
}

/// `(q; q)_n`.
pub(crate) fn qq(q: &RatFunc, n: usize) -> RatFunc {
    q_pochhammer(q, q, n)
}

/// `{alpha over k}` lifted to the extension.
pub(crate) fn stb(ctx: &STContext, alpha: i64, k: usize) -> Result<QuadExt> {
    Ok(QuadExt::from(ctx.st_binom(alpha, k)?))
}

/// Extension-valued series helpers.
pub(crate) trait IntoQuad {
    fn into_quad(self) -> Series<QuadExt>;
}

impl IntoQuad for Series<RatFunc> {
    fn into_quad(self) -> Series<QuadExt> {
        let order = self.order();
        Series::new(self.into_coeffs().into_iter().map(QuadExt::from).collect(), order)
    }
}

/// `c * e^k` in the extension.
pub(crate) fn qmono(c: QuadExt, k: usize, order: usize) -> Series<QuadExt> {
    Series::monomial(c, k, order)
}

pub(crate) fn atom(s: Series<RatFunc>) -> Term {
    Term::atom(s)
}

/// `(a (+)_{u,v} b)` on two atoms.
pub(crate) fn plus(a: Term, b: Term, u: &RatFunc, v: &RatFunc) -> Term {
    Term::oplus(a, b, u.clone(), v.clone())
}

/// `(a (-)_{u,v} b)`.
pub(crate) fn minus(a: Term, b: Term, u: &RatFunc, v: &RatFunc) -> Term {
    Term::ominus(a, b, u.clone(), v.clone())
}

/// `c * t` as a node.
pub(crate) fn times(c: Series<RatFunc>, t: Term) -> Term {
    Term::scaled(c, t)
}

/// The coefficient of `v^e` in `f`, which must be polynomial in `v` over a
/// `v`-free denominator.
pub(crate) fn coeff_in(f: &RatFunc, v: Var, e: i32) -> Result<RatFunc> {
    if !f.contains(v) {
        return Ok(if e == 0 { f.clone() } else { RatFunc::zero() });
    }
    let (terms, den) = f
        .laurent_in(v)
        .ok_or_else(|| Error::Unsupported(format!("{f} is not Laurent in {v}")))?;
    let d = RatFunc::from_poly(den);
    for (k, c) in terms {
        if k == e {
            return RatFunc::from_poly(c).checked_div(&d);
        }
    }
    Ok(RatFunc::zero())
}

/// The `(s,t)` context for extension-valued cases: always symbolic in `s, t`.
pub(crate) fn sym_ctx() -> STContext {
    STContext::symbolic()
}

/// Shorthand for the series `1`.
pub(crate) fn one(env: &Env) -> Series<RatFunc> {
    Series::one(env.order)
}
