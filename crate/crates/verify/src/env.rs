//! Evaluation environments: which symbols stay symbolic and which are pinned
//! to sampled rationals.

use rand::Rng;
use stcalc_core::exactring::{BigRat, QuadExt, RatFunc, Var, NVARS};
use stcalc_core::pseries::Series;
use stcalc_core::stcore::STContext;
use stcalc_core::Result;

/// Both sides of an identity, flattened into coefficient lists.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Rat(Vec<RatFunc>),
    Quad(Vec<QuadExt>),
}

impl Value {
    pub fn len(&self) -> usize {
        match self {
            Value::Rat(v) => v.len(),
            Value::Quad(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ring_name(&self) -> &'static str {
        match self {
            Value::Rat(_) => "rational-function",
            Value::Quad(_) => "quadratic-extension",
        }
    }

    /// Adds `delta` to entry `index` (the rational part for extension values).
    pub fn perturb(&mut self, index: usize, delta: &BigRat) {
        let d = RatFunc::constant(delta.clone());
        match self {
            Value::Rat(v) => v[index] = &v[index] + &d,
            Value::Quad(v) => v[index] = &v[index] + &QuadExt::from(d),
        }
    }
}

/// Accumulates series coefficients and scalars into a flat [`Value`].
#[derive(Default)]
pub struct RatBuf(pub Vec<RatFunc>);

impl RatBuf {
    pub fn new() -> Self {
        RatBuf(Vec::new())
    }
    pub fn series(&mut self, s: &Series<RatFunc>) {
        self.0.extend_from_slice(s.coeffs());
    }
    pub fn push(&mut self, r: RatFunc) {
        self.0.push(r);
    }
    pub fn done(self) -> Value {
        Value::Rat(self.0)
    }
}

#[derive(Default)]
pub struct QuadBuf(pub Vec<QuadExt>);

impl QuadBuf {
    pub fn new() -> Self {
        QuadBuf(Vec::new())
    }
    pub fn series(&mut self, s: &Series<QuadExt>) {
        self.0.extend_from_slice(s.coeffs());
    }
    pub fn push(&mut self, r: QuadExt) {
        self.0.push(r);
    }
    pub fn done(self) -> Value {
        Value::Quad(self.0)
    }
}

/// A point of evaluation. Unpinned symbols stay symbolic.
#[derive(Clone, Debug)]
pub struct Env {
    pub order: usize,
    pins: [Option<BigRat>; NVARS],
    ctx: STContext,
}

impl Env {
    pub fn symbolic(order: usize) -> Env {
        Env { order, pins: Default::default(), ctx: STContext::symbolic() }
    }

    /// Every symbol pinned to a rational drawn from `[-9,9]\{0}` quotients,
    /// avoiding `t = 0`, `s = 0`, `s^2 + 4t = 0` and `q` in `{0, 1, -1}`.
    pub fn random<G: Rng>(order: usize, rng: &mut G) -> Env {
        let mut pins: [Option<BigRat>; NVARS] = Default::default();
        loop {
            for (i, v) in Var::ALL.iter().enumerate() {
                let mut r = sample(rng);
                while *v == Var::Q && (r.is_one() || (-&r).is_one()) {
                    r = sample(rng);
                }
                pins[i] = Some(r);
            }
            let s = pins[Var::S.index()].clone().unwrap();
            let t = pins[Var::T.index()].clone().unwrap();
            let d = &(&s * &s) + &(&BigRat::from(4) * &t);
            if !d.is_zero() {
                let ctx = STContext::specialized(s, t);
                return Env { order, pins, ctx };
            }
        }
    }

    pub fn is_symbolic(&self) -> bool {
        self.pins.iter().all(Option::is_none)
    }

    /// The value of `v`: its pinned rational, or the symbol itself.
    pub fn val(&self, v: Var) -> RatFunc {
        match &self.pins[v.index()] {
            Some(r) => RatFunc::constant(r.clone()),
            None => RatFunc::var(v),
        }
    }

    /// Always the bare symbol, for operators that act on `v`.
    pub fn sym(&self, v: Var) -> RatFunc {
        RatFunc::var(v)
    }

    /// `(s, t)` context at this point.
    pub fn ctx(&self) -> &STContext {
        &self.ctx
    }

    /// The q-specialization `s = 1 + q`, `t = -q` at this point's `q`.
    pub fn qctx(&self) -> STContext {
        STContext::q_of(&self.val(Var::Q))
    }

    pub fn q(&self) -> RatFunc {
        self.val(Var::Q)
    }

    /// Pinned values, used to specialize extension-valued results afterwards.
    pub fn point(&self) -> Vec<(Var, BigRat)> {
        Var::ALL
            .iter()
            .filter_map(|v| self.pins[v.index()].clone().map(|r| (*v, r)))
            .collect()
    }

    /// The pinned values of `s` and `t` only.
    pub fn st_point(&self) -> Vec<(Var, BigRat)> {
        self.point().into_iter().filter(|(v, _)| matches!(v, Var::S | Var::T)).collect()
    }

    /// `c * e^k`.
    pub fn mono(&self, c: RatFunc, k: usize) -> Series<RatFunc> {
        Series::monomial(c, k, self.order)
    }

    /// The constant series `c`.
    pub fn cst(&self, c: RatFunc) -> Series<RatFunc> {
        Series::constant(c, self.order)
    }

    /// The formal variable `e`.
    pub fn eps(&self) -> Series<RatFunc> {
        Series::var(self.order)
    }
}

fn sample<G: Rng>(rng: &mut G) -> BigRat {
    loop {
        let n: i64 = rng.gen_range(-9..=9);
        let d: i64 = rng.gen_range(-9..=9);
        if n != 0 && d != 0 {
            return BigRat::new(n, d).expect("nonzero denominator");
        }
    }
}

/// Specializes extension values at `point` after the fact.
pub fn specialize(v: &Value, point: &[(Var, BigRat)]) -> Result<Value> {
    Ok(match v {
        Value::Rat(xs) => Value::Rat(xs.iter().map(|x| x.eval_vars(point)).collect::<Result<_>>()?),
        Value::Quad(xs) => Value::Quad(xs.iter().map(|x| x.eval_vars(point)).collect::<Result<_>>()?),
    })
}
