//! Command-line parameters: exact rationals or the keyword `symbolic`.

use std::str::FromStr;

use stcalc_core::exactring::{BigRat, RatFunc, Var};
use stcalc_core::stcore::STContext;

use crate::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq)]
pub enum Param {
    Symbolic,
    Value(BigRat),
}

impl Param {
    pub fn parse(s: &str) -> Result<Param, String> {
        if s.eq_ignore_ascii_case("symbolic") {
            return Ok(Param::Symbolic);
        }
        BigRat::from_str(s).map(Param::Value).map_err(|e| e.to_string())
    }

    pub fn value(&self) -> Option<&BigRat> {
        match self {
            Param::Symbolic => None,
            Param::Value(v) => Some(v),
        }
    }

    /// The value, or the generator `v` when symbolic.
    pub fn as_ratfunc(&self, v: Var) -> RatFunc {
        match self {
            Param::Symbolic => RatFunc::var(v),
            Param::Value(c) => RatFunc::constant(c.clone()),
        }
    }

    /// Integer value, if this is one that fits an `i64`.
    pub fn as_i64(&self) -> Option<i64> {
        let v = self.value()?;
        if !v.is_integer() {
            return None;
        }
        v.to_string().parse().ok()
    }
}

impl std::fmt::Display for Param {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Param::Symbolic => f.write_str("symbolic"),
            Param::Value(v) => write!(f, "{v}"),
        }
    }
}

/// The `(s, t)` pair of a command.
#[derive(Clone, Debug)]
pub struct Point {
    pub s: Param,
    pub t: Param,
}

impl Point {
    /// Assignments for whichever of `s`, `t` are numbers.
    pub fn assignments(&self) -> Vec<(Var, BigRat)> {
        let mut out = Vec::new();
        if let Some(v) = self.s.value() {
            out.push((Var::S, v.clone()));
        }
        if let Some(v) = self.t.value() {
            out.push((Var::T, v.clone()));
        }
        out
    }

    /// A specialized context when both are numbers, else the symbolic one.
    pub fn context(&self) -> STContext {
        match (self.s.value(), self.t.value()) {
            (Some(s), Some(t)) => STContext::specialized(s.clone(), t.clone()),
            _ => STContext::symbolic(),
        }
    }

    /// Evaluates `f`, computing symbolically and substituting when the
    /// specialized computation divides by zero (e.g. `[[3]] = 0` at `(1, -1)`).
    pub fn compute(
        &self,
        ctx: &STContext,
        f: impl Fn(&STContext) -> stcalc_core::Result<RatFunc>,
    ) -> CliResult<RatFunc> {
        let direct = f(ctx);
        let value = match direct {
            Ok(v) if ctx.is_symbolic() => v.eval_vars(&self.assignments())?,
            Ok(v) => v,
            Err(_) if !ctx.is_symbolic() => f(&STContext::symbolic())?.eval_vars(&self.assignments())?,
            Err(e) => return Err(CliError::from(e)),
        };
        Ok(value)
    }
}
