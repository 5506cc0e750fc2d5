//! The case registry.

use stcalc_core::Result;

use crate::cases;
use crate::env::{Env, Value};

/// What a case is expected to do.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    /// The identity holds as stated.
    Holds,
    /// The identity as printed is wrong; the case must find a witness.
    PrintedTypo,
}

/// Which ring the two sides live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingReq {
    RationalFunction,
    QuadraticExtension,
}

pub type Builder = fn(&Env) -> Result<(Value, Value)>;

/// One registered identity.
#[derive(Clone, Copy)]
pub struct TheoremCase {
    pub id: &'static str,
    /// Where the identity comes from, with a short quote.
    pub reference: &'static str,
    pub ring: RingReq,
    pub expect: Expect,
    /// Largest order at which the case runs fully symbolically; above it only
    /// random rational points are used.
    pub symbolic_budget: usize,
    /// Extra explanation printed with the result.
    pub note: &'static str,
    pub build: Builder,
}

impl TheoremCase {
    pub const fn holds(id: &'static str, reference: &'static str, build: Builder) -> Self {
        TheoremCase {
            id,
            reference,
            ring: RingReq::RationalFunction,
            expect: Expect::Holds,
            symbolic_budget: 12,
            note: "",
            build,
        }
    }

    pub const fn typo(id: &'static str, reference: &'static str, note: &'static str, build: Builder) -> Self {
        TheoremCase {
            id,
            reference,
            ring: RingReq::RationalFunction,
            expect: Expect::PrintedTypo,
            symbolic_budget: 12,
            note,
            build,
        }
    }

    pub const fn quad(mut self) -> Self {
        self.ring = RingReq::QuadraticExtension;
        self
    }

    pub const fn budget(mut self, order: usize) -> Self {
        self.symbolic_budget = order;
        self
    }

    pub const fn note(mut self, note: &'static str) -> Self {
        self.note = note;
        self
    }
}

/// Every registered case, sorted by id.
pub fn registry() -> Vec<TheoremCase> {
    let mut all = Vec::new();
    all.extend(cases::intro::cases());
    all.extend(cases::theta::cases());
    all.extend(cases::translation::cases());
    all.extend(cases::trinomial::cases());
    all.extend(cases::rogers::cases());
    all.extend(cases::polytopic::cases());
    all.extend(cases::genfun::cases());
    all.extend(cases::bridge::cases());
    all.sort_by_key(|c| c.id);
    all
}

/// Cases whose id contains `pattern`.
pub fn select(pattern: Option<&str>) -> Vec<TheoremCase> {
    registry()
        .into_iter()
        .filter(|c| pattern.map_or(true, |p| c.id.contains(p)))
        .collect()
}
