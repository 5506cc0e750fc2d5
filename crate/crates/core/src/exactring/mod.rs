//! Exact arithmetic tower: rationals, polynomials in a fixed set of symbols,
//! rational functions, and the quadratic extension carrying `phi` and `phi'`.

mod mpoly;
mod quadext;
mod rational;
mod ratfunc;
mod ring;
mod var;

pub use mpoly::MPoly;
pub use quadext::{disc, phi, phi_prime, ExtValue, QuadExt};
pub use rational::BigRat;
pub use ratfunc::RatFunc;
pub use ring::{Ring, RingTag};
pub use var::{Monomial, Var, NVARS};
