//! Exact kernel for (s,t)-deformed calculus.

pub mod deformed;
pub mod error;
pub mod exactring;
pub mod pseries;
pub mod qrs;
pub mod stcore;

pub use error::{Error, Result};
