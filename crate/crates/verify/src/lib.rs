//! Registry of identities and a runner that checks each one as an exact
//! equality of truncated series, symbolically and at random rational points.

pub mod cases;
pub mod env;
pub mod registry;
pub mod report;
mod runner;

pub use registry::{registry, select, Expect, RingReq, TheoremCase};
pub use report::{CaseReport, Status, VerifyReport, Witness};
pub use runner::{compare_series, compare_values, run_all, run_with, Divergence, Injection, RunConfig};
