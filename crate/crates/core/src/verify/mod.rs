//! Verification harness: report types and the identity suites.

mod methods;
mod report;
mod suites;

pub use methods::Method;
pub use report::{Entry, ParamValue, Params, Status, Summary, Verdict, VerificationReport};
pub use suites::{run_suite, Suite, DEFAULT_MAX_N};
