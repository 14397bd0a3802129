//! Verification harness: checks of the identities and inequalities among
//! the invariants over a fixed corpus and seeded random instances, with a
//! report per check.

pub mod checks;
pub mod corpus;
pub mod generator;
pub mod report;
pub mod scans;
pub mod suite;

pub use generator::{Instance, InstanceClass, InstanceGenerator};
pub use report::{CheckKind, Outcome, Summary, VerificationReport};
pub use suite::{run_suite, Suite, SuiteConfig};
