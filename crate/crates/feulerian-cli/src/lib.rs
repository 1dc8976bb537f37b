//! Reporting and verification-suite plumbing shared by the `feulerian`
//! binary and the acceptance test target.

pub mod report;
pub mod suite;
