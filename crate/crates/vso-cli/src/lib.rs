//! Benchmark harness for the VSO and SAHC engines: suite scheduling,
//! comparison against embedded published results, and report/trace
//! emission. The `vso` binary is a thin wrapper over these modules.

pub mod reference;
pub mod report;
pub mod suite;
