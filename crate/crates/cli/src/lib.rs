//! IO companion to `pcomp-core`: text formats, reports, wall-clock
//! drivers, and the verification suites behind `pcomp verify-paper`.

pub mod driver;
pub mod format;
pub mod report;
pub mod suites;
