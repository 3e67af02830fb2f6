//! Batch front end for the exact gbent toolkit: table-file parsing,
//! analysis commands with structured or plain reports, deterministic
//! constructors, and a self-test suite. All IO lives here; the core
//! crate stays `no_std`.

pub mod commands;
pub mod report;
pub mod selftest;
pub mod table;
