//! Command-line front end: sweeps, record output and the PMD helper.

pub mod corpus;
pub mod output;
pub mod pmd;
pub mod record;
pub mod verify;
