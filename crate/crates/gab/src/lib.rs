//! Std companion to `gabidulin-core`: code-spec files, CSV reports, parallel scans, the
//! acceptance criteria and the `gab` command line.

pub mod cli;
pub mod error;
pub mod parallel;
pub mod parse;
pub mod report;
pub mod selftest;
pub mod specfile;

pub use error::{Error, Result};
