//! File formats, parallel checkers and the command-line driver built on
//! `cliquecover-core`.

pub mod cli;
pub mod formats;
pub mod parallel;
