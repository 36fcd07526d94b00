//! File formats, report records and the `minorlab` command-line driver on top
//! of `minorlab-core`.

pub mod builtin;
pub mod cli;
pub mod format;
pub mod report;
