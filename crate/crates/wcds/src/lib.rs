//! Standard-library side of the w.c.d.s. toolkit: edge-list files, the
//! parallel oracle driver, verification suites with JSON / Markdown / CSV
//! reports, and the `wcds` command-line tool.

pub mod cli;
pub mod edgelist;
pub mod error;
pub mod parallel;
pub mod random;
pub mod report;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
