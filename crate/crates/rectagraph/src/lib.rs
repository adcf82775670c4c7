//! File formats, reports, reproduction suites and the command-line front
//! end for `rectagraph-core`.

pub mod checks;
pub mod cli;
pub mod corpus;
pub mod dot;
pub mod error;
pub mod family;
pub mod formats;
pub mod groups;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
pub use rectagraph_core as core;
