//! Command-line front end for `greyrank-core`: dataset files, bundled
//! fixtures, report rendering and a threaded executor for the LP solves.

pub mod ahp_io;
pub mod cli;
pub mod dataset;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod lp_io;
pub mod report;

pub use dataset::{Cell, Dataset, DatasetError};
pub use error::CliError;
