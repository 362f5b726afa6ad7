//! File formats, seeded random fields and the command-line front end for
//! [`fracfield_core`].

#![forbid(unsafe_code)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod config;
mod error;
pub mod io;
pub mod random;
pub mod suites;

pub use error::{CliError, Result};
