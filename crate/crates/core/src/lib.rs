//! Fibonacci configurations, their characters, and the partition identities
//! they produce, checked by exact coefficient comparison.

pub mod cli;
pub mod error;
pub mod fibfinite;
pub mod fibinfinite;
pub mod identities;
pub mod partitions;
pub mod qseries;
pub mod voachar;

pub use error::{Error, Result};
