//! Std companion to `rookbruhat-core`: element files, diagram export and
//! import, the parallel verification campaign, and the command line.

pub mod cli;
pub mod error;
pub mod export;
pub mod files;
pub mod hasse;
pub mod verify;

pub use error::{Error, Result};
pub use verify::{verify, Mode, VerificationReport};
