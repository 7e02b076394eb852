//! Command implementations behind the `subcount` binary.
//!
//! Every command produces an [`Outcome`]: a machine-readable
//! [`OutputRecord`], its human-readable rendering, and the process exit code.

pub mod commands;
pub mod record;
pub mod verify;

pub use commands::{Format, Outcome, Via};
pub use record::OutputRecord;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const INVALID_INPUT: i32 = 2;
    pub const VERIFICATION_FAILED: i32 = 3;
}
