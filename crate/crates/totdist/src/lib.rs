//! Codecs, reports, verification suites and the command line for
//! [`totdist_core`].

pub mod cli;
pub mod codec;
pub mod parallel;
pub mod report;
pub mod verify;

pub use codec::CodecError;
