//! Exact total distance (Wiener index) and radius computations for small
//! graphs and digraphs, the extremal construction families for minimum and
//! maximum total distance given order and radius, their closed forms, and the
//! exhaustive searches that check them at desk scale.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, timing, thread
//! fan-out and the command line live in the `totdist` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod bits;
pub mod clique;
pub mod constructions;
mod error;
pub mod formulas;
pub mod graph;
pub mod metrics;
pub mod search;

pub use error::Error;
pub use graph::{Digraph, Graph, MAX_ORDER};
pub use metrics::{DistanceMatrix, Wiener, UNREACHABLE};
