//! Core algorithms for spectral extremal graph batteries.
//!
//! The crate is `no_std` (alloc only) and fully deterministic: graph
//! construction, canonical labeling, certified spectral radius enclosures,
//! walk-series solvers, exact subgraph counting, and the quantitative
//! perturbation checks evaluated by the verification harness.
//!
//! Companion IO, file formats, and the CLI live in the `specsat` crate.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod bounds;
pub mod canon;
pub mod counting;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod spectral;

pub use error::Error;
pub use graph::Graph;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
