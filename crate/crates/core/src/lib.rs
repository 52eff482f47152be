//! Exact solving of Cops and Robbers and its attacking-robber variant on
//! small graphs, together with the graph invariants, generators and
//! executable checks that surround it.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports,
//! timing and the command line live in the `strikeback` crate.

#![no_std]

extern crate alloc;

pub mod enumerate;
pub mod error;
pub mod game;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod hypergraph;
pub mod invariants;

pub use error::{GameError, Graph6Error, GraphError};
pub use game::{GameState, Ruleset, Side, Variant};
pub use graph::Graph;
pub use hypergraph::Hypergraph;
