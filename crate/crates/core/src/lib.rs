//! Exact workbench for the letter method on hypergraph and 0-1 matrix
//! Turán problems.

pub mod arith;
pub mod bounds;
pub mod cli;
pub mod drc;
pub mod extremal;
pub mod hypercore;
pub mod lettering;
pub mod matrix01;
pub mod search;
