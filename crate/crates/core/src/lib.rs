//! Graph minors, subgraph containment and the query-complexity models built
//! on them: adversary lower bounds, quantum walk cost plans and a classical
//! reference detector.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod adversary;
pub mod detector;
pub mod error;
pub mod fit;
pub mod graph;
pub mod limits;
pub mod minor_theory;
pub mod walk;

pub use error::GraphError;
pub use graph::Graph;
pub use limits::Limits;
