//! Estrada index of bipartite graphs: spectra, exact closed-walk counts,
//! extremal families and exhaustive verification of maximizers at small order.

pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod quartic;
pub mod report;
pub mod search;
pub mod spectral;
pub mod walks;

pub use error::{Error, Result};
pub use graph::{find_bipartition, is_bipartite, Bipartition, Graph, MAX_ORDER};
pub use graph6::{emit_graph6, parse_graph6};
