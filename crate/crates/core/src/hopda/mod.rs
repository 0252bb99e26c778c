//! Higher-order pushdown stores and automata: runs, configuration graphs,
//! ε-contraction and unfolding of colored graphs.

mod graph;
pub mod machines;
mod pds;
mod spec;

pub use graph::{accepts, config_graph, epsilon_contract, unfold, ColoredGraph, ConfigGraph, RunResult, EPS};
pub use pds::{parse_pds, Npds};
pub use spec::{parse_hopda, HopdaSpec, Op, Rule};
