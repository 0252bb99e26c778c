//! Turing machine configuration graphs as automatic relations, and the
//! automatic well-founded relation built from a reversible Kreisel
//! comparator.

mod config;
mod graph;
pub mod machines;
mod rpi;
mod spec;

pub use config::{run, Configuration, Rendered, Tape};
pub use graph::{domain_automaton, step_relation_automaton, Column, ColumnAlphabet};
pub use rpi::{bounded_wf_check, build_rpi, RpiStructure, WfReport, WfVerdict};
pub use spec::{parse_tm, Move, TmSpec, Transition, RESERVED};

#[cfg(test)]
mod tests;
