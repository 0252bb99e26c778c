//! Workbench for automatic structures and ordinal notation systems.
//!
//! * [`automata`]: synchronous multi-tape automata with boolean closure,
//!   projection, minimization and length-lexicographic enumeration.
//! * [`fo`]: automatic presentations and compilation of first-order formulas
//!   (including "there exist infinitely many") to automata.
//! * [`ordinal`]: Cantor normal forms below epsilon-zero, standard fundamental
//!   sequences and the Bachmann property checker.
//! * [`recognition`]: well-order recognition and order-type extraction for
//!   automatic linear orders.
//! * [`fgh`]: the fast-growing hierarchy over pluggable notation systems.
//! * [`pathology`]: Kreisel-style orderings and the inflated `w+1` system.
//! * [`tm`]: Turing machine configuration graphs as automatic relations and
//!   the automatic well-founded relation built from a comparator machine.
//! * [`hopda`]: higher-order pushdown stores, automata and graph operations.

pub mod automata;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod fgh;
pub mod fo;
pub mod hopda;
pub mod ordinal;
pub mod pathology;
pub mod recognition;
pub mod tm;

pub use error::{Error, Result};
