//! Pathological well-orderings: Kreisel's ordering, its slow-inverse variant
//! and an `w+1` notation system whose `F_w` outgrows a given function.

mod fexpr;
mod kreisel;
mod omega1;

pub use fexpr::{FExpr, FSpec};
pub use kreisel::{
    binary_alphabet, descending_region, kreisel_as_automatic, nat_to_word, word_to_nat, KreiselOrder, PiKind,
    PiPredicate,
};
pub use omega1::{omega_plus_one_system, OmegaPlusOneSystem, P1};
