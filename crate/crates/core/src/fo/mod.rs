//! First-order logic over automatic structures.
//!
//! Formulas are compiled bottom-up into multi-tape automata whose tapes are
//! the free variables in sorted order. Every intermediate result is
//! intersected with the matching power of the domain and minimized, so
//! negation stays relative to the structure. Besides the usual quantifiers the
//! compiler supports "there exist infinitely many".

mod compile;
mod formula;
pub mod manifest;
mod sexp;
mod structure;

pub use compile::{Compiled, DEFAULT_STATE_BUDGET};
pub use formula::*;
pub use sexp::parse_formula;
pub use structure::Structure;

use crate::automata::{Automaton, Word};
use crate::error::{Error, Result};

/// Compiles `f` with the default state budget.
pub fn compile(s: &Structure, f: &Formula) -> Result<Compiled> {
    compile_with_budget(s, f, DEFAULT_STATE_BUDGET)
}

/// Compiles `f`, failing once an intermediate automaton exceeds `budget` states.
pub fn compile_with_budget(s: &Structure, f: &Formula, budget: usize) -> Result<Compiled> {
    compile::Compiler::new(s, budget).compile_top(f)
}

pub fn eval_sentence(s: &Structure, f: &Formula) -> Result<bool> {
    let free: Vec<String> = f.free_vars().into_iter().collect();
    if !free.is_empty() {
        return Err(Error::NotASentence(free));
    }
    Ok(compile(s, f)?.truth().expect("sentence"))
}

/// The subset of the domain defined by a formula with one free variable.
pub fn define_set(s: &Structure, f: &Formula) -> Result<Automaton> {
    let free: Vec<String> = f.free_vars().into_iter().collect();
    if free.len() != 1 {
        return Err(Error::NotUnary(free));
    }
    Ok(compile(s, f)?.automaton)
}

/// Whether `f` holds under an assignment of words to its free variables.
pub fn holds(s: &Structure, f: &Formula, assignment: &[(&str, Word)]) -> Result<bool> {
    let c = compile(s, f)?;
    if let Some(t) = c.truth() {
        return Ok(t);
    }
    let words: Vec<Word> = c
        .vars
        .iter()
        .map(|v| {
            assignment
                .iter()
                .find(|(name, _)| name == v)
                .map(|(_, w)| w.clone())
                .ok_or_else(|| Error::NotASentence(vec![v.clone()]))
        })
        .collect::<Result<_>>()?;
    c.automaton.accepts(&words)
}

#[cfg(test)]
mod tests;
