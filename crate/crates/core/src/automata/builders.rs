//! Small stock automata used throughout the workbench.

use super::{Automaton, LetterTuple, Sym, PAD};
use crate::error::Result;

impl Automaton {
    /// Builds an automaton from token-level transitions. `#` denotes pad.
    pub fn from_table(
        arity: usize,
        alphabet: Vec<String>,
        states: usize,
        initial: usize,
        accepting: &[usize],
        trans: &[(usize, &[&str], usize)],
    ) -> Result<Automaton> {
        let mut a = Automaton::new(arity, alphabet)?;
        for _ in 1..states {
            a.add_state(false);
        }
        a.set_initial(initial);
        for &s in accepting {
            a.set_accepting(s, true);
        }
        for (from, syms, to) in trans {
            let ids: Vec<Sym> = syms.iter().map(|s| a.symbol(s)).collect::<Result<_>>()?;
            a.add_transition(*from, LetterTuple::new(ids)?, *to)?;
        }
        a.check_padding()?;
        Ok(a)
    }
}

/// Every word over the alphabet (arity 1).
pub fn all_words(alphabet: Vec<String>) -> Result<Automaton> {
    Automaton::universal(1, alphabet)
}

/// Words of length at most `n` (arity 1).
pub fn bounded_length(alphabet: Vec<String>, n: usize) -> Result<Automaton> {
    let mut a = Automaton::new(1, alphabet)?;
    a.set_accepting(0, true);
    let nsym = a.alphabet().len() as Sym;
    let mut prev = 0;
    for _ in 0..n {
        let s = a.add_state(true);
        for x in 0..nsym {
            a.push_transition(prev, LetterTuple::new_unchecked(vec![x].into()), s);
        }
        prev = s;
    }
    Ok(a)
}

/// Words over the listed symbols only (arity 1).
pub fn words_over(alphabet: Vec<String>, symbols: &[&str]) -> Result<Automaton> {
    let mut a = Automaton::new(1, alphabet)?;
    a.set_accepting(0, true);
    for s in symbols {
        let x = a.symbol(s)?;
        a.add_transition(0, LetterTuple::new(vec![x])?, 0)?;
    }
    Ok(a)
}

/// The single word `w` (arity 1).
pub fn singleton(alphabet: Vec<String>, w: &[Sym]) -> Result<Automaton> {
    let mut a = Automaton::new(1, alphabet)?;
    let mut prev = 0;
    for &x in w {
        let s = a.add_state(false);
        a.add_transition(prev, LetterTuple::new(vec![x])?, s)?;
        prev = s;
    }
    a.set_accepting(prev, true);
    Ok(a)
}

/// `{ conv(w, w) }` over the alphabet.
pub fn equality(alphabet: Vec<String>) -> Result<Automaton> {
    let mut a = Automaton::new(2, alphabet)?;
    a.set_accepting(0, true);
    for x in 0..a.alphabet().len() as Sym {
        a.push_transition(0, LetterTuple::new_unchecked(vec![x, x].into()), 0);
    }
    Ok(a)
}

/// Strict length-lexicographic order: shorter first, then by the alphabet's
/// declared symbol order.
pub fn llex(alphabet: Vec<String>) -> Result<Automaton> {
    let mut a = Automaton::new(2, alphabet)?;
    // 0: equal so far, 1: x smaller at first difference, 2: x larger, 3: x ended first
    let lt = a.add_state(true);
    let gt = a.add_state(false);
    let short = a.add_state(true);
    let n = a.alphabet().len() as Sym;
    let l = |x: Sym, y: Sym| LetterTuple::new_unchecked(vec![x, y].into());
    for x in 0..n {
        for y in 0..n {
            let from_eq = match x.cmp(&y) {
                std::cmp::Ordering::Less => lt,
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Greater => gt,
            };
            a.push_transition(0, l(x, y), from_eq);
            a.push_transition(lt, l(x, y), lt);
            a.push_transition(gt, l(x, y), gt);
        }
        for s in [0, lt, gt, short] {
            a.push_transition(s, l(PAD, x), short);
        }
    }
    Ok(a)
}
