//! Bundled machines.

use std::collections::BTreeMap;

use super::spec::{Move, TmSpec};
use crate::automata::{minimize, Automaton, PAD};
use crate::pathology::{kreisel_as_automatic, PiPredicate};
use crate::Result;

/// Walks right over `1`s and appends one more.
pub fn unary_increment() -> Result<TmSpec> {
    let mut tm = TmSpec::new("unary-increment", 1, "_")?;
    tm.add_state("q0", false)?;
    tm.add_state("qa", true)?;
    tm.add_transition("q0", &["1"], "q0", &[("1", Move::R)])?;
    tm.add_transition("q0", &["_"], "qa", &[("1", Move::R)])?;
    Ok(tm)
}

/// Copies the binary word on tape 1 onto tape 2.
pub fn binary_copy() -> Result<TmSpec> {
    let mut tm = TmSpec::new("binary-copy", 2, "_")?;
    tm.add_state("q0", false)?;
    tm.add_state("qa", true)?;
    for a in ["0", "1"] {
        tm.add_transition("q0", &[a, "_"], "q0", &[(a, Move::R), (a, Move::R)])?;
    }
    tm.add_transition("q0", &["_", "_"], "qa", &[("_", Move::S), ("_", Move::S)])?;
    Ok(tm)
}

/// Name of the input cell holding the letters `a` of x and `b` of y, with
/// `-` past the end of a word.
pub fn pair_symbol(a: Option<char>, b: Option<char>) -> String {
    format!("{}{}", a.unwrap_or('-'), b.unwrap_or('-'))
}

pub const ACCEPT: &str = "acc";
pub const REJECT: &str = "rej";

/// A reversible one-pass comparator for the Kreisel order of a regular
/// `pi0`. Input cells hold pairs of letters of `x` and `y`. The machine runs
/// the minimal automaton of the order left to right; each cell is rewritten
/// with a mark telling which state the automaton was in, whenever several
/// states lead to the same successor on that letter. At the first blank it
/// writes an end mark and halts in `acc` or `rej`.
pub fn kreisel_comparator(pi0: &PiPredicate) -> Result<TmSpec> {
    let order = kreisel_as_automatic(pi0)?;
    let dfa = minimize(order.less());
    comparator_from_dfa(&format!("kreisel-comparator[{}]", pi0.description), &dfa)
}

fn letter_name(a: &Automaton, s: u16) -> Option<char> {
    (s != PAD).then(|| a.symbol_name(s).chars().next().expect("single-character symbol"))
}

pub(crate) fn comparator_from_dfa(name: &str, dfa: &Automaton) -> Result<TmSpec> {
    let mut tm = TmSpec::new(name, 1, "_")?;
    let n = dfa.num_states();
    for q in 0..n {
        tm.add_state(&format!("s{q}"), false)?;
    }
    tm.add_state(ACCEPT, true)?;
    tm.add_state(REJECT, false)?;
    tm.initial = dfa.initial();
    // (target, written base) -> number of transitions so far
    let mut used: BTreeMap<(String, String), usize> = BTreeMap::new();
    let mut mark = |target: &str, base: &str| {
        let k = used.entry((target.to_string(), base.to_string())).or_insert(0);
        *k += 1;
        if *k == 1 {
            base.to_string()
        } else {
            format!("{base}.{}", *k - 1)
        }
    };
    let pairs: Vec<(Option<char>, Option<char>)> = {
        let bits = [Some('0'), Some('1'), None];
        bits.iter()
            .flat_map(|&a| bits.iter().map(move |&b| (a, b)))
            .filter(|p| *p != (None, None))
            .collect()
    };
    for q in 0..n {
        let from = format!("s{q}");
        for &(a, b) in &pairs {
            let base = pair_symbol(a, b);
            let next = dfa.transitions(q).iter().find(|(l, _)| {
                let s = l.symbols();
                letter_name(dfa, s[0]) == a && letter_name(dfa, s[1]) == b
            });
            match next {
                Some((_, to)) => {
                    let target = format!("s{to}");
                    let w = mark(&target, &base);
                    tm.add_transition(&from, &[&base], &target, &[(&w, Move::R)])?;
                }
                None => {
                    let w = mark(REJECT, &base);
                    tm.add_transition(&from, &[&base], REJECT, &[(&w, Move::S)])?;
                }
            }
        }
        let target = if dfa.is_accepting(q) { ACCEPT } else { REJECT };
        let w = mark(target, "end");
        tm.add_transition(&from, &["_"], target, &[(&w, Move::S)])?;
    }
    Ok(tm)
}

/// Tape content for input `(x, y)`.
pub fn comparator_input(tm: &TmSpec, x: &str, y: &str) -> Result<Vec<usize>> {
    let (xs, ys): (Vec<char>, Vec<char>) = (x.chars().collect(), y.chars().collect());
    (0..xs.len().max(ys.len()))
        .map(|i| tm.symbol(&pair_symbol(xs.get(i).copied(), ys.get(i).copied())))
        .collect()
}
