use std::collections::{HashMap, VecDeque};

use super::{minimize, Automaton, LetterTuple, Sym, PAD};
use crate::error::{Error, Result};

/// Pointwise boolean combination used by [`product`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductMode {
    And,
    Or,
    Minus,
}

fn compatible(a: &Automaton, b: &Automaton) -> Result<()> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch(format!(
            "arities {} and {}",
            a.arity(),
            b.arity()
        )));
    }
    if a.alphabet() != b.alphabet() {
        return Err(Error::ArityMismatch("alphabets differ".into()));
    }
    Ok(())
}

pub fn product(a: &Automaton, b: &Automaton, mode: ProductMode) -> Result<Automaton> {
    compatible(a, b)?;
    Ok(match mode {
        ProductMode::And => intersect_nfa(a, b),
        ProductMode::Or => union_nfa(a, b),
        ProductMode::Minus => intersect_nfa(a, &complement(b)),
    })
}

pub fn intersect(a: &Automaton, b: &Automaton) -> Result<Automaton> {
    product(a, b, ProductMode::And)
}

pub fn union(a: &Automaton, b: &Automaton) -> Result<Automaton> {
    product(a, b, ProductMode::Or)
}

fn intersect_nfa(a: &Automaton, b: &Automaton) -> Automaton {
    let bidx = b.letter_index();
    let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut accepting = Vec::new();
    let mut trans: Vec<Vec<(LetterTuple, usize)>> = Vec::new();
    let start = (a.initial(), b.initial());
    ids.insert(start, 0);
    accepting.push(a.is_accepting(start.0) && b.is_accepting(start.1));
    trans.push(Vec::new());
    queue.push_back(start);
    while let Some((p, q)) = queue.pop_front() {
        let id = ids[&(p, q)];
        for (l, pt) in a.transitions(p) {
            let Some(qts) = bidx[q].get(l) else { continue };
            for &qt in qts {
                let key = (*pt, qt);
                let tid = *ids.entry(key).or_insert_with(|| {
                    accepting.push(a.is_accepting(key.0) && b.is_accepting(key.1));
                    trans.push(Vec::new());
                    queue.push_back(key);
                    accepting.len() - 1
                });
                trans[id].push((l.clone(), tid));
            }
        }
    }
    Automaton::from_parts(a.arity(), a.alphabet().to_vec(), 0, accepting, trans)
}

fn union_nfa(a: &Automaton, b: &Automaton) -> Automaton {
    let na = a.num_states();
    let nb = b.num_states();
    let mut accepting = vec![a.is_accepting(a.initial()) || b.is_accepting(b.initial())];
    let mut trans: Vec<Vec<(LetterTuple, usize)>> = vec![Vec::new()];
    for s in 0..na {
        accepting.push(a.is_accepting(s));
        trans.push(a.transitions(s).iter().map(|(l, t)| (l.clone(), t + 1)).collect());
    }
    for s in 0..nb {
        accepting.push(b.is_accepting(s));
        trans.push(b.transitions(s).iter().map(|(l, t)| (l.clone(), t + 1 + na)).collect());
    }
    let mut init: Vec<(LetterTuple, usize)> = a
        .transitions(a.initial())
        .iter()
        .map(|(l, t)| (l.clone(), t + 1))
        .collect();
    init.extend(b.transitions(b.initial()).iter().map(|(l, t)| (l.clone(), t + 1 + na)));
    trans[0] = init;
    Automaton::from_parts(a.arity(), a.alphabet().to_vec(), 0, accepting, trans).trim_reachable()
}

/// All letters legal after the tapes in `mask` have been padded.
pub(crate) fn letters_after(arity: usize, nsym: usize, mask: u64) -> Vec<LetterTuple> {
    let choices: Vec<Vec<Sym>> = (0..arity)
        .map(|i| {
            if mask & (1 << i) != 0 {
                vec![PAD]
            } else {
                (0..nsym as Sym).chain(std::iter::once(PAD)).collect()
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![0 as Sym; arity];
    fn rec(i: usize, choices: &[Vec<Sym>], cur: &mut Vec<Sym>, out: &mut Vec<LetterTuple>) {
        if i == choices.len() {
            if cur.iter().any(|&s| s != PAD) {
                out.push(LetterTuple::new_unchecked(cur.clone().into()));
            }
            return;
        }
        for &s in &choices[i] {
            cur[i] = s;
            rec(i + 1, choices, cur, out);
        }
    }
    rec(0, &choices, &mut cur, &mut out);
    out
}

/// Complement relative to all well-formed convolutions of `a.arity()`.
pub fn complement(a: &Automaton) -> Automaton {
    complement_capped(a, usize::MAX).expect("uncapped complement")
}

pub(crate) fn complement_capped(a: &Automaton, cap: usize) -> Result<Automaton> {
    let idx = a.letter_index();
    let k = a.arity();
    let nsym = a.alphabet().len();
    let mut letter_cache: HashMap<u64, Vec<LetterTuple>> = HashMap::new();
    let mut ids: HashMap<(Vec<usize>, u64), usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut accepting = Vec::new();
    let mut trans: Vec<Vec<(LetterTuple, usize)>> = Vec::new();
    let start = (vec![a.initial()], 0u64);
    accepting.push(!a.is_accepting(a.initial()));
    trans.push(Vec::new());
    ids.insert(start.clone(), 0);
    queue.push_back(start);
    while let Some((set, mask)) = queue.pop_front() {
        let id = ids[&(set.clone(), mask)];
        let letters = letter_cache
            .entry(mask)
            .or_insert_with(|| letters_after(k, nsym, mask))
            .clone();
        for l in letters {
            let mut next: Vec<usize> = set
                .iter()
                .filter_map(|&q| idx[q].get(&l))
                .flatten()
                .copied()
                .collect();
            next.sort_unstable();
            next.dedup();
            let key = (next, mask | l.pad_mask());
            let tid = match ids.get(&key) {
                Some(&t) => t,
                None => {
                    if accepting.len() >= cap {
                        return Err(Error::StateBudgetExceeded(cap));
                    }
                    accepting.push(!key.0.iter().any(|&q| a.is_accepting(q)));
                    trans.push(Vec::new());
                    ids.insert(key.clone(), accepting.len() - 1);
                    queue.push_back(key);
                    accepting.len() - 1
                }
            };
            trans[id].push((l, tid));
        }
    }
    Ok(Automaton::from_parts(k, a.alphabet().to_vec(), 0, accepting, trans))
}

/// Existential projection removing `tape`.
///
/// Letters that become all-pad after removal only occur in the tail of a
/// convolution; they are contracted into acceptance.
pub fn project(a: &Automaton, tape: usize) -> Result<Automaton> {
    if a.arity() < 2 {
        return Err(Error::CannotProject);
    }
    if tape >= a.arity() {
        return Err(Error::ArityMismatch(format!("tape {tape} out of range")));
    }
    let n = a.num_states();
    let mut tail_rev: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut trans: Vec<Vec<(LetterTuple, usize)>> = vec![Vec::new(); n];
    for s in 0..n {
        for (l, t) in a.transitions(s) {
            let mut syms: Vec<Sym> = l.symbols().to_vec();
            syms.remove(tape);
            if syms.iter().all(|&x| x == PAD) {
                tail_rev[*t].push(s);
            } else {
                trans[s].push((LetterTuple::new_unchecked(syms.into()), *t));
            }
        }
    }
    let mut accepting: Vec<bool> = (0..n).map(|s| a.is_accepting(s)).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&s| accepting[s]).collect();
    while let Some(s) = stack.pop() {
        for &p in &tail_rev[s] {
            if !accepting[p] {
                accepting[p] = true;
                stack.push(p);
            }
        }
    }
    Ok(Automaton::from_parts(a.arity() - 1, a.alphabet().to_vec(), a.initial(), accepting, trans).trim())
}

/// Intersection followed by minimization, failing past `cap` states.
#[allow(dead_code)]
pub(crate) fn and_min(a: &Automaton, b: &Automaton, cap: usize) -> Result<Automaton> {
    let p = intersect(a, b)?;
    if p.num_states() > cap {
        return Err(Error::StateBudgetExceeded(cap));
    }
    minimize::minimize_capped(&p, cap)
}
