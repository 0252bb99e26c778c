use std::collections::{BTreeMap, HashMap, VecDeque};

use super::{Automaton, LetterTuple};
use crate::error::{Error, Result};

/// Subset construction over the letters that actually occur. The result is a
/// partial DFA; missing letters go to an implicit rejecting sink.
pub fn determinize(a: &Automaton) -> Automaton {
    determinize_capped(a, usize::MAX).expect("uncapped determinization")
}

pub(crate) fn determinize_capped(a: &Automaton, cap: usize) -> Result<Automaton> {
    let a = a.trim();
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut accepting = Vec::new();
    let mut trans: Vec<Vec<(LetterTuple, usize)>> = Vec::new();
    let start = vec![a.initial()];
    ids.insert(start.clone(), 0);
    accepting.push(a.is_accepting(a.initial()));
    trans.push(Vec::new());
    queue.push_back(start);
    while let Some(set) = queue.pop_front() {
        let id = ids[&set];
        let mut moves: BTreeMap<&LetterTuple, Vec<usize>> = BTreeMap::new();
        for &q in &set {
            for (l, t) in a.transitions(q) {
                moves.entry(l).or_default().push(*t);
            }
        }
        for (l, mut next) in moves {
            next.sort_unstable();
            next.dedup();
            let tid = match ids.get(&next) {
                Some(&t) => t,
                None => {
                    if accepting.len() >= cap {
                        return Err(Error::StateBudgetExceeded(cap));
                    }
                    accepting.push(next.iter().any(|&q| a.is_accepting(q)));
                    trans.push(Vec::new());
                    ids.insert(next.clone(), accepting.len() - 1);
                    queue.push_back(next);
                    accepting.len() - 1
                }
            };
            trans[id].push((l.clone(), tid));
        }
    }
    Ok(Automaton::from_parts(a.arity(), a.alphabet().to_vec(), 0, accepting, trans))
}

/// Minimal trimmed deterministic automaton for the same language.
pub fn minimize(a: &Automaton) -> Automaton {
    minimize_capped(a, usize::MAX).expect("uncapped minimization")
}

pub(crate) fn minimize_capped(a: &Automaton, cap: usize) -> Result<Automaton> {
    let d = determinize_capped(a, cap)?.trim();
    let n = d.num_states();
    if n == 0 {
        return Ok(d);
    }
    // Moore refinement; absent letters lead to the implicit dead class.
    let mut class: Vec<usize> = (0..n).map(|s| usize::from(d.is_accepting(s))).collect();
    let mut count = {
        let mut c = class.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let mut sig_ids: HashMap<(usize, Vec<(&LetterTuple, usize)>), usize> = HashMap::new();
        let mut next = vec![0; n];
        for s in 0..n {
            let mut sig: Vec<(&LetterTuple, usize)> =
                d.transitions(s).iter().map(|(l, t)| (l, class[*t])).collect();
            sig.sort();
            let len = sig_ids.len();
            next[s] = *sig_ids.entry((class[s], sig)).or_insert(len);
        }
        let new_count = sig_ids.len();
        class = next;
        if new_count == count {
            break;
        }
        count = new_count;
    }
    // renumber with the initial class first, then by first occurrence in BFS order
    let mut order = vec![usize::MAX; count];
    let mut next_id = 0;
    let mut queue = VecDeque::from([d.initial()]);
    let mut visited = vec![false; n];
    visited[d.initial()] = true;
    while let Some(s) = queue.pop_front() {
        if order[class[s]] == usize::MAX {
            order[class[s]] = next_id;
            next_id += 1;
        }
        for (_, t) in d.transitions(s) {
            if !visited[*t] {
                visited[*t] = true;
                queue.push_back(*t);
            }
        }
    }
    let mut accepting = vec![false; next_id];
    let mut trans: Vec<Vec<(LetterTuple, usize)>> = vec![Vec::new(); next_id];
    let mut done = vec![false; next_id];
    for s in 0..n {
        let c = order[class[s]];
        if done[c] {
            continue;
        }
        done[c] = true;
        accepting[c] = d.is_accepting(s);
        trans[c] = d
            .transitions(s)
            .iter()
            .map(|(l, t)| (l.clone(), order[class[*t]]))
            .collect();
    }
    Ok(Automaton::from_parts(d.arity(), d.alphabet().to_vec(), 0, accepting, trans))
}
