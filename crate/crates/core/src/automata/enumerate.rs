use std::collections::{BTreeMap, BTreeSet};

use super::{deconvolve, Automaton, LetterTuple, Sym, Word, PAD};
use crate::error::{Error, Result};

/// Size summary of a language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LanguageStats {
    pub empty: bool,
    pub infinite: bool,
    /// Number of accepted tuples when the language is finite.
    pub count: Option<usize>,
}

impl Automaton {
    pub fn is_empty(&self) -> bool {
        !self.coreachable()[self.initial()]
    }

    /// A reachable, co-reachable cycle exists.
    pub fn is_infinite(&self) -> bool {
        let t = self.trim();
        if t.is_empty() {
            return false;
        }
        has_cycle(&t, |_| true)
    }

    pub fn stats(&self) -> LanguageStats {
        let infinite = self.is_infinite();
        LanguageStats {
            empty: self.is_empty(),
            infinite,
            count: if infinite { None } else { Some(self.enumerate(usize::MAX).len()) },
        }
    }

    /// Accepted tuples of exactly `len` letters, in lexicographic letter order.
    pub fn words_of_length(&self, len: usize) -> Vec<Vec<Word>> {
        let n = self.num_states();
        // alive[r][s]: s reaches acceptance in exactly r steps
        let mut alive = vec![(0..n).map(|s| self.is_accepting(s)).collect::<Vec<bool>>()];
        for r in 1..=len {
            let prev = &alive[r - 1];
            let row = (0..n)
                .map(|s| self.transitions(s).iter().any(|(_, t)| prev[*t]))
                .collect();
            alive.push(row);
        }
        let mut out = Vec::new();
        if !alive[len][self.initial()] {
            return out;
        }
        let mut path: Vec<LetterTuple> = Vec::new();
        self.dfs_len(vec![self.initial()], len, &alive, &mut path, &mut out);
        out
    }

    fn dfs_len(
        &self,
        set: Vec<usize>,
        remaining: usize,
        alive: &[Vec<bool>],
        path: &mut Vec<LetterTuple>,
        out: &mut Vec<Vec<Word>>,
    ) {
        if remaining == 0 {
            out.push(deconvolve(path, self.arity()));
            return;
        }
        let mut letters: BTreeSet<&LetterTuple> = BTreeSet::new();
        for &s in &set {
            for (l, t) in self.transitions(s) {
                if alive[remaining - 1][*t] {
                    letters.insert(l);
                }
            }
        }
        for l in letters {
            let mut next: Vec<usize> = set
                .iter()
                .flat_map(|&s| self.transitions(s).iter())
                .filter(|(m, t)| m == l && alive[remaining - 1][*t])
                .map(|&(_, t)| t)
                .collect();
            next.sort_unstable();
            next.dedup();
            path.push(l.clone());
            self.dfs_len(next, remaining - 1, alive, path, out);
            path.pop();
        }
    }

    /// The first `limit` accepted tuples in length-lexicographic order.
    pub fn enumerate(&self, limit: usize) -> Vec<Vec<Word>> {
        let t = self.trim();
        if t.is_empty() || limit == 0 {
            return Vec::new();
        }
        let infinite = t.is_infinite();
        let mut out = Vec::new();
        let mut len = 0;
        loop {
            if !infinite && len >= t.num_states() {
                break;
            }
            for w in t.words_of_length(len) {
                out.push(w);
                if out.len() >= limit {
                    return out;
                }
            }
            len += 1;
        }
        out
    }

    /// All accepted tuples whose convolution has at most `max_len` letters.
    pub fn enumerate_up_to(&self, max_len: usize) -> Vec<Vec<Word>> {
        let t = self.trim();
        if t.is_empty() {
            return Vec::new();
        }
        (0..=max_len).flat_map(|len| t.words_of_length(len)).collect()
    }

    /// For a binary relation: all words `y` of length at most `max_len` such
    /// that the pair with `word` on tape `fixed` and `y` on the other tape is
    /// accepted. Sorted length-lexicographically.
    pub fn section(&self, fixed: usize, word: &[Sym], max_len: usize) -> Result<Vec<Word>> {
        if self.arity() != 2 || fixed > 1 {
            return Err(Error::ArityMismatch("section needs a binary relation".into()));
        }
        let co = self.coreachable();
        let mut found: BTreeSet<(usize, Word)> = BTreeSet::new();
        let mut y = Vec::new();
        self.section_dfs(fixed, word, max_len, &co, vec![self.initial()], 0, false, &mut y, &mut found);
        Ok(found.into_iter().map(|(_, w)| w).collect())
    }

    #[allow(clippy::too_many_arguments)]
    fn section_dfs(
        &self,
        fixed: usize,
        x: &[Sym],
        max_len: usize,
        co: &[bool],
        set: Vec<usize>,
        i: usize,
        y_done: bool,
        y: &mut Word,
        found: &mut BTreeSet<(usize, Word)>,
    ) {
        if i >= x.len() {
            if set.iter().any(|&s| self.is_accepting(s)) {
                found.insert((y.len(), y.clone()));
            }
            if y_done {
                return;
            }
        }
        let xs = x.get(i).copied().unwrap_or(PAD);
        let mut moves: BTreeMap<Sym, Vec<usize>> = BTreeMap::new();
        for &s in &set {
            for (l, t) in self.transitions(s) {
                let syms = l.symbols();
                let c = syms[1 - fixed];
                if syms[fixed] != xs || !co[*t] {
                    continue;
                }
                if c == PAD || (!y_done && y.len() < max_len) {
                    moves.entry(c).or_default().push(*t);
                }
            }
        }
        for (c, mut next) in moves {
            next.sort_unstable();
            next.dedup();
            if next.is_empty() {
                continue;
            }
            if c != PAD {
                y.push(c);
            }
            self.section_dfs(fixed, x, max_len, co, next, i + 1, y_done || c == PAD, y, found);
            if c != PAD {
                y.pop();
            }
        }
    }
}

/// Cycle detection restricted to states satisfying `keep`.
pub(crate) fn has_cycle(a: &Automaton, keep: impl Fn(usize) -> bool) -> bool {
    let n = a.num_states();
    // 0 = unvisited, 1 = on stack, 2 = finished
    let mut color = vec![0u8; n];
    for root in 0..n {
        if color[root] != 0 || !keep(root) {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        color[root] = 1;
        while let Some(&mut (s, ref mut i)) = stack.last_mut() {
            let row = a.transitions(s);
            if *i < row.len() {
                let t = row[*i].1;
                *i += 1;
                if !keep(t) {
                    continue;
                }
                match color[t] {
                    0 => {
                        color[t] = 1;
                        stack.push((t, 0));
                    }
                    1 => return true,
                    _ => {}
                }
            } else {
                color[s] = 2;
                stack.pop();
            }
        }
    }
    false
}
