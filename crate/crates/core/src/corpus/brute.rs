//! Brute-force evaluation of formulas on a finite fragment of a structure.

use std::collections::{HashMap, HashSet};

use crate::automata::Word;
use crate::fo::{Formula, Structure};

/// The domain words of length at most `max_len`, with every relation
/// tabulated on them. Quantifiers range over the fragment only; "infinitely
/// many" is read as "some witness of length at least `max_len - 1`".
pub struct Fragment {
    pub max_len: usize,
    pub words: Vec<Word>,
    index: HashMap<Word, usize>,
    rels: HashMap<String, HashSet<Vec<usize>>>,
}

impl Fragment {
    pub fn new(s: &Structure, max_len: usize) -> Fragment {
        let words: Vec<Word> = s
            .domain()
            .enumerate_up_to(max_len)
            .into_iter()
            .map(|mut t| t.remove(0))
            .collect();
        let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let rels = s
            .relations()
            .map(|(name, a)| {
                let tuples = a
                    .enumerate_up_to(max_len)
                    .into_iter()
                    .filter_map(|t| t.iter().map(|w| index.get(w).copied()).collect::<Option<Vec<usize>>>())
                    .collect();
                (name.to_string(), tuples)
            })
            .collect();
        Fragment {
            max_len,
            words,
            index,
            rels,
        }
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    fn llex_lt(&self, i: usize, j: usize) -> bool {
        let (x, y) = (&self.words[i], &self.words[j]);
        (x.len(), x) < (y.len(), y)
    }

    /// Evaluates `f` with free variables bound to fragment positions.
    pub fn eval(&self, f: &Formula, env: &mut HashMap<String, usize>) -> bool {
        match f {
            Formula::True => true,
            Formula::False => false,
            Formula::Rel(r, args) => {
                let t: Vec<usize> = args.iter().map(|a| env[a]).collect();
                self.rels.get(r).is_some_and(|set| set.contains(&t))
            }
            Formula::Eq(x, y) => env[x] == env[y],
            Formula::Llex(x, y) => self.llex_lt(env[x], env[y]),
            Formula::Not(g) => !self.eval(g, env),
            Formula::And(gs) => gs.iter().all(|g| self.eval(g, env)),
            Formula::Or(gs) => gs.iter().any(|g| self.eval(g, env)),
            Formula::Exists(x, g) | Formula::Forall(x, g) | Formula::ExistsInf(x, g) => {
                let saved = env.get(x).copied();
                let long = self.max_len.saturating_sub(1);
                let hit = |i: usize, env: &mut HashMap<String, usize>| {
                    env.insert(x.clone(), i);
                    self.eval(g, env)
                };
                let r = match f {
                    Formula::Exists(..) => (0..self.words.len()).any(|i| hit(i, env)),
                    Formula::Forall(..) => (0..self.words.len()).all(|i| hit(i, env)),
                    _ => (0..self.words.len()).any(|i| self.words[i].len() >= long && hit(i, env)),
                };
                match saved {
                    Some(v) => env.insert(x.clone(), v),
                    None => env.remove(x),
                };
                r
            }
        }
    }
}
