//! Synchronous multi-tape automata over padded convolutions.
//!
//! A tuple of words `(w_1, ..., w_k)` is read as a single word over letter
//! tuples: position `j` carries the `j`-th symbol of every `w_i`, and shorter
//! words are padded on the right with the reserved symbol `#`. Every automaton
//! here only ever accepts such well-formed convolutions; the padding invariant
//! (once a tape reads `#` it keeps reading `#`) holds on every path from the
//! initial state and is re-checked by [`Automaton::check_padding`].
//!
//! Automata are plain nondeterministic transition tables. Operations that
//! need determinism (complement, minimization) determinize internally.

pub mod builders;
pub(crate) mod boolean;
mod enumerate;
pub(crate) mod minimize;
pub mod text;

pub use boolean::{complement, intersect, product, project, union, ProductMode};
pub use enumerate::LanguageStats;
pub use minimize::{determinize, minimize};

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol in an automaton's alphabet.
pub type Sym = u16;

/// The reserved pad symbol.
pub const PAD: Sym = Sym::MAX;

/// Textual form of [`PAD`].
pub const PAD_STR: &str = "#";

/// A word as a sequence of alphabet indices.
pub type Word = Vec<Sym>;

/// One column of a convolution: a symbol (or pad) per tape.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LetterTuple(Box<[Sym]>);

impl LetterTuple {
    pub fn new(symbols: impl Into<Box<[Sym]>>) -> Result<Self> {
        let symbols = symbols.into();
        if symbols.is_empty() {
            return Err(Error::ArityMismatch("empty letter tuple".into()));
        }
        if symbols.iter().all(|&s| s == PAD) {
            return Err(Error::Padding("letter consisting only of pad".into()));
        }
        Ok(LetterTuple(symbols))
    }

    pub(crate) fn new_unchecked(symbols: Box<[Sym]>) -> Self {
        debug_assert!(!symbols.is_empty() && symbols.iter().any(|&s| s != PAD));
        LetterTuple(symbols)
    }

    pub fn symbols(&self) -> &[Sym] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, tape: usize) -> Sym {
        self.0[tape]
    }

    /// Bit mask of the tapes reading pad.
    pub fn pad_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == PAD)
            .fold(0, |m, (i, _)| m | (1 << i))
    }
}

/// Convolution of `k` words: `max |w_i|` letters, right-padded with [`PAD`].
pub fn convolve(words: &[Word]) -> Result<Vec<LetterTuple>> {
    if words.is_empty() {
        return Err(Error::ArityMismatch("convolution of zero words".into()));
    }
    if words.iter().any(|w| w.contains(&PAD)) {
        return Err(Error::InvalidSymbol(PAD_STR.into()));
    }
    let len = words.iter().map(Vec::len).max().unwrap_or(0);
    Ok((0..len)
        .map(|j| {
            LetterTuple::new_unchecked(
                words
                    .iter()
                    .map(|w| w.get(j).copied().unwrap_or(PAD))
                    .collect(),
            )
        })
        .collect())
}

/// Splits a convolution back into its component words.
pub fn deconvolve(letters: &[LetterTuple], arity: usize) -> Vec<Word> {
    let mut words = vec![Vec::new(); arity];
    for l in letters {
        for (i, w) in words.iter_mut().enumerate() {
            if l.get(i) != PAD {
                w.push(l.get(i));
            }
        }
    }
    words
}

/// Nondeterministic synchronous `arity`-tape automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    arity: usize,
    alphabet: Vec<String>,
    initial: usize,
    accepting: Vec<bool>,
    trans: Vec<Vec<(LetterTuple, usize)>>,
}

impl Automaton {
    /// A one-state automaton with the empty language.
    pub fn new(arity: usize, alphabet: Vec<String>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ArityMismatch("arity must be positive".into()));
        }
        let mut seen = HashSet::new();
        for s in &alphabet {
            if s == PAD_STR || s.is_empty() || s.contains(|c: char| c.is_whitespace() || c == ',' || c == '(' || c == ')') {
                return Err(Error::InvalidSymbol(s.clone()));
            }
            if !seen.insert(s) {
                return Err(Error::InvalidSymbol(format!("duplicate symbol {s}")));
            }
        }
        if alphabet.len() >= PAD as usize {
            return Err(Error::InvalidSymbol("alphabet too large".into()));
        }
        Ok(Automaton {
            arity,
            alphabet,
            initial: 0,
            accepting: vec![false],
            trans: vec![Vec::new()],
        })
    }

    /// Alphabet made of the characters of `chars`, in order.
    pub fn char_alphabet(chars: &str) -> Vec<String> {
        chars.chars().map(String::from).collect()
    }

    /// All well-formed convolutions of the given arity.
    pub fn universal(arity: usize, alphabet: Vec<String>) -> Result<Self> {
        let empty = Automaton::new(arity, alphabet)?;
        Ok(complement(&empty))
    }

    pub fn empty(arity: usize, alphabet: Vec<String>) -> Result<Self> {
        Automaton::new(arity, alphabet)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.trans.iter().map(Vec::len).sum()
    }

    pub fn is_accepting(&self, s: usize) -> bool {
        self.accepting[s]
    }

    pub fn transitions(&self, s: usize) -> &[(LetterTuple, usize)] {
        &self.trans[s]
    }

    pub fn add_state(&mut self, accepting: bool) -> usize {
        self.accepting.push(accepting);
        self.trans.push(Vec::new());
        self.accepting.len() - 1
    }

    pub fn set_initial(&mut self, s: usize) {
        self.initial = s;
    }

    pub fn set_accepting(&mut self, s: usize, accepting: bool) {
        self.accepting[s] = accepting;
    }

    /// Adds a transition after checking arity and symbol ranges.
    pub fn add_transition(&mut self, from: usize, letter: LetterTuple, to: usize) -> Result<()> {
        if letter.arity() != self.arity {
            return Err(Error::ArityMismatch(format!(
                "letter of arity {} in automaton of arity {}",
                letter.arity(),
                self.arity
            )));
        }
        if let Some(&s) = letter
            .symbols()
            .iter()
            .find(|&&s| s != PAD && s as usize >= self.alphabet.len())
        {
            return Err(Error::InvalidSymbol(format!("symbol index {s}")));
        }
        if from >= self.num_states() || to >= self.num_states() {
            return Err(Error::ArityMismatch("state out of range".into()));
        }
        self.trans[from].push((letter, to));
        Ok(())
    }

    pub(crate) fn push_transition(&mut self, from: usize, letter: LetterTuple, to: usize) {
        self.trans[from].push((letter, to));
    }

    pub(crate) fn from_parts(
        arity: usize,
        alphabet: Vec<String>,
        initial: usize,
        accepting: Vec<bool>,
        mut trans: Vec<Vec<(LetterTuple, usize)>>,
    ) -> Self {
        for row in &mut trans {
            row.sort();
            row.dedup();
        }
        Automaton {
            arity,
            alphabet,
            initial,
            accepting,
            trans,
        }
    }

    pub fn symbol(&self, token: &str) -> Result<Sym> {
        if token == PAD_STR {
            return Ok(PAD);
        }
        self.alphabet
            .iter()
            .position(|s| s == token)
            .map(|i| i as Sym)
            .ok_or_else(|| Error::InvalidSymbol(token.to_string()))
    }

    pub fn symbol_name(&self, s: Sym) -> &str {
        if s == PAD {
            PAD_STR
        } else {
            &self.alphabet[s as usize]
        }
    }

    /// Parses a word whose symbols are single characters.
    pub fn word(&self, text: &str) -> Result<Word> {
        let mut buf = [0u8; 4];
        text.chars()
            .map(|c| {
                let tok: &str = c.encode_utf8(&mut buf);
                if tok == PAD_STR {
                    Err(Error::InvalidSymbol(tok.into()))
                } else {
                    self.symbol(tok)
                }
            })
            .collect()
    }

    /// Parses a word given as a token sequence.
    pub fn word_from_tokens<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Word> {
        tokens.iter().map(|t| self.symbol(t.as_ref())).collect::<Result<Vec<_>>>().and_then(|w| {
            if w.contains(&PAD) {
                Err(Error::InvalidSymbol(PAD_STR.into()))
            } else {
                Ok(w)
            }
        })
    }

    /// Renders a word by concatenating symbol names.
    pub fn render(&self, w: &[Sym]) -> String {
        w.iter().map(|&s| self.symbol_name(s)).collect()
    }

    /// Renders a word with symbols separated by spaces.
    pub fn render_tokens(&self, w: &[Sym]) -> String {
        w.iter()
            .map(|&s| self.symbol_name(s))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Concatenated rendering when every symbol is one character, otherwise
    /// space-separated tokens.
    pub fn display_word(&self, w: &[Sym]) -> String {
        if self.alphabet.iter().all(|s| s.chars().count() == 1) {
            self.render(w)
        } else {
            self.render_tokens(w)
        }
    }

    /// Membership of a tuple of words.
    pub fn accepts(&self, words: &[Word]) -> Result<bool> {
        if words.len() != self.arity {
            return Err(Error::ArityMismatch(format!(
                "{} words for arity {}",
                words.len(),
                self.arity
            )));
        }
        let conv = convolve(words)?;
        Ok(self.accepts_convolution(&conv))
    }

    pub fn accepts_convolution(&self, letters: &[LetterTuple]) -> bool {
        let mut current: Vec<usize> = vec![self.initial];
        for l in letters {
            let mut next: Vec<usize> = current
                .iter()
                .flat_map(|&s| {
                    self.trans[s]
                        .iter()
                        .filter(move |(m, _)| m == l)
                        .map(|&(_, t)| t)
                })
                .collect();
            next.sort_unstable();
            next.dedup();
            if next.is_empty() {
                return false;
            }
            current = next;
        }
        current.iter().any(|&s| self.accepting[s])
    }

    /// Convenience membership for single-character alphabets.
    pub fn accepts_strs(&self, words: &[&str]) -> Result<bool> {
        let ws = words
            .iter()
            .map(|w| self.word(w))
            .collect::<Result<Vec<_>>>()?;
        self.accepts(&ws)
    }

    /// Verifies that every path from the initial state respects suffix padding
    /// and never reads an all-pad letter.
    pub fn check_padding(&self) -> Result<()> {
        match self.padding_violation() {
            None => Ok(()),
            Some((s, i)) => Err(Error::Padding(format!(
                "transition {i} of state {s} resumes a padded tape or reads only pad"
            ))),
        }
    }

    /// First offending `(state, transition index)` found by a breadth-first
    /// walk over (state, padded tapes) pairs.
    pub(crate) fn padding_violation(&self) -> Option<(usize, usize)> {
        let full = if self.arity >= 64 { u64::MAX } else { (1u64 << self.arity) - 1 };
        let mut seen: HashSet<(usize, u64)> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert((self.initial, 0));
        queue.push_back((self.initial, 0u64));
        while let Some((s, mask)) = queue.pop_front() {
            for (i, (l, t)) in self.trans[s].iter().enumerate() {
                let lm = l.pad_mask();
                if lm == full || mask & !lm != 0 {
                    return Some((s, i));
                }
                let next = (*t, mask | lm);
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        None
    }

    /// Re-indexes symbols into a superset alphabet.
    pub fn with_alphabet(&self, alphabet: &[String]) -> Result<Automaton> {
        let map: Vec<Sym> = self
            .alphabet
            .iter()
            .map(|s| {
                alphabet
                    .iter()
                    .position(|t| t == s)
                    .map(|i| i as Sym)
                    .ok_or_else(|| Error::ArityMismatch(format!("symbol {s} missing from target alphabet")))
            })
            .collect::<Result<_>>()?;
        let trans = self
            .trans
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(l, t)| {
                        let syms: Box<[Sym]> = l
                            .symbols()
                            .iter()
                            .map(|&s| if s == PAD { PAD } else { map[s as usize] })
                            .collect();
                        (LetterTuple::new_unchecked(syms), *t)
                    })
                    .collect()
            })
            .collect();
        Ok(Automaton::from_parts(
            self.arity,
            alphabet.to_vec(),
            self.initial,
            self.accepting.clone(),
            trans,
        ))
    }

    /// Reorders tapes: old tape `i` becomes new tape `perm[i]`.
    pub fn permute_tapes(&self, perm: &[usize]) -> Result<Automaton> {
        let mut check: Vec<usize> = perm.to_vec();
        check.sort_unstable();
        if perm.len() != self.arity || check != (0..self.arity).collect::<Vec<_>>() {
            return Err(Error::ArityMismatch("not a tape permutation".into()));
        }
        let trans = self
            .trans
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(l, t)| {
                        let mut syms = vec![PAD; self.arity];
                        for (i, &p) in perm.iter().enumerate() {
                            syms[p] = l.get(i);
                        }
                        (LetterTuple::new_unchecked(syms.into()), *t)
                    })
                    .collect()
            })
            .collect();
        Ok(Automaton::from_parts(
            self.arity,
            self.alphabet.clone(),
            self.initial,
            self.accepting.clone(),
            trans,
        ))
    }

    /// Inserts a fresh tape at `pos` carrying an arbitrary word.
    ///
    /// The new tape may be longer than all old tapes; that tail is read after
    /// the original automaton has accepted.
    pub fn insert_tape(&self, pos: usize) -> Result<Automaton> {
        if pos > self.arity {
            return Err(Error::ArityMismatch(format!("tape {pos} beyond arity {}", self.arity)));
        }
        let k = self.arity + 1;
        let n = self.num_states();
        let nsym = self.alphabet.len() as Sym;
        // state (s, padded) = 2*s + padded; tail = 2n
        let tail = 2 * n;
        let mut trans: Vec<Vec<(LetterTuple, usize)>> = vec![Vec::new(); 2 * n + 1];
        let mut accepting = vec![false; 2 * n + 1];
        let widen = |l: &LetterTuple, x: Sym| -> LetterTuple {
            let mut syms: Vec<Sym> = l.symbols().to_vec();
            syms.insert(pos, x);
            LetterTuple::new_unchecked(syms.into())
        };
        for s in 0..n {
            accepting[2 * s] = self.accepting[s];
            accepting[2 * s + 1] = self.accepting[s];
            for (l, t) in &self.trans[s] {
                for x in 0..nsym {
                    trans[2 * s].push((widen(l, x), 2 * t));
                }
                trans[2 * s].push((widen(l, PAD), 2 * t + 1));
                trans[2 * s + 1].push((widen(l, PAD), 2 * t + 1));
            }
            if self.accepting[s] {
                for x in 0..nsym {
                    let mut syms = vec![PAD; k];
                    syms[pos] = x;
                    trans[2 * s].push((LetterTuple::new_unchecked(syms.into()), tail));
                }
            }
        }
        accepting[tail] = true;
        for x in 0..nsym {
            let mut syms = vec![PAD; k];
            syms[pos] = x;
            trans[tail].push((LetterTuple::new_unchecked(syms.into()), tail));
        }
        let a = Automaton::from_parts(k, self.alphabet.clone(), 2 * self.initial, accepting, trans);
        Ok(a.trim_reachable())
    }

    /// Drops states unreachable from the initial state.
    pub fn trim_reachable(&self) -> Automaton {
        let reach = self.reachable();
        self.restrict(&reach)
    }

    /// Keeps only states that are reachable and co-reachable.
    pub fn trim(&self) -> Automaton {
        let reach = self.reachable();
        let co = self.coreachable();
        let keep: Vec<bool> = reach.iter().zip(&co).map(|(a, b)| *a && *b).collect();
        if !keep[self.initial] {
            return Automaton::new(self.arity, self.alphabet.clone()).expect("valid alphabet");
        }
        self.restrict(&keep)
    }

    fn restrict(&self, keep: &[bool]) -> Automaton {
        let mut index = vec![usize::MAX; self.num_states()];
        let mut next = 0;
        // initial first so it keeps index 0 when possible
        let order = std::iter::once(self.initial).chain((0..self.num_states()).filter(|&s| s != self.initial));
        for s in order {
            if keep[s] {
                index[s] = next;
                next += 1;
            }
        }
        let mut accepting = vec![false; next];
        let mut trans = vec![Vec::new(); next];
        for s in 0..self.num_states() {
            if index[s] == usize::MAX {
                continue;
            }
            accepting[index[s]] = self.accepting[s];
            for (l, t) in &self.trans[s] {
                if index[*t] != usize::MAX {
                    trans[index[s]].push((l.clone(), index[*t]));
                }
            }
        }
        Automaton::from_parts(self.arity, self.alphabet.clone(), index[self.initial], accepting, trans)
    }

    pub(crate) fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(s) = stack.pop() {
            for (_, t) in &self.trans[s] {
                if !seen[*t] {
                    seen[*t] = true;
                    stack.push(*t);
                }
            }
        }
        seen
    }

    pub(crate) fn reverse_edges(&self) -> Vec<Vec<usize>> {
        let mut rev = vec![Vec::new(); self.num_states()];
        for (s, row) in self.trans.iter().enumerate() {
            for (_, t) in row {
                rev[*t].push(s);
            }
        }
        rev
    }

    pub(crate) fn coreachable(&self) -> Vec<bool> {
        let rev = self.reverse_edges();
        let mut seen = self.accepting.clone();
        let mut stack: Vec<usize> = (0..self.num_states()).filter(|&s| seen[s]).collect();
        while let Some(s) = stack.pop() {
            for &p in &rev[s] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// Letters used by transitions, indexed per state.
    pub(crate) fn letter_index(&self) -> Vec<HashMap<&LetterTuple, Vec<usize>>> {
        self.trans
            .iter()
            .map(|row| {
                let mut m: HashMap<&LetterTuple, Vec<usize>> = HashMap::new();
                for (l, t) in row {
                    m.entry(l).or_default().push(*t);
                }
                m
            })
            .collect()
    }

    pub fn is_deterministic(&self) -> bool {
        self.trans.iter().all(|row| {
            let mut ls: Vec<&LetterTuple> = row.iter().map(|(l, _)| l).collect();
            let n = ls.len();
            ls.sort();
            ls.dedup();
            ls.len() == n
        })
    }

    /// `L(self) ⊆ L(other)`, by on-the-fly subset construction over `other`.
    pub fn is_subset_of(&self, other: &Automaton) -> Result<bool> {
        if self.arity != other.arity || self.alphabet != other.alphabet {
            return Err(Error::ArityMismatch("inclusion between incompatible automata".into()));
        }
        let idx = other.letter_index();
        let start = (self.initial, vec![other.initial]);
        let mut seen: HashSet<(usize, Vec<usize>)> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some((s, set)) = queue.pop_front() {
            if self.accepting[s] && !set.iter().any(|&q| other.accepting[q]) {
                return Ok(false);
            }
            for (l, t) in &self.trans[s] {
                let mut next: Vec<usize> = set
                    .iter()
                    .filter_map(|&q| idx[q].get(l))
                    .flatten()
                    .copied()
                    .collect();
                next.sort_unstable();
                next.dedup();
                let key = (*t, next);
                if seen.insert(key.clone()) {
                    queue.push_back(key);
                }
            }
        }
        Ok(true)
    }

    /// Language equality via two inclusions.
    pub fn equivalent(&self, other: &Automaton) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }
}

impl fmt::Display for Automaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::write_automaton("A", self))
    }
}

#[cfg(test)]
mod tests;
