//! The automatic well-founded relation `R` built from a Kreisel comparator.
//!
//! The domain is `{0,1}* ∪ D`, with `D` the configurations of the
//! comparator `M` (disjoint because every configuration contains a state
//! letter). `R` is the union of the step relation `E` on `D`, the edges
//! `x → I(x,y)` to initial configurations, and the edges `F(x,y) → y` from
//! final configurations of accepting computations.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use super::config::{run, Configuration};
use super::graph::{domain_automaton, step_automaton_over, Column, ColumnAlphabet};
use super::machines::{comparator_input, kreisel_comparator, ACCEPT};
use super::spec::{Move, TmSpec};
use crate::automata::builders::words_over;
use crate::automata::{union, Automaton, LetterTuple, Sym, Word, PAD};
use crate::fo::Structure;
use crate::pathology::{nat_to_word, KreiselOrder, PiPredicate};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct RpiStructure {
    pub structure: Structure,
    pub tm: TmSpec,
    pub columns: ColumnAlphabet,
    pub order: KreiselOrder,
}

fn letter(a: Sym, b: Sym) -> LetterTuple {
    LetterTuple::new_unchecked(vec![a, b].into())
}

/// Builds `R` for the comparator of `pi0`.
pub fn build_rpi(pi0: &PiPredicate) -> Result<RpiStructure> {
    let tm = kreisel_comparator(pi0)?;
    if let Some((i, j)) = tm.check_reversible() {
        return Err(Error::NotReversible(format!(
            "{} / {}",
            tm.describe(&tm.transitions[i]),
            tm.describe(&tm.transitions[j])
        )));
    }
    let columns = ColumnAlphabet::new(&tm)?;
    let mut alphabet = vec!["0".to_string(), "1".to_string()];
    if columns.tokens.iter().any(|t| alphabet.contains(t)) {
        return Err(Error::InvalidTm("column tokens clash with binary letters".into()));
    }
    alphabet.extend(columns.tokens.iter().cloned());
    // column symbol i becomes i + 2
    let shift = |a: &Automaton| -> Result<Automaton> { a.with_alphabet(&alphabet) };
    let d = shift(&domain_automaton(&tm, &columns)?)?;
    let e = shift(&step_automaton_over(&tm, &columns)?)?;
    let init = initial_edges(&tm, &columns, alphabet.clone())?;
    let fin = final_edges(&tm, &columns, alphabet.clone())?;
    let bin = words_over(alphabet.clone(), &["0", "1"])?;
    let domain = union(&bin, &d)?;
    let r = union(&union(&e, &init)?, &fin)?;
    let structure = Structure::new(format!("R[{}]", pi0.description), domain)?.with_relation("R", r)?;
    Ok(RpiStructure {
        structure,
        tm,
        columns,
        order: KreiselOrder::new(pi0.clone()),
    })
}

fn col_sym(columns: &ColumnAlphabet, state: Option<usize>, cell: usize) -> Sym {
    columns.sym(&Column {
        state,
        cells: vec![(cell, state.is_some())],
    }) + 2
}

/// `{(x, I(x,y))}`.
fn initial_edges(tm: &TmSpec, columns: &ColumnAlphabet, alphabet: Vec<String>) -> Result<Automaton> {
    let mut a = Automaton::new(2, alphabet)?;
    // state = first * 4 + x_ended * 2 + y_ended, plus a final sink
    for _ in 1..9 {
        a.add_state(false);
    }
    let sink = 8;
    a.set_initial(4);
    a.set_accepting(sink, true);
    for s in 0..4 {
        a.set_accepting(s, true);
    }
    let bits = [Some('0'), Some('1'), None];
    for first in [true, false] {
        for xe in [false, true] {
            for ye in [false, true] {
                let from = usize::from(first) * 4 + usize::from(xe) * 2 + usize::from(ye);
                for &xa in &bits {
                    for &yb in &bits {
                        if (xa.is_none() && yb.is_none()) || (xe && xa.is_some()) || (ye && yb.is_some()) {
                            continue;
                        }
                        let Ok(cell) = tm.symbol(&super::machines::pair_symbol(xa, yb)) else { continue };
                        let z = col_sym(columns, first.then_some(tm.initial), cell);
                        let x = xa.map_or(PAD, |c| if c == '0' { 0 } else { 1 });
                        let to = usize::from(xa.is_none()) * 2 + usize::from(yb.is_none());
                        a.push_transition(from, letter(x, z), to);
                    }
                }
            }
        }
    }
    // x = y = ε
    a.push_transition(4, letter(PAD, col_sym(columns, Some(tm.initial), 0)), sink);
    Ok(a)
}

/// `{(F(x,y), y)}` for accepting runs: the written marks are replayed to
/// follow the run from the initial state.
fn final_edges(tm: &TmSpec, columns: &ColumnAlphabet, alphabet: Vec<String>) -> Result<Automaton> {
    let mut a = Automaton::new(2, alphabet)?;
    let n = tm.states.len();
    for _ in 0..n {
        a.add_state(false);
    }
    a.set_initial(tm.initial);
    let acc = tm.state(ACCEPT)?;
    let done = a.add_state(true);
    let y_done: Vec<usize> = (0..n).map(|_| a.add_state(false)).collect();
    for t in &tm.transitions {
        let read = &tm.symbols[t.reads[0]];
        if t.moves[0] == Move::R {
            let z = col_sym(columns, None, t.writes[0]);
            let yb = read.chars().nth(1).expect("pair symbol");
            if yb == '-' {
                a.push_transition(t.from, letter(z, PAD), y_done[t.to]);
                a.push_transition(y_done[t.from], letter(z, PAD), y_done[t.to]);
            } else {
                a.push_transition(t.from, letter(z, if yb == '0' { 0 } else { 1 }), t.to);
            }
        } else if t.to == acc && t.reads[0] == 0 {
            let z = col_sym(columns, Some(acc), t.writes[0]);
            a.push_transition(t.from, letter(z, PAD), done);
            a.push_transition(y_done[t.from], letter(z, PAD), done);
        }
    }
    Ok(a.trim())
}

impl RpiStructure {
    pub fn relation(&self) -> &Automaton {
        self.structure.relation("R").expect("built with R")
    }

    pub fn bin_word(&self, n: u64) -> Word {
        nat_to_word(n).bytes().map(|b| Sym::from(b - b'0')).collect()
    }

    pub fn config_word(&self, c: &Configuration) -> Word {
        self.columns.encode(c).into_iter().map(|s| s + 2).collect()
    }

    pub fn display(&self, w: &[Sym]) -> String {
        if w.iter().all(|&s| s < 2) {
            let s: String = w.iter().map(|&s| if s == 0 { '0' } else { '1' }).collect();
            format!("\"{s}\"")
        } else {
            self.relation().render_tokens(w)
        }
    }

    pub fn initial_config(&self, x: u64, y: u64) -> Result<Configuration> {
        let input = comparator_input(&self.tm, &nat_to_word(x), &nat_to_word(y))?;
        Configuration::initial(&self.tm, &[input])
    }

    /// `x R I(x,y) R ... R F(x,y) R y`, built with the simulator, when the
    /// comparator accepts.
    pub fn emb_path(&self, x: u64, y: u64) -> Result<Option<Vec<Word>>> {
        let start = self.initial_config(x, y)?;
        let trace = run(&self.tm, &start, 10_000);
        let last = trace.last().expect("non-empty");
        if !last.is_accepting(&self.tm) {
            return Ok(None);
        }
        let mut path = vec![self.bin_word(x)];
        path.extend(trace.iter().map(|c| self.config_word(c)));
        path.push(self.bin_word(y));
        Ok(Some(path))
    }

    /// Every consecutive pair of `path` is accepted by the `R` automaton.
    pub fn path_is_valid(&self, path: &[Word]) -> Result<bool> {
        for p in path.windows(2) {
            if !self.relation().accepts(&[p[0].clone(), p[1].clone()])? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Searches the `R`-graph breadth-first from `x` for `y`, following edges
    /// found through the automaton, over elements of length at most
    /// `max_len`.
    pub fn bfs_path(&self, x: &Word, y: &Word, max_len: usize) -> Result<Option<Vec<Word>>> {
        let mut prev: HashMap<Word, Word> = HashMap::new();
        let mut queue = VecDeque::from([x.clone()]);
        prev.insert(x.clone(), x.clone());
        while let Some(u) = queue.pop_front() {
            if u == *y {
                let mut path = vec![u.clone()];
                let mut cur = u;
                while cur != *x {
                    cur = prev[&cur].clone();
                    path.push(cur.clone());
                }
                path.reverse();
                return Ok(Some(path));
            }
            for v in self.relation().section(0, &u, max_len)? {
                if !prev.contains_key(&v) {
                    prev.insert(v.clone(), u.clone());
                    queue.push_back(v);
                }
            }
        }
        Ok(None)
    }

    /// Lifts a `≺`-descending chain (each element below the previous one)
    /// to an `R`-path read backwards: the result lists, for each link, the
    /// path from the smaller element up to the larger.
    pub fn lift_descent(&self, chain: &[u64]) -> Result<Vec<Vec<Word>>> {
        chain
            .windows(2)
            .map(|p| {
                self.emb_path(p[1], p[0])?
                    .ok_or_else(|| Error::InvalidTm(format!("comparator rejects {} below {}", p[1], p[0])))
            })
            .collect()
    }

    pub fn wf_check(&self, depth: usize, max_len: usize) -> Result<WfReport> {
        let seeds: Vec<Word> = (0..(1u64 << (max_len + 1)) - 1).map(|n| self.bin_word(n)).collect();
        bounded_wf_check(self.relation(), &seeds, depth, max_len)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum WfVerdict {
    Ok,
    /// Elements on a cycle.
    Cycle { witness: Vec<String> },
    /// Seeds `s_0 < s_1 < ...` (in seed order) with each `s_{i+1}`
    /// reaching `s_i`: a descent that keeps climbing in the seed order.
    Descent { chain: Vec<String> },
}

#[derive(Clone, Debug, Serialize)]
pub struct WfReport {
    pub verdict: WfVerdict,
    pub elements: usize,
    pub edges: usize,
    #[serde(skip)]
    pub fragment: Vec<(Word, Vec<Word>)>,
}

impl WfReport {
    pub fn to_dot(&self, a: &Automaton) -> String {
        let mut out = String::from("digraph R {\n");
        let name = |w: &Word| a.render_tokens(w).replace('"', "\\\"");
        for (u, vs) in &self.fragment {
            for v in vs {
                let _ = writeln!(out, "  \"{}\" -> \"{}\";", name(u), name(v));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Explores everything reachable from `seeds` along `rel` within length
/// `max_len`, then checks the explored graph for cycles and for descents of
/// `depth` seeds.
pub fn bounded_wf_check(rel: &Automaton, seeds: &[Word], depth: usize, max_len: usize) -> Result<WfReport> {
    let mut index: HashMap<Word, usize> = HashMap::new();
    let mut nodes: Vec<Word> = Vec::new();
    let mut succ: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        if !index.contains_key(s) {
            index.insert(s.clone(), nodes.len());
            nodes.push(s.clone());
            succ.push(Vec::new());
            queue.push_back(nodes.len() - 1);
        }
    }
    while let Some(i) = queue.pop_front() {
        for v in rel.section(0, &nodes[i].clone(), max_len)? {
            let j = match index.get(&v) {
                Some(&j) => j,
                None => {
                    index.insert(v.clone(), nodes.len());
                    nodes.push(v);
                    succ.push(Vec::new());
                    queue.push_back(nodes.len() - 1);
                    nodes.len() - 1
                }
            };
            succ[i].push(j);
        }
    }
    let n = nodes.len();
    let edges = succ.iter().map(Vec::len).sum();
    let fragment = (0..n)
        .map(|i| (nodes[i].clone(), succ[i].iter().map(|&j| nodes[j].clone()).collect()))
        .collect();
    let show = |i: usize| rel.render_tokens(&nodes[i]);
    // Kahn's algorithm; whatever is left lies on or behind a cycle.
    let mut indeg = vec![0usize; n];
    for vs in &succ {
        for &v in vs {
            indeg[v] += 1;
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut ready: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    while let Some(u) = ready.pop_front() {
        order.push(u);
        for &v in &succ[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                ready.push_back(v);
            }
        }
    }
    if order.len() < n {
        let left: BTreeSet<usize> = (0..n).filter(|&i| indeg[i] > 0).collect();
        // walk inside the remainder until a node repeats
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        let mut walk = Vec::new();
        let mut cur = *left.iter().next().expect("non-empty");
        while !seen.contains_key(&cur) {
            seen.insert(cur, walk.len());
            walk.push(cur);
            cur = *succ[cur].iter().find(|v| left.contains(v)).expect("remainder has no sinks");
        }
        let witness = walk[seen[&cur]..].iter().map(|&i| show(i)).collect();
        return Ok(WfReport {
            verdict: WfVerdict::Cycle { witness },
            elements: n,
            edges,
            fragment,
        });
    }
    // reach[i]: seeds reachable from node i
    let k = seeds.len().min(n);
    let mut reach: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &u in order.iter().rev() {
        let mut r: BTreeSet<usize> = BTreeSet::new();
        for &v in &succ[u] {
            r.extend(reach[v].iter().copied());
            if v < k {
                r.insert(v);
            }
        }
        reach[u] = r;
    }
    // longest chain s_{i_0} < s_{i_1} < ... with s_{i_{m+1}} reaching s_{i_m}
    let mut best: Vec<(usize, Option<usize>)> = vec![(1, None); k];
    for j in 0..k {
        for &i in reach[j].iter().filter(|&&i| i < j) {
            if best[i].0 + 1 > best[j].0 {
                best[j] = (best[i].0 + 1, Some(i));
            }
        }
    }
    let verdict = match (0..k).max_by_key(|&j| (best[j].0, std::cmp::Reverse(j))) {
        Some(top) if best[top].0 >= depth => {
            let mut chain = vec![top];
            let mut cur = top;
            while let Some(p) = best[cur].1 {
                chain.push(p);
                cur = p;
            }
            chain.reverse();
            WfVerdict::Descent {
                chain: chain.into_iter().map(show).collect(),
            }
        }
        _ => WfVerdict::Ok,
    };
    Ok(WfReport {
        verdict,
        elements: n,
        edges,
        fragment,
    })
}
