//! Configuration graphs as automatic structures over column letters.

use std::collections::{HashMap, VecDeque};

use super::config::{Configuration, Tape};
use super::spec::{Move, TmSpec};
use crate::automata::{Automaton, LetterTuple, Sym, Word, PAD};
use crate::{Error, Result};

/// One column of a configuration: a cell per tape, with head marks, and the
/// state when the head of tape 1 is here.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Column {
    pub state: Option<usize>,
    pub cells: Vec<(usize, bool)>,
}

impl Column {
    fn is_blank(&self) -> bool {
        self.state.is_none() && self.cells.iter().all(|&(s, h)| s == 0 && !h)
    }
}

/// Every possible column of a machine, with its token.
#[derive(Clone, Debug)]
pub struct ColumnAlphabet {
    pub columns: Vec<Column>,
    pub tokens: Vec<String>,
    index: HashMap<Column, Sym>,
}

const MAX_COLUMNS: usize = 60_000;

impl ColumnAlphabet {
    pub fn new(tm: &TmSpec) -> Result<ColumnAlphabet> {
        let g = tm.symbols.len();
        let per_first = g * (tm.states.len() + 1);
        let total = per_first * (2 * g).pow(tm.tapes as u32 - 1);
        if total >= MAX_COLUMNS {
            return Err(Error::InvalidTm(format!("{total} column letters exceed {MAX_COLUMNS}")));
        }
        let mut columns = Vec::with_capacity(total);
        for code in 0..total {
            let mut rest = code;
            let first = rest % per_first;
            rest /= per_first;
            let state = (first / g).checked_sub(1);
            let mut cells = vec![(first % g, state.is_some())];
            for _ in 1..tm.tapes {
                let c = rest % (2 * g);
                rest /= 2 * g;
                cells.push((c % g, c >= g));
            }
            columns.push(Column { state, cells });
        }
        let tokens: Vec<String> = columns.iter().map(|c| column_token(tm, c)).collect();
        let index = columns.iter().cloned().enumerate().map(|(i, c)| (c, i as Sym)).collect();
        Ok(ColumnAlphabet { columns, tokens, index })
    }

    pub fn sym(&self, c: &Column) -> Sym {
        self.index[c]
    }

    pub fn encode(&self, c: &Configuration) -> Word {
        (0..c.columns())
            .map(|i| {
                let cells: Vec<(usize, bool)> = c.tapes.iter().map(|t| (t.read(i), t.head == i)).collect();
                let state = (c.tapes[0].head == i).then_some(c.state);
                self.sym(&Column { state, cells })
            })
            .collect()
    }

    /// Decodes a well-formed configuration word.
    pub fn decode(&self, w: &[Sym]) -> Result<Configuration> {
        let k = self.columns.first().map_or(1, |c| c.cells.len());
        let mut cells = vec![Vec::new(); k];
        let mut heads = vec![None; k];
        let mut state = None;
        for (i, &s) in w.iter().enumerate() {
            let col = self.columns.get(s as usize).ok_or_else(|| Error::InvalidSymbol(format!("{s}")))?;
            if col.state.is_some() {
                state = col.state;
            }
            for (j, &(sym, h)) in col.cells.iter().enumerate() {
                cells[j].push(sym);
                if h && heads[j].replace(i).is_some() {
                    return Err(Error::InvalidTm("two heads on one tape".into()));
                }
            }
        }
        let state = state.ok_or_else(|| Error::InvalidTm("no state".into()))?;
        let tapes = cells
            .into_iter()
            .zip(heads)
            .map(|(c, h)| h.map(|h| Tape::new(c, h)).ok_or_else(|| Error::InvalidTm("missing head".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Configuration { state, tapes })
    }
}

fn column_token(tm: &TmSpec, c: &Column) -> String {
    let cells: Vec<String> = c
        .cells
        .iter()
        .enumerate()
        .map(|(j, &(s, h))| {
            let sym = &tm.symbols[s];
            match (h, j, c.state) {
                (true, 0, Some(q)) => format!("{}:{sym}", tm.states[q]),
                (true, _, _) => format!("^{sym}"),
                _ => sym.clone(),
            }
        })
        .collect();
    cells.join("|")
}

fn letter(syms: Vec<Sym>) -> LetterTuple {
    LetterTuple::new_unchecked(syms.into())
}

/// Well-formed configurations: one head per tape and no trailing blank
/// column.
pub fn domain_automaton(tm: &TmSpec, alpha: &ColumnAlphabet) -> Result<Automaton> {
    let k = tm.tapes;
    let full = (1u32 << k) - 1;
    let mut a = Automaton::new(1, alpha.tokens.clone())?;
    // state id = mask * 2 + last column blank
    let n = 2 * (full as usize + 1);
    for _ in 1..n {
        a.add_state(false);
    }
    a.set_accepting(full as usize * 2, true);
    for mask in 0..=full {
        for blank in 0..2 {
            let from = mask as usize * 2 + blank;
            for (i, col) in alpha.columns.iter().enumerate() {
                let heads: u32 = col.cells.iter().enumerate().filter(|(_, c)| c.1).map(|(j, _)| 1 << j).sum();
                if heads & mask != 0 {
                    continue;
                }
                let to = (mask | heads) as usize * 2 + usize::from(col.is_blank());
                a.push_transition(from, letter(vec![i as Sym]), to);
            }
        }
    }
    Ok(a.trim())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Phase {
    Before,
    /// A right move: the next column receives the head.
    NeedHead,
    /// A left move was guessed: this column must hold the head.
    ExpectHead,
    Done,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct St {
    t: usize,
    phase: Vec<Phase>,
    blank: [bool; 2],
    ended: [bool; 2],
}

/// The one-step relation `{(c, c') : c' is the successor of c}`.
pub fn step_relation_automaton(tm: &TmSpec) -> Result<Automaton> {
    tm.validate()?;
    let alpha = ColumnAlphabet::new(tm)?;
    step_automaton_over(tm, &alpha)
}

pub(crate) fn step_automaton_over(tm: &TmSpec, alpha: &ColumnAlphabet) -> Result<Automaton> {
    let k = tm.tapes;
    let blank_col = Column {
        state: None,
        cells: vec![(0, false); k],
    };
    let mut ids: HashMap<St, usize> = HashMap::new();
    let mut states: Vec<St> = Vec::new();
    let mut queue = VecDeque::new();
    let mut edges: Vec<Vec<(LetterTuple, usize)>> = Vec::new();
    let mut intern = |s: St, states: &mut Vec<St>, queue: &mut VecDeque<usize>, edges: &mut Vec<Vec<(LetterTuple, usize)>>| {
        *ids.entry(s.clone()).or_insert_with(|| {
            states.push(s);
            edges.push(Vec::new());
            queue.push_back(states.len() - 1);
            states.len() - 1
        })
    };
    let starts: Vec<usize> = (0..tm.transitions.len())
        .map(|t| {
            let s = St {
                t,
                phase: vec![Phase::Before; k],
                blank: [false; 2],
                ended: [false; 2],
            };
            intern(s, &mut states, &mut queue, &mut edges)
        })
        .collect();
    while let Some(id) = queue.pop_front() {
        let st = states[id].clone();
        let t = &tm.transitions[st.t];
        let inputs = alpha.columns.iter().map(Some).chain(std::iter::once(None));
        for c_opt in inputs {
            if st.ended[0] && c_opt.is_some() {
                continue;
            }
            let c = c_opt.unwrap_or(&blank_col);
            if c_opt.is_some() && c.state.is_some() && c.state != Some(t.from) {
                continue;
            }
            // per row: list of (output cell, next phase)
            let mut options: Vec<Vec<((usize, bool), Phase)>> = Vec::with_capacity(k);
            for j in 0..k {
                let (s, h) = c.cells[j];
                let (r, w, m) = (t.reads[j], t.writes[j], t.moves[j]);
                let mut o = Vec::new();
                match st.phase[j] {
                    Phase::Before if h => {
                        if s == r {
                            match m {
                                Move::R => o.push(((w, false), Phase::NeedHead)),
                                Move::S => o.push(((w, true), Phase::Done)),
                                Move::L => {}
                            }
                        }
                    }
                    Phase::Before => {
                        o.push(((s, false), Phase::Before));
                        if m == Move::L {
                            o.push(((s, true), Phase::ExpectHead));
                        }
                    }
                    Phase::NeedHead if !h => o.push(((s, true), Phase::Done)),
                    Phase::ExpectHead if h && s == r => o.push(((w, false), Phase::Done)),
                    Phase::Done if !h => o.push(((s, false), Phase::Done)),
                    _ => {}
                }
                if o.is_empty() {
                    break;
                }
                options.push(o);
            }
            if options.len() < k {
                continue;
            }
            let mut choice = vec![0usize; k];
            'combo: loop {
                let cells: Vec<(usize, bool)> = (0..k).map(|j| options[j][choice[j]].0).collect();
                let phase: Vec<Phase> = (0..k).map(|j| options[j][choice[j]].1).collect();
                let state = cells[0].1.then_some(t.to);
                let d = Column { state, cells };
                let d_blank = d.is_blank();
                for d_pad in [false, true] {
                    if d_pad && !d_blank || !d_pad && st.ended[1] || d_pad && c_opt.is_none() {
                        continue;
                    }
                    let mut next = St {
                        t: st.t,
                        phase: phase.clone(),
                        blank: st.blank,
                        ended: st.ended,
                    };
                    if c_opt.is_none() {
                        next.ended[0] = true;
                    } else {
                        next.blank[0] = c.is_blank();
                    }
                    if d_pad {
                        next.ended[1] = true;
                    } else {
                        next.blank[1] = d_blank;
                    }
                    if next.phase.iter().all(|p| *p == Phase::Done) {
                        next.t = 0;
                    }
                    let l = letter(vec![
                        c_opt.map_or(PAD, |c| alpha.sym(c)),
                        if d_pad { PAD } else { alpha.sym(&d) },
                    ]);
                    let to = intern(next, &mut states, &mut queue, &mut edges);
                    edges[id].push((l, to));
                }
                for j in 0..k {
                    choice[j] += 1;
                    if choice[j] < options[j].len() {
                        continue 'combo;
                    }
                    choice[j] = 0;
                }
                break;
            }
        }
    }
    let mut a = Automaton::new(2, alpha.tokens.clone())?;
    for _ in 0..states.len() {
        a.add_state(false);
    }
    // state 0 is a fresh start; NFA state i becomes i + 1
    for (i, s) in states.iter().enumerate() {
        a.set_accepting(i + 1, s.phase.iter().all(|p| *p == Phase::Done) && !s.blank[0] && !s.blank[1]);
        for (l, to) in &edges[i] {
            a.push_transition(i + 1, l.clone(), to + 1);
        }
    }
    for s in starts {
        for (l, to) in &edges[s] {
            a.push_transition(0, l.clone(), to + 1);
        }
    }
    Ok(a.trim())
}
