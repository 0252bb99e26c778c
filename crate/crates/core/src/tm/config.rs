//! Configurations and the direct simulator.
//!
//! A configuration is written column by column: column `i` lists cell `i` of
//! every tape, separated by `|`. The cell under the head of tape 1 carries
//! the control state as `q:`, heads of other tapes are marked `^`. Columns
//! run up to the last non-blank cell or head, whichever is further right.

use std::fmt;

use super::spec::TmSpec;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tape {
    /// Cells without trailing blanks (symbol 0).
    pub cells: Vec<usize>,
    pub head: usize,
}

impl Tape {
    pub fn new(mut cells: Vec<usize>, head: usize) -> Tape {
        while cells.last() == Some(&0) {
            cells.pop();
        }
        Tape { cells, head }
    }

    pub fn read(&self, i: usize) -> usize {
        self.cells.get(i).copied().unwrap_or(0)
    }

    fn extent(&self) -> usize {
        self.cells.len().max(self.head + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    pub state: usize,
    pub tapes: Vec<Tape>,
}

impl Configuration {
    /// Initial configuration: inputs on the tapes, heads on cell 0.
    pub fn initial(tm: &TmSpec, inputs: &[Vec<usize>]) -> Result<Configuration> {
        if inputs.len() > tm.tapes {
            return Err(Error::InvalidTm(format!("{} inputs for {} tapes", inputs.len(), tm.tapes)));
        }
        let tapes = (0..tm.tapes)
            .map(|j| Tape::new(inputs.get(j).cloned().unwrap_or_default(), 0))
            .collect();
        Ok(Configuration { state: tm.initial, tapes })
    }

    pub fn columns(&self) -> usize {
        self.tapes.iter().map(Tape::extent).max().unwrap_or(1)
    }

    pub fn heads(&self) -> Vec<usize> {
        self.tapes.iter().map(|t| t.head).collect()
    }

    /// Column tokens.
    pub fn tokens(&self, tm: &TmSpec) -> Vec<String> {
        (0..self.columns())
            .map(|i| {
                let cells: Vec<String> = self
                    .tapes
                    .iter()
                    .enumerate()
                    .map(|(j, t)| {
                        let sym = &tm.symbols[t.read(i)];
                        match (t.head == i, j) {
                            (true, 0) => format!("{}:{sym}", tm.states[self.state]),
                            (true, _) => format!("^{sym}"),
                            (false, _) => sym.clone(),
                        }
                    })
                    .collect();
                cells.join("|")
            })
            .collect()
    }

    pub fn render(&self, tm: &TmSpec) -> String {
        self.tokens(tm).join(" ")
    }

    pub fn parse(tm: &TmSpec, text: &str) -> Result<Configuration> {
        let bad = |m: &str| Error::InvalidTm(format!("configuration `{text}`: {m}"));
        let mut state = None;
        let mut cells = vec![Vec::new(); tm.tapes];
        let mut heads = vec![None; tm.tapes];
        for (i, tok) in text.split_whitespace().enumerate() {
            let parts: Vec<&str> = tok.split('|').collect();
            if parts.len() != tm.tapes {
                return Err(bad("wrong number of cells in a column"));
            }
            for (j, p) in parts.iter().enumerate() {
                let sym = if j == 0 {
                    match p.split_once(':') {
                        Some((q, s)) => {
                            if state.replace(tm.state(q)?).is_some() {
                                return Err(bad("two states"));
                            }
                            heads[0] = Some(i);
                            s
                        }
                        None => p,
                    }
                } else if let Some(s) = p.strip_prefix('^') {
                    if heads[j].replace(i).is_some() {
                        return Err(bad("two heads on one tape"));
                    }
                    s
                } else {
                    p
                };
                cells[j].push(tm.symbol(sym)?);
            }
        }
        let state = state.ok_or_else(|| bad("no state"))?;
        let tapes: Vec<Tape> = cells
            .into_iter()
            .zip(heads)
            .map(|(c, h)| h.map(|h| Tape::new(c, h)).ok_or_else(|| bad("missing head")))
            .collect::<Result<_>>()?;
        let c = Configuration { state, tapes };
        if c.columns() != text.split_whitespace().count() {
            return Err(bad("trailing blank columns"));
        }
        Ok(c)
    }

    pub fn reads(&self) -> Vec<usize> {
        self.tapes.iter().map(|t| t.read(t.head)).collect()
    }

    /// The successor, or `None` when the machine halts or a head would
    /// leave the tape on the left.
    pub fn step(&self, tm: &TmSpec) -> Option<Configuration> {
        let t = tm.find(self.state, &self.reads())?;
        let mut tapes = Vec::with_capacity(tm.tapes);
        for (j, tape) in self.tapes.iter().enumerate() {
            let head = tape.head.checked_add_signed(t.moves[j].offset())?;
            let mut cells = tape.cells.clone();
            if cells.len() <= tape.head {
                cells.resize(tape.head + 1, 0);
            }
            cells[tape.head] = t.writes[j];
            tapes.push(Tape::new(cells, head));
        }
        Some(Configuration { state: t.to, tapes })
    }

    pub fn is_accepting(&self, tm: &TmSpec) -> bool {
        tm.accepting[self.state]
    }
}

/// The computation from `c`, at most `max_steps` steps long, including `c`.
pub fn run(tm: &TmSpec, c: &Configuration, max_steps: usize) -> Vec<Configuration> {
    let mut out = vec![c.clone()];
    while out.len() <= max_steps {
        match out.last().expect("non-empty").step(tm) {
            Some(n) => out.push(n),
            None => break,
        }
    }
    out
}

pub struct Rendered<'a>(pub &'a TmSpec, pub &'a Configuration);

impl fmt::Display for Rendered<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.1.render(self.0))
    }
}
