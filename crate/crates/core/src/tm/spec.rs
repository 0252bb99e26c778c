//! Deterministic multi-tape Turing machines and their text format.
//!
//! ```text
//! tm NAME
//! tapes K
//! blank _
//! state q0
//! state qa accept
//! initial q0
//! trans q0 (1) -> q0 (1,R)
//! trans q0 (_) -> qa (1,R)
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::parse_err;
use crate::{Error, Result};

/// Characters that may not occur in state or symbol names.
pub const RESERVED: &[char] = &[':', ',', '|', '^', '#', '(', ')', ' '];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    L,
    R,
    S,
}

impl Move {
    pub fn offset(self) -> isize {
        match self {
            Move::L => -1,
            Move::R => 1,
            Move::S => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub from: usize,
    pub reads: Vec<usize>,
    pub to: usize,
    pub writes: Vec<usize>,
    pub moves: Vec<Move>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TmSpec {
    pub name: String,
    pub tapes: usize,
    pub states: Vec<String>,
    pub accepting: Vec<bool>,
    pub initial: usize,
    /// Tape symbols; index 0 is the blank.
    pub symbols: Vec<String>,
    pub transitions: Vec<Transition>,
}

fn check_name(kind: &str, n: &str) -> Result<()> {
    if n.is_empty() || n.contains(RESERVED) || n.contains(char::is_whitespace) {
        return Err(Error::InvalidTm(format!("{kind} name `{n}` is empty or uses a reserved character")));
    }
    Ok(())
}

impl TmSpec {
    pub fn new(name: &str, tapes: usize, blank: &str) -> Result<TmSpec> {
        if !(1..=3).contains(&tapes) {
            return Err(Error::InvalidTm(format!("{tapes} tapes; expected 1 to 3")));
        }
        check_name("symbol", blank)?;
        Ok(TmSpec {
            name: name.to_string(),
            tapes,
            states: Vec::new(),
            accepting: Vec::new(),
            initial: 0,
            symbols: vec![blank.to_string()],
            transitions: Vec::new(),
        })
    }

    pub fn blank(&self) -> &str {
        &self.symbols[0]
    }

    pub fn state(&self, name: &str) -> Result<usize> {
        self.states
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::InvalidTm(format!("unknown state `{name}`")))
    }

    pub fn add_state(&mut self, name: &str, accepting: bool) -> Result<usize> {
        check_name("state", name)?;
        if self.states.iter().any(|s| s == name) {
            return Err(Error::InvalidTm(format!("duplicate state `{name}`")));
        }
        self.states.push(name.to_string());
        self.accepting.push(accepting);
        Ok(self.states.len() - 1)
    }

    pub fn symbol(&self, name: &str) -> Result<usize> {
        self.symbols
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::InvalidTm(format!("unknown symbol `{name}`")))
    }

    pub fn add_symbol(&mut self, name: &str) -> Result<usize> {
        if let Ok(i) = self.symbol(name) {
            return Ok(i);
        }
        check_name("symbol", name)?;
        self.symbols.push(name.to_string());
        Ok(self.symbols.len() - 1)
    }

    /// Adds a transition by names, registering new symbols.
    pub fn add_transition(&mut self, from: &str, reads: &[&str], to: &str, writes: &[(&str, Move)]) -> Result<()> {
        if reads.len() != self.tapes || writes.len() != self.tapes {
            return Err(Error::InvalidTm(format!("transition from `{from}` does not cover {} tapes", self.tapes)));
        }
        let t = Transition {
            from: self.state(from)?,
            reads: reads.iter().map(|r| self.add_symbol(r)).collect::<Result<_>>()?,
            to: self.state(to)?,
            writes: writes.iter().map(|(w, _)| self.add_symbol(w)).collect::<Result<_>>()?,
            moves: writes.iter().map(|(_, m)| *m).collect(),
        };
        if self.transitions.iter().any(|u| u.from == t.from && u.reads == t.reads) {
            return Err(Error::InvalidTm(format!("two transitions from `{from}` on {reads:?}")));
        }
        self.transitions.push(t);
        Ok(())
    }

    pub fn find(&self, state: usize, reads: &[usize]) -> Option<&Transition> {
        self.transitions.iter().find(|t| t.from == state && t.reads == reads)
    }

    pub fn validate(&self) -> Result<()> {
        if self.states.is_empty() || self.initial >= self.states.len() {
            return Err(Error::InvalidTm("no initial state".into()));
        }
        let mut seen = BTreeSet::new();
        for t in &self.transitions {
            if !seen.insert((t.from, t.reads.clone())) {
                return Err(Error::InvalidTm("nondeterministic transitions".into()));
            }
            if t.reads.len() != self.tapes || t.writes.len() != self.tapes || t.moves.len() != self.tapes {
                return Err(Error::InvalidTm("transition arity".into()));
            }
        }
        Ok(())
    }

    /// A pair of transitions that may lead to the same configuration, if
    /// any. Two transitions into the same state are kept apart when some
    /// tape moves the same way in both and writes different symbols: the
    /// written cell then tells which one ran.
    pub fn check_reversible(&self) -> Option<(usize, usize)> {
        for (i, a) in self.transitions.iter().enumerate() {
            for (j, b) in self.transitions.iter().enumerate().skip(i + 1) {
                if a.to != b.to {
                    continue;
                }
                let apart = (0..self.tapes).any(|k| a.moves[k] == b.moves[k] && a.writes[k] != b.writes[k]);
                if !apart {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn describe(&self, t: &Transition) -> String {
        let reads: Vec<&str> = t.reads.iter().map(|&s| self.symbols[s].as_str()).collect();
        let writes: Vec<String> = t
            .writes
            .iter()
            .zip(&t.moves)
            .map(|(&w, m)| format!("({},{m:?})", self.symbols[w]))
            .collect();
        format!(
            "{} ({}) -> {} {}",
            self.states[t.from],
            reads.join(","),
            self.states[t.to],
            writes.join("")
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("tm {}\ntapes {}\nblank {}\n", self.name, self.tapes, self.blank());
        for (s, acc) in self.states.iter().zip(&self.accepting) {
            let _ = writeln!(out, "state {s}{}", if *acc { " accept" } else { "" });
        }
        let _ = writeln!(out, "initial {}", self.states[self.initial]);
        for t in &self.transitions {
            let _ = writeln!(out, "trans {}", self.describe(t));
        }
        out
    }
}

fn parse_tuple(s: &str, line: usize) -> Result<Vec<String>> {
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| parse_err(line, format!("expected a parenthesized tuple, found `{s}`")))?;
    Ok(inner.split(',').map(|x| x.trim().to_string()).collect())
}

pub fn parse_tm(text: &str) -> Result<TmSpec> {
    let mut tm: Option<TmSpec> = None;
    let (mut name, mut tapes, mut blank) = (String::from("tm"), 1usize, String::from("_"));
    let mut initial = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.split(';').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        let (kw, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        let spec = |tm: &mut Option<TmSpec>| -> Result<()> {
            if tm.is_none() {
                *tm = Some(TmSpec::new(&name, tapes, &blank)?);
            }
            Ok(())
        };
        match kw {
            "tm" if tm.is_none() => name = rest.to_string(),
            "tapes" if tm.is_none() => tapes = rest.parse().map_err(|_| parse_err(line, "bad tape count"))?,
            "blank" if tm.is_none() => blank = rest.to_string(),
            "state" => {
                spec(&mut tm)?;
                let mut parts = rest.split_whitespace();
                let s = parts.next().ok_or_else(|| parse_err(line, "missing state name"))?;
                let acc = match parts.next() {
                    None => false,
                    Some("accept") => true,
                    Some(o) => return Err(parse_err(line, format!("unexpected `{o}`"))),
                };
                tm.as_mut().expect("set").add_state(s, acc)?;
            }
            "initial" => initial = Some((rest.to_string(), line)),
            "trans" => {
                spec(&mut tm)?;
                let t = tm.as_mut().expect("set");
                let (lhs, rhs) = rest.split_once("->").ok_or_else(|| parse_err(line, "missing `->`"))?;
                let (from, reads) = lhs.trim().split_once(char::is_whitespace).ok_or_else(|| parse_err(line, "bad left side"))?;
                let reads = parse_tuple(reads.trim(), line)?;
                let (to, writes) = rhs.trim().split_once(char::is_whitespace).ok_or_else(|| parse_err(line, "bad right side"))?;
                let mut ws = Vec::new();
                for part in writes.split(')').map(str::trim).filter(|p| !p.is_empty()) {
                    let tup = parse_tuple(&format!("{part})"), line)?;
                    let [w, m] = tup.as_slice() else {
                        return Err(parse_err(line, "expected (symbol,move)"));
                    };
                    let mv = match m.as_str() {
                        "L" => Move::L,
                        "R" => Move::R,
                        "S" => Move::S,
                        o => return Err(parse_err(line, format!("bad move `{o}`"))),
                    };
                    ws.push((w.clone(), mv));
                }
                let reads: Vec<&str> = reads.iter().map(String::as_str).collect();
                let ws: Vec<(&str, Move)> = ws.iter().map(|(w, m)| (w.as_str(), *m)).collect();
                t.add_transition(from, &reads, to.trim(), &ws)
                    .map_err(|e| parse_err(line, e.to_string()))?;
            }
            _ => return Err(parse_err(line, format!("unexpected `{kw}`"))),
        }
    }
    let mut tm = tm.ok_or_else(|| parse_err(1, "no states"))?;
    if let Some((s, line)) = initial {
        tm.initial = tm.state(&s).map_err(|e| parse_err(line, e.to_string()))?;
    }
    tm.validate()?;
    Ok(tm)
}
