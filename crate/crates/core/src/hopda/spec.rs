//! Higher-order pushdown automata and their text format.
//!
//! ```text
//! hopda NAME
//! level 1
//! input a b
//! pds Z A
//! state p
//! state f accept
//! initial p [Z]
//! trans p a Z -> p push1 A
//! trans p eps Z -> f noop
//! ```

use std::fmt::Write as _;

use super::pds::{parse_pds, Npds};
use crate::error::parse_err;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Push(usize, u16),
    Pop(usize),
    Noop,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub from: usize,
    /// `None` for an ε-transition.
    pub input: Option<usize>,
    /// Required topmost letter.
    pub guard: u16,
    pub to: usize,
    pub op: Op,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopdaSpec {
    pub name: String,
    pub level: usize,
    pub input: Vec<String>,
    pub pds: Vec<String>,
    pub states: Vec<String>,
    pub accepting: Vec<bool>,
    pub initial: usize,
    pub initial_pds: Npds,
    pub rules: Vec<Rule>,
}

fn index(names: &[String], name: &str, what: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| Error::InvalidHopda(format!("unknown {what} `{name}`")))
}

impl HopdaSpec {
    /// A machine with no states; add states before rules.
    pub fn new(name: &str, level: usize, input: &[&str], pds: &[&str]) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidHopda("level must be at least 1".into()));
        }
        if pds.is_empty() {
            return Err(Error::InvalidHopda("empty pds alphabet".into()));
        }
        let own = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        Ok(HopdaSpec {
            name: name.into(),
            level,
            input: own(input),
            pds: own(pds),
            states: Vec::new(),
            accepting: Vec::new(),
            initial: 0,
            initial_pds: Npds::singleton(level, 0),
            rules: Vec::new(),
        })
    }

    pub fn add_state(&mut self, name: &str, accepting: bool) -> Result<usize> {
        if name.is_empty() || name.contains(char::is_whitespace) || self.states.iter().any(|s| s == name) {
            return Err(Error::InvalidHopda(format!("bad or duplicate state `{name}`")));
        }
        self.states.push(name.into());
        self.accepting.push(accepting);
        Ok(self.states.len() - 1)
    }

    pub fn state(&self, name: &str) -> Result<usize> {
        index(&self.states, name, "state")
    }

    pub fn letter(&self, name: &str) -> Result<u16> {
        index(&self.pds, name, "pds letter").map(|i| i as u16)
    }

    pub fn set_initial(&mut self, state: &str, pds: &str) -> Result<()> {
        self.initial = self.state(state)?;
        let p = parse_pds(pds, &self.pds)?;
        if p.level() != self.level {
            return Err(Error::InvalidHopda(format!("initial store has level {}", p.level())));
        }
        self.initial_pds = p;
        Ok(())
    }

    /// Adds a rule by names; `input` is `eps` for ε, `op` is `pushK X`,
    /// `popK` or `noop`.
    pub fn add_rule(&mut self, from: &str, input: &str, guard: &str, to: &str, op: &str) -> Result<()> {
        let from = self.state(from)?;
        let to = self.state(to)?;
        let input = match input {
            "eps" => None,
            a => Some(index(&self.input, a, "input letter")?),
        };
        let guard = self.letter(guard)?;
        let op = self.parse_op(op)?;
        self.push_rule(Rule {
            from,
            input,
            guard,
            to,
            op,
        })
    }

    pub fn push_rule(&mut self, r: Rule) -> Result<()> {
        let k = match r.op {
            Op::Push(k, a) => {
                if a as usize >= self.pds.len() {
                    return Err(Error::InvalidSymbol(format!("#{a}")));
                }
                k
            }
            Op::Pop(k) => k,
            Op::Noop => 1,
        };
        if k == 0 || k > self.level {
            return Err(Error::BadLevel { k, level: self.level });
        }
        if r.from >= self.states.len() || r.to >= self.states.len() || r.guard as usize >= self.pds.len() {
            return Err(Error::InvalidHopda("rule refers to unknown state or letter".into()));
        }
        self.rules.push(r);
        Ok(())
    }

    fn parse_op(&self, op: &str) -> Result<Op> {
        let mut parts = op.split_whitespace();
        let head = parts.next().unwrap_or("");
        let level = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::InvalidHopda(format!("bad operation `{op}`")))
        };
        let o = if head == "noop" {
            Op::Noop
        } else if let Some(k) = head.strip_prefix("push") {
            let a = parts.next().ok_or_else(|| Error::InvalidHopda(format!("`{op}` needs a letter")))?;
            Op::Push(level(k)?, self.letter(a)?)
        } else if let Some(k) = head.strip_prefix("pop") {
            Op::Pop(level(k)?)
        } else {
            return Err(Error::InvalidHopda(format!("bad operation `{op}`")));
        };
        if parts.next().is_some() {
            return Err(Error::InvalidHopda(format!("bad operation `{op}`")));
        }
        Ok(o)
    }

    /// The result of applying `op`, or `None` when it would empty the store.
    pub fn apply(&self, op: Op, p: &Npds) -> Result<Option<Npds>> {
        let r = match op {
            Op::Noop => Ok(p.clone()),
            Op::Push(k, a) => p.push(k, a),
            Op::Pop(k) => p.pop(k),
        };
        match r {
            Ok(q) => Ok(Some(q)),
            Err(Error::EmptyPds) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// One-step successors `(input, state, store)` in rule order.
    pub fn successors(&self, state: usize, p: &Npds) -> Result<Vec<(Option<usize>, usize, Npds)>> {
        let top = p.top();
        let mut out = Vec::new();
        for r in self.rules.iter().filter(|r| r.from == state && r.guard == top) {
            if let Some(q) = self.apply(r.op, p)? {
                out.push((r.input, r.to, q));
            }
        }
        Ok(out)
    }

    pub fn render_config(&self, state: usize, p: &Npds) -> String {
        format!("{} {}", self.states[state], p.render(&self.pds))
    }

    pub fn op_text(&self, op: Op) -> String {
        match op {
            Op::Push(k, a) => format!("push{k} {}", self.pds[a as usize]),
            Op::Pop(k) => format!("pop{k}"),
            Op::Noop => "noop".into(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "hopda {}", self.name);
        let _ = writeln!(out, "level {}", self.level);
        let _ = writeln!(out, "input {}", self.input.join(" "));
        let _ = writeln!(out, "pds {}", self.pds.join(" "));
        for (s, acc) in self.states.iter().zip(&self.accepting) {
            let _ = writeln!(out, "state {s}{}", if *acc { " accept" } else { "" });
        }
        if !self.states.is_empty() {
            let _ = writeln!(out, "initial {} {}", self.states[self.initial], self.initial_pds.render(&self.pds));
        }
        for r in &self.rules {
            let input = r.input.map_or("eps", |i| self.input[i].as_str());
            let _ = writeln!(
                out,
                "trans {} {input} {} -> {} {}",
                self.states[r.from],
                self.pds[r.guard as usize],
                self.states[r.to],
                self.op_text(r.op)
            );
        }
        out
    }
}

pub fn parse_hopda(text: &str) -> Result<HopdaSpec> {
    let mut name = String::from("hopda");
    let mut level = 1;
    let mut input: Vec<String> = Vec::new();
    let mut pds: Option<Vec<String>> = None;
    let mut h: Option<HopdaSpec> = None;
    let mut initial = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.split(';').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        let (kw, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        let ensure = |h: &mut Option<HopdaSpec>| -> Result<()> {
            if h.is_none() {
                let p = pds.clone().ok_or_else(|| parse_err(line, "`pds` must come before states"))?;
                let input: Vec<&str> = input.iter().map(String::as_str).collect();
                let p: Vec<&str> = p.iter().map(String::as_str).collect();
                *h = Some(HopdaSpec::new(&name, level, &input, &p).map_err(|e| parse_err(line, e.to_string()))?);
            }
            Ok(())
        };
        match kw {
            "hopda" if h.is_none() => name = rest.to_string(),
            "level" if h.is_none() => level = rest.parse().map_err(|_| parse_err(line, "bad level"))?,
            "input" if h.is_none() => input = rest.split_whitespace().map(String::from).collect(),
            "pds" if h.is_none() => pds = Some(rest.split_whitespace().map(String::from).collect()),
            "state" => {
                ensure(&mut h)?;
                let mut parts = rest.split_whitespace();
                let s = parts.next().ok_or_else(|| parse_err(line, "missing state name"))?;
                let acc = match parts.next() {
                    None => false,
                    Some("accept") => true,
                    Some(o) => return Err(parse_err(line, format!("unexpected `{o}`"))),
                };
                h.as_mut().expect("set").add_state(s, acc).map_err(|e| parse_err(line, e.to_string()))?;
            }
            "initial" => {
                let (s, p) = rest.split_once(char::is_whitespace).ok_or_else(|| parse_err(line, "expected state and store"))?;
                initial = Some((s.to_string(), p.trim().to_string(), line));
            }
            "trans" => {
                ensure(&mut h)?;
                let (lhs, rhs) = rest.split_once("->").ok_or_else(|| parse_err(line, "missing `->`"))?;
                let lhs: Vec<&str> = lhs.split_whitespace().collect();
                let [from, inp, guard] = lhs.as_slice() else {
                    return Err(parse_err(line, "expected `STATE INPUT GUARD`"));
                };
                let (to, op) = rhs.trim().split_once(char::is_whitespace).ok_or_else(|| parse_err(line, "expected `STATE OP`"))?;
                h.as_mut()
                    .expect("set")
                    .add_rule(from, inp, guard, to, op.trim())
                    .map_err(|e| parse_err(line, e.to_string()))?;
            }
            _ => return Err(parse_err(line, format!("unexpected `{kw}`"))),
        }
    }
    let mut h = h.ok_or_else(|| parse_err(0, "no states"))?;
    let (s, p, line) = initial.ok_or_else(|| parse_err(0, "missing `initial`"))?;
    h.set_initial(&s, &p).map_err(|e| parse_err(line, e.to_string()))?;
    Ok(h)
}
