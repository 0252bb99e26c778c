//! Line-oriented text format for automata.
//!
//! ```text
//! automaton NAME
//! arity K
//! alphabet s1 s2 ...
//! states N
//! initial I
//! accepting i j k
//! trans FROM (a1,...,aK) TO
//! ```
//!
//! Several automata may follow each other in one file. Blank lines and lines
//! starting with `//` are ignored. `#` is the pad symbol inside letter tuples.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{Automaton, LetterTuple, Sym};
use crate::error::{parse_err, Error, Result};

#[derive(Default)]
struct Pending {
    name: String,
    start_line: usize,
    arity: Option<usize>,
    alphabet: Option<Vec<String>>,
    states: Option<usize>,
    initial: Option<usize>,
    accepting: Vec<usize>,
    trans: Vec<(usize, usize, Vec<String>, usize)>,
}

impl Pending {
    fn finish(self) -> Result<(String, Automaton)> {
        let line = self.start_line;
        let arity = self.arity.ok_or_else(|| parse_err(line, "missing `arity`"))?;
        let alphabet = self.alphabet.ok_or_else(|| parse_err(line, "missing `alphabet`"))?;
        let states = self.states.ok_or_else(|| parse_err(line, "missing `states`"))?;
        let initial = self.initial.ok_or_else(|| parse_err(line, "missing `initial`"))?;
        if states == 0 || initial >= states {
            return Err(parse_err(line, "initial state out of range"));
        }
        let mut a = Automaton::new(arity, alphabet).map_err(|e| parse_err(line, e.to_string()))?;
        for _ in 1..states {
            a.add_state(false);
        }
        a.set_initial(initial);
        for &s in &self.accepting {
            if s >= states {
                return Err(parse_err(line, format!("accepting state {s} out of range")));
            }
            a.set_accepting(s, true);
        }
        // (state, index within that state's row) -> source line
        let mut origin: HashMap<(usize, usize), usize> = HashMap::new();
        for (tline, from, syms, to) in self.trans {
            if from >= states || to >= states {
                return Err(parse_err(tline, "state out of range"));
            }
            if syms.len() != arity {
                return Err(parse_err(tline, format!("letter of arity {} in automaton of arity {arity}", syms.len())));
            }
            let ids: Vec<Sym> = syms
                .iter()
                .map(|s| a.symbol(s))
                .collect::<Result<_>>()
                .map_err(|e| parse_err(tline, e.to_string()))?;
            let letter = LetterTuple::new(ids).map_err(|e| parse_err(tline, e.to_string()))?;
            origin.insert((from, a.transitions(from).len()), tline);
            a.add_transition(from, letter, to).map_err(|e| parse_err(tline, e.to_string()))?;
        }
        if let Some((s, i)) = a.padding_violation() {
            let tline = origin.get(&(s, i)).copied().unwrap_or(line);
            return Err(parse_err(tline, "padding invariant violated (tape resumes after `#` or letter is all `#`)"));
        }
        Ok((self.name, a))
    }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| parse_err(line, format!("bad {what}")))
}

/// Parses every automaton in `text`.
pub fn parse_automata(text: &str) -> Result<Vec<(String, Automaton)>> {
    let mut out = Vec::new();
    let mut cur: Option<Pending> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with("//") {
            continue;
        }
        let mut toks = l.split_whitespace();
        let kw = toks.next().unwrap_or_default();
        if kw == "automaton" {
            if let Some(p) = cur.take() {
                out.push(p.finish()?);
            }
            let name = toks.next().ok_or_else(|| parse_err(line, "missing automaton name"))?;
            cur = Some(Pending {
                name: name.to_string(),
                start_line: line,
                ..Default::default()
            });
            continue;
        }
        let p = cur.as_mut().ok_or_else(|| parse_err(line, "expected `automaton NAME`"))?;
        match kw {
            "arity" => p.arity = Some(parse_usize(toks.next(), line, "arity")?),
            "alphabet" => p.alphabet = Some(toks.map(String::from).collect()),
            "states" => p.states = Some(parse_usize(toks.next(), line, "state count")?),
            "initial" => p.initial = Some(parse_usize(toks.next(), line, "initial state")?),
            "accepting" => {
                for t in toks {
                    p.accepting.push(parse_usize(Some(t), line, "accepting state")?);
                }
            }
            "trans" => {
                let rest = l["trans".len()..].trim();
                let open = rest.find('(').ok_or_else(|| parse_err(line, "missing `(`"))?;
                let close = rest.rfind(')').ok_or_else(|| parse_err(line, "missing `)`"))?;
                let from = parse_usize(Some(rest[..open].trim()), line, "source state")?;
                let to = parse_usize(Some(rest[close + 1..].trim()), line, "target state")?;
                let syms: Vec<String> = rest[open + 1..close]
                    .split(',')
                    .map(|s| s.trim().to_string())
                    .collect();
                p.trans.push((line, from, syms, to));
            }
            other => return Err(parse_err(line, format!("unknown keyword `{other}`"))),
        }
    }
    if let Some(p) = cur.take() {
        out.push(p.finish()?);
    }
    Ok(out)
}

/// Parses a file expected to contain exactly one automaton.
pub fn parse_automaton(text: &str) -> Result<(String, Automaton)> {
    let mut all = parse_automata(text)?;
    match all.len() {
        1 => Ok(all.pop().expect("one element")),
        n => Err(Error::Parse {
            line: 1,
            msg: format!("expected one automaton, found {n}"),
        }),
    }
}

pub fn write_automaton(name: &str, a: &Automaton) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "automaton {name}");
    let _ = writeln!(s, "arity {}", a.arity());
    let _ = writeln!(s, "alphabet {}", a.alphabet().join(" "));
    let _ = writeln!(s, "states {}", a.num_states());
    let _ = writeln!(s, "initial {}", a.initial());
    let acc: Vec<String> = (0..a.num_states())
        .filter(|&q| a.is_accepting(q))
        .map(|q| q.to_string())
        .collect();
    let _ = writeln!(s, "accepting {}", acc.join(" "));
    for q in 0..a.num_states() {
        for (l, t) in a.transitions(q) {
            let syms: Vec<&str> = l.symbols().iter().map(|&x| a.symbol_name(x)).collect();
            let _ = writeln!(s, "trans {q} ({}) {t}", syms.join(","));
        }
    }
    s
}
