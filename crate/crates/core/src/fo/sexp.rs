//! S-expression syntax for formulas.
//!
//! ```text
//! true | false
//! (rel R x y ...)     or the shorthand (R x y ...)
//! (= x y) (llex x y)
//! (not f) (and f ...) (or f ...) (implies f g) (iff f g)
//! (exists x f) (forall x f) (exists-inf x f)
//! ```
//!
//! Quantifiers accept a list of variables: `(exists (x y) f)`.

use super::formula::*;
use crate::error::{parse_err, Result};

#[derive(Debug, Clone)]
enum Sexp {
    Atom(String, usize),
    List(Vec<Sexp>, usize),
}

fn tokenize(text: &str) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.split(';').next().unwrap_or_default();
        let mut cur = String::new();
        for c in line.chars() {
            match c {
                '(' | ')' => {
                    if !cur.is_empty() {
                        out.push((std::mem::take(&mut cur), line_no));
                    }
                    out.push((c.to_string(), line_no));
                }
                c if c.is_whitespace() => {
                    if !cur.is_empty() {
                        out.push((std::mem::take(&mut cur), line_no));
                    }
                }
                c => cur.push(c),
            }
        }
        if !cur.is_empty() {
            out.push((cur, line_no));
        }
    }
    out
}

fn read(tokens: &[(String, usize)], pos: &mut usize) -> Result<Sexp> {
    let Some((tok, line)) = tokens.get(*pos) else {
        let line = tokens.last().map_or(1, |t| t.1);
        return Err(parse_err(line, "unexpected end of formula"));
    };
    *pos += 1;
    match tok.as_str() {
        "(" => {
            let mut items = Vec::new();
            loop {
                match tokens.get(*pos) {
                    Some((t, _)) if t == ")" => {
                        *pos += 1;
                        return Ok(Sexp::List(items, *line));
                    }
                    Some(_) => items.push(read(tokens, pos)?),
                    None => return Err(parse_err(*line, "unclosed `(`")),
                }
            }
        }
        ")" => Err(parse_err(*line, "unexpected `)`")),
        _ => Ok(Sexp::Atom(tok.clone(), *line)),
    }
}

fn atom(s: &Sexp) -> Result<String> {
    match s {
        Sexp::Atom(a, _) => Ok(a.clone()),
        Sexp::List(_, l) => Err(parse_err(*l, "expected a variable")),
    }
}

fn vars(s: &Sexp) -> Result<Vec<String>> {
    match s {
        Sexp::Atom(a, _) => Ok(vec![a.clone()]),
        Sexp::List(items, _) if !items.is_empty() => items.iter().map(atom).collect(),
        Sexp::List(_, l) => Err(parse_err(*l, "empty variable list")),
    }
}

fn arity(items: &[Sexp], n: usize, head: &str, line: usize) -> Result<()> {
    if items.len() != n + 1 {
        return Err(parse_err(line, format!("`{head}` takes {n} arguments")));
    }
    Ok(())
}

fn convert(s: &Sexp) -> Result<Formula> {
    let (items, line) = match s {
        Sexp::Atom(a, l) => {
            return match a.as_str() {
                "true" => Ok(Formula::True),
                "false" => Ok(Formula::False),
                _ => Err(parse_err(*l, format!("unexpected atom `{a}`"))),
            }
        }
        Sexp::List(items, l) => (items, *l),
    };
    let head = match items.first() {
        Some(Sexp::Atom(h, _)) => h.as_str(),
        _ => return Err(parse_err(line, "expected an operator")),
    };
    let sub = |i: usize| convert(&items[i]);
    Ok(match head {
        "not" => {
            arity(items, 1, head, line)?;
            not(sub(1)?)
        }
        "and" | "or" => {
            let fs = items[1..].iter().map(convert).collect::<Result<Vec<_>>>()?;
            if head == "and" {
                Formula::And(fs)
            } else {
                Formula::Or(fs)
            }
        }
        "implies" => {
            arity(items, 2, head, line)?;
            implies(sub(1)?, sub(2)?)
        }
        "iff" => {
            arity(items, 2, head, line)?;
            let (a, b) = (sub(1)?, sub(2)?);
            and([implies(a.clone(), b.clone()), implies(b, a)])
        }
        "=" | "llex" => {
            arity(items, 2, head, line)?;
            let (x, y) = (atom(&items[1])?, atom(&items[2])?);
            if head == "=" {
                Formula::Eq(x, y)
            } else {
                Formula::Llex(x, y)
            }
        }
        "exists" | "forall" | "exists-inf" => {
            arity(items, 2, head, line)?;
            let mut f = sub(2)?;
            for v in vars(&items[1])?.iter().rev() {
                f = match head {
                    "exists" => exists(v, f),
                    "forall" => forall(v, f),
                    _ => exists_inf(v, f),
                };
            }
            f
        }
        "rel" => {
            if items.len() < 3 {
                return Err(parse_err(line, "`rel` needs a name and arguments"));
            }
            let args = items[2..].iter().map(atom).collect::<Result<Vec<_>>>()?;
            Formula::Rel(atom(&items[1])?, args)
        }
        name => {
            if items.len() < 2 {
                return Err(parse_err(line, format!("relation `{name}` needs arguments")));
            }
            let args = items[1..].iter().map(atom).collect::<Result<Vec<_>>>()?;
            Formula::Rel(name.to_string(), args)
        }
    })
}

/// Parses one formula. Comments run from `;` to end of line.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let tokens = tokenize(text);
    let mut pos = 0;
    let s = read(&tokens, &mut pos)?;
    if let Some((_, line)) = tokens.get(pos) {
        return Err(parse_err(*line, "trailing input after formula"));
    }
    convert(&s)
}
