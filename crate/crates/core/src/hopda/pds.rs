//! Higher-order pushdown stores.
//!
//! A 0-pds is a letter and an (n+1)-pds is a nonempty sequence of n-pds.
//! `push^k(a)` copies the topmost (k-1)-pds inside the topmost k-pds and then
//! overwrites the topmost letter with `a`; `pop^k` removes the topmost
//! (k-1)-pds. Popping never empties a store.

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Npds {
    Letter(u16),
    Stack(Vec<Npds>),
}

impl Npds {
    /// The n-pds whose every level holds the single letter `a`.
    pub fn singleton(level: usize, a: u16) -> Npds {
        (0..level).fold(Npds::Letter(a), |p, _| Npds::Stack(vec![p]))
    }

    pub fn level(&self) -> usize {
        match self {
            Npds::Letter(_) => 0,
            Npds::Stack(s) => 1 + s[0].level(),
        }
    }

    /// Level homogeneity and non-emptiness.
    pub fn is_well_formed(&self) -> bool {
        match self {
            Npds::Letter(_) => true,
            Npds::Stack(s) => {
                !s.is_empty() && s.iter().all(Npds::is_well_formed) && s.iter().all(|p| p.level() == s[0].level())
            }
        }
    }

    pub fn top(&self) -> u16 {
        match self {
            Npds::Letter(a) => *a,
            Npds::Stack(s) => s.last().expect("nonempty").top(),
        }
    }

    fn set_top(&mut self, a: u16) {
        match self {
            Npds::Letter(b) => *b = a,
            Npds::Stack(s) => s.last_mut().expect("nonempty").set_top(a),
        }
    }

    /// Total number of letters.
    pub fn size(&self) -> usize {
        match self {
            Npds::Letter(_) => 1,
            Npds::Stack(s) => s.iter().map(Npds::size).sum(),
        }
    }

    pub fn push(&self, k: usize, a: u16) -> Result<Npds> {
        let mut p = self.clone();
        p.push_mut(k, a)?;
        Ok(p)
    }

    pub fn pop(&self, k: usize) -> Result<Npds> {
        let mut p = self.clone();
        p.pop_mut(k)?;
        Ok(p)
    }

    fn check_k(&self, k: usize) -> Result<()> {
        let level = self.level();
        if k == 0 || k > level {
            return Err(Error::BadLevel { k, level });
        }
        Ok(())
    }

    pub fn push_mut(&mut self, k: usize, a: u16) -> Result<()> {
        self.check_k(k)?;
        let level = self.level();
        let Npds::Stack(s) = self else { unreachable!("level >= 1") };
        if k < level {
            return s.last_mut().expect("nonempty").push_mut(k, a);
        }
        let mut copy = s.last().expect("nonempty").clone();
        copy.set_top(a);
        s.push(copy);
        Ok(())
    }

    pub fn pop_mut(&mut self, k: usize) -> Result<()> {
        self.check_k(k)?;
        let level = self.level();
        let Npds::Stack(s) = self else { unreachable!("level >= 1") };
        if k < level {
            return s.last_mut().expect("nonempty").pop_mut(k);
        }
        if s.len() < 2 {
            return Err(Error::EmptyPds);
        }
        s.pop();
        Ok(())
    }

    pub fn render(&self, alphabet: &[String]) -> String {
        match self {
            Npds::Letter(a) => alphabet.get(*a as usize).cloned().unwrap_or_else(|| format!("?{a}")),
            Npds::Stack(s) => {
                let inner: Vec<String> = s.iter().map(|p| p.render(alphabet)).collect();
                format!("[{}]", inner.join(","))
            }
        }
    }
}

/// Parses `[[Z,A],[Z]]`-style text over `alphabet`.
pub fn parse_pds(text: &str, alphabet: &[String]) -> Result<Npds> {
    let toks = tokenize(text);
    let mut pos = 0;
    let p = parse_at(&toks, &mut pos, alphabet)?;
    if pos != toks.len() {
        return Err(Error::InvalidHopda(format!("trailing input in `{text}`")));
    }
    if !p.is_well_formed() {
        return Err(Error::InvalidHopda(format!("`{text}` is empty or mixes levels")));
    }
    Ok(p)
}

fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for c in text.chars() {
        if matches!(c, '[' | ']' | ',') || c.is_whitespace() {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
            if !c.is_whitespace() {
                out.push(c.to_string());
            }
        } else {
            cur.push(c);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_at(toks: &[String], pos: &mut usize, alphabet: &[String]) -> Result<Npds> {
    let bad = |m: &str| Error::InvalidHopda(m.to_string());
    let t = toks.get(*pos).ok_or_else(|| bad("unexpected end of store"))?;
    *pos += 1;
    if t != "[" {
        let i = alphabet
            .iter()
            .position(|a| a == t)
            .ok_or_else(|| Error::InvalidSymbol(t.clone()))?;
        return Ok(Npds::Letter(i as u16));
    }
    let mut items = Vec::new();
    loop {
        if toks.get(*pos).map(String::as_str) == Some("]") {
            *pos += 1;
            return Ok(Npds::Stack(items));
        }
        if !items.is_empty() {
            if toks.get(*pos).map(String::as_str) != Some(",") {
                return Err(bad("expected `,` or `]`"));
            }
            *pos += 1;
        }
        items.push(parse_at(toks, pos, alphabet)?);
    }
}
