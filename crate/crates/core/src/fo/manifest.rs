//! Structure manifests.
//!
//! ```text
//! structure NAME
//! load FILE              automaton file, relative to the manifest
//! domain AUT
//! relation REL ARITY AUT
//! ```
//!
//! `load` may repeat; automata are referenced by the names they are declared
//! with in the loaded files.

use std::collections::HashMap;
use std::path::Path;

use super::Structure;
use crate::automata::text::parse_automata;
use crate::automata::Automaton;
use crate::error::{parse_err, Error, Result};

/// Reads a manifest from disk, resolving `load` lines next to it.
pub fn load_manifest(path: &Path) -> Result<Structure> {
    let text = std::fs::read_to_string(path)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    parse_manifest(&text, |file| {
        std::fs::read_to_string(dir.join(file)).map_err(|e| Error::Io(format!("{file}: {e}")))
    })
}

/// Parses a manifest, fetching automaton files through `read`.
pub fn parse_manifest(text: &str, mut read: impl FnMut(&str) -> Result<String>) -> Result<Structure> {
    let mut pool: HashMap<String, Automaton> = HashMap::new();
    let mut name: Option<String> = None;
    let mut structure: Option<Structure> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with("//") {
            continue;
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        let lookup = |pool: &HashMap<String, Automaton>, n: &str| {
            pool.get(n)
                .cloned()
                .ok_or_else(|| parse_err(line, format!("no automaton named `{n}`")))
        };
        match toks.as_slice() {
            ["structure", n] => name = Some(n.to_string()),
            ["load", file] => {
                let body = read(file)?;
                let autos = parse_automata(&body).map_err(|e| match e {
                    Error::Parse { line: l2, msg } => parse_err(line, format!("{file}:{l2}: {msg}")),
                    other => other,
                })?;
                pool.extend(autos);
            }
            ["domain", aut] => {
                let n = name.clone().ok_or_else(|| parse_err(line, "`domain` before `structure`"))?;
                let d = lookup(&pool, aut)?;
                structure = Some(Structure::new(n, d).map_err(|e| parse_err(line, e.to_string()))?);
            }
            ["relation", rel, arity, aut] => {
                let s = structure
                    .as_mut()
                    .ok_or_else(|| parse_err(line, "`relation` before `domain`"))?;
                let k: usize = arity.parse().map_err(|_| parse_err(line, "bad arity"))?;
                let a = lookup(&pool, aut)?;
                if a.arity() != k {
                    return Err(parse_err(
                        line,
                        format!("relation `{rel}` declared with arity {k} but automaton has arity {}", a.arity()),
                    ));
                }
                s.add_relation(*rel, a).map_err(|e| match e {
                    Error::OutsideDomain(_) => e,
                    other => parse_err(line, other.to_string()),
                })?;
            }
            _ => return Err(parse_err(line, format!("unrecognized manifest line `{l}`"))),
        }
    }
    structure.ok_or_else(|| parse_err(1, "manifest declares no domain"))
}
