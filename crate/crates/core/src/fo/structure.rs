use std::collections::BTreeMap;

use crate::automata::{intersect, minimize, project, Automaton};
use crate::error::{Error, Result};

/// An automatic structure: a regular domain and regular relations over it.
#[derive(Clone, Debug)]
pub struct Structure {
    pub name: String,
    domain: Automaton,
    relations: BTreeMap<String, Automaton>,
}

const RESERVED: [&str; 2] = ["llex", "="];

impl Structure {
    pub fn new(name: impl Into<String>, domain: Automaton) -> Result<Self> {
        if domain.arity() != 1 {
            return Err(Error::ArityMismatch(format!("domain has arity {}", domain.arity())));
        }
        Ok(Structure {
            name: name.into(),
            domain: minimize(&domain),
            relations: BTreeMap::new(),
        })
    }

    /// Adds a relation after checking that every tape stays inside the domain.
    ///
    /// A relation over a sub-alphabet of the domain is re-indexed first.
    pub fn add_relation(&mut self, name: impl Into<String>, rel: Automaton) -> Result<()> {
        let name = name.into();
        if RESERVED.contains(&name.as_str()) {
            return Err(Error::ArityMismatch(format!("relation name `{name}` is reserved")));
        }
        let rel = if rel.alphabet() == self.domain.alphabet() {
            rel
        } else {
            rel.with_alphabet(self.domain.alphabet())?
        };
        for tape in 0..rel.arity() {
            let mut p = rel.clone();
            for other in (0..rel.arity()).rev() {
                if other != tape {
                    p = project(&p, other)?;
                }
            }
            if !p.is_subset_of(&self.domain)? {
                return Err(Error::OutsideDomain(name));
            }
        }
        self.relations.insert(name, minimize(&rel));
        Ok(())
    }

    /// Intersects `rel` with the domain on every tape.
    pub fn restrict_to_domain(&self, rel: &Automaton) -> Result<Automaton> {
        let rel = if rel.alphabet() == self.domain.alphabet() {
            rel.clone()
        } else {
            rel.with_alphabet(self.domain.alphabet())?
        };
        let k = rel.arity();
        let mut out = rel;
        for tape in 0..k {
            let mut d = self.domain.clone();
            for p in 0..k {
                if p != tape {
                    d = d.insert_tape(p)?;
                }
            }
            out = minimize(&intersect(&out, &d)?);
        }
        Ok(out)
    }

    pub fn with_relation(mut self, name: impl Into<String>, rel: Automaton) -> Result<Self> {
        self.add_relation(name, rel)?;
        Ok(self)
    }

    pub fn domain(&self) -> &Automaton {
        &self.domain
    }

    pub fn alphabet(&self) -> &[String] {
        self.domain.alphabet()
    }

    pub fn relation(&self, name: &str) -> Result<&Automaton> {
        self.relations
            .get(name)
            .ok_or_else(|| Error::UnknownRelation(name.to_string()))
    }

    pub fn relations(&self) -> impl Iterator<Item = (&str, &Automaton)> {
        self.relations.iter().map(|(k, v)| (k.as_str(), v))
    }
}
