//! Kreisel's ordering: `x ≺ y` iff `(x < y ∧ ∀z<x π₀(z)) ∨ (y < x ∧ ∃z<y ¬π₀(z))`.
//!
//! Naturals are identified with binary words in llex order (`0 ↔ ε`,
//! `1 ↔ 0`, `2 ↔ 1`, `3 ↔ 00`, ...). With a slow inverse `g` the quantifier
//! bounds become `z < g(x)` and `z < g(y)`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::automata::builders::words_over;
use crate::automata::{complement, intersect, Automaton, Word};
use crate::fo::{self, and, exists, forall, implies, llex, not, or, rel, Structure};
use crate::recognition::OrderPresentation;
use crate::{Error, Result};

use super::FExpr;

/// The `n`-th binary word in llex order.
pub fn nat_to_word(n: u64) -> String {
    let b = format!("{:b}", u128::from(n) + 1);
    b[1..].to_string()
}

pub fn word_to_nat(w: &str) -> Result<u64> {
    if w.chars().any(|c| c != '0' && c != '1') {
        return Err(Error::InvalidSymbol(w.to_string()));
    }
    let v = u128::from_str_radix(&format!("1{w}"), 2).map_err(|_| Error::InvalidSymbol(w.to_string()))?;
    u64::try_from(v - 1).map_err(|_| Error::InvalidSymbol(w.to_string()))
}

pub fn binary_alphabet() -> Vec<String> {
    Automaton::char_alphabet("01")
}

type Callback = Arc<dyn Fn(u64) -> Option<bool> + Send + Sync>;

#[derive(Clone)]
pub enum PiKind {
    /// Returns `None` when it cannot decide, which counts as divergence.
    Callback(Callback),
    /// An arity-1 automaton over `{0,1}`.
    Regular(Automaton),
}

/// The matrix `π₀` of a universal sentence `∀z π₀(z)`.
#[derive(Clone)]
pub struct PiPredicate {
    pub kind: PiKind,
    pub description: String,
}

impl fmt::Debug for PiPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PiPredicate({})", self.description)
    }
}

impl PiPredicate {
    pub fn always() -> PiPredicate {
        PiPredicate {
            kind: PiKind::Callback(Arc::new(|_| Some(true))),
            description: "true".into(),
        }
    }

    /// `π₀(z) ⇔ z ≠ v`.
    pub fn except(v: u64) -> PiPredicate {
        PiPredicate {
            kind: PiKind::Callback(Arc::new(move |z| Some(z != v))),
            description: format!("except={v}"),
        }
    }

    pub fn callback(description: &str, f: impl Fn(u64) -> Option<bool> + Send + Sync + 'static) -> PiPredicate {
        PiPredicate {
            kind: PiKind::Callback(Arc::new(f)),
            description: description.into(),
        }
    }

    pub fn regular(description: &str, a: Automaton) -> Result<PiPredicate> {
        if a.arity() != 1 {
            return Err(Error::ArityMismatch("pi0 automaton must have arity 1".into()));
        }
        let a = a.with_alphabet(&binary_alphabet())?;
        Ok(PiPredicate {
            kind: PiKind::Regular(a),
            description: description.into(),
        })
    }

    /// All binary words except the listed ones.
    pub fn regular_except(words: &[&str]) -> Result<PiPredicate> {
        let ab = binary_alphabet();
        let mut bad = Automaton::empty(1, ab.clone())?;
        for w in words {
            let a = Automaton::empty(1, ab.clone())?;
            let single = crate::automata::builders::singleton(ab.clone(), &a.word(w)?)?;
            bad = crate::automata::union(&bad, &single)?;
        }
        let good = intersect(&complement(&bad), &words_over(ab, &["0", "1"])?)?;
        PiPredicate::regular(&format!("not in {words:?}"), good)
    }

    pub fn eval(&self, z: u64) -> Result<bool> {
        match &self.kind {
            PiKind::Callback(f) => f(z).ok_or_else(|| Error::PredicateDiverged(format!("{} at {z}", self.description))),
            PiKind::Regular(a) => {
                let w: Word = a.word(&nat_to_word(z))?;
                a.accepts(&[w])
            }
        }
    }

    /// The least counterexample below `bound`, if any.
    pub fn first_failure(&self, bound: u64) -> Result<Option<u64>> {
        for z in 0..bound {
            if !self.eval(z)? {
                return Ok(Some(z));
            }
        }
        Ok(None)
    }
}

#[derive(Clone, Debug)]
pub struct KreiselOrder {
    pub pi0: PiPredicate,
    /// Derives the slow inverse `g(x) = min{y : f(y) > x}` from `f`.
    pub g_from: Option<FExpr>,
}

impl KreiselOrder {
    pub fn new(pi0: PiPredicate) -> KreiselOrder {
        KreiselOrder { pi0, g_from: None }
    }

    pub fn with_slow_inverse(pi0: PiPredicate, f: FExpr) -> KreiselOrder {
        KreiselOrder { pi0, g_from: Some(f) }
    }

    fn bound(&self, x: u64) -> u64 {
        match &self.g_from {
            Some(f) => f.slow_inverse(x),
            None => x,
        }
    }

    fn all_good_below(&self, b: u64) -> Result<bool> {
        Ok(self.pi0.first_failure(b)?.is_none())
    }

    /// `Less` means `x ≺ y`.
    pub fn compare(&self, x: u64, y: u64) -> Result<Ordering> {
        if x == y {
            return Ok(Ordering::Equal);
        }
        let prec = |x: u64, y: u64| -> Result<bool> {
            Ok((x < y && self.all_good_below(self.bound(x))?) || (y < x && !self.all_good_below(self.bound(y))?))
        };
        match (prec(x, y)?, prec(y, x)?) {
            (true, false) => Ok(Ordering::Less),
            (false, true) => Ok(Ordering::Greater),
            _ => unreachable!("exactly one disjunct applies to distinct elements"),
        }
    }

    /// Walks `≺`-predecessors, taking at each step the least larger natural
    /// (within a window of 16) that is `≺`-below the current one. Returns a
    /// chain of `max_len` elements or `None`.
    pub fn find_descent(&self, start: u64, max_len: usize) -> Result<Option<Vec<u64>>> {
        let mut chain = vec![start];
        while chain.len() < max_len {
            let cur = *chain.last().expect("non-empty");
            let mut next = None;
            for c in cur + 1..=cur + 16 {
                if self.compare(c, cur)? == Ordering::Less {
                    next = Some(c);
                    break;
                }
            }
            match next {
                Some(c) => chain.push(c),
                None => return Ok(None),
            }
        }
        Ok(Some(chain))
    }
}

/// The structure `({0,1}*, P)` with `P` the regular `π₀`.
fn base_structure(pi0: &PiPredicate) -> Result<Structure> {
    let PiKind::Regular(a) = &pi0.kind else {
        return Err(Error::ArityMismatch("kreisel_as_automatic needs a regular pi0".into()));
    };
    let ab = binary_alphabet();
    let mut s = Structure::new(format!("kreisel[{}]", pi0.description), words_over(ab, &["0", "1"])?)?;
    let p = s.restrict_to_domain(a)?;
    s.add_relation("P", p)?;
    Ok(s)
}

/// The ordering as an automatic presentation, compiled from its definition.
pub fn kreisel_as_automatic(pi0: &PiPredicate) -> Result<OrderPresentation> {
    let s = base_structure(pi0)?;
    let good_below = |x: &str| forall("z", implies(llex("z", x), rel("P", &["z"])));
    let bad_below = |y: &str| exists("z", and([llex("z", y), not(rel("P", &["z"]))]));
    let def = or([
        and([llex("x", "y"), good_below("x")]),
        and([llex("y", "x"), bad_below("y")]),
    ]);
    let c = fo::compile(&s, &def)?;
    debug_assert_eq!(c.vars, ["x", "y"]);
    OrderPresentation::new(s.with_relation("<", c.automaton)?)
}

/// `{y : ∃z<y ¬π₀(z)}`: the elements above the least counterexample. When
/// `π₀` fails somewhere this set has no `≺`-least element.
pub fn descending_region(pi0: &PiPredicate) -> Result<Automaton> {
    let s = base_structure(pi0)?;
    fo::define_set(&s, &exists("z", and([llex("z", "y"), not(rel("P", &["z"]))])))
}
