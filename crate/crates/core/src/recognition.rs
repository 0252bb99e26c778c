//! Order types of automatic well-orders.
//!
//! The procedure iterates finite condensation. Two elements are equivalent
//! when only finitely many elements lie between them; in a well-order every
//! class has type `n` or `ω`. Each round records the size of the topmost
//! class when it is finite, collapses every class to its length-lexicographic
//! least member, and continues on the quotient until it is finite. The type is
//! then rebuilt from the innermost level outwards:
//!
//! ```text
//! type(L_i) = ω·(type(L_{i+1}) - 1) + t_i   if the top class has t_i > 0 elements
//! type(L_i) = ω·type(L_{i+1})               otherwise
//! ```
//!
//! A class without a least element, or a quotient equal to its input, shows
//! the order is not a well-order.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::automata::Automaton;
use crate::fo::{self, and, exists, exists_inf, forall, implies, llex, not, or, rel, Formula, Structure};
use crate::ordinal::Cnf;
use crate::{Error, Result};

/// Cap on the size of a finite top class.
pub const CLASS_SIZE_CAP: usize = 100_000;

/// An automatic structure whose relation `<` is meant to be a strict linear order.
#[derive(Clone, Debug)]
pub struct OrderPresentation {
    structure: Structure,
}

impl OrderPresentation {
    pub fn new(structure: Structure) -> Result<Self> {
        let less = structure.relation("<")?;
        if less.arity() != 2 {
            return Err(Error::ArityMismatch("`<` must be binary".into()));
        }
        Ok(OrderPresentation { structure })
    }

    pub fn from_parts(name: &str, domain: Automaton, less: Automaton) -> Result<Self> {
        OrderPresentation::new(Structure::new(name, domain)?.with_relation("<", less)?)
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn domain(&self) -> &Automaton {
        self.structure.domain()
    }

    pub fn less(&self) -> &Automaton {
        self.structure.relation("<").expect("checked at construction")
    }

    pub fn name(&self) -> &str {
        &self.structure.name
    }
}

fn lt(x: &str, y: &str) -> Formula {
    rel("<", &[x, y])
}

/// Only finitely many elements lie between `x` and `y`.
pub fn near(x: &str, y: &str) -> Formula {
    let between = or([and([lt(x, "z_"), lt("z_", y)]), and([lt(y, "z_"), lt("z_", x)])]);
    not(exists_inf("z_", between))
}

/// `x` is the llex-least element of its class.
fn representative(x: &str) -> Formula {
    forall("r_", implies(near(x, "r_"), not(llex("r_", x))))
}

/// Checks irreflexivity, transitivity and totality; the error names the
/// first property that fails.
pub fn check_linear(p: &OrderPresentation) -> Result<()> {
    let props = [
        ("irreflexivity", forall("x", not(lt("x", "x")))),
        (
            "transitivity",
            forall("x", forall("y", forall("z", implies(and([lt("x", "y"), lt("y", "z")]), lt("x", "z"))))),
        ),
        (
            "totality",
            forall("x", forall("y", or([lt("x", "y"), lt("y", "x"), fo::eq("x", "y")]))),
        ),
    ];
    for (name, f) in props {
        if !fo::eval_sentence(&p.structure, &f)? {
            return Err(Error::NotLinear(name.into()));
        }
    }
    Ok(())
}

/// The quotient by the finite-distance equivalence, on class representatives.
pub fn finite_condensation(p: &OrderPresentation) -> Result<OrderPresentation> {
    let s = &p.structure;
    let domain = fo::define_set(s, &representative("x"))?;
    let less = fo::compile(s, &and([lt("x", "y"), representative("x"), representative("y")]))?;
    debug_assert_eq!(less.vars, ["x", "y"]);
    let q = Structure::new(format!("{}/~", s.name), domain)?.with_relation("<", less.automaton)?;
    Ok(OrderPresentation { structure: q })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassCheck {
    AllFiniteOrOmega,
    BadClass { witness: String },
}

/// Every class has a least element and no element has infinitely many
/// predecessors inside its class.
pub fn classify_classes(p: &OrderPresentation) -> Result<ClassCheck> {
    let s = &p.structure;
    let no_least = not(exists(
        "y",
        and([near("x", "y"), forall("w", implies(near("y", "w"), not(lt("w", "y"))))]),
    ));
    let inf_below = exists_inf("y", and([near("x", "y"), lt("y", "x")]));
    for bad in [no_least, inf_below] {
        let set = fo::define_set(s, &bad)?;
        if let Some(w) = set.enumerate(1).into_iter().next() {
            return Ok(ClassCheck::BadClass {
                witness: set.display_word(&w[0]),
            });
        }
    }
    Ok(ClassCheck::AllFiniteOrOmega)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// Condensation left the order unchanged, so every class is a singleton.
    DenseFixpoint,
    /// An element whose class has no least element or is not of type ≤ ω.
    BadCondensationClass { witness: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    WellOrder { cnf: Cnf },
    NotWellOrder { evidence: Evidence },
    BudgetExceeded { level: usize },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::WellOrder { cnf } => write!(f, "well-order {cnf}"),
            Verdict::NotWellOrder { evidence: Evidence::DenseFixpoint } => write!(f, "not-well-order dense-fixpoint"),
            Verdict::NotWellOrder {
                evidence: Evidence::BadCondensationClass { witness },
            } => write!(f, "not-well-order bad-class witness={witness:?}"),
            Verdict::BudgetExceeded { level } => write!(f, "budget-exceeded level={level}"),
        }
    }
}

/// One condensation round.
#[derive(Clone, Debug)]
pub struct Level {
    pub domain: Automaton,
    pub less: Automaton,
    /// Size of the topmost class when finite, else 0. `None` on the final,
    /// finite level.
    pub top_class: Option<BigUint>,
}

#[derive(Clone, Debug)]
pub struct RecognitionResult {
    pub verdict: Verdict,
    pub levels: Vec<Level>,
}

impl RecognitionResult {
    pub fn cnf(&self) -> Option<&Cnf> {
        match &self.verdict {
            Verdict::WellOrder { cnf } => Some(cnf),
            _ => None,
        }
    }
}

/// The default level cap: the state count of the `<` automaton.
pub fn default_max_levels(p: &OrderPresentation) -> usize {
    p.less().num_states().max(1)
}

pub fn recognize_default(p: &OrderPresentation) -> Result<RecognitionResult> {
    recognize(p, default_max_levels(p))
}

pub fn recognize(p: &OrderPresentation, max_levels: usize) -> Result<RecognitionResult> {
    check_linear(p)?;
    let mut levels: Vec<Level> = Vec::new();
    let mut tops: Vec<BigUint> = Vec::new();
    let mut cur = p.clone();
    let budget = |levels: Vec<Level>, level: usize| RecognitionResult {
        verdict: Verdict::BudgetExceeded { level },
        levels,
    };
    let base = loop {
        let level = levels.len();
        if level > max_levels {
            return Ok(budget(levels, level));
        }
        let step = condense_step(&cur);
        let (top, next) = match step {
            Err(Error::StateBudgetExceeded(_)) => return Ok(budget(levels, level)),
            Err(e) => return Err(e),
            Ok(Step::Bad(witness)) => {
                return Ok(RecognitionResult {
                    verdict: Verdict::NotWellOrder {
                        evidence: Evidence::BadCondensationClass { witness },
                    },
                    levels,
                })
            }
            Ok(Step::Finite(n)) => {
                levels.push(Level {
                    domain: cur.domain().clone(),
                    less: cur.less().clone(),
                    top_class: None,
                });
                break n;
            }
            Ok(Step::TooLarge) => return Ok(budget(levels, level)),
            Ok(Step::Next(top, next)) => (top, next),
        };
        levels.push(Level {
            domain: cur.domain().clone(),
            less: cur.less().clone(),
            top_class: Some(top.clone()),
        });
        if next.domain().equivalent(cur.domain())? {
            return Ok(RecognitionResult {
                verdict: Verdict::NotWellOrder {
                    evidence: Evidence::DenseFixpoint,
                },
                levels,
            });
        }
        tops.push(top);
        cur = next;
    };
    let mut ty = Cnf::nat(base);
    for t in tops.iter().rev() {
        ty = if *t > BigUint::from(0u32) {
            let below = ty.pred().expect("a finite top class makes the quotient a successor");
            Cnf::omega().mul(&below).add(&Cnf::nat(t.clone()))
        } else {
            Cnf::omega().mul(&ty)
        };
    }
    assert!(
        ty < Cnf::tower(2),
        "automatic well-order of type {ty} is not below w^w"
    );
    Ok(RecognitionResult {
        verdict: Verdict::WellOrder { cnf: ty },
        levels,
    })
}

enum Step {
    Bad(String),
    Finite(usize),
    TooLarge,
    Next(BigUint, OrderPresentation),
}

fn condense_step(cur: &OrderPresentation) -> Result<Step> {
    if let ClassCheck::BadClass { witness } = classify_classes(cur)? {
        return Ok(Step::Bad(witness));
    }
    let s = cur.structure();
    if !s.domain().is_infinite() {
        let n = s.domain().enumerate(usize::MAX).len();
        return Ok(Step::Finite(n));
    }
    // elements of the top class: near some maximum
    let is_max = |m: &str| forall("u_", or([lt("u_", m), fo::eq("u_", m)]));
    let top_class = fo::define_set(s, &exists("m_", and([is_max("m_"), near("m_", "x")])))?;
    let top = if top_class.is_infinite() {
        return Ok(Step::TooLarge);
    } else {
        let n = top_class.enumerate(CLASS_SIZE_CAP + 1).len();
        if n > CLASS_SIZE_CAP {
            return Ok(Step::TooLarge);
        }
        BigUint::from(n)
    };
    Ok(Step::Next(top, finite_condensation(cur)?))
}

/// Presentations are isomorphic iff their order types coincide.
pub fn isomorphic(p: &OrderPresentation, q: &OrderPresentation) -> Result<bool> {
    let a = recognize_default(p)?;
    let b = recognize_default(q)?;
    match (a.cnf(), b.cnf()) {
        (Some(x), Some(y)) => Ok(x == y),
        _ => Err(Error::NotComparable),
    }
}

#[cfg(test)]
mod tests;
