//! The fast-growing hierarchy over an arbitrary notation system.
//!
//! ```text
//! F_0(x)     = x + 1
//! F_{a+1}(x) = F_a^x(x)
//! F_l(x)     = F_{l[x]}(x)
//! ```
//!
//! Evaluation is iterative and metered by a [`Budget`]; running out of fuel
//! gives [`Outcome::Exceeded`] rather than an error.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::ordinal::{self, Cnf};
use crate::{Error, Result};

/// Notations with zero, successor and limit cases and fundamental sequences.
pub trait NotationSystem {
    type Value: Clone + fmt::Display;

    fn name(&self) -> String;
    fn is_zero(&self, a: &Self::Value) -> bool;
    fn is_limit(&self, a: &Self::Value) -> bool;
    /// The predecessor of a successor notation.
    fn pred(&self, a: &Self::Value) -> Result<Self::Value>;
    /// The `n`-th element of the fundamental sequence of a limit.
    fn fs(&self, lambda: &Self::Value, n: u64) -> Result<Self::Value>;
    fn compare(&self, a: &Self::Value, b: &Self::Value) -> Ordering;
}

/// Cantor normal forms with `w^(a+1)[n] = w^a·(n+1)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct StandardSystem;

/// Cantor normal forms with `w^(a+1)[n] = w^a·(n+2)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ShiftedSystem;

macro_rules! cnf_system {
    ($t:ty, $name:expr, $fs:path) => {
        impl NotationSystem for $t {
            type Value = Cnf;

            fn name(&self) -> String {
                $name.into()
            }

            fn is_zero(&self, a: &Cnf) -> bool {
                a.is_zero()
            }

            fn is_limit(&self, a: &Cnf) -> bool {
                a.is_limit()
            }

            fn pred(&self, a: &Cnf) -> Result<Cnf> {
                a.pred().ok_or_else(|| Error::IllFormedSystem(format!("{a} has no predecessor")))
            }

            fn fs(&self, lambda: &Cnf, n: u64) -> Result<Cnf> {
                $fs(lambda, n)
            }

            fn compare(&self, a: &Cnf, b: &Cnf) -> Ordering {
                a.cmp(b)
            }
        }
    };
}

cnf_system!(StandardSystem, "std", ordinal::standard_fs);
cnf_system!(ShiftedSystem, "shifted", ordinal::shifted_fs);

/// Fuel for one evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_value: BigUint,
    pub max_steps: u64,
}

impl Budget {
    pub fn new(max_value: BigUint, max_steps: u64) -> Result<Budget> {
        if max_value.is_zero() || max_steps == 0 {
            return Err(Error::IllFormedSystem("budget bounds must be positive".into()));
        }
        Ok(Budget { max_value, max_steps })
    }

    pub fn steps(max_steps: u64) -> Budget {
        Budget {
            max_value: BigUint::one() << 4096u32,
            max_steps: max_steps.max(1),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::steps(10_000_000)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Value {
        #[serde(serialize_with = "big_str")]
        value: BigUint,
        steps: u64,
    },
    /// Fuel ran out. `depth` is the number of pending iterations and
    /// `largest` the largest intermediate value reached.
    Exceeded {
        steps: u64,
        depth: usize,
        #[serde(serialize_with = "big_str")]
        largest: BigUint,
    },
}

fn big_str<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl Outcome {
    pub fn value(&self) -> Option<&BigUint> {
        match self {
            Outcome::Value { value, .. } => Some(value),
            Outcome::Exceeded { .. } => None,
        }
    }

    /// The value, or the largest intermediate value when fuel ran out. Every
    /// intermediate value is at most the final result.
    pub fn lower_bound(&self) -> &BigUint {
        match self {
            Outcome::Value { value, .. } => value,
            Outcome::Exceeded { largest, .. } => largest,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Value { value, .. } => write!(f, "{value}"),
            Outcome::Exceeded { steps, largest, .. } => write!(f, "exceeded after {steps} steps (reached {largest})"),
        }
    }
}

/// Evaluates `F_alpha(x)`.
pub fn eval_f<N: NotationSystem>(ns: &N, alpha: &N::Value, x: &BigUint, budget: &Budget) -> Result<Outcome> {
    // pending: apply F_b to the current result k more times
    let mut pending: Vec<(N::Value, BigUint)> = Vec::new();
    let mut a = alpha.clone();
    let mut v = x.clone();
    let mut steps = 0u64;
    let mut largest = v.clone();
    loop {
        steps += 1;
        if steps > budget.max_steps || v > budget.max_value {
            return Ok(Outcome::Exceeded {
                steps: steps - 1,
                depth: pending.len(),
                largest,
            });
        }
        let result = if ns.is_zero(&a) {
            Some(&v + 1u32)
        } else if ns.is_limit(&a) {
            let Some(n) = v.to_u64() else {
                return Ok(Outcome::Exceeded {
                    steps,
                    depth: pending.len(),
                    largest,
                });
            };
            let b = ns.fs(&a, n)?;
            if ns.compare(&b, &a) != Ordering::Less {
                return Err(Error::IllFormedSystem(format!("{a}[{n}] = {b} is not below {a}")));
            }
            a = b;
            None
        } else {
            let p = ns.pred(&a)?;
            if ns.compare(&p, &a) != Ordering::Less {
                return Err(Error::IllFormedSystem(format!("predecessor {p} of {a} is not below it")));
            }
            if v.is_zero() {
                Some(v.clone())
            } else if ns.is_zero(&p) {
                // F_1(v) = v + v
                Some(&v << 1u32)
            } else if !ns.is_limit(&p) && ns.is_zero(&ns.pred(&p)?) {
                // F_2(v) = F_1^v(v) = v * 2^v
                match v.to_u64() {
                    Some(n) if n <= budget.max_value.bits() => Some(&v << n),
                    _ => {
                        return Ok(Outcome::Exceeded {
                            steps,
                            depth: pending.len(),
                            largest,
                        })
                    }
                }
            } else {
                pending.push((p.clone(), &v - 1u32));
                a = p;
                None
            }
        };
        let Some(r) = result else { continue };
        if r > largest {
            largest = r.clone();
        }
        v = r;
        loop {
            match pending.pop() {
                None => return Ok(Outcome::Value { value: v, steps }),
                Some((b, k)) if k.is_zero() => drop(b),
                Some((b, k)) => {
                    pending.push((b.clone(), k - 1u32));
                    a = b;
                    break;
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointComparison {
    pub x: u64,
    pub left: Outcome,
    pub right: Outcome,
    /// `left` compared to `right`, when both are known.
    #[serde(serialize_with = "ord_str")]
    pub relation: Option<Ordering>,
}

fn ord_str<S: serde::Serializer>(o: &Option<Ordering>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(match o {
        Some(Ordering::Less) => "<",
        Some(Ordering::Equal) => "=",
        Some(Ordering::Greater) => ">",
        None => "?",
    })
}

/// Compares `F^{ns1}_alpha` and `F^{ns2}_beta` at each sample point, using
/// the lower bound of an unfinished side when it already exceeds the other
/// value. This is a finite report; it says nothing about eventual domination.
pub fn dominates_at<N: NotationSystem, M: NotationSystem>(
    ns1: &N,
    alpha: &N::Value,
    ns2: &M,
    beta: &M::Value,
    xs: &[u64],
    budget: &Budget,
) -> Result<Vec<PointComparison>> {
    xs.iter()
        .map(|&x| {
            let bx = BigUint::from(x);
            let left = eval_f(ns1, alpha, &bx, budget)?;
            let right = eval_f(ns2, beta, &bx, budget)?;
            let relation = match (left.value(), right.value()) {
                (Some(l), Some(r)) => Some(l.cmp(r)),
                (Some(l), None) if right.lower_bound() > l => Some(Ordering::Less),
                (None, Some(r)) if left.lower_bound() > r => Some(Ordering::Greater),
                _ => None,
            };
            Ok(PointComparison { x, left, right, relation })
        })
        .collect()
}

/// Renders a comparison report as a table.
pub fn render_report(rows: &[PointComparison]) -> String {
    let mut out = String::from("x\tleft\trel\tright\n");
    for r in rows {
        let rel = match r.relation {
            Some(Ordering::Less) => "<",
            Some(Ordering::Equal) => "=",
            Some(Ordering::Greater) => ">",
            None => "?",
        };
        out.push_str(&format!("{}\t{}\t{}\t{}\n", r.x, r.left, rel, r.right));
    }
    out
}

#[cfg(test)]
mod tests;
