//! A notation system of type `w+1` on `{(n,m) : m <= f(n)} ∪ {w}` with
//! `(n,m) ≺ (n',m')` iff `n < n'` or `n = n'` and `m > m'`, and `w[n] = (n,0)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::fgh::NotationSystem;
use crate::{Error, Result};

use super::FSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum P1 {
    Pair(u64, BigUint),
    Top,
}

impl fmt::Display for P1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1::Pair(n, m) => write!(f, "({n},{m})"),
            P1::Top => write!(f, "w"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct OmegaPlusOneSystem {
    pub spec: FSpec,
}

/// Builds the system after checking that `f` is monotone on `0..=tested`.
pub fn omega_plus_one_system(spec: FSpec, tested: u64) -> Result<OmegaPlusOneSystem> {
    for n in 0..tested {
        let (a, b) = (spec.f.eval(n), spec.f.eval(n + 1));
        if a > b {
            return Err(Error::IllFormedSystem(format!("f({n}) = {a} > f({}) = {b}", n + 1)));
        }
    }
    Ok(OmegaPlusOneSystem { spec })
}

impl OmegaPlusOneSystem {
    /// Membership by the time-bounded scheme: run `f(n)` for `s(m)` steps;
    /// if it has not finished, `(n,m)` is a member, otherwise compare.
    pub fn contains(&self, n: u64, m: &BigUint) -> bool {
        match self.spec.f.run(n, (self.spec.s)(m)) {
            None => true,
            Some(v) => *m <= v,
        }
    }

    pub fn least(&self) -> P1 {
        P1::Pair(0, self.spec.f.eval(0))
    }

    /// Number of elements below `(n,m)`: `n + Σ_{y<n} f(y) + (f(n) - m)`.
    pub fn position(&self, n: u64, m: &BigUint) -> BigUint {
        let below: BigUint = (0..n).map(|y| self.spec.f.eval(y) + 1u32).sum();
        below + self.spec.f.eval(n) - m
    }
}

impl NotationSystem for OmegaPlusOneSystem {
    type Value = P1;

    fn name(&self) -> String {
        format!("w+1[f={}]", self.spec.f)
    }

    fn is_zero(&self, a: &P1) -> bool {
        *a == self.least()
    }

    fn is_limit(&self, a: &P1) -> bool {
        *a == P1::Top
    }

    fn pred(&self, a: &P1) -> Result<P1> {
        match a {
            P1::Top => Err(Error::IllFormedSystem("w has no predecessor".into())),
            P1::Pair(n, m) => {
                let up = m + 1u32;
                if self.contains(*n, &up) {
                    Ok(P1::Pair(*n, up))
                } else if *n > 0 {
                    Ok(P1::Pair(n - 1, BigUint::zero()))
                } else {
                    Err(Error::IllFormedSystem(format!("{a} is the least element")))
                }
            }
        }
    }

    fn fs(&self, lambda: &P1, n: u64) -> Result<P1> {
        match lambda {
            P1::Top => Ok(P1::Pair(n, BigUint::zero())),
            other => Err(Error::NotALimit(other.to_string())),
        }
    }

    fn compare(&self, a: &P1, b: &P1) -> Ordering {
        match (a, b) {
            (P1::Top, P1::Top) => Ordering::Equal,
            (P1::Top, _) => Ordering::Greater,
            (_, P1::Top) => Ordering::Less,
            (P1::Pair(n, m), P1::Pair(n2, m2)) => n.cmp(n2).then_with(|| m2.cmp(m)),
        }
    }
}
