//! Ordinals below ε₀ in Cantor normal form.
//!
//! `ω^{e₁}·m₁ + ... + ω^{eₖ}·mₖ` with `e₁ > ... > eₖ` and positive natural
//! coefficients; the exponents are themselves ordinals in normal form. The
//! text form writes `w` for ω:
//!
//! ```text
//! 0   5   w   w*3   w^2*3 + w + 5   w^w   w^{w + 1}*2
//! ```
//!
//! Exponents that are natural numbers or `w` are written bare, compound
//! exponents go in braces. The parser also accepts `ω`, `·`, missing spaces,
//! braces around any exponent and terms in non-normal order (`1 + w` is `w`).

mod fs;
mod parse;

pub use fs::{check_bachmann, sample_limits, shifted_fs, standard_fs, BachmannViolation};
pub use parse::parse_cnf;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// An ordinal below ε₀.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Cnf {
    terms: Vec<(Cnf, BigUint)>,
}

impl Cnf {
    pub fn zero() -> Cnf {
        Cnf::default()
    }

    pub fn one() -> Cnf {
        Cnf::nat(1u32)
    }

    pub fn nat(n: impl Into<BigUint>) -> Cnf {
        let n = n.into();
        if n.is_zero() {
            Cnf::zero()
        } else {
            Cnf {
                terms: vec![(Cnf::zero(), n)],
            }
        }
    }

    pub fn omega() -> Cnf {
        Cnf::omega_power(Cnf::one())
    }

    /// `ω^e`.
    pub fn omega_power(e: Cnf) -> Cnf {
        Cnf {
            terms: vec![(e, BigUint::one())],
        }
    }

    /// `ω^e·m`; zero when `m` is zero.
    pub fn term(e: Cnf, m: impl Into<BigUint>) -> Cnf {
        let m = m.into();
        if m.is_zero() {
            return Cnf::zero();
        }
        Cnf { terms: vec![(e, m)] }
    }

    /// `ω_k`: `ω_0 = 1`, `ω_{k+1} = ω^{ω_k}`.
    pub fn tower(k: usize) -> Cnf {
        (0..k).fold(Cnf::one(), |acc, _| Cnf::omega_power(acc))
    }

    /// Builds a normal form from terms given in decreasing exponent order.
    /// Zero coefficients are dropped; out-of-order input is summed instead.
    pub fn from_terms(terms: Vec<(Cnf, BigUint)>) -> Cnf {
        terms
            .into_iter()
            .fold(Cnf::zero(), |acc, (e, m)| acc.add(&Cnf::term(e, m)))
    }

    pub fn terms(&self) -> &[(Cnf, BigUint)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|(e, _)| e.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|(e, _)| !e.is_zero())
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.is_zero())
    }

    pub fn as_nat(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [(e, m)] if e.is_zero() => Some(m.clone()),
            _ => None,
        }
    }

    pub fn as_u64(&self) -> Option<u64> {
        self.as_nat().and_then(|n| n.to_u64())
    }

    /// Leading exponent; zero for the ordinal zero.
    pub fn degree(&self) -> Cnf {
        self.terms.first().map(|(e, _)| e.clone()).unwrap_or_default()
    }

    /// Exponent nesting depth: 0 for naturals, 1 below ω^ω, ...
    pub fn height(&self) -> usize {
        self.terms
            .iter()
            .map(|(e, _)| if e.is_zero() { 0 } else { 1 + e.height() })
            .max()
            .unwrap_or(0)
    }

    pub fn compare(&self, other: &Cnf) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            match a.0.compare(&b.0) {
                Ordering::Equal => {}
                o => return o,
            }
            match a.1.cmp(&b.1) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }

    /// Ordinal sum; smaller leading terms of `self` are absorbed by `other`.
    pub fn add(&self, other: &Cnf) -> Cnf {
        let Some((e, m)) = other.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<(Cnf, BigUint)> = Vec::new();
        for (a, n) in &self.terms {
            match a.compare(e) {
                Ordering::Greater => terms.push((a.clone(), n.clone())),
                Ordering::Equal => {
                    terms.push((e.clone(), n + m));
                    terms.extend(other.terms[1..].iter().cloned());
                    return Cnf { terms };
                }
                Ordering::Less => break,
            }
        }
        terms.extend(other.terms.iter().cloned());
        Cnf { terms }
    }

    /// Ordinal product `self · other`.
    pub fn mul(&self, other: &Cnf) -> Cnf {
        if self.is_zero() || other.is_zero() {
            return Cnf::zero();
        }
        let (a1, m1) = &self.terms[0];
        let mut out = Cnf::zero();
        for (b, n) in &other.terms {
            let piece = if b.is_zero() {
                let mut terms = self.terms.clone();
                terms[0].1 = m1 * n;
                Cnf { terms }
            } else {
                Cnf::term(a1.add(b), n.clone())
            };
            out = out.add(&piece);
        }
        out
    }

    /// `ω^self`.
    pub fn exp_omega(&self) -> Cnf {
        Cnf::omega_power(self.clone())
    }

    /// `self^n` for a natural exponent.
    pub fn pow_nat(&self, n: u64) -> Cnf {
        (0..n).fold(Cnf::one(), |acc, _| acc.mul(self))
    }

    pub fn succ(&self) -> Cnf {
        self.add(&Cnf::one())
    }

    /// The predecessor of a successor ordinal.
    pub fn pred(&self) -> Option<Cnf> {
        if !self.is_successor() {
            return None;
        }
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("successor has terms");
        last.1 -= 1u32;
        if last.1.is_zero() {
            terms.pop();
        }
        Some(Cnf { terms })
    }

    /// Splits `α + n` into the limit-or-zero part `α` and the finite tail `n`.
    pub fn split_finite(&self) -> (Cnf, BigUint) {
        match self.terms.last() {
            Some((e, m)) if e.is_zero() => {
                let mut terms = self.terms.clone();
                terms.pop();
                (Cnf { terms }, m.clone())
            }
            _ => (self.clone(), BigUint::zero()),
        }
    }
}

impl PartialOrd for Cnf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cnf {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl From<u64> for Cnf {
    fn from(n: u64) -> Cnf {
        Cnf::nat(n)
    }
}

impl fmt::Display for Cnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e.is_zero() {
                write!(f, "{m}")?;
                continue;
            }
            write!(f, "w")?;
            if *e != Cnf::one() {
                if e.as_nat().is_some() || *e == Cnf::omega() {
                    write!(f, "^{e}")?;
                } else {
                    write!(f, "^{{{e}}}")?;
                }
            }
            if !m.is_one() {
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

impl serde::Serialize for Cnf {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl std::str::FromStr for Cnf {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Cnf> {
        parse_cnf(s)
    }
}

#[cfg(test)]
mod tests;
