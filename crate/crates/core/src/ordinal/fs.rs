use std::cmp::Ordering;

use num_bigint::BigUint;
use serde::Serialize;

use super::Cnf;
use crate::error::{Error, Result};

/// Standard fundamental sequences:
///
/// ```text
/// (α + ω^{β+1})[n] = α + ω^β·(n+1)
/// (α + ω^β)[n]     = α + ω^{β[n]}     for limit β
/// ```
pub fn standard_fs(lambda: &Cnf, n: u64) -> Result<Cnf> {
    let Some((e, m)) = lambda.terms().last() else {
        return Err(Error::NotALimit(lambda.to_string()));
    };
    if e.is_zero() {
        return Err(Error::NotALimit(lambda.to_string()));
    }
    let mut head = lambda.terms().to_vec();
    let last = head.last_mut().expect("nonempty");
    last.1 = m - 1u32;
    let alpha = Cnf::from_terms(head);
    let tail = match e.pred() {
        Some(beta) => Cnf::term(beta, BigUint::from(n) + 1u32),
        None => Cnf::omega_power(standard_fs(e, n)?),
    };
    Ok(alpha.add(&tail))
}

/// The standard system read one step later: `λ[n] := λ[n+1]`.
pub fn shifted_fs(lambda: &Cnf, n: u64) -> Result<Cnf> {
    standard_fs(lambda, n + 1)
}

/// First failure found by [`check_bachmann`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BachmannViolation {
    /// `λ[n] ≥ λ`.
    NotBelow { lambda: Cnf, n: u64, value: Cnf },
    /// `λ[n+1] ≤ λ[n]`; `value` is `λ[n+1]`.
    NotIncreasing { lambda: Cnf, n: u64, value: Cnf },
    /// A limit `α ∈ (λ[n], λ[n+1]]` with `α[0] < λ[n]`.
    Bachmann { lambda: Cnf, n: u64, alpha: Cnf },
}

impl BachmannViolation {
    /// `(λ, n, α)`, where `α` is the offending ordinal.
    pub fn triple(&self) -> (&Cnf, u64, &Cnf) {
        match self {
            BachmannViolation::NotBelow { lambda, n, value }
            | BachmannViolation::NotIncreasing { lambda, n, value } => (lambda, *n, value),
            BachmannViolation::Bachmann { lambda, n, alpha } => (lambda, *n, alpha),
        }
    }
}

/// Limits up to `bound` built from at most three terms with coefficients 1
/// or 2, plus `bound` itself. Exponents are naturals up to 5, extended by a few
/// transfinite ones when `bound` reaches ω^ω.
pub fn sample_limits(bound: &Cnf) -> Vec<Cnf> {
    let mut exps: Vec<Cnf> = (0..=5u64).map(Cnf::from).collect();
    if *bound >= Cnf::omega_power(Cnf::omega()) {
        let w = Cnf::omega();
        exps.extend([w.clone(), w.succ(), w.mul(&Cnf::from(2)), Cnf::omega_power(Cnf::from(2))]);
    }
    exps.sort();
    exps.reverse();
    let mut out = Vec::new();
    let mut cur: Vec<(Cnf, BigUint)> = Vec::new();
    fn rec(exps: &[Cnf], start: usize, cur: &mut Vec<(Cnf, BigUint)>, out: &mut Vec<Cnf>) {
        if !cur.is_empty() {
            out.push(Cnf::from_terms(cur.clone()));
        }
        if cur.len() == 3 {
            return;
        }
        for i in start..exps.len() {
            for m in 1..=2u32 {
                cur.push((exps[i].clone(), BigUint::from(m)));
                rec(exps, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(&exps, 0, &mut cur, &mut out);
    out.push(bound.clone());
    out.retain(|a| a.is_limit() && a <= bound);
    out.sort();
    out.dedup();
    out
}

/// Checks a fundamental-sequence assignment on the sampled limits up to
/// `bound`: `λ[n] < λ`, strict growth in `n < samples`, and for every sampled
/// limit `α ∈ (λ[n], λ[n+1]]` that `α[0] ≥ λ[n]`.
///
/// `fs` returns `None` where it is undefined, which is reported as
/// [`Error::MissingFs`] when the check needs that value.
pub fn check_bachmann(
    fs: impl Fn(&Cnf, u64) -> Option<Cnf>,
    bound: &Cnf,
    samples: u64,
) -> Result<Option<BachmannViolation>> {
    let grid = sample_limits(bound);
    let get = |l: &Cnf, n: u64| fs(l, n).ok_or_else(|| Error::MissingFs(format!("{l}[{n}]")));
    for lambda in &grid {
        let seq: Vec<Cnf> = (0..=samples).map(|n| get(lambda, n)).collect::<Result<_>>()?;
        for n in 0..samples {
            let (a, b) = (&seq[n as usize], &seq[n as usize + 1]);
            if a >= lambda {
                return Ok(Some(BachmannViolation::NotBelow {
                    lambda: lambda.clone(),
                    n,
                    value: a.clone(),
                }));
            }
            if b <= a {
                return Ok(Some(BachmannViolation::NotIncreasing {
                    lambda: lambda.clone(),
                    n,
                    value: b.clone(),
                }));
            }
        }
        for n in 0..samples {
            let (lo, hi) = (&seq[n as usize], &seq[n as usize + 1]);
            let mut inside: Vec<&Cnf> = grid.iter().filter(|a| *a > lo && *a <= hi).collect();
            if hi.is_limit() && !inside.contains(&hi) {
                inside.push(hi);
                inside.sort();
            }
            for alpha in inside {
                let a0 = get(alpha, 0)?;
                if a0.compare(lo) == Ordering::Less {
                    return Ok(Some(BachmannViolation::Bachmann {
                        lambda: lambda.clone(),
                        n,
                        alpha: alpha.clone(),
                    }));
                }
            }
        }
    }
    Ok(None)
}
