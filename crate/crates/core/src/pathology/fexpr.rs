//! Small monotone functions with step-counted evaluation.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Pow;

use crate::error::parse_err;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FExpr {
    /// `n + k`
    Add(u64),
    /// `k * n`
    Mul(u64),
    /// `n ^ k`
    Power(u32),
    /// `k ^ n`
    Exp(u64),
    /// Listed values `f(0), f(1), ...`, then `n` past the end of the list.
    Table(Vec<u64>),
}

impl FExpr {
    /// Runs the computation of `f(n)` for at most `steps` steps. One step is
    /// one loop iteration, and `f(n)` takes `n` of them.
    pub fn run(&self, n: u64, steps: u64) -> Option<BigUint> {
        if n > steps {
            return None;
        }
        Some(self.eval(n))
    }

    pub fn eval(&self, n: u64) -> BigUint {
        let bn = BigUint::from(n);
        match self {
            FExpr::Add(k) => bn + *k,
            FExpr::Mul(k) => bn * *k,
            FExpr::Power(k) => bn.pow(*k),
            FExpr::Exp(k) => BigUint::from(*k).pow(n as u32),
            FExpr::Table(t) => usize::try_from(n).ok().and_then(|i| t.get(i)).map_or(bn, |&v| BigUint::from(v)),
        }
    }

    /// `g(x) = min { y : f(y) > x }`, searching `y` up to `x + 1`.
    pub fn slow_inverse(&self, x: u64) -> u64 {
        let bx = BigUint::from(x);
        (0..=x + 1).find(|&y| self.eval(y) > bx).unwrap_or(x + 1)
    }
}

impl fmt::Display for FExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FExpr::Add(0) => write!(f, "n"),
            FExpr::Add(k) => write!(f, "n+{k}"),
            FExpr::Mul(k) => write!(f, "{k}*n"),
            FExpr::Power(k) => write!(f, "n^{k}"),
            FExpr::Exp(k) => write!(f, "{k}^n"),
            FExpr::Table(t) => {
                let items: Vec<String> = t.iter().map(u64::to_string).collect();
                write!(f, "[{}]", items.join(","))
            }
        }
    }
}

impl FromStr for FExpr {
    type Err = Error;

    /// Accepts `n`, `n+K`, `K*n`, `n*K`, `n^K`, `K^n` and `[v0,v1,...]`.
    fn from_str(s: &str) -> Result<FExpr> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let num = |x: &str| x.parse::<u64>().map_err(|_| parse_err(1, format!("bad number `{x}` in `{s}`")));
        if let Some(body) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let vals = body.split(',').filter(|x| !x.is_empty()).map(num).collect::<Result<Vec<u64>>>()?;
            return Ok(FExpr::Table(vals));
        }
        if t == "n" {
            return Ok(FExpr::Add(0));
        }
        if let Some(k) = t.strip_prefix("n+") {
            return Ok(FExpr::Add(num(k)?));
        }
        if let Some(k) = t.strip_suffix("*n") {
            return Ok(FExpr::Mul(num(k)?));
        }
        if let Some(k) = t.strip_prefix("n*") {
            return Ok(FExpr::Mul(num(k)?));
        }
        if let Some(k) = t.strip_prefix("n^") {
            let k = num(k)?;
            return Ok(FExpr::Power(u32::try_from(k).map_err(|_| parse_err(1, "exponent too large"))?));
        }
        if let Some(k) = t.strip_suffix("^n") {
            return Ok(FExpr::Exp(num(k)?));
        }
        Err(parse_err(1, format!("unsupported function `{s}`")))
    }
}

/// A monotone function with a step bound `s`: whenever the computation of
/// `f(n)` has not finished after `s(m)` steps, `f(n) >= m`.
#[derive(Clone)]
pub struct FSpec {
    pub f: FExpr,
    pub s: Arc<dyn Fn(&BigUint) -> u64 + Send + Sync>,
}

impl FSpec {
    /// Uses `s(m) = m`, which is sound whenever `f(n) >= n`.
    pub fn new(f: FExpr) -> FSpec {
        FSpec {
            f,
            s: Arc::new(|m: &BigUint| u64::try_from(m).unwrap_or(u64::MAX)),
        }
    }

    pub fn two_pow() -> FSpec {
        FSpec::new(FExpr::Exp(2))
    }
}

impl fmt::Debug for FSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FSpec({})", self.f)
    }
}

