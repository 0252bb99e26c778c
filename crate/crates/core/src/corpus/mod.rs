//! Bundled structures, formulas and order presentations, with independent
//! checks against brute force.

pub mod brute;
pub mod orders;
pub mod structures;

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::automata::Word;
use crate::fo::{self, Structure};
use crate::recognition::{self, Evidence, Verdict};
use crate::{Error, Result};

pub use orders::CorpusOrder;

/// Word length of the brute-force fragment.
pub const FRAGMENT_LEN: usize = 6;
/// Maximum length of words assigned to free variables.
pub const ASSIGN_LEN: usize = 3;
/// Elements compared when checking a well-order against its decoder.
pub const SOUNDNESS_PREFIX: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoCheck {
    pub structure: String,
    pub formula: String,
    pub assignments: usize,
    pub mismatches: Vec<String>,
}

/// Compares the compiled formula with brute force on the fragment.
pub fn check_fo_case(s: &Structure, frag: &brute::Fragment, formula: &str) -> Result<FoCheck> {
    let f = fo::parse_formula(formula)?;
    let c = fo::compile(s, &f)?;
    let mut mismatches = Vec::new();
    let mut assignments = 0;
    if let Some(t) = c.truth() {
        assignments = 1;
        if t != frag.eval(&f, &mut HashMap::new()) {
            mismatches.push(format!("sentence: compiled {t}"));
        }
    } else {
        let pool: Vec<usize> = (0..frag.words.len()).filter(|&i| frag.words[i].len() <= ASSIGN_LEN).collect();
        let k = c.vars.len();
        let mut idx = vec![0usize; k];
        'outer: loop {
            let ws: Vec<Word> = idx.iter().map(|&i| frag.words[pool[i]].clone()).collect();
            let mut env: HashMap<String, usize> = c.vars.iter().cloned().zip(idx.iter().map(|&i| pool[i])).collect();
            let got = c.automaton.accepts(&ws)?;
            assignments += 1;
            if got != frag.eval(&f, &mut env) {
                let shown: Vec<String> = ws.iter().map(|w| s.domain().display_word(w)).collect();
                mismatches.push(format!("{:?} = {:?}: compiled {got}", c.vars, shown));
            }
            for j in 0..k {
                idx[j] += 1;
                if idx[j] < pool.len() {
                    continue 'outer;
                }
                idx[j] = 0;
            }
            break;
        }
    }
    Ok(FoCheck {
        structure: s.name.clone(),
        formula: formula.to_string(),
        assignments,
        mismatches,
    })
}

pub fn check_fo_corpus() -> Result<Vec<FoCheck>> {
    let structures = structures::all_structures()?;
    let frags: Vec<brute::Fragment> = structures.iter().map(|s| brute::Fragment::new(s, FRAGMENT_LEN)).collect();
    structures::FO_CASES
        .iter()
        .map(|(name, formula)| {
            let i = structures
                .iter()
                .position(|s| s.name == *name)
                .ok_or_else(|| Error::UnknownRelation(name.to_string()))?;
            check_fo_case(&structures[i], &frags[i], formula)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct OrderCheck {
    pub name: String,
    pub verdict: Verdict,
    pub levels: usize,
    pub ok: bool,
    pub detail: String,
}

/// Decoder soundness: on the first elements in llex order the decoder is
/// strictly monotone for `<` and stays below `alpha`.
pub fn decoder_agrees(c: &CorpusOrder, n: usize) -> Result<std::result::Result<(), String>> {
    let (Some(alpha), Some(decode)) = (&c.expected, &c.decode) else {
        return Ok(Err("no decoder".into()));
    };
    let d = c.order.domain();
    let less = c.order.less();
    let elems: Vec<Word> = d.enumerate(n).into_iter().map(|mut t| t.remove(0)).collect();
    let vals: Vec<_> = elems.iter().map(|w| decode(&d.display_word(w))).collect();
    for (w, v) in elems.iter().zip(&vals) {
        if v >= alpha {
            return Ok(Err(format!("{} decodes to {v}, not below {alpha}", d.display_word(w))));
        }
    }
    for i in 0..elems.len() {
        for j in 0..elems.len() {
            let lt = less.accepts(&[elems[i].clone(), elems[j].clone()])?;
            if lt != (vals[i] < vals[j]) {
                return Ok(Err(format!(
                    "{} < {} is {lt} but decodes to {} and {}",
                    d.display_word(&elems[i]),
                    d.display_word(&elems[j]),
                    vals[i],
                    vals[j]
                )));
            }
        }
    }
    Ok(Ok(()))
}

/// Checks the evidence behind a non-well-order verdict.
pub fn evidence_holds(c: &CorpusOrder, res: &recognition::RecognitionResult) -> Result<std::result::Result<(), String>> {
    match &res.verdict {
        Verdict::NotWellOrder {
            evidence: Evidence::BadCondensationClass { witness },
        } => {
            let d = c.order.domain();
            let x = d.word(witness)?;
            let near = fo::compile(c.order.structure(), &recognition::near("x", "y"))?;
            let below: Vec<Word> = d
                .enumerate_up_to(8)
                .into_iter()
                .map(|mut t| t.remove(0))
                .filter(|y| {
                    c.order.less().accepts(&[y.clone(), x.clone()]).unwrap_or(false)
                        && near.automaton.accepts(&[x.clone(), y.clone()]).unwrap_or(false)
                })
                .collect();
            if below.len() < 5 {
                return Ok(Err(format!("only {} class members below {witness}", below.len())));
            }
            let min_of = |ws: &[&Word]| -> Option<Word> {
                ws.iter()
                    .find(|y| ws.iter().all(|z| *z == **y || !c.order.less().accepts(&[(*z).clone(), (**y).clone()]).unwrap_or(true)))
                    .map(|y| (*y).clone())
            };
            let short: Vec<&Word> = below.iter().filter(|y| y.len() <= 7).collect();
            let all: Vec<&Word> = below.iter().collect();
            if min_of(&short) == min_of(&all) {
                return Ok(Err(format!("class below {witness} has a stable minimum")));
            }
            Ok(Ok(()))
        }
        Verdict::NotWellOrder {
            evidence: Evidence::DenseFixpoint,
        } => {
            let last = res.levels.last().ok_or(Error::NotComparable)?;
            let p = recognition::OrderPresentation::from_parts("last", last.domain.clone(), last.less.clone())?;
            let q = recognition::finite_condensation(&p)?;
            if q.domain().equivalent(p.domain())? {
                Ok(Ok(()))
            } else {
                Ok(Err("condensation changed the domain".into()))
            }
        }
        other => Ok(Err(format!("unexpected verdict {other}"))),
    }
}

pub fn check_order(c: &CorpusOrder) -> Result<OrderCheck> {
    let res = recognition::recognize_default(&c.order)?;
    let (ok, detail) = match (&c.expected, &res.verdict) {
        (Some(a), Verdict::WellOrder { cnf }) if a == cnf => match decoder_agrees(c, SOUNDNESS_PREFIX)? {
            Ok(()) => (true, format!("decoder agrees on {SOUNDNESS_PREFIX} elements")),
            Err(e) => (false, e),
        },
        (Some(a), v) => (false, format!("expected well-order {a}, got {v}")),
        (None, Verdict::NotWellOrder { .. }) => match evidence_holds(c, &res)? {
            Ok(()) => (true, "evidence checked".into()),
            Err(e) => (false, e),
        },
        (None, v) => (false, format!("expected a non-well-order, got {v}")),
    };
    Ok(OrderCheck {
        name: c.name.clone(),
        verdict: res.verdict,
        levels: res.levels.len(),
        ok,
        detail,
    })
}

/// Runs every corpus check and renders a deterministic report.
/// Returns the report and the number of failures.
pub fn run_corpus() -> Result<(String, usize)> {
    let mut out = String::new();
    let mut failures = 0;
    for c in check_fo_corpus()? {
        let ok = c.mismatches.is_empty();
        failures += usize::from(!ok);
        let _ = writeln!(
            out,
            "{} fo {} {} assignments={}",
            if ok { "PASS" } else { "FAIL" },
            c.structure,
            c.formula,
            c.assignments
        );
        for m in &c.mismatches {
            let _ = writeln!(out, "    {m}");
        }
    }
    let mut cnfs = Vec::new();
    for c in orders::well_orders()?.iter().chain(orders::non_well_orders()?.iter()) {
        let r = check_order(c)?;
        failures += usize::from(!r.ok);
        let _ = writeln!(
            out,
            "{} order {} {} levels={} ({})",
            if r.ok { "PASS" } else { "FAIL" },
            r.name,
            r.verdict,
            r.levels,
            r.detail
        );
        if let Verdict::WellOrder { cnf } = r.verdict {
            cnfs.push((r.name, cnf));
        }
    }
    let mut pairs = 0;
    let mut iso = 0;
    for i in 0..cnfs.len() {
        for j in i + 1..cnfs.len() {
            pairs += 1;
            iso += usize::from(cnfs[i].1 == cnfs[j].1);
        }
    }
    let _ = writeln!(out, "isomorphism pairs={pairs} isomorphic={iso}");
    let _ = writeln!(out, "failures={failures}");
    Ok((out, failures))
}

#[cfg(test)]
mod tests;
