use std::collections::HashMap;

use super::formula::Formula;
use super::structure::Structure;
use crate::automata::boolean::complement_capped;
use crate::automata::builders::{equality, llex};
use crate::automata::minimize::minimize_capped;
use crate::automata::{intersect, project, union, Automaton, LetterTuple, PAD};
use crate::error::{Error, Result};

/// Default cap on the number of states of any intermediate automaton.
pub const DEFAULT_STATE_BUDGET: usize = 1_000_000;

/// The relation defined by a formula, one tape per free variable.
///
/// Tapes follow `vars`, which is sorted. Sentences have no variables and are
/// represented by the arity-1 automaton accepting everything (true) or
/// nothing (false).
#[derive(Clone, Debug)]
pub struct Compiled {
    pub vars: Vec<String>,
    pub automaton: Automaton,
}

impl Compiled {
    pub fn truth(&self) -> Option<bool> {
        self.vars.is_empty().then(|| !self.automaton.is_empty())
    }
}

enum Val {
    Bool(bool),
    Aut(Vec<String>, Automaton),
}

pub(crate) struct Compiler<'s> {
    s: &'s Structure,
    cap: usize,
    cyl: HashMap<usize, Automaton>,
}

impl<'s> Compiler<'s> {
    pub(crate) fn new(s: &'s Structure, cap: usize) -> Self {
        Compiler {
            s,
            cap,
            cyl: HashMap::new(),
        }
    }

    fn min(&self, a: &Automaton) -> Result<Automaton> {
        if a.num_states() > self.cap {
            return Err(Error::StateBudgetExceeded(self.cap));
        }
        minimize_capped(a, self.cap)
    }

    fn and(&self, a: &Automaton, b: &Automaton) -> Result<Automaton> {
        self.min(&intersect(a, b)?)
    }

    /// Places `a` on the given (ascending) tapes of an arity-`m` automaton.
    fn place(a: &Automaton, positions: &[usize], m: usize) -> Result<Automaton> {
        let mut out = a.clone();
        for p in 0..m {
            if !positions.contains(&p) {
                out = out.insert_tape(p)?;
            }
        }
        Ok(out)
    }

    /// The domain cylinder `D^k`.
    fn domain_power(&mut self, k: usize) -> Result<Automaton> {
        if let Some(a) = self.cyl.get(&k) {
            return Ok(a.clone());
        }
        let d = self.s.domain().clone();
        let a = if k == 1 {
            d
        } else {
            let prev = self.domain_power(k - 1)?.insert_tape(k - 1)?;
            let last = Self::place(&d, &[k - 1], k)?;
            self.and(&prev, &last)?
        };
        self.cyl.insert(k, a.clone());
        Ok(a)
    }

    fn relativize(&mut self, a: &Automaton) -> Result<Automaton> {
        let d = self.domain_power(a.arity())?;
        self.and(a, &d)
    }

    fn extend(&mut self, v: Val, target: &[String]) -> Result<Automaton> {
        let k = target.len();
        match v {
            Val::Bool(true) => self.domain_power(k),
            Val::Bool(false) => Automaton::empty(k, self.s.alphabet().to_vec()),
            Val::Aut(vars, a) => {
                if vars == target {
                    return Ok(a);
                }
                let pos: Vec<usize> = vars
                    .iter()
                    .map(|v| target.iter().position(|t| t == v).expect("target covers vars"))
                    .collect();
                let placed = Self::place(&a, &pos, k)?;
                self.relativize(&placed)
            }
        }
    }

    pub(crate) fn compile_top(&mut self, f: &Formula) -> Result<Compiled> {
        let f = f.rename_apart();
        let vars: Vec<String> = f.free_vars().into_iter().collect();
        let v = self.compile(&f)?;
        if vars.is_empty() {
            let b = match v {
                Val::Bool(b) => b,
                Val::Aut(_, a) => !a.is_empty(),
            };
            let alpha = self.s.alphabet().to_vec();
            let automaton = if b {
                Automaton::universal(1, alpha)?
            } else {
                Automaton::empty(1, alpha)?
            };
            return Ok(Compiled { vars, automaton });
        }
        let automaton = self.extend(v, &vars)?;
        Ok(Compiled { vars, automaton })
    }

    fn compile(&mut self, f: &Formula) -> Result<Val> {
        match f {
            Formula::True => Ok(Val::Bool(true)),
            Formula::False => Ok(Val::Bool(false)),
            Formula::Rel(name, args) => self.atom(name, args),
            Formula::Eq(x, y) | Formula::Llex(x, y) if x == y => {
                if matches!(f, Formula::Llex(..)) {
                    return Ok(Val::Bool(false));
                }
                Ok(Val::Aut(vec![x.clone()], self.domain_power(1)?))
            }
            Formula::Eq(x, y) => {
                let a = self.relativize(&equality(self.s.alphabet().to_vec())?)?;
                let mut v = vec![x.clone(), y.clone()];
                v.sort();
                Ok(Val::Aut(v, a))
            }
            Formula::Llex(x, y) => {
                let mut a = llex(self.s.alphabet().to_vec())?;
                if x > y {
                    a = a.permute_tapes(&[1, 0])?;
                }
                let a = self.relativize(&a)?;
                let mut v = vec![x.clone(), y.clone()];
                v.sort();
                Ok(Val::Aut(v, a))
            }
            Formula::Not(g) => match self.compile(g)? {
                Val::Bool(b) => Ok(Val::Bool(!b)),
                Val::Aut(vars, a) => {
                    let c = complement_capped(&a, self.cap)?;
                    Ok(Val::Aut(vars, self.relativize(&c)?))
                }
            },
            Formula::And(gs) | Formula::Or(gs) => {
                let is_and = matches!(f, Formula::And(_));
                let mut acc = Val::Bool(is_and);
                for g in gs {
                    let v = self.compile(g)?;
                    acc = self.combine(acc, v, is_and)?;
                    if let Val::Bool(b) = acc {
                        if b != is_and {
                            return Ok(acc);
                        }
                    }
                }
                Ok(acc)
            }
            Formula::Exists(x, g) => self.exists(x, g),
            Formula::Forall(x, g) => {
                let neg = Formula::Not(Box::new(Formula::Exists(
                    x.clone(),
                    Box::new(Formula::Not(g.clone())),
                )));
                self.compile(&neg)
            }
            Formula::ExistsInf(x, g) => self.exists_inf(x, g),
        }
    }

    fn combine(&mut self, a: Val, b: Val, is_and: bool) -> Result<Val> {
        match (a, b) {
            (Val::Bool(p), Val::Bool(q)) => Ok(Val::Bool(if is_and { p && q } else { p || q })),
            (Val::Bool(p), v) | (v, Val::Bool(p)) => Ok(match (is_and, p) {
                (true, true) | (false, false) => v,
                (true, false) => Val::Bool(false),
                (false, true) => Val::Bool(true),
            }),
            (Val::Aut(va, a), Val::Aut(vb, b)) => {
                let mut vars = va.clone();
                vars.extend(vb.iter().cloned());
                vars.sort();
                vars.dedup();
                let a = self.extend(Val::Aut(va, a), &vars)?;
                let b = self.extend(Val::Aut(vb, b), &vars)?;
                let r = if is_and { intersect(&a, &b)? } else { union(&a, &b)? };
                Ok(Val::Aut(vars, self.min(&r)?))
            }
        }
    }

    fn atom(&mut self, name: &str, args: &[String]) -> Result<Val> {
        let rel = self.s.relation(name)?.clone();
        if rel.arity() != args.len() {
            return Err(Error::ArityMismatch(format!(
                "`{name}` has arity {} but is applied to {} arguments",
                rel.arity(),
                args.len()
            )));
        }
        let m = args.len();
        let mut a = rel;
        let mut args: Vec<String> = args.to_vec();
        // identify repeated arguments, then drop the duplicate tapes
        let eq = equality(self.s.alphabet().to_vec())?;
        for j in (0..m).rev() {
            if let Some(i) = args[..j].iter().position(|v| *v == args[j]) {
                let tie = Self::place(&eq, &[i, j], args.len())?;
                a = project(&self.and(&a, &tie)?, j)?;
                args.remove(j);
            }
        }
        let mut sorted = args.clone();
        sorted.sort();
        let perm: Vec<usize> = args
            .iter()
            .map(|v| sorted.iter().position(|s| s == v).expect("same set"))
            .collect();
        let a = a.permute_tapes(&perm)?;
        Ok(Val::Aut(sorted, self.min(&a)?))
    }

    fn exists(&mut self, x: &str, g: &Formula) -> Result<Val> {
        match self.compile(g)? {
            Val::Bool(b) => Ok(Val::Bool(b && !self.s.domain().is_empty())),
            Val::Aut(vars, a) => match vars.iter().position(|v| v == x) {
                None => Ok(Val::Aut(vars, a)),
                Some(_) if vars.len() == 1 => Ok(Val::Bool(!a.is_empty())),
                Some(i) => {
                    let mut rest = vars;
                    rest.remove(i);
                    let p = project(&a, i)?;
                    Ok(Val::Aut(rest, self.min(&p)?))
                }
            },
        }
    }

    fn exists_inf(&mut self, x: &str, g: &Formula) -> Result<Val> {
        let dom_inf = self.s.domain().is_infinite();
        match self.compile(g)? {
            Val::Bool(b) => Ok(Val::Bool(b && dom_inf)),
            Val::Aut(vars, a) => match vars.iter().position(|v| v == x) {
                None if dom_inf => Ok(Val::Aut(vars, a)),
                None => Ok(Val::Bool(false)),
                Some(_) if vars.len() == 1 => Ok(Val::Bool(a.is_infinite())),
                Some(i) => {
                    let mut rest = vars;
                    rest.remove(i);
                    let b = infinitely_many(&a, i);
                    Ok(Val::Aut(rest, self.relativize(&b)?))
                }
            },
        }
    }
}

/// Tuples of the other tapes that extend by infinitely many words on `tape`.
///
/// A word on `tape` longer than all other tapes finishes with letters that are
/// pad everywhere else. Infinitely many such words exist from a state exactly
/// when those tail letters lead it to a cycle that can still reach acceptance.
fn infinitely_many(a: &Automaton, tape: usize) -> Automaton {
    let a = a.trim();
    let n = a.num_states();
    let is_tail = |l: &LetterTuple| {
        l.get(tape) != PAD && l.symbols().iter().enumerate().all(|(j, &s)| j == tape || s == PAD)
    };
    let mut tail: Vec<Vec<usize>> = vec![Vec::new(); n];
    for s in 0..n {
        for (l, t) in a.transitions(s) {
            if is_tail(l) {
                tail[s].push(*t);
            }
        }
    }
    let reach_from = |starts: &[usize]| -> Vec<bool> {
        let mut seen = vec![false; n];
        let mut stack: Vec<usize> = starts.to_vec();
        for &s in starts {
            seen[s] = true;
        }
        while let Some(s) = stack.pop() {
            for &t in &tail[s] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    };
    // co[s]: s reaches acceptance by tail letters
    let mut co: Vec<bool> = (0..n).map(|s| a.is_accepting(s)).collect();
    loop {
        let mut changed = false;
        for s in 0..n {
            if !co[s] && tail[s].iter().any(|&t| co[t]) {
                co[s] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let on_cycle: Vec<bool> = (0..n)
        .map(|s| co[s] && reach_from(&tail[s])[s])
        .collect();
    let cyc: Vec<usize> = (0..n).filter(|&s| on_cycle[s]).collect();
    // q_inf[s]: s reaches a productive tail cycle by tail letters
    let mut q_inf = vec![false; n];
    for s in 0..n {
        let r = reach_from(&[s]);
        q_inf[s] = cyc.iter().any(|&c| r[c]);
    }
    let mut trans: Vec<Vec<(LetterTuple, usize)>> = vec![Vec::new(); n];
    for s in 0..n {
        for (l, t) in a.transitions(s) {
            if l.get(tape) == PAD || is_tail(l) {
                continue;
            }
            let mut syms = l.symbols().to_vec();
            syms.remove(tape);
            trans[s].push((LetterTuple::new_unchecked(syms.into()), *t));
        }
    }
    Automaton::from_parts(a.arity() - 1, a.alphabet().to_vec(), a.initial(), q_inf, trans).trim()
}
