use std::collections::BTreeSet;
use std::fmt;

/// First-order formulas over an automatic structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    Rel(String, Vec<String>),
    Eq(String, String),
    /// Built-in strict length-lexicographic order.
    Llex(String, String),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
    /// "There exist infinitely many".
    ExistsInf(String, Box<Formula>),
}

pub fn rel(name: &str, args: &[&str]) -> Formula {
    Formula::Rel(name.into(), args.iter().map(|s| s.to_string()).collect())
}

pub fn eq(x: &str, y: &str) -> Formula {
    Formula::Eq(x.into(), y.into())
}

pub fn llex(x: &str, y: &str) -> Formula {
    Formula::Llex(x.into(), y.into())
}

pub fn not(f: Formula) -> Formula {
    Formula::Not(Box::new(f))
}

pub fn and(fs: impl IntoIterator<Item = Formula>) -> Formula {
    Formula::And(fs.into_iter().collect())
}

pub fn or(fs: impl IntoIterator<Item = Formula>) -> Formula {
    Formula::Or(fs.into_iter().collect())
}

pub fn implies(a: Formula, b: Formula) -> Formula {
    or([not(a), b])
}

pub fn exists(x: &str, f: Formula) -> Formula {
    Formula::Exists(x.into(), Box::new(f))
}

pub fn forall(x: &str, f: Formula) -> Formula {
    Formula::Forall(x.into(), Box::new(f))
}

pub fn exists_inf(x: &str, f: Formula) -> Formula {
    Formula::ExistsInf(x.into(), Box::new(f))
}

impl Formula {
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let mut add = |v: &String, bound: &Vec<String>| {
            if !bound.contains(v) {
                out.insert(v.clone());
            }
        };
        match self {
            Formula::True | Formula::False => {}
            Formula::Rel(_, args) => args.iter().for_each(|a| add(a, bound)),
            Formula::Eq(x, y) | Formula::Llex(x, y) => {
                add(x, bound);
                add(y, bound);
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.collect_free(bound, out)),
            Formula::Exists(x, f) | Formula::Forall(x, f) | Formula::ExistsInf(x, f) => {
                bound.push(x.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Number of quantifiers in the formula.
    pub fn quantifier_count(&self) -> usize {
        match self {
            Formula::True | Formula::False | Formula::Rel(..) | Formula::Eq(..) | Formula::Llex(..) => 0,
            Formula::Not(f) => f.quantifier_count(),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().map(Formula::quantifier_count).sum(),
            Formula::Exists(_, f) | Formula::Forall(_, f) | Formula::ExistsInf(_, f) => 1 + f.quantifier_count(),
        }
    }

    /// Renames bound variables so that no variable is bound twice on one
    /// branch and no bound variable shadows a free one.
    pub fn rename_apart(&self) -> Formula {
        let free = self.free_vars();
        let mut used = free.clone();
        self.all_vars(&mut used);
        self.rename_rec(&mut Vec::new(), &free, &used)
    }

    fn all_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Rel(_, args) => out.extend(args.iter().cloned()),
            Formula::Eq(x, y) | Formula::Llex(x, y) => {
                out.insert(x.clone());
                out.insert(y.clone());
            }
            Formula::Not(f) => f.all_vars(out),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.all_vars(out)),
            Formula::Exists(x, f) | Formula::Forall(x, f) | Formula::ExistsInf(x, f) => {
                out.insert(x.clone());
                f.all_vars(out);
            }
        }
    }

    fn rename_rec(&self, scope: &mut Vec<(String, String)>, free: &BTreeSet<String>, used: &BTreeSet<String>) -> Formula {
        let look = |v: &String, scope: &Vec<(String, String)>| -> String {
            scope
                .iter()
                .rev()
                .find(|(from, _)| from == v)
                .map(|(_, to)| to.clone())
                .unwrap_or_else(|| v.clone())
        };
        match self {
            Formula::True => Formula::True,
            Formula::False => Formula::False,
            Formula::Rel(r, args) => Formula::Rel(r.clone(), args.iter().map(|a| look(a, scope)).collect()),
            Formula::Eq(x, y) => Formula::Eq(look(x, scope), look(y, scope)),
            Formula::Llex(x, y) => Formula::Llex(look(x, scope), look(y, scope)),
            Formula::Not(f) => not(f.rename_rec(scope, free, used)),
            Formula::And(fs) => Formula::And(fs.iter().map(|f| f.rename_rec(scope, free, used)).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(|f| f.rename_rec(scope, free, used)).collect()),
            Formula::Exists(x, f) | Formula::Forall(x, f) | Formula::ExistsInf(x, f) => {
                let in_scope = |v: &str, scope: &Vec<(String, String)>| scope.iter().any(|(_, to)| to == v);
                let fresh = if free.contains(x) || in_scope(x, scope) {
                    (1..)
                        .map(|i| format!("{x}_{i}"))
                        .find(|c| !used.contains(c) && !in_scope(c, scope))
                        .expect("unbounded search")
                } else {
                    x.clone()
                };
                scope.push((x.clone(), fresh.clone()));
                let body = Box::new(f.rename_rec(scope, free, used));
                scope.pop();
                match self {
                    Formula::Exists(..) => Formula::Exists(fresh, body),
                    Formula::Forall(..) => Formula::Forall(fresh, body),
                    _ => Formula::ExistsInf(fresh, body),
                }
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::True => write!(f, "true"),
            Formula::False => write!(f, "false"),
            Formula::Rel(r, args) => write!(f, "(rel {r} {})", args.join(" ")),
            Formula::Eq(x, y) => write!(f, "(= {x} {y})"),
            Formula::Llex(x, y) => write!(f, "(llex {x} {y})"),
            Formula::Not(g) => write!(f, "(not {g})"),
            Formula::And(gs) | Formula::Or(gs) => {
                write!(f, "({}", if matches!(self, Formula::And(_)) { "and" } else { "or" })?;
                for g in gs {
                    write!(f, " {g}")?;
                }
                write!(f, ")")
            }
            Formula::Exists(x, g) => write!(f, "(exists {x} {g})"),
            Formula::Forall(x, g) => write!(f, "(forall {x} {g})"),
            Formula::ExistsInf(x, g) => write!(f, "(exists-inf {x} {g})"),
        }
    }
}
