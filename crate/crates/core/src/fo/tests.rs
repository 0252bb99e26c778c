use std::collections::HashMap;

use rand::{Rng, SeedableRng};

use super::*;
use crate::automata::builders::{bounded_length, words_over};
use crate::automata::Sym;

fn ab() -> Vec<String> {
    Automaton::char_alphabet("ab")
}

fn prefix_rel() -> Automaton {
    // x is a (non-strict) prefix of y
    Automaton::from_table(
        2,
        ab(),
        2,
        0,
        &[0, 1],
        &[
            (0, &["a", "a"], 0),
            (0, &["b", "b"], 0),
            (0, &["#", "a"], 1),
            (0, &["#", "b"], 1),
            (1, &["#", "a"], 1),
            (1, &["#", "b"], 1),
        ],
    )
    .unwrap()
}

fn ends_in_a() -> Automaton {
    Automaton::from_table(1, ab(), 2, 0, &[1], &[(0, &["a"], 1), (0, &["b"], 0), (1, &["a"], 1), (1, &["b"], 0)]).unwrap()
}

/// Words of length <= 3 over {a, b} with prefix order and a unary predicate.
fn finite_structure() -> Structure {
    let mut s = Structure::new("tree3", bounded_length(ab(), 3).unwrap()).unwrap();
    let p = s.restrict_to_domain(&prefix_rel()).unwrap();
    s.add_relation("P", p).unwrap();
    let a = s.restrict_to_domain(&ends_in_a()).unwrap();
    s.add_relation("A", a).unwrap();
    s
}

fn all_words(n: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for x in 0..2 as Sym {
                let mut v: Word = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Direct evaluation with quantifiers ranging over `universe`.
fn oracle(s: &Structure, f: &Formula, env: &mut HashMap<String, Word>, universe: &[Word]) -> bool {
    let llex_lt = |x: &Word, y: &Word| (x.len(), x) < (y.len(), y);
    match f {
        Formula::True => true,
        Formula::False => false,
        Formula::Rel(r, args) => {
            let ws: Vec<Word> = args.iter().map(|a| env[a].clone()).collect();
            s.relation(r).unwrap().accepts(&ws).unwrap()
        }
        Formula::Eq(x, y) => env[x] == env[y],
        Formula::Llex(x, y) => llex_lt(&env[x], &env[y]),
        Formula::Not(g) => !oracle(s, g, env, universe),
        Formula::And(gs) => gs.iter().all(|g| oracle(s, g, env, universe)),
        Formula::Or(gs) => gs.iter().any(|g| oracle(s, g, env, universe)),
        Formula::Exists(x, g) | Formula::Forall(x, g) | Formula::ExistsInf(x, g) => {
            let saved = env.get(x).cloned();
            let mut results = universe.iter().map(|w| {
                env.insert(x.clone(), w.clone());
                oracle(s, g, env, universe)
            });
            let r = match f {
                Formula::Exists(..) => results.any(|b| b),
                Formula::Forall(..) => results.all(|b| b),
                // finite universe: never infinitely many
                _ => {
                    results.for_each(drop);
                    false
                }
            };
            match saved {
                Some(w) => env.insert(x.clone(), w),
                None => env.remove(x),
            };
            r
        }
    }
}

fn random_formula(rng: &mut impl Rng, depth: usize, quants: &mut usize) -> Formula {
    let vars = ["x", "y", "z"];
    let v = |rng: &mut dyn rand::RngCore| vars[rng.gen_range(0..3)];
    if depth == 0 {
        return match rng.gen_range(0..4) {
            0 => rel("P", &[v(rng), v(rng)]),
            1 => rel("A", &[v(rng)]),
            2 => eq(v(rng), v(rng)),
            _ => llex(v(rng), v(rng)),
        };
    }
    let choice = rng.gen_range(0..7);
    match choice {
        0 => not(random_formula(rng, depth - 1, quants)),
        1 => and([random_formula(rng, depth - 1, quants), random_formula(rng, depth - 1, quants)]),
        2 => or([random_formula(rng, depth - 1, quants), random_formula(rng, depth - 1, quants)]),
        3..=5 if *quants < 3 => {
            *quants += 1;
            let x = v(rng);
            let body = random_formula(rng, depth - 1, quants);
            match choice {
                3 => exists(x, body),
                4 => forall(x, body),
                _ => exists_inf(x, body),
            }
        }
        _ => random_formula(rng, 0, quants),
    }
}

#[test]
fn random_formulas_match_brute_force_on_a_finite_structure() {
    let s = finite_structure();
    let universe = all_words(3);
    let outside = all_words(4);
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    for _ in 0..120 {
        let mut q = 0;
        let f = random_formula(&mut rng, 3, &mut q);
        let c = compile(&s, &f).unwrap();
        let k = c.vars.len();
        if k == 0 {
            let expect = oracle(&s, &f, &mut HashMap::new(), &universe);
            assert_eq!(c.truth(), Some(expect), "{f}");
            continue;
        }
        // enumerate assignments, including words outside the domain
        let mut idx = vec![0usize; k];
        loop {
            let ws: Vec<Word> = idx.iter().map(|&i| outside[i].clone()).collect();
            let inside = ws.iter().all(|w| w.len() <= 3);
            let mut env: HashMap<String, Word> = c.vars.iter().cloned().zip(ws.iter().cloned()).collect();
            let expect = inside && oracle(&s, &f, &mut env, &universe);
            assert_eq!(c.automaton.accepts(&ws).unwrap(), expect, "{f} at {ws:?}");
            let mut j = 0;
            while j < k {
                idx[j] += 1;
                if idx[j] < outside.len() {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
            if j == k {
                break;
            }
        }
    }
}

fn unary_omega() -> Structure {
    let a = Automaton::char_alphabet("a");
    let dom = words_over(a.clone(), &["a"]).unwrap();
    let succ = Automaton::from_table(2, a.clone(), 2, 0, &[1], &[(0, &["a", "a"], 0), (0, &["#", "a"], 1)]).unwrap();
    let lt = crate::automata::builders::llex(a).unwrap();
    Structure::new("omega", dom)
        .unwrap()
        .with_relation("S", succ)
        .unwrap()
        .with_relation("<", lt)
        .unwrap()
}

#[test]
fn sentences_about_omega() {
    let s = unary_omega();
    let yes = [
        "(forall x (exists y (S x y)))",
        "(exists x (forall y (or (= x y) (< x y))))",
        "(forall x (exists-inf y (< x y)))",
        "(forall (x y) (iff (< x y) (llex x y)))",
        "(exists-inf x true)",
    ];
    let no = [
        "(exists x (forall y (< y x)))",
        "(forall x (exists y (S y x)))",
        "(exists x (exists-inf y (< y x)))",
    ];
    for t in yes {
        assert!(eval_sentence(&s, &parse_formula(t).unwrap()).unwrap(), "{t}");
    }
    for t in no {
        assert!(!eval_sentence(&s, &parse_formula(t).unwrap()).unwrap(), "{t}");
    }
}

#[test]
fn exists_inf_with_parameters() {
    // {x : infinitely many y below x} is empty; {x : finitely many below} is everything
    let s = unary_omega();
    let f = parse_formula("(exists-inf y (< y x))").unwrap();
    assert!(define_set(&s, &f).unwrap().is_empty());
    let g = parse_formula("(not (exists-inf y (< x y)))").unwrap();
    assert!(define_set(&s, &g).unwrap().is_empty());
    // on pairs of binary strings: infinitely many y extending x by a prefix
    let fs = finite_structure();
    let h = parse_formula("(exists-inf y (P x y))").unwrap();
    assert!(define_set(&fs, &h).unwrap().is_empty());
}

#[test]
fn exists_inf_matches_counting_on_infinite_prefix_order() {
    let mut s = Structure::new("tree", crate::automata::builders::all_words(ab()).unwrap()).unwrap();
    s.add_relation("P", prefix_rel()).unwrap();
    s.add_relation("A", ends_in_a()).unwrap();
    // every x has infinitely many extensions
    let f = parse_formula("(forall x (exists-inf y (P x y)))").unwrap();
    assert!(eval_sentence(&s, &f).unwrap());
    // prefixes are finite
    let g = parse_formula("(exists x (exists-inf y (P y x)))").unwrap();
    assert!(!eval_sentence(&s, &g).unwrap());
    // y ranges over infinitely many words ending in a that extend x and z
    let h = parse_formula("(exists-inf y (and (P x y) (P z y) (A y)))").unwrap();
    let c = compile(&s, &h).unwrap();
    for x in all_words(3) {
        for z in all_words(3) {
            let comparable = x.starts_with(&z) || z.starts_with(&x);
            assert_eq!(c.automaton.accepts(&[x.clone(), z.clone()]).unwrap(), comparable);
        }
    }
}

#[test]
fn formula_errors() {
    let s = unary_omega();
    assert_eq!(
        eval_sentence(&s, &parse_formula("(S x y)").unwrap()),
        Err(Error::NotASentence(vec!["x".into(), "y".into()]))
    );
    assert!(matches!(define_set(&s, &parse_formula("(S x y)").unwrap()), Err(Error::NotUnary(_))));
    assert_eq!(
        compile(&s, &parse_formula("(Q x)").unwrap()).unwrap_err(),
        Error::UnknownRelation("Q".into())
    );
    assert!(matches!(compile(&s, &parse_formula("(S x)").unwrap()), Err(Error::ArityMismatch(_))));
    assert!(matches!(parse_formula("(exists x"), Err(Error::Parse { .. })));
    assert!(matches!(parse_formula("(and x) extra"), Err(Error::Parse { .. })));
}

#[test]
fn state_budget_is_enforced() {
    let s = finite_structure();
    let f = parse_formula("(forall x (exists y (and (P x y) (A y))))").unwrap();
    assert_eq!(compile_with_budget(&s, &f, 2).unwrap_err(), Error::StateBudgetExceeded(2));
    assert!(compile_with_budget(&s, &f, 10_000).is_ok());
}

#[test]
fn repeated_arguments_and_shadowing() {
    let s = finite_structure();
    let universe = all_words(3);
    let f = parse_formula("(exists x (and (P x x) (exists x (A x))))").unwrap();
    assert!(eval_sentence(&s, &f).unwrap());
    let g = parse_formula("(and (A x) (exists x (P x x)))").unwrap();
    let c = compile(&s, &g).unwrap();
    for w in &universe {
        let mut env = HashMap::from([("x".to_string(), w.clone())]);
        assert_eq!(c.automaton.accepts(std::slice::from_ref(w)).unwrap(), oracle(&s, &g, &mut env, &universe));
    }
    let r = g.rename_apart();
    assert_eq!(r.to_string(), "(and (rel A x) (exists x_1 (rel P x_1 x_1)))");
}

#[test]
fn structure_rejects_relations_outside_domain() {
    let s = Structure::new("short", bounded_length(ab(), 2).unwrap()).unwrap();
    let mut s2 = s.clone();
    assert_eq!(s2.add_relation("P", prefix_rel()), Err(Error::OutsideDomain("P".into())));
    let ok = s.restrict_to_domain(&prefix_rel()).unwrap();
    s2.add_relation("P", ok).unwrap();
}

#[test]
fn manifest_loading() {
    let autos = "automaton dom\narity 1\nalphabet a\nstates 1\ninitial 0\naccepting 0\ntrans 0 (a) 0\n\
automaton succ\narity 2\nalphabet a\nstates 2\ninitial 0\naccepting 1\ntrans 0 (a,a) 0\ntrans 0 (#,a) 1\n";
    let m = "structure omega\nload a.aut\ndomain dom\nrelation S 2 succ\n";
    let s = manifest::parse_manifest(m, |_| Ok(autos.to_string())).unwrap();
    assert!(eval_sentence(&s, &parse_formula("(forall x (exists y (S x y)))").unwrap()).unwrap());
    let bad = "structure omega\nload a.aut\ndomain dom\nrelation S 3 succ\n";
    assert!(matches!(manifest::parse_manifest(bad, |_| Ok(autos.to_string())), Err(Error::Parse { line: 4, .. })));
}
