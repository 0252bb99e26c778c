use super::*;
use crate::automata::builders::llex as llex_aut;
use crate::corpus::orders;
use crate::corpus::structures::prefix_relation;

fn strict(a: &Automaton) -> Automaton {
    let s = Structure::new("t", crate::automata::builders::words_over(a.alphabet().to_vec(), &["a", "b"]).unwrap()).unwrap();
    fo::compile(&s.with_relation("P", a.clone()).unwrap(), &and([rel("P", &["x", "y"]), not(fo::eq("x", "y"))]))
        .unwrap()
        .automaton
}

#[test]
fn linear_checks_name_the_failing_property() {
    let ab = Automaton::char_alphabet("ab");
    let dom = crate::automata::builders::words_over(ab.clone(), &["a", "b"]).unwrap();
    let prefix = OrderPresentation::from_parts("prefix", dom.clone(), strict(&prefix_relation().unwrap())).unwrap();
    assert_eq!(check_linear(&prefix), Err(Error::NotLinear("totality".into())));

    let two = Automaton::from_table(1, ab.clone(), 2, 0, &[1], &[(0, &["a"], 1), (0, &["b"], 1)]).unwrap();
    let cycle = Automaton::from_table(2, ab.clone(), 2, 0, &[1], &[(0, &["a", "b"], 1), (0, &["b", "a"], 1)]).unwrap();
    let p = OrderPresentation::from_parts("cycle", two.clone(), cycle).unwrap();
    assert_eq!(check_linear(&p), Err(Error::NotLinear("transitivity".into())));

    let refl = Automaton::from_table(2, ab, 2, 0, &[1], &[(0, &["a", "a"], 1), (0, &["a", "b"], 1)]).unwrap();
    let p = OrderPresentation::from_parts("refl", two, refl).unwrap();
    assert_eq!(check_linear(&p), Err(Error::NotLinear("irreflexivity".into())));

    check_linear(&orders::omega_binary().unwrap().order).unwrap();
}

#[test]
fn condensation_of_omega_times_two_is_two() {
    let c = orders::generic(&"w*2".parse().unwrap()).unwrap();
    let q = finite_condensation(&c.order).unwrap();
    assert!(!q.domain().is_infinite());
    assert_eq!(q.domain().enumerate(10).len(), 2);
    assert_eq!(classify_classes(&c.order).unwrap(), ClassCheck::AllFiniteOrOmega);
}

#[test]
fn recognizes_corpus_well_orders() {
    for c in orders::well_orders().unwrap() {
        let r = recognize_default(&c.order).unwrap();
        assert_eq!(r.cnf(), c.expected.as_ref(), "{}", c.name);
    }
}

#[test]
fn finite_orders() {
    let a = Automaton::char_alphabet("a");
    let dom = crate::automata::builders::bounded_length(a.clone(), 4).unwrap();
    let s = Structure::new("five", dom).unwrap();
    let less = s.restrict_to_domain(&llex_aut(a).unwrap()).unwrap();
    let p = OrderPresentation::new(s.with_relation("<", less).unwrap()).unwrap();
    assert_eq!(recognize_default(&p).unwrap().cnf(), Some(&Cnf::nat(5u64)));
}

#[test]
fn rejects_non_well_orders() {
    for c in orders::non_well_orders().unwrap() {
        let r = recognize_default(&c.order).unwrap();
        assert!(matches!(r.verdict, Verdict::NotWellOrder { .. }), "{}: {}", c.name, r.verdict);
    }
    let dense = recognize_default(&orders::dense().unwrap().order).unwrap();
    assert_eq!(
        dense.verdict,
        Verdict::NotWellOrder {
            evidence: Evidence::DenseFixpoint
        }
    );
}

#[test]
fn isomorphism_by_type() {
    let sq = orders::omega_squared().unwrap();
    let g = orders::generic(&"w^2".parse().unwrap()).unwrap();
    assert!(isomorphic(&sq.order, &g.order).unwrap());
    let u = orders::omega_unary().unwrap();
    assert!(!isomorphic(&sq.order, &u.order).unwrap());
    assert!(isomorphic(&u.order, &orders::omega_binary().unwrap().order).unwrap());
    let z = orders::integer_line().unwrap();
    assert_eq!(isomorphic(&u.order, &z.order), Err(Error::NotComparable));
}

#[test]
fn relabelling_the_alphabet_keeps_the_type() {
    let c = orders::omega_two_plus_three().unwrap();
    let s = c.order.structure();
    let mut alphabet: Vec<String> = s.alphabet().to_vec();
    alphabet.reverse();
    alphabet.push("z".into());
    let p = OrderPresentation::from_parts(
        "relabelled",
        s.domain().with_alphabet(&alphabet).unwrap(),
        c.order.less().with_alphabet(&alphabet).unwrap(),
    )
    .unwrap();
    assert_eq!(recognize_default(&p).unwrap().cnf(), c.expected.as_ref());
}

#[test]
fn level_cap_gives_budget_verdict() {
    let c = orders::generic(&"w^3".parse().unwrap()).unwrap();
    let r = recognize(&c.order, 1).unwrap();
    assert_eq!(r.verdict, Verdict::BudgetExceeded { level: 2 });
}
