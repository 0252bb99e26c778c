use super::builders::*;
use super::*;
use rand::{Rng, SeedableRng};

fn ab() -> Vec<String> {
    Automaton::char_alphabet("ab")
}

/// All words over `nsym` symbols of length <= n.
fn words(nsym: Sym, n: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for x in 0..nsym {
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

fn random_nfa(rng: &mut impl Rng, arity: usize, states: usize, nsym: usize) -> Automaton {
    let alphabet: Vec<String> = (0..nsym).map(|i| i.to_string()).collect();
    let mut a = Automaton::new(arity, alphabet.clone()).unwrap();
    for _ in 1..states {
        a.add_state(false);
    }
    for s in 0..states {
        a.set_accepting(s, rng.gen_bool(0.3));
    }
    let letters = boolean::letters_after(arity, nsym, 0);
    for s in 0..states {
        for l in &letters {
            if rng.gen_bool(0.35) {
                let t = rng.gen_range(0..states);
                a.push_transition(s, l.clone(), t);
            }
        }
    }
    // restrict to well-formed convolutions
    let u = Automaton::universal(arity, alphabet).unwrap();
    intersect(&a, &u).unwrap()
}

#[test]
fn convolve_pads_on_the_right() {
    let a = Automaton::new(2, ab()).unwrap();
    let c = convolve(&[a.word("ab").unwrap(), a.word("a").unwrap()]).unwrap();
    assert_eq!(c.len(), 2);
    assert_eq!(c[0].symbols(), &[0, 0]);
    assert_eq!(c[1].symbols(), &[1, PAD]);
    assert!(convolve(&[vec![], vec![]]).unwrap().is_empty());
    let b = Automaton::new(2, Automaton::char_alphabet("01")).unwrap();
    let c = convolve(&[b.word("0").unwrap(), b.word("10").unwrap()]).unwrap();
    assert_eq!(c[0].symbols(), &[0, 1]);
    assert_eq!(c[1].symbols(), &[PAD, 0]);
}

#[test]
fn convolve_rejects_pad_inside_words() {
    assert_eq!(convolve(&[vec![0, PAD]]), Err(Error::InvalidSymbol("#".into())));
    let a = Automaton::new(1, ab()).unwrap();
    assert!(a.word("a#").is_err());
}

#[test]
fn product_examples() {
    let astar = words_over(ab(), &["a"]).unwrap();
    let aa = Automaton::from_table(1, ab(), 2, 0, &[0], &[(0, &["a"], 1), (1, &["a"], 0)]).unwrap();
    let both = product(&astar, &aa, ProductMode::And).unwrap();
    for n in 0..8 {
        let w = "a".repeat(n);
        assert_eq!(both.accepts_strs(&[&w]).unwrap(), n % 2 == 0);
    }
    let empty = Automaton::empty(1, ab()).unwrap();
    let or = product(&astar, &empty, ProductMode::Or).unwrap();
    assert!(or.equivalent(&astar).unwrap());

    let all = all_words(ab()).unwrap();
    let short = bounded_length(ab(), 2).unwrap();
    let minus = product(&all, &short, ProductMode::Minus).unwrap();
    for w in words(2, 5) {
        assert_eq!(minus.accepts(std::slice::from_ref(&w)).unwrap(), w.len() >= 3);
    }
}

#[test]
fn product_rejects_mismatch() {
    let a = Automaton::empty(1, ab()).unwrap();
    let b = Automaton::empty(2, ab()).unwrap();
    assert!(matches!(product(&a, &b, ProductMode::And), Err(Error::ArityMismatch(_))));
    let c = Automaton::empty(1, Automaton::char_alphabet("xy")).unwrap();
    assert!(matches!(product(&a, &c, ProductMode::Or), Err(Error::ArityMismatch(_))));
}

#[test]
fn complement_examples() {
    let empty = Automaton::empty(1, ab()).unwrap();
    let c = complement(&empty);
    assert!(c.equivalent(&all_words(ab()).unwrap()).unwrap());
    assert!(complement(&c).is_empty());
}

#[test]
fn projection_examples() {
    let diag = equality(ab()).unwrap();
    let p = project(&diag, 1).unwrap();
    assert!(p.equivalent(&all_words(ab()).unwrap()).unwrap());
    let e = Automaton::empty(2, ab()).unwrap();
    assert!(project(&e, 0).unwrap().is_empty());
    assert_eq!(project(&all_words(ab()).unwrap(), 0), Err(Error::CannotProject));

    // L = {(x, y) : |x| < |y|}; projecting tape 0 leaves every nonempty y.
    let shorter = Automaton::from_table(
        2,
        ab(),
        2,
        0,
        &[1],
        &[
            (0, &["a", "a"], 0),
            (0, &["a", "b"], 0),
            (0, &["b", "a"], 0),
            (0, &["b", "b"], 0),
            (0, &["#", "a"], 1),
            (0, &["#", "b"], 1),
            (1, &["#", "a"], 1),
            (1, &["#", "b"], 1),
        ],
    )
    .unwrap();
    let p = project(&shorter, 0).unwrap();
    for y in words(2, 5) {
        let oracle = words(2, 5).iter().any(|x| x.len() < y.len());
        assert_eq!(p.accepts(std::slice::from_ref(&y)).unwrap(), oracle);
    }
}

#[test]
fn emptiness_infinity_enumeration() {
    assert!(Automaton::empty(1, ab()).unwrap().is_empty());
    assert!(words_over(ab(), &["a"]).unwrap().is_infinite());
    let short = bounded_length(ab(), 2).unwrap();
    assert!(!short.is_infinite());
    let all = short.enumerate(100);
    let rendered: Vec<String> = all.iter().map(|t| short.render(&t[0])).collect();
    assert_eq!(rendered, ["", "a", "b", "aa", "ab", "ba", "bb"]);
    assert_eq!(short.stats().count, Some(7));
    let first = all_words(ab()).unwrap().enumerate(4);
    assert_eq!(first.len(), 4);
}

#[test]
fn minimize_examples() {
    let two = Automaton::from_table(1, ab(), 2, 0, &[1], &[(0, &["a"], 1), (1, &["b"], 0)]).unwrap();
    let m = minimize(&two);
    assert_eq!(m.num_states(), 2);
    assert!(m.equivalent(&two).unwrap());

    let mut unreachable = two.clone();
    let orphan = unreachable.add_state(true);
    unreachable.add_transition(orphan, LetterTuple::new(vec![0]).unwrap(), 0).unwrap();
    assert_eq!(minimize(&unreachable).num_states(), 2);
}

#[test]
fn minimize_random_nfa_matches_oracle() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..20 {
        let a = random_nfa(&mut rng, 1, 8, 2);
        let m = minimize(&a);
        assert!(m.is_deterministic());
        for w in words(2, 8) {
            assert_eq!(m.accepts(std::slice::from_ref(&w)).unwrap(), a.accepts(&[w]).unwrap());
        }
        assert!(minimize(&m).num_states() == m.num_states());
    }
}

#[test]
fn boolean_ops_agree_pointwise_on_pairs() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    let ws = words(2, 3);
    for _ in 0..6 {
        let a = random_nfa(&mut rng, 2, 4, 2);
        let b = random_nfa(&mut rng, 2, 4, 2);
        let and = product(&a, &b, ProductMode::And).unwrap();
        let or = product(&a, &b, ProductMode::Or).unwrap();
        let minus = product(&a, &b, ProductMode::Minus).unwrap();
        let not_a = complement(&a);
        for r in [&and, &or, &minus, &not_a] {
            r.check_padding().unwrap();
        }
        for x in &ws {
            for y in &ws {
                let t = [x.clone(), y.clone()];
                let (ia, ib) = (a.accepts(&t).unwrap(), b.accepts(&t).unwrap());
                assert_eq!(and.accepts(&t).unwrap(), ia && ib);
                assert_eq!(or.accepts(&t).unwrap(), ia || ib);
                assert_eq!(minus.accepts(&t).unwrap(), ia && !ib);
                assert_eq!(not_a.accepts(&t).unwrap(), !ia);
            }
        }
        assert!(complement(&not_a).equivalent(&a).unwrap());
        let p = project(&a, 0).unwrap();
        p.check_padding().unwrap();
        for y in &ws {
            let oracle = words(2, 4).iter().any(|x| a.accepts(&[x.clone(), y.clone()]).unwrap());
            assert_eq!(p.accepts(std::slice::from_ref(y)).unwrap(), oracle);
        }
    }
}

#[test]
fn insert_tape_is_cylindrification() {
    let short = bounded_length(ab(), 1).unwrap();
    let c = short.insert_tape(0).unwrap();
    c.check_padding().unwrap();
    for x in words(2, 3) {
        for y in words(2, 3) {
            assert_eq!(c.accepts(&[x.clone(), y.clone()]).unwrap(), y.len() <= 1);
        }
    }
}

#[test]
fn llex_is_a_strict_total_order() {
    let l = llex(ab()).unwrap();
    let ws = words(2, 3);
    for (i, x) in ws.iter().enumerate() {
        for (j, y) in ws.iter().enumerate() {
            // `words` lists in length-lexicographic order
            assert_eq!(l.accepts(&[x.clone(), y.clone()]).unwrap(), i < j);
        }
    }
}

#[test]
fn sections_of_a_relation() {
    let l = llex(ab()).unwrap();
    let a = l.word("b").unwrap();
    let above = l.section(0, &a, 2).unwrap();
    assert_eq!(above.len(), 4);
    let below = l.section(1, &a, 2).unwrap();
    assert_eq!(below, vec![vec![], vec![0]]);
}

#[test]
fn text_round_trip_and_line_numbers() {
    let l = llex(ab()).unwrap();
    let text = text::write_automaton("llex", &l);
    let (name, back) = text::parse_automaton(&text).unwrap();
    assert_eq!(name, "llex");
    assert!(back.equivalent(&l).unwrap());

    let bad = "automaton bad\narity 2\nalphabet a\nstates 1\ninitial 0\naccepting 0\ntrans 0 (#,a) 0\ntrans 0 (a,a) 0\n";
    match text::parse_automaton(bad) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 8),
        other => panic!("expected padding error, got {other:?}"),
    }
    let all_pad = "automaton bad\narity 1\nalphabet a\nstates 1\ninitial 0\naccepting 0\ntrans 0 (#) 0\n";
    assert!(matches!(text::parse_automaton(all_pad), Err(Error::Parse { line: 7, .. })));
}
