use std::collections::HashMap;

use super::graph::ColumnAlphabet;
use super::machines::{binary_copy, comparator_input, kreisel_comparator, unary_increment};
use super::*;
use crate::automata::{Automaton, Word};
use crate::pathology::{nat_to_word, KreiselOrder, PiPredicate};

fn configs(tm: &TmSpec, max_len: usize) -> (ColumnAlphabet, Vec<Word>) {
    let cols = ColumnAlphabet::new(tm).unwrap();
    let d = domain_automaton(tm, &cols).unwrap();
    let ws = d.enumerate_up_to(max_len).into_iter().map(|mut t| t.remove(0)).collect();
    (cols, ws)
}

/// The automaton's successors of every configuration up to `max_len`
/// columns are exactly the simulator's.
fn agrees_with_simulator(tm: &TmSpec, max_len: usize) {
    let step = step_relation_automaton(tm).unwrap();
    let (cols, ws) = configs(tm, max_len);
    assert!(!ws.is_empty());
    for w in &ws {
        let c = cols.decode(w).unwrap();
        assert_eq!(cols.encode(&c), *w);
        let want: Vec<Word> = c.step(tm).map(|n| cols.encode(&n)).into_iter().collect();
        let got = step.section(0, w, max_len + 1).unwrap();
        assert_eq!(got, want, "{}", c.render(tm));
    }
}

#[test]
fn text_format_round_trips() {
    for tm in [unary_increment().unwrap(), binary_copy().unwrap()] {
        assert_eq!(parse_tm(&tm.to_text()).unwrap(), tm);
    }
    let bad = "tm x\ntapes 1\nstate q0\ntrans q0 (a) -> q0 (a,R)\ntrans q0 (a) -> q0 (b,R)\n";
    assert!(matches!(parse_tm(bad), Err(crate::Error::Parse { line: 5, .. })));
    assert!(parse_tm("tm x\ntapes 4\nstate q\n").is_err());
    assert!(parse_tm("state q:x\n").is_err());
}

#[test]
fn configurations_render_and_step() {
    let tm = unary_increment().unwrap();
    let c = Configuration::initial(&tm, &[vec![tm.symbol("1").unwrap()]]).unwrap();
    assert_eq!(c.render(&tm), "q0:1");
    let n = c.step(&tm).unwrap();
    assert_eq!(n.render(&tm), "1 q0:_");
    assert_eq!(Configuration::parse(&tm, "1 q0:_").unwrap(), n);
    let h = n.step(&tm).unwrap();
    assert_eq!(h.render(&tm), "1 1 qa:_");
    assert_eq!(h.step(&tm), None);
    assert!(Configuration::parse(&tm, "1 q0:1 _").is_err());
    let tm2 = binary_copy().unwrap();
    let c = Configuration::parse(&tm2, "q0:0|^_ 1|_").unwrap();
    let runs = run(&tm2, &c, 10);
    let last = runs.last().unwrap().render(&tm2);
    assert!(last.starts_with("0|0 1|1 "), "{last}");
}

#[test]
fn step_automaton_matches_simulator() {
    agrees_with_simulator(&unary_increment().unwrap(), 8);
    agrees_with_simulator(&binary_copy().unwrap(), 4);
    let mut tm = TmSpec::new("left", 1, "_").unwrap();
    tm.add_state("p", false).unwrap();
    tm.add_state("q", false).unwrap();
    tm.add_transition("p", &["a"], "q", &[("b", Move::L)]).unwrap();
    tm.add_transition("q", &["a"], "p", &[("_", Move::S)]).unwrap();
    tm.add_transition("q", &["b"], "p", &[("a", Move::R)]).unwrap();
    agrees_with_simulator(&tm, 5);
}

#[test]
fn reversibility() {
    let mut tm = TmSpec::new("collide", 1, "_").unwrap();
    tm.add_state("p", false).unwrap();
    tm.add_state("q", false).unwrap();
    tm.add_transition("p", &["0"], "q", &[("a", Move::R)]).unwrap();
    tm.add_transition("p", &["1"], "q", &[("a", Move::R)]).unwrap();
    assert_eq!(tm.check_reversible(), Some((0, 1)));
    // same signature but different moves still collide
    let mut tm = TmSpec::new("moves", 1, "_").unwrap();
    tm.add_state("p", false).unwrap();
    tm.add_state("q", false).unwrap();
    tm.add_transition("p", &["0"], "q", &[("a", Move::R)]).unwrap();
    tm.add_transition("p", &["1"], "q", &[("a", Move::L)]).unwrap();
    assert!(tm.check_reversible().is_some());
    let empty = TmSpec::new("empty", 1, "_").unwrap();
    assert_eq!(empty.check_reversible(), None);
    assert_eq!(binary_copy().unwrap().check_reversible(), None);
}

#[test]
fn reversible_machines_have_in_degree_at_most_one() {
    for (tm, len) in [(binary_copy().unwrap(), 4), (unary_increment().unwrap(), 8)] {
        assert_eq!(tm.check_reversible(), None);
        let (cols, ws) = configs(&tm, len);
        let mut indeg: HashMap<Configuration, usize> = HashMap::new();
        for w in &ws {
            if let Some(n) = cols.decode(w).unwrap().step(&tm) {
                *indeg.entry(n).or_default() += 1;
            }
        }
        assert!(indeg.values().all(|&d| d <= 1), "{}", tm.name);
    }
}

fn except_one() -> PiPredicate {
    PiPredicate::regular_except(&[&nat_to_word(2)]).unwrap()
}

#[test]
fn comparator_decides_the_kreisel_order() {
    for pi in [PiPredicate::regular_except(&[]).unwrap(), except_one()] {
        let tm = kreisel_comparator(&pi).unwrap();
        assert_eq!(tm.check_reversible(), None, "{}", tm.to_text());
        let k = KreiselOrder::new(pi);
        for x in 0..15u64 {
            for y in 0..15u64 {
                let input = comparator_input(&tm, &nat_to_word(x), &nat_to_word(y)).unwrap();
                let c = Configuration::initial(&tm, &[input]).unwrap();
                let last = run(&tm, &c, 100).pop().unwrap();
                let want = k.compare(x, y).unwrap() == std::cmp::Ordering::Less;
                assert_eq!(last.is_accepting(&tm), want, "({x},{y})");
                assert!(last.step(&tm).is_none());
            }
        }
    }
}

#[test]
fn embedding_lemma_on_small_pairs() {
    for pi in [PiPredicate::regular_except(&[]).unwrap(), except_one()] {
        let r = build_rpi(&pi).unwrap();
        for x in 0..6u64 {
            for y in 0..6u64 {
                let below = r.order.compare(x, y).unwrap() == std::cmp::Ordering::Less;
                let path = r.emb_path(x, y).unwrap();
                assert_eq!(path.is_some(), below, "({x},{y})");
                if let Some(p) = path {
                    assert!(r.path_is_valid(&p).unwrap(), "({x},{y})");
                    let found = r.bfs_path(&r.bin_word(x), &r.bin_word(y), 4).unwrap();
                    assert!(found.is_some(), "({x},{y})");
                }
            }
        }
    }
}

#[test]
fn well_founded_instance_passes_bounded_check() {
    let r = build_rpi(&PiPredicate::regular_except(&[]).unwrap()).unwrap();
    let rep = r.wf_check(3, 8).unwrap();
    assert_eq!(rep.verdict, WfVerdict::Ok);
    assert!(rep.elements > 31);
    assert!(rep.to_dot(r.relation()).starts_with("digraph"));
}

#[test]
fn false_sentence_gives_descent() {
    let r = build_rpi(&except_one()).unwrap();
    let rep = r.wf_check(4, 4).unwrap();
    let WfVerdict::Descent { chain } = &rep.verdict else { panic!("{:?}", rep.verdict) };
    assert!(chain.len() >= 4);
    let k = KreiselOrder::new(except_one());
    let nats = k.find_descent(3, 5).unwrap().unwrap();
    let lifted = r.lift_descent(&nats).unwrap();
    assert_eq!(lifted.len(), 4);
    for p in &lifted {
        assert!(r.path_is_valid(p).unwrap());
    }
}

#[test]
fn planted_cycle_is_reported() {
    let ab = Automaton::char_alphabet("ab");
    let rel = Automaton::from_table(2, ab.clone(), 2, 0, &[1], &[(0, &["a", "b"], 1), (0, &["b", "a"], 1)]).unwrap();
    let a = Automaton::empty(1, ab).unwrap();
    let rep = bounded_wf_check(&rel, &[a.word("a").unwrap()], 2, 3).unwrap();
    assert!(matches!(rep.verdict, WfVerdict::Cycle { ref witness } if witness.len() == 2));
}
