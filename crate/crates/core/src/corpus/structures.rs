//! Automatic structures and formulas for exercising the FO engine.

use crate::automata::builders::{bounded_length, llex, words_over};
use crate::automata::{Automaton, LetterTuple, Sym, PAD};
use crate::fo::Structure;
use crate::Result;

use super::orders;

fn ab() -> Vec<String> {
    Automaton::char_alphabet("ab")
}

/// `a*` with successor and order.
pub fn unary_omega() -> Result<Structure> {
    let a = Automaton::char_alphabet("a");
    let dom = words_over(a.clone(), &["a"])?;
    let succ = Automaton::from_table(2, a.clone(), 2, 0, &[1], &[(0, &["a", "a"], 0), (0, &["#", "a"], 1)])?;
    Structure::new("unary-omega", dom)?
        .with_relation("S", succ)?
        .with_relation("<", llex(a)?)
}

/// Non-strict prefix order on `{a,b}*`.
pub fn prefix_relation() -> Result<Automaton> {
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
}

fn equal_length() -> Result<Automaton> {
    let mut a = Automaton::new(2, ab())?;
    a.set_accepting(0, true);
    for x in 0..2 {
        for y in 0..2 {
            a.push_transition(0, LetterTuple::new_unchecked(vec![x, y].into()), 0);
        }
    }
    Ok(a)
}

fn ends_in_a() -> Result<Automaton> {
    Automaton::from_table(1, ab(), 2, 0, &[1], &[(0, &["a"], 1), (0, &["b"], 0), (1, &["a"], 1), (1, &["b"], 0)])
}

/// The full binary tree `{a,b}*` with prefix order, equal length and a
/// unary predicate.
pub fn binary_tree() -> Result<Structure> {
    Structure::new("binary-tree", words_over(ab(), &["a", "b"])?)?
        .with_relation("P", prefix_relation()?)?
        .with_relation("E", equal_length()?)?
        .with_relation("A", ends_in_a()?)
}

/// Words of length at most 3: a finite structure.
pub fn finite_tree() -> Result<Structure> {
    let mut s = Structure::new("finite-tree", bounded_length(ab(), 3)?)?;
    let p = s.restrict_to_domain(&prefix_relation()?)?;
    s.add_relation("P", p)?;
    let a = s.restrict_to_domain(&ends_in_a()?)?;
    s.add_relation("A", a)?;
    Ok(s)
}

/// Naturals in least-significant-bit-first binary without trailing zeros,
/// with the addition graph.
pub fn presburger() -> Result<Structure> {
    let bits = Automaton::char_alphabet("01");
    let mut dom = Automaton::new(1, bits.clone())?;
    let one = dom.add_state(true);
    dom.set_accepting(0, true);
    for s in [0, one] {
        dom.push_transition(s, LetterTuple::new_unchecked(vec![0].into()), 2);
        dom.push_transition(s, LetterTuple::new_unchecked(vec![1].into()), one);
    }
    let zero = dom.add_state(false);
    dom.push_transition(zero, LetterTuple::new_unchecked(vec![0].into()), zero);
    dom.push_transition(zero, LetterTuple::new_unchecked(vec![1].into()), one);
    let dom = dom.trim();
    // state = carry * 8 + pad mask
    let mut add = Automaton::new(3, bits)?;
    for _ in 1..16 {
        add.add_state(false);
    }
    for mask in 0..8u64 {
        add.set_accepting(mask as usize, true);
    }
    for carry in 0..2u32 {
        for mask in 0..8u64 {
            for l in crate::automata::boolean::letters_after(3, 2, mask) {
                let v = |s: Sym| if s == PAD { 0 } else { u32::from(s) };
                let (x, y, z) = (v(l.get(0)), v(l.get(1)), v(l.get(2)));
                let sum = x + y + carry;
                if sum % 2 != z {
                    continue;
                }
                let to = (sum / 2) as usize * 8 + (mask | l.pad_mask()) as usize;
                add.push_transition(carry as usize * 8 + mask as usize, l, to);
            }
        }
    }
    let mut s = Structure::new("presburger", dom)?;
    let add = s.restrict_to_domain(&add)?;
    s.add_relation("Add", add)?;
    Ok(s)
}

/// The order presentation of ω·2+3 as a structure.
pub fn omega_two_plus_three() -> Result<Structure> {
    Ok(orders::omega_two_plus_three()?.order.structure().clone())
}

/// The integers with their order.
pub fn integer_line() -> Result<Structure> {
    Ok(orders::integer_line()?.order.structure().clone())
}

pub fn all_structures() -> Result<Vec<Structure>> {
    Ok(vec![
        unary_omega()?,
        binary_tree()?,
        finite_tree()?,
        presburger()?,
        omega_two_plus_three()?,
        integer_line()?,
    ])
}

/// `(structure, formula)` pairs whose truth is decided inside the fragment
/// of words of length at most 6, for assignments of length at most 3.
pub const FO_CASES: &[(&str, &str)] = &[
    ("unary-omega", "(exists y (S x y))"),
    ("unary-omega", "(exists x (forall y (or (= x y) (< x y))))"),
    ("unary-omega", "(exists y (S y x))"),
    ("unary-omega", "(exists y (and (S x y) (S y z)))"),
    ("unary-omega", "(forall y (implies (< y x) (exists z (and (< y z) (not (< x z))))))"),
    ("unary-omega", "(exists-inf y (< y x))"),
    ("unary-omega", "(exists-inf y (< x y))"),
    ("binary-tree", "(forall x (P x x))"),
    ("binary-tree", "(exists z (and (P x z) (P y z)))"),
    ("binary-tree", "(and (E x y) (not (= x y)) (A x))"),
    ("binary-tree", "(exists y (and (P y x) (not (= y x)) (A y)))"),
    ("binary-tree", "(forall (x y) (implies (and (P x y) (P y x)) (= x y)))"),
    ("binary-tree", "(exists-inf y (P x y))"),
    ("binary-tree", "(exists-inf y (P y x))"),
    ("binary-tree", "(forall z (implies (P z x) (or (P z y) (A z))))"),
    ("finite-tree", "(forall x (exists y (and (P x y) (not (exists z (and (P y z) (not (= y z))))))))"),
    ("finite-tree", "(exists x (forall y (P x y)))"),
    ("finite-tree", "(exists-inf x (A x))"),
    ("finite-tree", "(forall y (implies (A y) (exists z (and (P z y) (not (A z))))))"),
    ("finite-tree", "(exists (y z) (and (P x y) (P x z) (not (P y z)) (not (P z y))))"),
    ("presburger", "(exists z (Add x y z))"),
    ("presburger", "(exists x (forall y (Add x y y)))"),
    ("presburger", "(forall (x y z) (implies (Add x y z) (Add y x z)))"),
    ("presburger", "(exists y (Add y y x))"),
    ("presburger", "(exists z (and (Add x z y) (not (= z x))))"),
    ("presburger", "(exists x (and (Add x x x) (not (exists y (Add y y y)))))"),
    ("omega*2+3", "(forall x (exists y (or (< x y) (= x y))))"),
    ("omega*2+3", "(exists x (forall y (or (< y x) (= x y))))"),
    ("omega*2+3", "(exists y (and (< x y) (not (exists z (and (< x z) (< z y))))))"),
    ("omega*2+3", "(exists-inf y (< y x))"),
    ("omega*2+3", "(forall y (or (< y x) (= y x) (exists z (and (< x z) (< z y)))))"),
    ("integer-line", "(exists y (< y x))"),
    ("integer-line", "(exists (x y) (and (< x y) (not (exists z (and (< x z) (< z y))))))"),
    ("integer-line", "(exists-inf y (or (and (< x y) (< y z)) (and (< z y) (< y x))))"),
    ("integer-line", "(exists y (and (< x y) (not (exists z (and (< x z) (< z y))))))"),
];
