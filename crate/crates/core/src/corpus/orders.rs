//! Automatic presentations of linear orders with known order types.

use std::sync::Arc;

use crate::automata::builders::{llex, words_over};
use crate::automata::{intersect, minimize, union, Automaton, LetterTuple, Sym, PAD};
use crate::ordinal::Cnf;
use crate::recognition::OrderPresentation;
use crate::Result;

/// Maps a rendered domain word to its position in the order.
pub type Decoder = Arc<dyn Fn(&str) -> Cnf + Send + Sync>;

#[derive(Clone)]
pub struct CorpusOrder {
    pub name: String,
    pub order: OrderPresentation,
    /// The order type, or `None` for non-well-orders.
    pub expected: Option<Cnf>,
    pub decode: Option<Decoder>,
}

fn alpha(s: &str) -> Vec<String> {
    Automaton::char_alphabet(s)
}

/// `A × B` as a binary relation.
pub fn pair(a: &Automaton, b: &Automaton) -> Result<Automaton> {
    Ok(minimize(&intersect(&a.insert_tape(1)?, &b.insert_tape(0)?)?))
}

/// llex restricted to `A × A`.
pub fn llex_on(a: &Automaton) -> Result<Automaton> {
    Ok(minimize(&intersect(&llex(a.alphabet().to_vec())?, &pair(a, a)?)?))
}

/// Reverse llex restricted to `A × A`.
pub fn rev_llex_on(a: &Automaton) -> Result<Automaton> {
    llex_on(a)?.permute_tapes(&[1, 0])
}

/// Orders decided at the first position where the words differ.
///
/// `decide(u, v)` gets the differing symbols (`None` once a word has ended)
/// and says whether `x < y`.
pub fn first_difference(alphabet: Vec<String>, decide: impl Fn(Option<Sym>, Option<Sym>) -> bool) -> Result<Automaton> {
    let mut a = Automaton::new(2, alphabet)?;
    let n = a.alphabet().len() as Sym;
    // 0: equal so far; 1: decided, both running; 2: x ended; 3: y ended
    let live = a.add_state(true);
    let xp = a.add_state(true);
    let yp = a.add_state(true);
    let l = |x: Sym, y: Sym| LetterTuple::new_unchecked(vec![x, y].into());
    let opt = |s: Sym| (s != PAD).then_some(s);
    let syms: Vec<Sym> = (0..n).chain(std::iter::once(PAD)).collect();
    for &u in &syms {
        for &v in &syms {
            if u == PAD && v == PAD {
                continue;
            }
            let target = match (u == PAD, v == PAD) {
                (true, _) => xp,
                (_, true) => yp,
                _ => live,
            };
            a.push_transition(live, l(u, v), target);
            if u == PAD {
                a.push_transition(xp, l(u, v), xp);
            }
            if v == PAD {
                a.push_transition(yp, l(u, v), yp);
            }
            if u == v {
                a.push_transition(0, l(u, v), 0);
            } else if decide(opt(u), opt(v)) {
                a.push_transition(0, l(u, v), target);
            }
        }
    }
    Ok(minimize(&a))
}

/// Lexicographic order with proper prefixes first.
pub fn lex(alphabet: Vec<String>) -> Result<Automaton> {
    first_difference(alphabet, |u, v| match (u, v) {
        (None, _) => true,
        (_, None) => false,
        (Some(u), Some(v)) => u < v,
    })
}

fn restrict(domain: &Automaton, rel: &Automaton) -> Result<Automaton> {
    Ok(minimize(&intersect(rel, &pair(domain, domain)?)?))
}

fn finite_lang(alphabet: Vec<String>, words: &[&str]) -> Result<Automaton> {
    let mut out = Automaton::empty(1, alphabet.clone())?;
    for w in words {
        let probe = Automaton::new(1, alphabet.clone())?;
        let s = crate::automata::builders::singleton(alphabet.clone(), &probe.word(w)?)?;
        out = union(&out, &s)?;
    }
    Ok(minimize(&out))
}

fn plus(alphabet: Vec<String>, sym: &str) -> Result<Automaton> {
    let mut a = Automaton::new(1, alphabet)?;
    let s = a.symbol(sym)?;
    let t = a.add_state(true);
    a.add_transition(0, LetterTuple::new(vec![s])?, t)?;
    a.add_transition(t, LetterTuple::new(vec![s])?, t)?;
    Ok(a)
}

fn count(w: &str, c: char) -> u64 {
    w.chars().filter(|&x| x == c).count() as u64
}

/// ω as `a*` ordered by length.
pub fn omega_unary() -> Result<CorpusOrder> {
    let d = words_over(alpha("a"), &["a"])?;
    let less = llex_on(&d)?;
    Ok(CorpusOrder {
        name: "omega-unary".into(),
        order: OrderPresentation::from_parts("omega-unary", d, less)?,
        expected: Some(Cnf::omega()),
        decode: Some(Arc::new(|w: &str| Cnf::from(w.len() as u64))),
    })
}

/// ω as binary strings in length-lexicographic order.
pub fn omega_binary() -> Result<CorpusOrder> {
    let d = words_over(alpha("01"), &["0", "1"])?;
    let less = llex(alpha("01"))?;
    let decode = |w: &str| {
        let v = w.chars().fold(0u64, |acc, c| 2 * acc + u64::from(c == '1'));
        Cnf::from((1u64 << w.len()) - 1 + v)
    };
    Ok(CorpusOrder {
        name: "omega-binary".into(),
        order: OrderPresentation::from_parts("omega-binary", d, less)?,
        expected: Some(Cnf::omega()),
        decode: Some(Arc::new(decode)),
    })
}

/// ω·2+3 as `a* ∪ b+ ∪ {c, cc, ccc}` in lexicographic order.
pub fn omega_two_plus_three() -> Result<CorpusOrder> {
    let ab = alpha("abc");
    let d = union(
        &union(&words_over(ab.clone(), &["a"])?, &plus(ab.clone(), "b")?)?,
        &finite_lang(ab.clone(), &["c", "cc", "ccc"])?,
    )?;
    let d = minimize(&d);
    let less = restrict(&d, &lex(ab)?)?;
    let decode = |w: &str| {
        let n = w.len() as u64;
        match w.chars().next() {
            None | Some('a') => Cnf::from(n),
            Some('b') => Cnf::omega().add(&Cnf::from(n - 1)),
            _ => Cnf::omega().mul(&Cnf::from(2)).add(&Cnf::from(n - 1)),
        }
    };
    Ok(CorpusOrder {
        name: "omega*2+3".into(),
        order: OrderPresentation::from_parts("omega*2+3", d, less)?,
        expected: Some(crate::ordinal::parse_cnf("w*2 + 3")?),
        decode: Some(Arc::new(decode)),
    })
}

/// ω² as `a^m b^n` ordered by `(m, n)` lexicographically.
pub fn omega_squared() -> Result<CorpusOrder> {
    let g = generic(&Cnf::omega_power(Cnf::from(2)))?;
    Ok(CorpusOrder {
        name: "omega^2-pairs".into(),
        ..g
    })
}

/// Block letters used by [`generic`]: `a` is the most significant.
const BLOCK: &str = "abcdefghijklmnopqrs";

/// A presentation of any `α < ω^ω`.
///
/// Write `α = ω^{e_0} + ω^{e_1} + ...` as a non-increasing sum of powers. The
/// copy of `ω^{e_c}` consists of the words `t^c a^{k_1} b^{k_2} ...` using the
/// first `e_c` block letters; `(k_1, k_2, ...)` is ordered lexicographically.
pub fn generic(alpha_ord: &Cnf) -> Result<CorpusOrder> {
    let mut exps: Vec<usize> = Vec::new();
    for (e, m) in alpha_ord.terms() {
        let e = e
            .as_u64()
            .filter(|&e| e as usize <= BLOCK.len())
            .ok_or_else(|| crate::Error::ArityMismatch(format!("{alpha_ord} is too large for a generic presentation")))?;
        let m: usize = m.try_into().map_err(|_| crate::Error::ArityMismatch("coefficient too large".into()))?;
        exps.extend(std::iter::repeat_n(e as usize, m));
    }
    let width = exps.iter().copied().max().unwrap_or(0);
    let letters: String = std::iter::once('t').chain(BLOCK.chars().take(width)).collect();
    let ab = alpha(&letters);
    let mut d = Automaton::new(1, ab.clone())?;
    let l = |s: usize| LetterTuple::new_unchecked(vec![s as Sym].into());
    let mut prev_t = 0;
    for (c, &e) in exps.iter().enumerate() {
        if c > 0 {
            let s = d.add_state(false);
            d.push_transition(prev_t, l(0), s);
            prev_t = s;
        }
        d.set_accepting(prev_t, true);
        let block: Vec<usize> = (0..e).map(|_| d.add_state(true)).collect();
        for i in 0..e {
            d.push_transition(prev_t, l(i + 1), block[i]);
            for j in i..e {
                d.push_transition(block[i], l(j + 1), block[j]);
            }
        }
    }
    if exps.is_empty() {
        d = Automaton::empty(1, ab.clone())?;
    }
    let d = minimize(&d);
    let order = first_difference(ab, |u, v| match (u, v) {
        (_, Some(0)) => true,
        (Some(0), _) => false,
        (None, _) => true,
        (_, None) => false,
        (Some(u), Some(v)) => u > v,
    })?;
    let less = restrict(&d, &order)?;
    let name = format!("generic {alpha_ord}");
    let decode = move |w: &str| {
        let c = w.chars().take_while(|&ch| ch == 't').count();
        let mut v = exps[..c]
            .iter()
            .fold(Cnf::zero(), |acc, &e| acc.add(&Cnf::omega_power(Cnf::from(e as u64))));
        let e = exps[c];
        for (i, ch) in BLOCK.chars().take(e).enumerate() {
            let k = count(w, ch);
            v = v.add(&Cnf::term(Cnf::from((e - 1 - i) as u64), k));
        }
        v
    };
    Ok(CorpusOrder {
        name: name.clone(),
        order: OrderPresentation::from_parts(&name, d, less)?,
        expected: Some(alpha_ord.clone()),
        decode: Some(Arc::new(decode)),
    })
}

/// The integers as `n^k` (negative), the empty word (zero) and `p^k` (positive).
pub fn integer_line() -> Result<CorpusOrder> {
    let ab = alpha("np");
    let neg = plus(ab.clone(), "n")?;
    let pos = plus(ab.clone(), "p")?;
    let zero = finite_lang(ab.clone(), &[""])?;
    let d = minimize(&union(&union(&neg, &pos)?, &zero)?);
    let mut less = rev_llex_on(&neg)?;
    for r in [llex_on(&pos)?, pair(&neg, &zero)?, pair(&neg, &pos)?, pair(&zero, &pos)?] {
        less = union(&less, &r)?;
    }
    not_well_order("integer-line", d, minimize(&less))
}

/// ω followed by a reversed copy: `a*` ascending, then `b+` descending.
pub fn omega_plus_omega_star() -> Result<CorpusOrder> {
    let ab = alpha("ab");
    let up = words_over(ab.clone(), &["a"])?;
    let down = plus(ab, "b")?;
    let d = minimize(&union(&up, &down)?);
    let less = union(&union(&llex_on(&up)?, &rev_llex_on(&down)?)?, &pair(&up, &down)?)?;
    not_well_order("omega+omega*", d, minimize(&less))
}

/// Lexicographic order on `{0,1}*1`, a dense order without endpoints.
pub fn dense() -> Result<CorpusOrder> {
    let ab = alpha("01");
    let mut d = Automaton::new(1, ab.clone())?;
    let one = d.add_state(true);
    for s in [0, one] {
        d.push_transition(s, LetterTuple::new_unchecked(vec![0].into()), 0);
        d.push_transition(s, LetterTuple::new_unchecked(vec![1].into()), one);
    }
    let less = restrict(&d, &lex(ab)?)?;
    not_well_order("dense", d, less)
}

/// Lexicographic order on all of `{0,1}*`.
pub fn lex_binary() -> Result<CorpusOrder> {
    let ab = alpha("01");
    let d = words_over(ab.clone(), &["0", "1"])?;
    not_well_order("lex-binary", d, lex(ab)?)
}

fn not_well_order(name: &str, d: Automaton, less: Automaton) -> Result<CorpusOrder> {
    Ok(CorpusOrder {
        name: name.into(),
        order: OrderPresentation::from_parts(name, d, less)?,
        expected: None,
        decode: None,
    })
}

/// The ten well-order presentations, all of type below ω^5.
pub fn well_orders() -> Result<Vec<CorpusOrder>> {
    let p = |s: &str| crate::ordinal::parse_cnf(s).expect("valid literal");
    let mut out = vec![omega_unary()?, omega_binary()?, omega_two_plus_three()?, omega_squared()?];
    for a in ["w + 1", "w*2", "w^2*2 + w*3 + 4", "w^3", "w^3 + w^2 + 1", "w^4"] {
        out.push(generic(&p(a))?);
    }
    Ok(out)
}

pub fn non_well_orders() -> Result<Vec<CorpusOrder>> {
    Ok(vec![integer_line()?, omega_plus_omega_star()?, dense()?, lex_binary()?])
}
