//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::process::Command;
use std::time::Instant;

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use wob::automata::{project, Word};
use wob::corpus::{self, orders};
use wob::fgh::{dominates_at, eval_f, Budget, NotationSystem, Outcome, ShiftedSystem, StandardSystem};
use wob::fo::parse_formula;
use wob::hopda::machines::{check_prefix, ordinal_machines};
use wob::hopda::{accepts, config_graph, epsilon_contract, parse_hopda, unfold, Npds, EPS};
use wob::ordinal::{check_bachmann, shifted_fs, standard_fs, Cnf};
use wob::pathology::{
    descending_region, kreisel_as_automatic, nat_to_word, omega_plus_one_system, word_to_nat, FSpec, KreiselOrder,
    PiPredicate, P1,
};
use wob::recognition::{isomorphic, recognize_default, Verdict};
use wob::tm::machines::kreisel_comparator;
use wob::tm::{domain_automaton, step_relation_automaton, ColumnAlphabet, Configuration};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e(err: wob::Error) -> String {
    err.to_string()
}

fn fo_soundness() -> Check {
    let start = Instant::now();
    let checks = corpus::check_fo_corpus().map_err(e)?;
    let secs = start.elapsed().as_secs_f64();
    let structures: BTreeSet<&str> = checks.iter().map(|c| c.structure.as_str()).collect();
    for c in &checks {
        let q = parse_formula(&c.formula).map_err(e)?.quantifier_count();
        ensure(q <= 3, format!("{} has {q} quantifiers", c.formula))?;
        ensure(c.mismatches.is_empty(), format!("{} {}: {:?}", c.structure, c.formula, c.mismatches))?;
    }
    let assignments: usize = checks.iter().map(|c| c.assignments).sum();
    ensure(structures.len() >= 5, format!("{} structures", structures.len()))?;
    ensure(checks.len() >= 30, format!("{} formulas", checks.len()))?;
    ensure(secs < 60.0, format!("took {secs:.1}s"))?;
    Ok(format!(
        "{} structures, {} formulas, {assignments} assignments, 0 mismatches, {secs:.1}s",
        structures.len(),
        checks.len()
    ))
}

fn recognition() -> Check {
    let start = Instant::now();
    let wells = orders::well_orders().map_err(e)?;
    let bads = orders::non_well_orders().map_err(e)?;
    ensure(wells.len() >= 10 && bads.len() >= 4, "corpus too small")?;
    let required = ["w", "w + 1", "w*2 + 3", "w^2", "w^2*2 + w*3 + 4", "w^3"];
    let have: BTreeSet<String> = wells.iter().filter_map(|c| c.expected.as_ref().map(Cnf::to_string)).collect();
    for r in required {
        ensure(have.contains(r), format!("no presentation of {r}"))?;
    }
    for c in wells.iter().chain(&bads) {
        let r = corpus::check_order(c).map_err(e)?;
        ensure(r.ok, format!("{}: {} ({})", r.name, r.verdict, r.detail))?;
        if let Some(want) = &c.expected {
            ensure(want < &Cnf::omega_power(Cnf::nat(5u32)), format!("{want} is not below w^5"))?;
            ensure(r.verdict == Verdict::WellOrder { cnf: want.clone() }, format!("{}: {}", c.name, r.verdict))?;
            corpus::decoder_agrees(c, corpus::SOUNDNESS_PREFIX).map_err(e)?.map_err(|m| format!("{}: {m}", c.name))?;
        } else {
            ensure(matches!(r.verdict, Verdict::NotWellOrder { .. }), format!("{}: {}", c.name, r.verdict))?;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 300.0, format!("took {secs:.1}s"))?;
    Ok(format!(
        "{} well-orders exact with {}-element decoder check, {} non-well-orders with evidence, {secs:.1}s",
        wells.len(),
        corpus::SOUNDNESS_PREFIX,
        bads.len()
    ))
}

fn isomorphism() -> Check {
    let wells = orders::well_orders().map_err(e)?;
    let mut pairs = 0;
    for (i, a) in wells.iter().enumerate() {
        for b in &wells[i + 1..] {
            let got = isomorphic(&a.order, &b.order).map_err(e)?;
            ensure(got == (a.expected == b.expected), format!("{} vs {}: {got}", a.name, b.name))?;
            pairs += 1;
        }
    }
    ensure(pairs >= 45, format!("only {pairs} pairs"))?;
    Ok(format!("{pairs} pairs agree with CNF equality"))
}

/// Direct unfolding of the definition for finite indices and `w`.
fn fgh_oracle(alpha: Option<u64>, x: u64) -> u64 {
    match alpha {
        None => fgh_oracle(Some(x + 1), x),
        Some(0) => x + 1,
        Some(k) => (0..x).fold(x, |v, _| fgh_oracle(Some(k - 1), v)),
    }
}

fn fgh_exact() -> Check {
    let b = Budget::steps(10_000_000);
    let mut shown = Vec::new();
    for (alpha, x, want) in [(Some(0), 5, 6u64), (Some(1), 3, 6), (Some(2), 3, 24), (Some(3), 2, 2048), (None, 2, 2048)] {
        let oracle = fgh_oracle(alpha, x);
        ensure(oracle == want, format!("oracle disagrees at {alpha:?}, {x}"))?;
        let a = alpha.map_or(Cnf::omega(), Cnf::nat);
        match eval_f(&StandardSystem, &a, &BigUint::from(x), &b).map_err(e)? {
            Outcome::Value { value, .. } if value == BigUint::from(want) => shown.push(format!("F_{{{a}}}({x})={value}")),
            other => return Err(format!("F_{{{a}}}({x}) = {other}")),
        }
    }
    Ok(shown.join(" "))
}

fn kreisel() -> Check {
    let bad = KreiselOrder::new(PiPredicate::except(2));
    let chain = bad.find_descent(3, 20).map_err(e)?.ok_or("no descent from 3")?;
    ensure(chain.len() == 20, "short chain")?;
    for w in chain.windows(2) {
        ensure(bad.compare(w[1], w[0]).map_err(e)? == Ordering::Less, format!("{} not below {}", w[1], w[0]))?;
    }

    let pi = PiPredicate::regular_except(&[&nat_to_word(2)]).map_err(e)?;
    let region = descending_region(&pi).map_err(e)?;
    let k = KreiselOrder::new(pi);
    let members: Vec<u64> = region
        .enumerate_up_to(9)
        .iter()
        .map(|t| word_to_nat(&region.display_word(&t[0])))
        .collect::<wob::Result<_>>()
        .map_err(e)?;
    let small: Vec<u64> = members.iter().copied().filter(|&y| nat_to_word(y).len() <= 8).collect();
    ensure(!small.is_empty(), "empty region")?;
    for &y in &small {
        let below = members.iter().any(|&z| k.compare(z, y).map(|o| o == Ordering::Less).unwrap_or(false));
        ensure(below, format!("{:?} is minimal", nat_to_word(y)))?;
    }

    let good = KreiselOrder::new(PiPredicate::always());
    let bound = (1u64 << 9) - 1;
    for x in 0..bound {
        for y in x + 1..bound {
            ensure(good.compare(y, x).map_err(e)? == Ordering::Greater, format!("{y} below {x}"))?;
        }
        ensure(good.find_descent(x, 2).map_err(e)?.is_none(), format!("descent from {x}"))?;
    }
    let p = kreisel_as_automatic(&PiPredicate::regular_except(&[]).map_err(e)?).map_err(e)?;
    let v = recognize_default(&p).map_err(e)?.verdict;
    ensure(v == Verdict::WellOrder { cnf: Cnf::omega() }, format!("true predicate gives {v}"))?;
    Ok(format!(
        "descent of length 20 from 3; {} region elements of length <= 8 each have a smaller one; true predicate: no inversion among {bound} words, {v}",
        small.len()
    ))
}

fn omega_plus_one() -> Check {
    let sys = omega_plus_one_system(FSpec::two_pow(), 20).map_err(e)?;
    for n in 0..10 {
        let a = sys.fs(&P1::Top, n).map_err(e)?;
        let b = sys.fs(&P1::Top, n + 1).map_err(e)?;
        ensure(sys.compare(&a, &P1::Top) == Ordering::Less, format!("w[{n}] = {a} not below w"))?;
        ensure(sys.compare(&a, &b) == Ordering::Less, format!("w[{n}] = {a} not below w[{}]", n + 1))?;
    }
    let budget = Budget::new(BigUint::from(1u32) << 64u32, 2_000_000).map_err(e)?;
    let mut shown = Vec::new();
    for x in 1..=3u64 {
        let f = BigUint::from(1u64 << x);
        let out = eval_f(&sys, &P1::Top, &BigUint::from(x), &budget).map_err(e)?;
        let low = out.lower_bound();
        ensure(*low >= f, format!("F_w({x}) >= {low} only"))?;
        shown.push(match out {
            Outcome::Value { .. } => format!("F_w({x})={low}>={f}"),
            Outcome::Exceeded { .. } => format!("F_w({x})>{}bits>={f}", low.bits() - 1),
        });
    }
    Ok(format!("fundamental sequence of w checked for n<10; {}", shown.join(" ")))
}

fn tm_construction() -> Check {
    let pi = PiPredicate::regular_except(&[]).map_err(e)?;
    let tm = kreisel_comparator(&pi).map_err(e)?;
    ensure(tm.check_reversible().is_none(), "comparator is not reversible")?;
    let cols = ColumnAlphabet::new(&tm).map_err(e)?;
    let dom = domain_automaton(&tm, &cols).map_err(e)?;
    let step = step_relation_automaton(&tm).map_err(e)?;
    ensure(project(&step, 1).map_err(e)?.is_subset_of(&dom).map_err(e)?, "step relation leaves the domain")?;
    ensure(project(&step, 0).map_err(e)?.is_subset_of(&dom).map_err(e)?, "step relation reaches outside the domain")?;
    let exhaustive = 3;
    let mut words: Vec<Word> = dom.enumerate_up_to(exhaustive).into_iter().map(|mut t| t.remove(0)).collect();
    let listed = words.len();
    let mut rng = StdRng::seed_from_u64(11);
    let mut sampled = 0;
    while sampled < 3000 {
        let len = rng.gen_range(exhaustive + 1..=10);
        let mut s = dom.initial();
        let mut w = Word::new();
        for _ in 0..len {
            let ts = dom.transitions(s);
            if ts.is_empty() {
                break;
            }
            let (l, t) = &ts[rng.gen_range(0..ts.len())];
            w.push(l.get(0));
            s = *t;
        }
        if w.len() == len && dom.is_accepting(s) {
            words.push(w);
            sampled += 1;
        }
    }
    let mut indeg: HashMap<Configuration, usize> = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        let c = cols.decode(w).map_err(e)?;
        let want: Vec<Word> = c.step(&tm).map(|n| cols.encode(&n)).into_iter().collect();
        let got = step.section(0, w, w.len() + 1).map_err(e)?;
        ensure(got == want, format!("successors of {} differ", c.render(&tm)))?;
        if i < listed {
            if let Some(n) = c.step(&tm) {
                *indeg.entry(n).or_default() += 1;
            }
        }
    }
    let max_in = indeg.values().copied().max().unwrap_or(0);
    ensure(max_in <= 1, format!("in-degree {max_in}"))?;

    let r = wob::tm::build_rpi(&pi).map_err(e)?;
    let bad = wob::tm::build_rpi(&PiPredicate::regular_except(&[&nat_to_word(2)]).map_err(e)?).map_err(e)?;
    let mut paths = 0;
    for rr in [&r, &bad] {
        let k = KreiselOrder::new(if std::ptr::eq(rr, &r) { PiPredicate::always() } else { PiPredicate::except(2) });
        for x in 0..6 {
            for y in 0..6 {
                if x != y && k.compare(x, y).map_err(e)? == Ordering::Less {
                    let p = rr.emb_path(x, y).map_err(e)?.ok_or(format!("no path {x} -> {y}"))?;
                    ensure(rr.path_is_valid(&p).map_err(e)?, format!("invalid path {x} -> {y}"))?;
                    paths += 1;
                }
            }
        }
    }
    let ok = r.wf_check(3, 8).map_err(e)?;
    ensure(ok.verdict == wob::tm::WfVerdict::Ok, format!("true predicate: {:?}", ok.verdict))?;
    let no = bad.wf_check(3, 8).map_err(e)?;
    ensure(matches!(no.verdict, wob::tm::WfVerdict::Descent { .. }), format!("false predicate: {:?}", no.verdict))?;
    Ok(format!(
        "step automaton = simulator on all {listed} configurations of length <= {exhaustive} and {sampled} random ones of length {}..=10; max in-degree {max_in}; {paths}/{paths} embedding paths; l=8: ok ({} elements) and descent",
        exhaustive + 1,
        ok.elements
    ))
}

fn random_pds(rng: &mut StdRng, level: usize, letters: u16) -> Npds {
    let len = rng.gen_range(1..=3);
    Npds::Stack(
        (0..len)
            .map(|_| if level == 1 { Npds::Letter(rng.gen_range(0..letters)) } else { random_pds(rng, level - 1, letters) })
            .collect(),
    )
}

const ANBN: &str = include_str!("../examples/data/anbn.hopda");
const OMEGA2: &str = include_str!("../examples/data/omega2.hopda");
const OMEGA_OMEGA: &str = include_str!("../examples/data/omega_omega.hopda");

fn edges(list: &[(&str, &str, &str)]) -> Vec<(String, String, String)> {
    let mut v: Vec<_> = list.iter().map(|&(a, b, c)| (a.into(), b.into(), c.into())).collect();
    v.sort();
    v
}

fn hopda_semantics() -> Check {
    let mut rng = StdRng::seed_from_u64(7);
    for i in 0..500 {
        let level = 1 + i % 3;
        let p = random_pds(&mut rng, level, 3);
        let k = rng.gen_range(1..=level);
        let a = rng.gen_range(0..3);
        let q = p.push(k, a).map_err(e)?;
        ensure(q.pop(k).map_err(e)? == p, format!("pop{k}(push{k}({a})) changed a store"))?;
        ensure(q.is_well_formed() && q.level() == level, "push broke the level")?;
    }

    let h = parse_hopda(ANBN).map_err(e)?;
    let mut tried = 0;
    for len in 0..=6usize {
        for bits in 0..1u32 << len {
            let w: Vec<&str> = (0..len).map(|i| if bits >> (len - 1 - i) & 1 == 0 { "a" } else { "b" }).collect();
            let n = len / 2;
            let want = len % 2 == 0 && w[..n].iter().all(|&c| c == "a") && w[n..].iter().all(|&c| c == "b");
            let got = accepts(&h, &w, 5000).map_err(e)?;
            ensure(
                got == if want { wob::hopda::RunResult::Accepted } else { wob::hopda::RunResult::Rejected },
                format!("{w:?}: {got:?}"),
            )?;
            tried += 1;
        }
    }

    let hand: [(&str, &str, Vec<(&str, &str, &str)>, Vec<(&str, &str, &str)>); 3] = [
        (
            "anbn",
            ANBN,
            vec![("p [Z]", "a", "p [Z,A]"), ("p [Z,A]", "a", "p [Z,A,A]"), ("p [Z,A]", "b", "f [Z]"), ("p [Z,A,A]", "a", "p [Z,A,A,A]")],
            vec![
                ("p [Z]", "a", "p [Z].p [Z,A]"),
                ("p [Z].p [Z,A]", "a", "p [Z].p [Z,A].p [Z,A,A]"),
                ("p [Z].p [Z,A]", "b", "p [Z].p [Z,A].f [Z]"),
            ],
        ),
        (
            "omega2",
            OMEGA2,
            vec![("q [Z]", "a", "q [Z,A]"), ("q [Z]", "b", "q [Z,B]"), ("q [Z,B]", "a", "q [Z,A]"), ("q [Z,B]", "b", "q [Z,B,B]")],
            vec![
                ("q [Z]", "a", "q [Z].q [Z,A]"),
                ("q [Z]", "b", "q [Z].q [Z,B]"),
                ("q [Z].q [Z,B]", "a", "q [Z].q [Z,B].q [Z,A]"),
                ("q [Z].q [Z,B]", "b", "q [Z].q [Z,B].q [Z,B,B]"),
            ],
        ),
        (
            "omega-omega",
            OMEGA_OMEGA,
            vec![
                ("q0 [[Z]]", "r", "q0 [[Z,A]]"),
                ("q0 [[Z]]", "c", "q1 [[Z],[Z]]"),
                ("q0 [[Z,A]]", "r", "q0 [[Z,A,A]]"),
                ("q0 [[Z,A]]", "c", "q1 [[Z,A],[Z,A]]"),
                ("q1 [[Z],[Z]]", "c", "q1 [[Z],[Z],[Z]]"),
            ],
            vec![
                ("q0 [[Z]]", "r", "q0 [[Z]].q0 [[Z,A]]"),
                ("q0 [[Z]]", "c", "q0 [[Z]].q1 [[Z],[Z]]"),
            ],
        ),
    ];
    for (name, text, contracted, unfolded) in &hand {
        let g = config_graph(&parse_hopda(text).map_err(e)?, 6).map_err(e)?;
        let c = epsilon_contract(&g.graph, EPS).map_err(e)?;
        ensure(c.labelled_edges() == edges(contracted), format!("{name} contraction: {:?}", c.labelled_edges()))?;
        let u = unfold(&c, 0, if *name == "omega-omega" { 1 } else { 2 }).map_err(e)?;
        ensure(u.labelled_edges() == edges(unfolded), format!("{name} unfolding: {:?}", u.labelled_edges()))?;
    }

    let mut prefixes = Vec::new();
    for m in ordinal_machines().map_err(e)? {
        let vals = check_prefix(&m, 100, 5000).map_err(e)?.map_err(|msg| format!("{}: {msg}", m.spec.name))?;
        prefixes.push(format!("{} (level {}) < {}", m.spec.name, m.spec.level, m.ordinal));
        ensure(vals.len() == 100, "short prefix")?;
    }
    Ok(format!(
        "500 push/pop round trips; anbn exact on {tried} words up to length 6; 3 hand-derived contractions and unfoldings; 100-element prefixes: {}",
        prefixes.join(", ")
    ))
}

fn domination() -> Check {
    let square = Cnf::omega_power(Cnf::nat(2u32));
    for (name, fs) in [("standard", standard_fs as fn(&Cnf, u64) -> wob::Result<Cnf>), ("shifted", shifted_fs)] {
        let v = check_bachmann(|l, n| fs(l, n).ok(), &square, 6).map_err(e)?;
        ensure(v.is_none(), format!("{name} system violates Bachmann: {v:?}"))?;
    }
    let w = Cnf::omega();
    let sample: Vec<Cnf> = [0u64, 1, 2, 3]
        .iter()
        .flat_map(|&k| (0..3u64).map(move |n| Cnf::omega().mul(&Cnf::nat(k)).add(&Cnf::nat(n))))
        .filter(|a| *a <= w.mul(&Cnf::nat(3u32)))
        .collect();
    let budget = Budget::new(BigUint::from(1u32) << 4096u32, 1_000_000).map_err(e)?;
    let xs = [3, 4, 5, 6];
    let (mut decided, mut undecided, mut pairs) = (0, 0, 0);
    for (i, a) in sample.iter().enumerate() {
        for b in &sample[i + 1..] {
            pairs += 1;
            for row in dominates_at(&StandardSystem, a, &ShiftedSystem, b, &xs, &budget).map_err(e)? {
                match row.relation {
                    Some(Ordering::Less) => decided += 1,
                    None => undecided += 1,
                    Some(o) => return Err(format!("F_{{{a}}}({}) vs F'_{{{b}}}: {o:?}", row.x)),
                }
            }
        }
    }
    Ok(format!(
        "{pairs} pairs a<b<=w*3 at x=3..6: {decided} points decided '<', {undecided} beyond the 4096-bit cap, none contradict. \
         Finite sample only; eventual domination is not established by this table"
    ))
}

fn determinism() -> Check {
    let run = || -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_wob")).arg("corpus").output().map_err(|x| x.to_string())?;
        ensure(out.status.success(), format!("exit {:?}", out.status.code()))?;
        Ok(out.stdout)
    };
    let (a, b) = (run()?, run()?);
    ensure(a == b, "outputs differ")?;
    Ok(format!("two runs byte-identical ({} bytes)", a.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("fo soundness", fo_soundness),
        ("well-order recognition", recognition),
        ("isomorphism", isomorphism),
        ("fgh exact values", fgh_exact),
        ("kreisel ordering", kreisel),
        ("w+1 system", omega_plus_one),
        ("tm construction", tm_construction),
        ("pushdown semantics", hopda_semantics),
        ("domination shadow", domination),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = check();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} [{secs:.1}s]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
