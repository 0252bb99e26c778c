use super::*;
use proptest::prelude::*;

/// Ordinals below w^w as coefficient vectors, lowest power first.
fn oracle_fs(a: &[u64], n: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let k = a.iter().position(|&c| c > 0).expect("limit");
    assert!(k > 0);
    a[k] -= 1;
    a[k - 1] = n + 1;
    a
}

/// Direct transcription of the three clauses.
fn oracle(a: &[u64], x: u64, fuel: &mut u64) -> Option<BigUint> {
    *fuel = fuel.checked_sub(1)?;
    match a.iter().position(|&c| c > 0) {
        None => Some(BigUint::from(x + 1)),
        Some(0) => {
            let mut p = a.to_vec();
            p[0] -= 1;
            let mut v = BigUint::from(x);
            for _ in 0..x {
                v = oracle(&p, v.to_u64()?, fuel)?;
            }
            Some(v)
        }
        Some(_) => oracle(&oracle_fs(a, x), x, fuel),
    }
}

fn cnf_of(a: &[u64]) -> Cnf {
    let terms = a
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| (Cnf::nat(i as u64), BigUint::from(c)))
        .collect();
    Cnf::from_terms(terms)
}

fn f(alpha: &str, x: u64) -> Outcome {
    eval_f(&StandardSystem, &alpha.parse().unwrap(), &BigUint::from(x), &Budget::default()).unwrap()
}

#[test]
fn small_values() {
    for (a, x, v) in [("0", 5, 6u64), ("1", 3, 6), ("2", 3, 24), ("3", 2, 2048), ("w", 2, 2048), ("2", 0, 0)] {
        assert_eq!(f(a, x).value(), Some(&BigUint::from(v)), "F_{a}({x})");
    }
}

#[test]
fn matches_oracle_up_to_omega_times_two() {
    for c1 in 0..=2u64 {
        for c0 in 0..=4u64 {
            if c1 == 2 && c0 > 0 {
                continue;
            }
            let a = [c0, c1];
            for x in 0..=4u64 {
                let mut fuel = 1_000_000;
                let Some(want) = oracle(&a, x, &mut fuel) else { continue };
                let got = eval_f(&StandardSystem, &cnf_of(&a), &BigUint::from(x), &Budget::steps(10_000_000)).unwrap();
                assert_eq!(got.value(), Some(&want), "{} at {x}", cnf_of(&a));
            }
        }
    }
}

#[test]
fn budget_is_reported_not_raised() {
    let out = eval_f(&StandardSystem, &"w^2".parse().unwrap(), &BigUint::from(3u32), &Budget::steps(10_000)).unwrap();
    assert!(matches!(out, Outcome::Exceeded { steps, .. } if steps <= 10_000), "{out:?}");
    let tight = Budget::new(BigUint::from(100u32), 1_000_000).unwrap();
    let out = eval_f(&StandardSystem, &Cnf::nat(3u64), &BigUint::from(3u32), &tight).unwrap();
    assert!(matches!(out, Outcome::Exceeded { .. }), "{out:?}");
    assert!(Budget::new(BigUint::zero(), 5).is_err());
}

struct Broken;

impl NotationSystem for Broken {
    type Value = Cnf;
    fn name(&self) -> String {
        "broken".into()
    }
    fn is_zero(&self, a: &Cnf) -> bool {
        a.is_zero()
    }
    fn is_limit(&self, a: &Cnf) -> bool {
        a.is_limit()
    }
    fn pred(&self, a: &Cnf) -> Result<Cnf> {
        StandardSystem.pred(a)
    }
    fn fs(&self, lambda: &Cnf, _: u64) -> Result<Cnf> {
        Ok(lambda.succ())
    }
    fn compare(&self, a: &Cnf, b: &Cnf) -> Ordering {
        a.cmp(b)
    }
}

#[test]
fn contract_violation_is_an_error() {
    let r = eval_f(&Broken, &Cnf::omega(), &BigUint::from(2u32), &Budget::default());
    assert!(matches!(r, Err(Error::IllFormedSystem(_))));
}

#[test]
fn domination_reports() {
    let xs: Vec<u64> = (2..=6).collect();
    let b = Budget::steps(1_000_000);
    let rows = dominates_at(&StandardSystem, &Cnf::nat(2u64), &StandardSystem, &Cnf::nat(3u64), &xs, &b).unwrap();
    for r in &rows {
        assert!(r.relation == Some(Ordering::Less) || r.relation.is_none(), "{r:?}");
    }
    assert_eq!(rows[0].relation, Some(Ordering::Less));
    let w = Cnf::omega();
    let same = dominates_at(&StandardSystem, &w, &StandardSystem, &w, &[0, 1, 2], &b).unwrap();
    assert!(same.iter().all(|r| r.relation == Some(Ordering::Equal)));
    assert!(render_report(&same).starts_with("x\tleft"));
}

#[test]
fn shifted_system_grows_at_least_as_fast() {
    let b = Budget::steps(1_000_000);
    let rows = dominates_at(&StandardSystem, &Cnf::omega(), &ShiftedSystem, &Cnf::omega(), &[0, 1, 2], &b).unwrap();
    assert!(rows.iter().all(|r| r.relation != Some(Ordering::Greater)));
    assert_eq!(rows[0].relation, Some(Ordering::Equal));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn monotone_in_x(c2 in 0..=1u64, c1 in 0..=2u64, c0 in 0..=3u64, x in 0..5u64) {
        let a = cnf_of(&[c0, c1, c2]);
        let b = Budget::steps(200_000);
        let lo = eval_f(&StandardSystem, &a, &BigUint::from(x), &b).unwrap();
        let hi = eval_f(&StandardSystem, &a, &BigUint::from(x + 1), &b).unwrap();
        if let (Some(l), Some(h)) = (lo.value(), hi.value()) {
            prop_assert!(l <= h);
        }
    }
}
