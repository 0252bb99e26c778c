use proptest::prelude::*;

use super::*;
use crate::Error;

fn o(s: &str) -> Cnf {
    parse_cnf(s).unwrap()
}

/// Ordinals below ω^ω as flat lists of exponents: `ω^2·2 + 1` is `[2, 2, 0]`.
/// Normalization rewrites `ω^a + ω^b` to `ω^b` whenever `a < b`.
#[derive(Clone, Debug)]
struct Flat(Vec<u32>);

impl Flat {
    fn normalize(mut v: Vec<u32>) -> Flat {
        loop {
            let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| v[i] < v[i + 1]) else {
                return Flat(v);
            };
            v.remove(i);
        }
    }

    fn add(&self, o: &Flat) -> Flat {
        let mut v = self.0.clone();
        v.extend(&o.0);
        Flat::normalize(v)
    }

    fn mul(&self, o: &Flat) -> Flat {
        let mut out = Flat(vec![]);
        let Some(&lead) = self.0.first() else { return out };
        for &b in &o.0 {
            let piece = if b == 0 { self.clone() } else { Flat(vec![lead + b]) };
            out = out.add(&piece);
        }
        out
    }

    fn to_cnf(&self) -> Cnf {
        self.0
            .iter()
            .fold(Cnf::zero(), |acc, &e| acc.add(&Cnf::omega_power(Cnf::from(e as u64))))
    }
}

fn flat_strategy() -> impl Strategy<Value = Flat> {
    prop::collection::vec(0u32..4, 0..6).prop_map(Flat::normalize)
}

#[test]
fn comparison_examples() {
    assert!(o("w") > o("5"));
    assert!(o("w^2*3+w") > o("w^2*3+5"));
    assert!(o("w^w") > o("w^5*99"));
    assert_eq!(o("w^{2}*3 + w").compare(&o("w^2*3+w")), Ordering::Equal);
}

#[test]
fn arithmetic_examples() {
    assert_eq!(o("1").add(&o("w")), o("w"));
    assert_eq!(o("w").add(&o("1")).to_string(), "w + 1");
    assert_eq!(o("w+1").mul(&o("w")), o("w^2"));
    assert_eq!(Cnf::omega_power(Cnf::omega()), Cnf::tower(2));
    assert_eq!(Cnf::tower(3).to_string(), "w^{w^w}");
    assert_eq!(o("w*2").mul(&o("3")), o("w*6"));
    assert_eq!(o("3").mul(&o("w")), o("w"));
    assert_eq!(o("w^2+w").mul(&o("w+2")), o("w^3 + w^2*2 + w"));
    assert_eq!(o("w+3").pred(), Some(o("w+2")));
    assert_eq!(o("w").pred(), None);
}

#[test]
fn text_form() {
    for s in ["0", "7", "w", "w*3", "w^2*3 + w + 5", "w^w", "w^{w + 1}*2 + w^3", "w^{w^2*2 + 1}"] {
        assert_eq!(o(s).to_string(), s);
    }
    assert_eq!(o("ω^2·3+ω").to_string(), "w^2*3 + w");
    assert_eq!(o("1 + w + 2").to_string(), "w + 2");
    assert!(parse_cnf("w^").is_err());
    assert!(parse_cnf("w + x").is_err());
    assert!(parse_cnf("").is_err());
}

#[test]
fn standard_fs_examples() {
    assert_eq!(standard_fs(&o("w"), 2).unwrap(), o("3"));
    assert_eq!(standard_fs(&o("w^w"), 2).unwrap(), o("w^3"));
    assert_eq!(standard_fs(&o("w^2*2"), 4).unwrap(), o("w^2 + w*5"));
    assert_eq!(standard_fs(&o("w^{w+1}"), 1).unwrap(), o("w^w*2"));
    assert_eq!(standard_fs(&o("w+1"), 0), Err(Error::NotALimit("w + 1".into())));
    assert_eq!(standard_fs(&o("0"), 0), Err(Error::NotALimit("0".into())));
    assert_eq!(shifted_fs(&o("w"), 2).unwrap(), o("4"));
}

#[test]
fn standard_system_is_bachmann() {
    let std = |l: &Cnf, n: u64| standard_fs(l, n).ok();
    assert_eq!(check_bachmann(std, &o("w^3"), 10).unwrap(), None);
    assert_eq!(check_bachmann(std, &o("w^5"), 6).unwrap(), None);
    assert_eq!(check_bachmann(std, &o("w^{w*2}"), 4).unwrap(), None);
}

#[test]
fn planted_defects_are_found() {
    // ω[n] = n+1 except ω[5] = 3
    let bad_mono = |l: &Cnf, n: u64| {
        if *l == Cnf::omega() && n == 5 {
            Some(Cnf::from(3))
        } else {
            standard_fs(l, n).ok()
        }
    };
    let v = check_bachmann(bad_mono, &o("w^2"), 10).unwrap().unwrap();
    assert_eq!(v.triple(), (&o("w"), 4, &o("3")));
    assert!(matches!(v, BachmannViolation::NotIncreasing { .. }));

    // (ω·2)[0] = 0: ω·2 lies in (ω²[0], ω²[1]] = (ω, ω·2] but (ω·2)[0] < ω
    let bad_jump = |l: &Cnf, n: u64| {
        if *l == o("w*2") && n == 0 {
            Some(Cnf::zero())
        } else {
            standard_fs(l, n).ok()
        }
    };
    let v = check_bachmann(bad_jump, &o("w^2"), 10).unwrap().unwrap();
    assert_eq!(v, BachmannViolation::Bachmann { lambda: o("w^2"), n: 0, alpha: o("w*2") });

    let partial = |l: &Cnf, n: u64| if *l == Cnf::omega() { standard_fs(l, n).ok() } else { None };
    assert!(matches!(check_bachmann(partial, &o("w^2"), 3), Err(Error::MissingFs(_))));
}

#[test]
fn fs_values_below_limits_and_increasing() {
    for l in sample_limits(&o("w^5")) {
        let mut prev: Option<Cnf> = None;
        for n in 0..50 {
            let v = standard_fs(&l, n).unwrap();
            assert!(v < l, "{l}[{n}] = {v}");
            if let Some(p) = prev {
                assert!(p < v);
            }
            prev = Some(v);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn total_order_matches_oracle(a in flat_strategy(), b in flat_strategy()) {
        let (x, y) = (a.to_cnf(), b.to_cnf());
        // lexicographic order on the flat lists is the ordinal order
        prop_assert_eq!(x.compare(&y), a.0.cmp(&b.0));
        prop_assert_eq!(x.compare(&y).reverse(), y.compare(&x));
    }

    #[test]
    fn arithmetic_matches_oracle(a in flat_strategy(), b in flat_strategy(), c in flat_strategy()) {
        let (x, y, z) = (a.to_cnf(), b.to_cnf(), c.to_cnf());
        prop_assert_eq!(x.add(&y), a.add(&b).to_cnf());
        prop_assert_eq!(x.mul(&y), a.mul(&b).to_cnf());
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(parse_cnf(&x.to_string()).unwrap(), x);
    }
}
