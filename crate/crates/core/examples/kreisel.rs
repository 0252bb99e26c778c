//! Kreisel's ordering: a computable order that looks like w but is not
//! well-founded once the predicate fails somewhere.

use num_bigint::BigUint;
use wob::fgh::{eval_f, Budget};
use wob::pathology::{
    descending_region, kreisel_as_automatic, nat_to_word, omega_plus_one_system, word_to_nat, FSpec, KreiselOrder,
    PiPredicate, P1,
};
use wob::recognition::recognize_default;

fn main() -> wob::Result<()> {
    let good = KreiselOrder::new(PiPredicate::always());
    println!("always: descent from 3 = {:?}", good.find_descent(3, 10)?);
    let bad = KreiselOrder::new(PiPredicate::except(2));
    println!("except 2: 5 vs 11 = {:?}", bad.compare(5, 11)?);
    println!("except 2: descent = {:?}", bad.find_descent(3, 10)?);

    let pi = PiPredicate::regular_except(&["11"])?;
    let p = kreisel_as_automatic(&pi)?;
    println!("automatic, except \"11\": {}", recognize_default(&p)?.verdict);
    let region = descending_region(&pi)?;
    let first: Vec<String> = region
        .enumerate(6)
        .iter()
        .map(|t| region.display_word(&t[0]))
        .collect();
    println!("region without a minimum starts {first:?}");
    println!("word 11 is {}, 7 is {:?}", word_to_nat("11")?, nat_to_word(7));

    let sys = omega_plus_one_system(FSpec::two_pow(), 20)?;
    let b = Budget::steps(2_000_000);
    for x in [1u32, 3] {
        println!("F_w({x}) in the inflated system: {}", eval_f(&sys, &P1::Top, &BigUint::from(x), &b)?);
    }
    Ok(())
}
