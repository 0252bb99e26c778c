//! Cantor normal form arithmetic and fundamental sequences.

use wob::ordinal::{check_bachmann, sample_limits, standard_fs, Cnf};

fn main() -> wob::Result<()> {
    let a: Cnf = "w^2*3 + w".parse()?;
    let b: Cnf = "w^2*3 + 5".parse()?;
    println!("{a} vs {b}: {:?}", a.cmp(&b));
    println!("1 + w = {}", Cnf::one().add(&Cnf::omega()));
    println!("w + 1 = {}", Cnf::omega().add(&Cnf::one()));
    println!("(w + 1)^3 = {}", Cnf::omega().succ().pow_nat(3));
    println!("2 * w = {}", Cnf::nat(2u32).mul(&Cnf::omega()));
    let lim: Cnf = "w^w".parse()?;
    for n in 0..4 {
        println!("(w^w)[{n}] = {}", standard_fs(&lim, n)?);
    }
    let bound: Cnf = "w^3".parse()?;
    println!("{} sampled limits below {bound}", sample_limits(&bound).len());
    let v = check_bachmann(|l, n| standard_fs(l, n).ok(), &bound, 4)?;
    println!("Bachmann violation: {v:?}");
    Ok(())
}
