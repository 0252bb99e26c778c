//! The fast-growing hierarchy under the standard and shifted systems.

use num_bigint::BigUint;
use wob::fgh::{dominates_at, eval_f, render_report, Budget, ShiftedSystem, StandardSystem};
use wob::ordinal::Cnf;

fn main() -> wob::Result<()> {
    let b = Budget::steps(10_000_000);
    for (a, x) in [("0", 5u32), ("1", 5), ("2", 3), ("3", 2), ("w", 2), ("w + 1", 1)] {
        let alpha: Cnf = a.parse()?;
        println!("F_{{{a}}}({x}) = {}", eval_f(&StandardSystem, &alpha, &BigUint::from(x), &b)?);
    }
    let rows = dominates_at(&StandardSystem, &Cnf::nat(2u32), &ShiftedSystem, &Cnf::omega(), &[1, 3], &b)?;
    print!("{}", render_report(&rows));
    Ok(())
}
