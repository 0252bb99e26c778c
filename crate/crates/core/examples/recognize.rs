//! Well-order recognition on automatic linear orders.

use std::path::Path;

use wob::corpus::orders;
use wob::fo::manifest::load_manifest;
use wob::recognition::{isomorphic, recognize_default, OrderPresentation};

fn main() -> wob::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples");
    for m in ["omega.manifest", "data/integers.manifest"] {
        let p = OrderPresentation::new(load_manifest(&dir.join(m))?)?;
        let r = recognize_default(&p)?;
        println!("{m}: {} ({} levels)", r.verdict, r.levels.len());
    }
    for c in orders::well_orders()?.iter().chain(&orders::non_well_orders()?) {
        let r = recognize_default(&c.order)?;
        println!("{:<24} {}", c.name, r.verdict);
    }
    let a = orders::generic(&"w^2".parse()?)?;
    let b = orders::omega_squared()?;
    println!("generic w^2 ~ omega_squared: {}", isomorphic(&a.order, &b.order)?);
    Ok(())
}
