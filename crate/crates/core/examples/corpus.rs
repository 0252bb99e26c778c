//! Runs the bundled corpus: FO queries against brute force and order-type
//! recognition on the well-orders and non-well-orders.

fn main() -> wob::Result<()> {
    let (report, failures) = wob::corpus::run_corpus()?;
    print!("{report}");
    println!("failures={failures}");
    Ok(())
}
