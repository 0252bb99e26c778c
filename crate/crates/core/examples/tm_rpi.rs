//! Turing machine step relations and the well-founded relation built from a
//! comparator machine.

use wob::pathology::PiPredicate;
use wob::tm::machines::{binary_copy, kreisel_comparator};
use wob::tm::{build_rpi, step_relation_automaton};

fn main() -> wob::Result<()> {
    let copy = binary_copy()?;
    let step = step_relation_automaton(&copy)?;
    println!("binary copy step relation: {} states", step.num_states());

    let tm = kreisel_comparator(&PiPredicate::regular_except(&[])?)?;
    println!("comparator: {} states, reversible {}", tm.states.len(), tm.check_reversible().is_none());

    let r = build_rpi(&PiPredicate::regular_except(&[])?)?;
    let path = r.emb_path(1, 3)?.expect("1 precedes 3");
    println!("path from 1 to 3 has {} edges, valid {}", path.len() - 1, r.path_is_valid(&path)?);
    println!("bounded check, true predicate: {:?}", r.wf_check(3, 5)?.verdict);

    let r = build_rpi(&PiPredicate::regular_except(&["1"])?)?;
    println!("bounded check, fails at word 1: {:?}", r.wf_check(3, 5)?.verdict);
    Ok(())
}
