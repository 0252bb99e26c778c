//! First-order queries on an automatic structure loaded from a manifest.

use std::path::Path;

use wob::fo::{self, manifest::load_manifest, parse_formula};

fn main() -> wob::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples");
    let s = load_manifest(&dir.join("data/binary_tree.manifest"))?;
    for text in [
        "(forall x (exists y (P x y)))",
        "(exists x (forall y (P x y)))",
        "(forall x (exists-inf y (P x y)))",
    ] {
        let f = parse_formula(text)?;
        println!("{text} => {}", fo::eval_sentence(&s, &f)?);
    }
    let f = parse_formula("(and (P x y) (not (= x y)))")?;
    let c = fo::compile(&s, &f)?;
    println!("strict P, vars {:?}, {} states:", c.vars, c.automaton.num_states());
    for t in c.automaton.enumerate(5) {
        let shown: Vec<String> = t.iter().map(|w| c.automaton.display_word(w)).collect();
        println!("  {}", shown.join(" "));
    }
    Ok(())
}
