//! Boolean operations, projection and enumeration on synchronous automata.

use wob::automata::builders::{equality, llex};
use wob::automata::{complement, intersect, minimize, project, Automaton};

fn main() -> wob::Result<()> {
    let ab = Automaton::char_alphabet("ab");
    let less = intersect(&llex(ab.clone())?, &complement(&equality(ab.clone())?))?;
    let less = minimize(&less);
    println!("llex-strict: {} states", less.num_states());
    for pair in less.enumerate(6) {
        println!("  {} < {}", less.display_word(&pair[0]), less.display_word(&pair[1]));
    }
    let has_smaller = minimize(&project(&less, 0)?);
    println!("words with a smaller word: {:?}", has_smaller.stats());
    println!("\"a\" has a smaller word: {}", has_smaller.accepts_strs(&["a"])?);
    println!("\"\" has a smaller word: {}", has_smaller.accepts_strs(&[""])?);
    Ok(())
}
