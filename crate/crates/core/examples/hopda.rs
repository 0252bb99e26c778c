//! Higher-order pushdown automata: runs, configuration graphs, contraction
//! and the ordinals carried by the bundled machines.

use wob::hopda::machines::{anbn, check_prefix, contracted, ordinal_machines};
use wob::hopda::{accepts, config_graph, parse_pds, unfold};

fn main() -> wob::Result<()> {
    let h = anbn()?;
    for w in ["a a b b", "a b b", ""] {
        let word: Vec<&str> = w.split_whitespace().collect();
        println!("anbn {w:?}: {:?}", accepts(&h, &word, 5000)?);
    }
    let g = config_graph(&h, 6)?;
    print!("{}", g.graph.to_text());
    println!("partial: {}", g.partial);

    let p = parse_pds("[[Z,A],[Z]]", &["Z".to_string(), "A".to_string()])?;
    println!("level {} store of size {}, pushed: {}", p.level(), p.size(), p.push(2, 1)?.render(&["Z".into(), "A".into()]));

    for m in ordinal_machines()? {
        let g = contracted(&m, 2000)?;
        let u = unfold(&g, 0, 2)?;
        match check_prefix(&m, 100, 5000)? {
            Ok(vals) => println!(
                "{}: carries {}, unfolding to depth 2 has {} vertices, prefix reaches {}",
                m.spec.name,
                m.ordinal,
                u.num_vertices(),
                vals.iter().max().expect("nonempty")
            ),
            Err(e) => println!("{}: {e}", m.spec.name),
        }
    }
    Ok(())
}
