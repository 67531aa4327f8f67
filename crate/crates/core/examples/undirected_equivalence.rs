//! Forgetting edge directions merges classes: the two {{4,4}} classes of DC12
//! and the two A4 pairs become equivalent.
//!
//! cargo run --example undirected_equivalence

use cayley_equiv::{classify, directed_iso, undirected_iso, CayleyGraph, ClassifyOptions, FiniteGroup, Mode};

fn main() -> cayley_equiv::Result<()> {
    let dc12 = FiniteGroup::dicyclic(3)?;
    for mode in [Mode::Directed, Mode::Undirected] {
        let report = classify(
            &dc12,
            2,
            &ClassifyOptions {
                mode,
                ..Default::default()
            },
        )?;
        println!("DC12 {mode}: {} classes", report.class_count());
        for c in &report.classes {
            println!("  ({})  {}  x{}", c.representative.join(","), c.order_multiset, c.size);
        }
    }

    let a4 = FiniteGroup::from_descriptor("perm:4:(1,2,3),(2,3,4)")?;
    let p = CayleyGraph::build(&a4, &a4.parse_sequence("(1,2,3),(2,4,3)")?);
    let q = CayleyGraph::build(&a4, &a4.parse_sequence("(1,2,3),(2,3,4)")?);
    println!("\nA4 {} vs {}", p.sequence(), q.sequence());
    println!("  directed isomorphic: {}", directed_iso(&p, &q)?.is_some());
    let (pu, qu) = (p.undirected_view(), q.undirected_view());
    match undirected_iso(&pu, &qu)? {
        Some(w) => println!("  undirected witness: {}", w.to_json(pu.label_names(), qu.label_names())),
        None => println!("  not undirected isomorphic"),
    }
    Ok(())
}
