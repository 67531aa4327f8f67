//! Find and check an explicit isomorphism between two Cayley graphs, and
//! compare the backtracking search with brute force.
//!
//! cargo run --example iso_witness -- dicyclic:5 "a*x,x" "a^3*x,a^2*x"

use cayley_equiv::iso::automorphisms;
use cayley_equiv::{brute_force_iso, directed_iso, CayleyGraph, FiniteGroup};

fn main() -> cayley_equiv::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (desc, s, t) = match args.as_slice() {
        [d, s, t] => (d.as_str(), s.as_str(), t.as_str()),
        _ => ("dicyclic:3", "a*x,x", "x,a*x"),
    };
    let g = FiniteGroup::from_descriptor(desc)?;
    let a = CayleyGraph::build(&g, &g.parse_sequence(s)?);
    let b = CayleyGraph::build(&g, &g.parse_sequence(t)?);
    println!("{desc}: Γ({s}) vs Γ({t})");
    match directed_iso(&a, &b)? {
        Some(w) => {
            println!("witness {}", w.to_json(a.label_names(), b.label_names()));
            println!("validated edge by edge: {}", w.validate_directed(&a, &b));
            for (v, &fv) in w.vertex_map.iter().enumerate().take(6) {
                println!("  {} -> {}", a.vertex_names()[v], b.vertex_names()[fv]);
            }
        }
        None => println!("not isomorphic"),
    }
    println!("automorphisms of Γ({s}): {}", automorphisms(&a)?.len());
    if g.order() <= cayley_equiv::iso::BRUTE_FORCE_LIMIT {
        println!("brute force agrees: {}", brute_force_iso(&a, &b)?.is_some() == directed_iso(&a, &b)?.is_some());
    }
    Ok(())
}
