//! Write the Cayley graphs of DC12 for (ax, x) and (a^2, x) as DOT files and
//! print their cycle structure.
//!
//! cargo run --example cayley_figures -- /tmp
//! dot -Tsvg /tmp/dc12_ax_x.dot > dc12_ax_x.svg

use std::path::PathBuf;

use cayley_equiv::{CayleyGraph, DotOptions, FiniteGroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let dc12 = FiniteGroup::dicyclic(3)?;
    for (seq, file) in [("a*x,x", "dc12_ax_x.dot"), ("a^2,x", "dc12_a2_x.dot")] {
        let gamma = CayleyGraph::build(&dc12, &dc12.parse_sequence(seq)?);
        println!("({seq}): {} vertices, {} edges", gamma.vertex_count(), gamma.edge_count());
        for l in 0..gamma.label_count() {
            let cycles = gamma.cycle_decomposition(l);
            println!(
                "  {:<4} order {}  {} cycles of length {}",
                gamma.label_names()[l],
                gamma.label_orders()[l],
                cycles.len(),
                cycles[0].len()
            );
        }
        let path = dir.join(file);
        std::fs::write(&path, gamma.to_dot(&DotOptions::default()))?;
        println!("  wrote {}", path.display());
    }
    Ok(())
}
