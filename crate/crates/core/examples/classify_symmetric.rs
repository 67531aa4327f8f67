//! Classes of minimal generating sequences of the symmetric group S4, and of
//! any group given by descriptor.
//!
//! cargo run --example classify_symmetric
//! cargo run --example classify_symmetric -- "dihedral:6" 2

use cayley_equiv::{classify, ClassifyOptions, FiniteGroup};

fn main() -> cayley_equiv::Result<()> {
    let mut args = std::env::args().skip(1);
    let runs: Vec<(String, usize)> = match (args.next(), args.next()) {
        (Some(d), l) => vec![(d, l.and_then(|l| l.parse().ok()).unwrap_or(2))],
        _ => vec![
            ("perm:4:(1,2),(1,2,3,4)".into(), 2),
            ("perm:4:(1,2),(1,2,3,4)".into(), 3),
        ],
    };
    for (desc, length) in runs {
        let g = FiniteGroup::from_descriptor(&desc)?;
        let report = classify(&g, length, &ClassifyOptions::default())?;
        print!("{}", report.to_table());
        println!("({:.1?})\n", report.wall_time);
    }
    Ok(())
}
