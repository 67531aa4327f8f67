//! Classify the minimal generating pairs of DC_4n and compare with the
//! closed-form prediction.
//!
//! cargo run --example dicyclic_theorem -- 2 8

use cayley_equiv::theory::{predicted_classification, verify_theorem, TheoremOptions};

fn main() -> cayley_equiv::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (lo, hi) = match args.as_slice() {
        [a, b] => (*a, *b),
        [a] => (*a, *a),
        _ => (2, 8),
    };
    for n in lo..=hi {
        let predicted = predicted_classification(n)?;
        let v = verify_theorem(n, &TheoremOptions::default())?;
        let fmt = |ms: &[cayley_equiv::OrderMultiset]| {
            ms.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ")
        };
        println!(
            "DC{:<3} predicted {} [{}]  observed {} [{}]  {}",
            4 * n,
            predicted.expected_class_count,
            fmt(&predicted.expected_multisets),
            v.observed.class_count,
            fmt(&v.observed.multisets),
            if v.pass { "ok" } else { "MISMATCH" }
        );
        for (rep, m) in v.observed.representatives.iter().zip(&v.observed.multisets) {
            println!("    ({})  {m}", rep.join(","));
        }
        for d in &v.diagnostics {
            println!("    note: {d}");
        }
    }
    Ok(())
}
