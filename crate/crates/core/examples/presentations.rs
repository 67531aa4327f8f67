//! Coset enumeration of the presentations Pi_{4n,i} and the explicit
//! isomorphisms with DC_4n.
//!
//! cargo run --example presentations

use cayley_equiv::presentation::{pi_presentation, todd_coxeter, DEFAULT_MAX_COSETS};
use cayley_equiv::theory::{check_morphisms, morphism_pair};
use cayley_equiv::{parse_presentation, PiVariant};

fn main() -> cayley_equiv::Result<()> {
    for text in [
        "<a,x | a^6, x^2=a^3, x^-1*a*x=a^-1>",
        "<s,t | s^2, t^3, (s*t)^5>",
        "<a,b | a*b=b*a>",
    ] {
        let pres = parse_presentation(text)?;
        match todd_coxeter(&pres, 10_000)?.group() {
            Some(g) => println!("{pres}  has order {}", g.order()),
            None => println!("{pres}  exceeded 10000 cosets"),
        }
    }
    println!();
    for n in 2..=7 {
        for variant in [PiVariant::One, PiVariant::Zero, PiVariant::N] {
            let Ok(pres) = pi_presentation(n, variant) else {
                continue;
            };
            let order = todd_coxeter(&pres, DEFAULT_MAX_COSETS)?.group().map(|g| g.order());
            let pair = morphism_pair(n, variant)?;
            let report = check_morphisms(n, variant)?;
            let phi: Vec<String> = pair.phi.iter().map(|(a, b)| format!("{a}->{b}")).collect();
            println!(
                "n={n} variant {variant:<2} {pres}  order {:?}  phi {}  {}",
                order.unwrap_or(0),
                phi.join(" "),
                if report.passed() { "isomorphism" } else { "FAILED" }
            );
        }
    }
    Ok(())
}
