//! Group descriptors:
//!
//! ```text
//! dicyclic:<n> | dihedral:<n> | cyclic:<n>
//! product:<d1>,<d2>          d1 may be wrapped in [...] when it contains commas
//! perm:<degree>:<gen>;<gen>  generators may also be separated by top-level commas
//! fp:<presentation>          e.g. fp:<b,y | b^3, y^4, y^-1*b*y=b^-1>
//! ```

use super::expr::split_top_level;
use super::{perm, FiniteGroup};
use crate::error::{Error, Result};
use crate::presentation::{self, Enumeration};

pub(super) fn parse(text: &str) -> Result<FiniteGroup> {
    let text = text.trim();
    let (family, rest) = text
        .split_once(':')
        .ok_or_else(|| Error::parse(0, format!("descriptor `{text}` lacks a family prefix")))?;
    let number = |s: &str| -> Result<usize> {
        s.trim()
            .parse()
            .map_err(|_| Error::parse(family.len() + 1, format!("expected an integer, got `{s}`")))
    };
    match family {
        "dicyclic" => FiniteGroup::dicyclic(number(rest)?),
        "dihedral" => FiniteGroup::dihedral(number(rest)?),
        "cyclic" => FiniteGroup::cyclic(number(rest)?),
        "product" => {
            let (left, right) = split_product(rest)
                .ok_or_else(|| Error::parse(family.len() + 1, "expected `<d1>,<d2>`"))?;
            FiniteGroup::direct_product(&parse(left)?, &parse(right)?)
        }
        "perm" => {
            let (degree, gens) = rest
                .split_once(':')
                .ok_or_else(|| Error::parse(family.len() + 1, "expected `perm:<degree>:<gens>`"))?;
            let degree = number(degree)?;
            let mut generators = Vec::new();
            for chunk in gens.split(';') {
                for (_, piece) in split_top_level(chunk, b',') {
                    if !piece.trim().is_empty() {
                        generators.push(perm::parse_cycles(degree, piece)?);
                    }
                }
            }
            FiniteGroup::from_permutations(degree, &generators)
        }
        "fp" => {
            let pres = presentation::parse_presentation(rest)?;
            match presentation::todd_coxeter(&pres, presentation::DEFAULT_MAX_COSETS)? {
                Enumeration::Complete(g) => Ok(g),
                Enumeration::Exceeded { cosets } => Err(Error::EnumerationExceeded(cosets)),
            }
        }
        other => Err(Error::parse(0, format!("unknown group family `{other}`"))),
    }
}

fn split_product(rest: &str) -> Option<(&str, &str)> {
    let rest = rest.trim();
    if let Some(inner) = rest.strip_prefix('[') {
        let mut depth = 1;
        for (i, c) in inner.char_indices() {
            match c {
                '[' => depth += 1,
                ']' => {
                    depth -= 1;
                    if depth == 0 {
                        let tail = inner[i + 1..].trim_start().strip_prefix(',')?;
                        return Some((&inner[..i], tail));
                    }
                }
                _ => {}
            }
        }
        return None;
    }
    let parts = split_top_level(rest, b',');
    if parts.len() < 2 {
        return None;
    }
    let cut = parts[1].0;
    Some((&rest[..cut - 1], &rest[cut..]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(parse("dicyclic:3").unwrap().order(), 12);
        assert_eq!(parse("dihedral:4").unwrap().order(), 8);
        assert_eq!(parse("cyclic:7").unwrap().order(), 7);
        assert_eq!(parse("perm:4:(1,2),(1,2,3,4)").unwrap().order(), 24);
        assert_eq!(parse("perm:4:(1,2,3);(2,4,3)").unwrap().order(), 12);
        assert_eq!(parse("perm:3:()").unwrap().order(), 1);
        assert_eq!(
            parse("product:cyclic:3,product:cyclic:2,cyclic:2").unwrap().order(),
            12
        );
        assert_eq!(parse("product:[perm:3:(1,2),(1,2,3)],cyclic:2").unwrap().order(), 12);
        assert_eq!(parse("fp:<b,y | b^3, y^4, y^-1*b*y=b^-1>").unwrap().order(), 12);
    }

    #[test]
    fn descriptors_reparse() {
        for d in [
            "dicyclic:5",
            "product:cyclic:3,product:cyclic:2,cyclic:2",
            "perm:4:(1,2,3);(2,4,3)",
        ] {
            let g = parse(d).unwrap();
            let again = parse(g.descriptor()).unwrap();
            assert_eq!(again.order(), g.order());
            assert_eq!(again.descriptor(), g.descriptor());
        }
        let nested = FiniteGroup::direct_product(
            &parse("perm:3:(1,2);(1,2,3)").unwrap(),
            &parse("cyclic:2").unwrap(),
        )
        .unwrap();
        assert_eq!(parse(nested.descriptor()).unwrap().order(), 12);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("dicyclic").is_err());
        assert!(parse("sporadic:1").is_err());
        assert!(parse("dicyclic:x").is_err());
        assert!(parse("dicyclic:1").is_err());
    }
}
