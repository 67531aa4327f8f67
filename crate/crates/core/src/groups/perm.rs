use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Default bound on the size of a permutation closure.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// A permutation of `{0..degree}`; printed 1-based in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u16>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u16).collect())
    }

    /// Build from 0-based images; fails unless `images` is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidParameter(format!(
                    "images {images:?} are not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation(images.into_iter().map(|i| i as u16).collect()))
    }

    /// Build from 1-based cycles, e.g. `&[&[1, 2, 3]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut p = Permutation::identity(degree);
        for cycle in cycles.iter().rev() {
            p = Permutation::cycle(degree, cycle)?.compose(&p);
        }
        Ok(p)
    }

    fn cycle(degree: usize, points: &[usize]) -> Result<Self> {
        let mut img: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for &pt in points {
            if pt == 0 || pt > degree {
                return Err(Error::InvalidParameter(format!(
                    "point {pt} outside 1..={degree}"
                )));
            }
            if seen[pt - 1] {
                return Err(Error::InvalidParameter(format!(
                    "point {pt} repeated in cycle"
                )));
            }
            seen[pt - 1] = true;
        }
        for w in 0..points.len() {
            img[points[w] - 1] = points[(w + 1) % points.len()] - 1;
        }
        Permutation::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `(self * other)(i) = self(other(i))`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn to_cycle_string(&self) -> String {
        let mut out = String::new();
        let mut seen = vec![false; self.0.len()];
        for start in 0..self.0.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push((i + 1).to_string());
                i = self.apply(i);
            }
            out.push('(');
            out.push_str(&cyc.join(","));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

/// Parse juxtaposed 1-based cycles such as `(1,2,3)(4,5)`; `()` is the identity.
pub fn parse_cycles(degree: usize, text: &str) -> Result<Permutation> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(Error::parse(0, "empty permutation"));
    }
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(Error::parse(pos, "expected `(`"));
        }
        pos += 1;
        let mut cyc = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b')' && cyc.is_empty() {
                pos += 1;
                break;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(Error::parse(pos, "expected a point"));
            }
            let pt: usize = text[start..pos]
                .parse()
                .map_err(|_| Error::parse(start, "point out of range"))?;
            if pt == 0 || pt > degree {
                return Err(Error::parse(start, format!("point {pt} outside 1..={degree}")));
            }
            cyc.push(pt);
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b')') => {
                    pos += 1;
                    break;
                }
                _ => return Err(Error::parse(pos, "expected `,` or `)`")),
            }
        }
        cycles.push(cyc);
        skip_ws(&mut pos);
    }
    let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
    Permutation::from_cycles(degree, &refs).map_err(|e| match e {
        Error::InvalidParameter(msg) => Error::parse(0, msg),
        other => other,
    })
}

/// Breadth-first closure of `generators` from the identity; identity first.
pub(crate) fn closure(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>> {
    if let Some(bad) = generators.iter().find(|p| p.degree() != degree) {
        return Err(Error::InvalidParameter(format!(
            "generator {bad} has degree {} not {degree}",
            bad.degree()
        )));
    }
    let id = Permutation::identity(degree);
    let mut seen: HashMap<Permutation, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut elems = vec![id];
    let mut head = 0;
    while head < elems.len() {
        let p = elems[head].clone();
        head += 1;
        for g in generators {
            let q = g.compose(&p);
            if !seen.contains_key(&q) {
                if elems.len() >= cap {
                    return Err(Error::ClosureLimit { cap });
                }
                seen.insert(q.clone(), ());
                elems.push(q);
            }
        }
    }
    Ok(elems)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_round_trip() {
        let p = parse_cycles(5, "(1,3,2)(4,5)").unwrap();
        assert_eq!(p.to_cycle_string(), "(1,3,2)(4,5)");
        assert!(parse_cycles(3, "()").unwrap().is_identity());
        assert!(parse_cycles(3, "(1,4)").is_err());
        assert!(parse_cycles(3, "(1,1)").is_err());
        assert!(parse_cycles(3, "1,2").is_err());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = parse_cycles(3, "(1,2)").unwrap();
        let b = parse_cycles(3, "(2,3)").unwrap();
        // a(b(2)) = a(3) = 3
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(a.compose(&b), parse_cycles(3, "(1,2)(2,3)").unwrap());
    }

    #[test]
    fn closure_cap() {
        let gens = [
            parse_cycles(5, "(1,2)").unwrap(),
            parse_cycles(5, "(1,2,3,4,5)").unwrap(),
        ];
        assert_eq!(closure(5, &gens, 1000).unwrap().len(), 120);
        assert_eq!(closure(5, &gens, 50), Err(Error::ClosureLimit { cap: 50 }));
    }
}
