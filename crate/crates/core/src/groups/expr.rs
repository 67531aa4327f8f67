//! Element expressions: `expr := term ('*' term)*`, `term := atom ('^' int)?`.
//!
//! An atom is a generator name, `e`, or a parenthesized chunk. Parenthesized
//! chunks are cycles in permutation groups and `(left,right)` tuples in direct
//! products.

use super::{ElementId, FiniteGroup, Kind};
use crate::error::{Error, Result};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    offset: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.offset + self.pos, msg)
    }

    fn ident(&mut self) -> Option<&'a str> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.pos += 1,
            _ => return None,
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        Some(&self.text[start..self.pos])
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(self.offset + start, "expected an integer exponent"))
    }

    /// Consume one or more balanced `(...)` groups, returning the whole span.
    fn paren_span(&mut self) -> Result<(usize, &'a str)> {
        let start = self.pos;
        while self.peek() == Some(b'(') {
            let mut depth = 0usize;
            loop {
                match self.peek() {
                    Some(b'(') => depth += 1,
                    Some(b')') => {
                        depth -= 1;
                        if depth == 0 {
                            self.pos += 1;
                            break;
                        }
                    }
                    None => return Err(self.err("unbalanced parenthesis")),
                    _ => {}
                }
                self.pos += 1;
            }
        }
        Ok((self.offset + start, &self.text[start..self.pos]))
    }
}

/// Split `text` at commas outside parentheses and brackets; returns `(offset, piece)`.
pub(crate) fn split_top_level(text: &str, sep: u8) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.bytes().enumerate() {
        match c {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &text[start..]));
    out
}

pub(crate) fn parse_element(group: &FiniteGroup, text: &str) -> Result<ElementId> {
    parse_at(group, text, 0)
}

pub(crate) fn parse_list(group: &FiniteGroup, text: &str) -> Result<Vec<ElementId>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(text, b',')
        .into_iter()
        .map(|(off, piece)| parse_at(group, piece, off))
        .collect()
}

fn parse_at(group: &FiniteGroup, text: &str, offset: usize) -> Result<ElementId> {
    let mut cur = Cursor {
        text,
        pos: 0,
        offset,
    };
    let mut acc = group.identity();
    loop {
        cur.skip_ws();
        let atom = match cur.peek() {
            Some(b'(') => {
                let (at, span) = cur.paren_span()?;
                paren_atom(group, span, at)?
            }
            Some(_) => {
                let name = cur.ident().ok_or_else(|| cur.err("expected a term"))?;
                match group.generator(name) {
                    Some(id) => id,
                    None if name == "e" => group.identity(),
                    None => return Err(Error::UnknownGenerator(name.to_string())),
                }
            }
            None => return Err(cur.err("expected a term")),
        };
        finish_term(group, &mut cur, atom, &mut acc)?;
        cur.skip_ws();
        match cur.peek() {
            Some(b'*') => cur.pos += 1,
            None => return Ok(acc),
            Some(_) => return Err(cur.err("expected `*` or end of expression")),
        }
    }
}

fn finish_term(
    group: &FiniteGroup,
    cur: &mut Cursor<'_>,
    atom: ElementId,
    acc: &mut ElementId,
) -> Result<()> {
    cur.skip_ws();
    let value = if cur.peek() == Some(b'^') {
        cur.pos += 1;
        let k = cur.int()?;
        group.pow(atom, k)
    } else {
        atom
    };
    *acc = group.mul(*acc, value);
    Ok(())
}

fn paren_atom(group: &FiniteGroup, span: &str, at: usize) -> Result<ElementId> {
    match group.kind() {
        Kind::Permutation {
            degree, index, ..
        } => {
            let p = super::perm::parse_cycles(*degree, span).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::parse(at + pos, msg),
                other => other,
            })?;
            index
                .get(&p)
                .map(|&id| id as ElementId)
                .ok_or_else(|| Error::parse(at, format!("{span} is not in the group")))
        }
        Kind::Product(left, right) => {
            let inner = span
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .filter(|s| split_top_level(s, b',').len() == 2)
                .ok_or_else(|| Error::parse(at, "expected a pair `(left,right)`"))?;
            let parts = split_top_level(inner, b',');
            let l = parse_at(left, parts[0].1, at + 1 + parts[0].0)?;
            let r = parse_at(right, parts[1].1, at + 1 + parts[1].0)?;
            Ok(l * right.order() + r)
        }
        _ => Err(Error::parse(at, "parenthesized terms are not valid in this group")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dicyclic_expressions() {
        let g = FiniteGroup::dicyclic(3).unwrap();
        let ax = g.parse_element("a*x").unwrap();
        assert_eq!(g.name(ax), "a*x");
        assert_eq!(g.parse_element("a^2 * x").unwrap(), g.element_by_name("a^2*x").unwrap());
        assert_eq!(g.parse_element("x^2").unwrap(), g.parse_element("a^3").unwrap());
        assert_eq!(g.parse_element("a^-1").unwrap(), g.parse_element("a^5").unwrap());
        assert_eq!(g.parse_element("e").unwrap(), 0);
        assert_eq!(
            g.parse_element("a*y"),
            Err(Error::UnknownGenerator("y".into()))
        );
        assert!(matches!(g.parse_element("a**x"), Err(Error::Parse { pos: 2, .. })));
    }

    #[test]
    fn every_name_round_trips() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let groups = [
            FiniteGroup::dicyclic(4).unwrap(),
            FiniteGroup::dihedral(5).unwrap(),
            FiniteGroup::from_descriptor("perm:4:(1,2);(1,2,3,4)").unwrap(),
            FiniteGroup::direct_product(&FiniteGroup::cyclic(3).unwrap(), &z2).unwrap(),
        ];
        for g in &groups {
            for id in 0..g.order() {
                assert_eq!(g.parse_element(g.name(id)).unwrap(), id, "{}", g.name(id));
            }
        }
    }

    #[test]
    fn sequences_split_at_top_level_commas() {
        let g = FiniteGroup::from_descriptor("perm:4:(1,2,3);(2,4,3)").unwrap();
        let s = g.parse_sequence("(1,2,3),(2,4,3)").unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.display(&g), "(1,2,3),(2,4,3)");
    }
}
