//! Finite presentations: parsing, coset enumeration and morphism checks.

mod morphism;
mod todd_coxeter;
mod word;

use std::fmt;

use crate::error::{Error, Result};

pub use morphism::{check_homomorphism, evaluate_word, verify_mutual_inverse, MutualInverseReport};
pub use todd_coxeter::{todd_coxeter, CosetTable, Enumeration, DEFAULT_MAX_COSETS};
pub use word::{Word, WordDisplay};

/// Generator names plus relators, each understood as `= e`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generator_names: Vec<String>,
    pub relators: Vec<Word>,
    /// Source text the presentation was parsed from.
    pub descriptor: String,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.generator_names == other.generator_names && self.relators == other.relators
    }
}

impl Eq for Presentation {}

impl Presentation {
    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name)
    }

    /// Parse a word over this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut p = Parser {
            text,
            pos: 0,
            names: &self.generator_names,
        };
        let w = p.word()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(Error::parse(p.pos, "unexpected trailing input"));
        }
        Ok(w)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} |", self.generator_names.join(","))?;
        for (i, r) in self.relators.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{}", r.display(&self.generator_names))?;
        }
        f.write_str(">")
    }
}

/// Parse `<names | relation, ...>` where `relation := word ('=' word)*`.
/// `a=b` is stored as the relator `a*b^-1`.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut p = Parser {
        text,
        pos: 0,
        names: &[],
    };
    p.expect(b'<')?;
    let mut names: Vec<String> = Vec::new();
    loop {
        p.skip_ws();
        let at = p.pos;
        let name = p
            .ident()
            .ok_or_else(|| Error::parse(at, "expected a generator name"))?;
        if names.iter().any(|n| n == name) {
            return Err(Error::parse(at, format!("generator `{name}` declared twice")));
        }
        names.push(name.to_string());
        p.skip_ws();
        match p.peek() {
            Some(b',') => p.pos += 1,
            Some(b'|') => break,
            _ => return Err(Error::parse(p.pos, "expected `,` or `|`")),
        }
    }
    p.pos += 1;
    p.names = &names;
    let mut relators = Vec::new();
    p.skip_ws();
    if p.peek() != Some(b'>') {
        loop {
            let mut sides = vec![p.word()?];
            p.skip_ws();
            while p.peek() == Some(b'=') {
                p.pos += 1;
                sides.push(p.word()?);
                p.skip_ws();
            }
            if sides.len() == 1 {
                relators.push(sides.pop().unwrap());
            } else {
                for pair in sides.windows(2) {
                    relators.push(pair[0].concat(&pair[1].inverse()));
                }
            }
            match p.peek() {
                Some(b',') => p.pos += 1,
                Some(b'>') => break,
                _ => return Err(Error::parse(p.pos, "expected `,` `=` or `>`")),
            }
        }
    }
    p.pos += 1;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(Error::parse(p.pos, "unexpected input after `>`"));
    }
    Ok(Presentation {
        generator_names: names,
        relators,
        descriptor: text.trim().to_string(),
    })
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected `{}`", c as char)))
        }
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

    fn word(&mut self) -> Result<Word> {
        let mut w = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() != Some(b'*') {
                return Ok(w);
            }
            self.pos += 1;
            w = w.concat(&self.factor()?);
        }
    }

    fn factor(&mut self) -> Result<Word> {
        self.skip_ws();
        let at = self.pos;
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                w
            }
            Some(b'1') => {
                self.pos += 1;
                Word::identity()
            }
            _ => {
                let name = self
                    .ident()
                    .ok_or_else(|| Error::parse(at, "expected a generator, `(` or `1`"))?;
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Word::generator(i),
                    None if name == "e" => Word::identity(),
                    None => return Err(Error::UnknownGenerator(name.to_string())),
                }
            }
        };
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let k: i64 = self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "expected an integer exponent"))?;
        Ok(base.pow(k))
    }
}

/// Which of the presentations `Π_{4n,i}` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PiVariant {
    /// `<u,v | u^2=v^2, u^4, u^2*(u*v)^n>`, odd `n` only.
    Zero,
    /// `<u,v | u^2=v^2, u^4, u^2*(u^3*v)^n>`.
    One,
    /// `<b,y | b^n, y^4, y^-1*b*y=b^-1>`, odd `n` only.
    N,
}

impl PiVariant {
    /// Parse `0`, `1`, `n`, or the decimal value of `n` itself.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        match text.trim() {
            "0" => Ok(PiVariant::Zero),
            "1" => Ok(PiVariant::One),
            "n" | "N" => Ok(PiVariant::N),
            t if t.parse::<usize>().ok() == Some(n) => Ok(PiVariant::N),
            t => Err(Error::InvalidParameter(format!(
                "variant must be 0, 1 or n, got `{t}`"
            ))),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            PiVariant::Zero => "0",
            PiVariant::One => "1",
            PiVariant::N => "n",
        }
    }

    pub fn requires_odd(&self) -> bool {
        !matches!(self, PiVariant::One)
    }
}

impl serde::Serialize for PiVariant {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl fmt::Display for PiVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub(crate) fn pi_text(n: usize, variant: PiVariant) -> String {
    match variant {
        PiVariant::Zero => format!("<u,v | u^2=v^2, u^4, u^2*(u*v)^{n}>"),
        PiVariant::One => format!("<u,v | u^2=v^2, u^4, u^2*(u^3*v)^{n}>"),
        PiVariant::N => format!("<b,y | b^{n}, y^4, y^-1*b*y=b^-1>"),
    }
}

/// The presentation `Π_{4n,variant}` with relators expanded for `n`.
pub fn pi_presentation(n: usize, variant: PiVariant) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".into()));
    }
    if variant.requires_odd() && n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "variant {variant} is only defined for odd n, got n={n}"
        )));
    }
    parse_presentation(&pi_text(n, variant))
}

/// `<a,x | a^2n, x^2=a^n, x^-1*a*x=a^-1>`.
pub fn dicyclic_presentation(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".into()));
    }
    parse_presentation(&format!(
        "<a,x | a^{}, x^2=a^{n}, x^-1*a*x=a^-1>",
        2 * n
    ))
}

/// `<a,x | a^n, x^2, x*a*x=a^-1>`.
pub fn dihedral_presentation(n: usize) -> Result<Presentation> {
    if n < 3 {
        return Err(Error::InvalidParameter("n must be at least 3".into()));
    }
    parse_presentation(&format!("<a,x | a^{n}, x^2, x*a*x=a^-1>"))
}
