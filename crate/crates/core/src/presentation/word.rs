use std::fmt;

/// A freely reduced word: `(generator index, nonzero exponent)` pairs with no
/// two adjacent pairs on the same generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<(usize, i64)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(index: usize) -> Self {
        Word(vec![(index, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut w = Word::identity();
        for (g, e) in pairs {
            w.push(g, e);
        }
        w
    }

    pub fn pairs(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, gen: usize, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.0.last_mut() {
            Some((g, e)) if *g == gen => {
                *e += exp;
                if *e == 0 {
                    self.0.pop();
                }
            }
            _ => self.0.push((gen, exp)),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.0 {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..k.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// Expanded letters: column `2g` for `g`, `2g + 1` for `g^-1`.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &(g, e) in &self.0 {
            let col = if e > 0 { 2 * g } else { 2 * g + 1 };
            out.extend(std::iter::repeat_n(col, e.unsigned_abs() as usize));
        }
        out
    }

    /// Letters with matching inverse pairs stripped from both ends.
    pub fn cyclically_reduced_letters(&self) -> Vec<usize> {
        let mut letters = self.letters();
        while letters.len() >= 2 && letters[0] == letters[letters.len() - 1] ^ 1 {
            letters.pop();
            letters.remove(0);
        }
        letters
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return f.write_str("e");
        }
        for (i, &(g, e)) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(&self.names[g])?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let w = Word::from_pairs([(0, 2), (1, 1), (1, -1), (0, -2)]);
        assert!(w.is_identity());
        let w = Word::from_pairs([(0, 1), (0, 2), (1, -1)]);
        assert_eq!(w.pairs(), &[(0, 3), (1, -1)]);
        assert_eq!(w.concat(&w.inverse()), Word::identity());
    }

    #[test]
    fn cyclic_reduction() {
        let w = Word::from_pairs([(0, -1), (1, 1), (0, 1)]);
        assert_eq!(w.cyclically_reduced_letters(), vec![2]);
        assert_eq!(Word::from_pairs([(0, 3)]).letters(), vec![0, 0, 0]);
    }

    #[test]
    fn display() {
        let names = vec!["u".to_string(), "v".to_string()];
        let w = Word::from_pairs([(0, 2), (1, -1)]);
        assert_eq!(w.display(&names).to_string(), "u^2*v^-1");
        assert_eq!(Word::identity().display(&names).to_string(), "e");
    }
}
