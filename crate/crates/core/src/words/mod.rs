//! Free-group words in syllable form.
//!
//! A [`Word`] is a list of `(generator, exponent)` syllables kept freely
//! reduced at all times: adjacent syllables have distinct generators and no
//! exponent is zero. The identity is the empty list.

mod parser;
mod presentation;

pub use parser::parse_word;
pub use presentation::Presentation;

use std::fmt;
use std::ops::Mul;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Words longer than this many syllables are rejected by [`Word::checked_pow`].
pub const MAX_SYLLABLES: usize = 1 << 24;

/// A named free generator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(Arc<str>);

impl Generator {
    /// Names are nonempty, ASCII alphanumeric and start with a letter.
    pub fn new(name: &str) -> Result<Self> {
        let mut chars = name.chars();
        let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric());
        if !ok {
            return Err(Error::InvalidGeneratorName(name.to_string()));
        }
        Ok(Generator(Arc::from(name)))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub generator: Generator,
    pub exponent: i64,
}

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn letter(g: &Generator) -> Self {
        Word::syllable(g, 1)
    }

    /// The word `g^k`; the identity when `k == 0`.
    ///
    /// Exponents range over `-i64::MAX..=i64::MAX` so that inversion never
    /// overflows; panics on `i64::MIN`.
    pub fn syllable(g: &Generator, k: i64) -> Self {
        assert!(k != i64::MIN, "syllable exponent out of range");
        if k == 0 {
            return Word::identity();
        }
        Word {
            syllables: vec![Syllable {
                generator: g.clone(),
                exponent: k,
            }],
        }
    }

    /// Reduces an arbitrary syllable sequence (zero exponents allowed).
    pub fn from_syllables<I>(syllables: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Generator, i64)>,
    {
        let mut w = Word::identity();
        for (generator, exponent) in syllables {
            w.push(generator, exponent)?;
        }
        Ok(w)
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of syllables.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Total letter length: the sum of `|exponent|`.
    pub fn letter_length(&self) -> u128 {
        self.syllables
            .iter()
            .map(|s| s.exponent.unsigned_abs() as u128)
            .sum()
    }

    // Appends g^k, merging with and cancelling against the tail.
    fn push(&mut self, generator: Generator, exponent: i64) -> Result<()> {
        if exponent == 0 {
            return Ok(());
        }
        if exponent == i64::MIN {
            return Err(Error::ExponentOverflow);
        }
        match self.syllables.last_mut() {
            Some(last) if last.generator == generator => {
                let e = last
                    .exponent
                    .checked_add(exponent)
                    .filter(|&e| e != i64::MIN)
                    .ok_or(Error::ExponentOverflow)?;
                if e == 0 {
                    self.syllables.pop();
                } else {
                    last.exponent = e;
                }
            }
            _ => self.syllables.push(Syllable {
                generator,
                exponent,
            }),
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Word) -> Result<Word> {
        // Cancel the overlap first so the result never holds unreduced pairs.
        let mut left = self.syllables.len();
        let mut right = 0;
        while left > 0 && right < other.syllables.len() {
            let a = &self.syllables[left - 1];
            let b = &other.syllables[right];
            if a.generator == b.generator && a.exponent.checked_add(b.exponent) == Some(0) {
                left -= 1;
                right += 1;
            } else {
                break;
            }
        }
        let mut out = Word {
            syllables: Vec::with_capacity(left + other.syllables.len() - right),
        };
        out.syllables.extend_from_slice(&self.syllables[..left]);
        for s in &other.syllables[right..] {
            out.push(s.generator.clone(), s.exponent)?;
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    generator: s.generator.clone(),
                    exponent: -s.exponent,
                })
                .collect(),
        }
    }

    /// `self^k` for any integer `k`, by repeated squaring.
    pub fn checked_pow(&self, k: i64) -> Result<Word> {
        if k == 0 || self.is_identity() {
            return Ok(Word::identity());
        }
        if self.syllables.len() == 1 {
            let s = &self.syllables[0];
            let e = s
                .exponent
                .checked_mul(k)
                .filter(|&e| e != i64::MIN)
                .ok_or(Error::ExponentOverflow)?;
            return Ok(Word::syllable(&s.generator, e));
        }
        if (self.syllables.len() as u128) * (k.unsigned_abs() as u128) > MAX_SYLLABLES as u128 {
            return Err(Error::ExponentOverflow);
        }
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Word::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, k: i64) -> Word {
        self.checked_pow(k).expect("word power overflow")
    }

    pub fn exponent_sum(&self, g: &Generator) -> i64 {
        self.syllables
            .iter()
            .filter(|s| &s.generator == g)
            .map(|s| s.exponent)
            .sum()
    }

    /// Every generator occurring in the word, in order of first appearance.
    pub fn generators(&self) -> Vec<Generator> {
        let mut seen: Vec<Generator> = Vec::new();
        for s in &self.syllables {
            if !seen.contains(&s.generator) {
                seen.push(s.generator.clone());
            }
        }
        seen
    }
}

/// Free product of two words.
///
/// Panics if a merged exponent overflows `i64`; use [`Word::checked_mul`]
/// when the inputs are untrusted.
impl Mul<&Word> for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.checked_mul(rhs).expect("word exponent overflow")
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

/// Canonical text form, e.g. `w^2 a^-1 w`. The identity prints as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if s.exponent == 1 {
                write!(f, "{}", s.generator)?;
            } else {
                write!(f, "{}^{}", s.generator, s.exponent)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens() -> (Generator, Generator) {
        (Generator::new("a").unwrap(), Generator::new("w").unwrap())
    }

    #[test]
    fn generator_names() {
        assert!(Generator::new("x1").is_ok());
        assert!(Generator::new("").is_err());
        assert!(Generator::new("1x").is_err());
        assert!(Generator::new("a_b").is_err());
    }

    #[test]
    fn multiply_examples() {
        let (a, w) = gens();
        let ai = Word::syllable(&a, -1);
        assert!((&Word::letter(&a) * &ai).is_identity());
        assert_eq!(&Word::syllable(&w, 2) * &Word::syllable(&w, 3), Word::syllable(&w, 5));
        let aw = &Word::letter(&a) * &Word::letter(&w);
        let wia = &Word::syllable(&w, -1) * &Word::letter(&a);
        assert_eq!(&aw * &wia, Word::syllable(&a, 2));
    }

    #[test]
    fn invert_examples() {
        let (a, w) = gens();
        assert!(Word::identity().inverse().is_identity());
        let aw = &Word::letter(&a) * &Word::letter(&w);
        assert_eq!(aw.inverse().to_string(), "w^-1 a^-1");
        assert_eq!(aw.pow(2).inverse().to_string(), "w^-1 a^-1 w^-1 a^-1");
        assert_eq!(aw.pow(-2), aw.pow(2).inverse());
    }

    #[test]
    fn exponent_sums() {
        let (a, w) = gens();
        assert_eq!(Word::identity().exponent_sum(&a), 0);
        let u = Word::from_syllables([(a.clone(), 3), (w.clone(), -2), (a.clone(), -5)]).unwrap();
        assert_eq!(u.exponent_sum(&a), -2);
        assert_eq!(u.exponent_sum(&w), -2);
    }

    #[test]
    fn reduction_cascades() {
        let (a, w) = gens();
        let u = Word::from_syllables([
            (a.clone(), 1),
            (w.clone(), 2),
            (w.clone(), -2),
            (a.clone(), -1),
            (w.clone(), 0),
        ])
        .unwrap();
        assert!(u.is_identity());
    }

    #[test]
    fn overflow_is_an_error() {
        let (a, _) = gens();
        let big = Word::syllable(&a, i64::MAX);
        assert_eq!(big.checked_mul(&Word::letter(&a)), Err(Error::ExponentOverflow));
        assert_eq!(big.checked_pow(2), Err(Error::ExponentOverflow));
    }

    #[test]
    fn pow_of_mixed_word() {
        let (a, w) = gens();
        // (a w a) ^ 3 = a w a^2 w a^2 w a
        let u = Word::from_syllables([(a.clone(), 1), (w.clone(), 1), (a.clone(), 1)]).unwrap();
        assert_eq!(u.pow(3).to_string(), "a w a^2 w a^2 w a");
        assert!((&u.pow(7) * &u.pow(-7)).is_identity());
    }
}
