//! Recursive-descent parser for word text.
//!
//! ```text
//! WORD   := FACTOR*
//! FACTOR := ATOM ('^' INT)?
//! ATOM   := name | '1' | '(' WORD ')'
//! INT    := '-'? digit+
//! ```
//!
//! Juxtaposition (usually whitespace) is the product, so `w^2 (a w)^-1 a`
//! is read exactly as written. `1` denotes the identity; empty input parses
//! to the identity as well.

use super::{Generator, Word};
use crate::error::{Error, Result};

pub fn parse_word(text: &str, generators: &[Generator]) -> Result<Word> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        generators,
    };
    let w = p.word()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(w),
        Some(b')') => Err(Error::UnbalancedParentheses(p.pos)),
        Some(_) => Err(p.unexpected()),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    generators: &'a [Generator],
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn unexpected(&self) -> Error {
        // Offsets are byte offsets; decode the full char for the message.
        let found = std::str::from_utf8(&self.src[self.pos..])
            .ok()
            .and_then(|s| s.chars().next())
            .unwrap_or('\u{FFFD}');
        Error::UnexpectedCharacter {
            found,
            offset: self.pos,
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut acc = Word::identity();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(b')') => return Ok(acc),
                Some(_) => {
                    let f = self.factor()?;
                    acc = acc.checked_mul(&f)?;
                }
            }
        }
    }

    fn factor(&mut self) -> Result<Word> {
        let atom = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let k = self.int()?;
            atom.checked_pow(k)
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<Word> {
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.word()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(Error::UnbalancedParentheses(start));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric()) {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let g = self
                    .generators
                    .iter()
                    .find(|g| g.name() == name)
                    .ok_or_else(|| Error::UnknownGenerator {
                        name: name.to_string(),
                        offset: start,
                    })?;
                Ok(Word::letter(g))
            }
            Some(b'1') if !matches!(self.src.get(self.pos + 1), Some(c) if c.is_ascii_alphanumeric()) => {
                self.pos += 1;
                Ok(Word::identity())
            }
            _ => Err(self.unexpected()),
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(Error::MalformedExponent(start));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        match text.parse::<i64>() {
            Ok(i64::MIN) | Err(_) => Err(Error::ExponentOverflow),
            Ok(k) => Ok(k),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aw() -> Vec<Generator> {
        vec![Generator::new("a").unwrap(), Generator::new("w").unwrap()]
    }

    #[test]
    fn single_atom() {
        let g = aw();
        let w = parse_word("a", &g).unwrap();
        assert_eq!(w, Word::letter(&g[0]));
    }

    #[test]
    fn reduces_while_parsing() {
        let g = aw();
        let w = parse_word("w^2 (a w)^-1 a", &g).unwrap();
        assert_eq!(w, Word::letter(&g[1]));
    }

    #[test]
    fn family_relator_text() {
        let g = aw();
        let w = parse_word("w^3 (a w)^2 a^-1 (a w)^-2", &g).unwrap();
        assert_eq!(w.to_string(), "w^3 a w a w a^-1 w^-1 a^-1 w^-1 a^-1");
        assert_eq!(w.exponent_sum(&g[0]), -1);
        assert_eq!(w.exponent_sum(&g[1]), 3);
    }

    #[test]
    fn empty_and_identity() {
        let g = aw();
        assert!(parse_word("", &g).unwrap().is_identity());
        assert!(parse_word("   ", &g).unwrap().is_identity());
        assert!(parse_word("1", &g).unwrap().is_identity());
        assert!(parse_word("()^5", &g).unwrap().is_identity());
    }

    #[test]
    fn nested_groups_and_spacing() {
        let g = aw();
        let w = parse_word("((a w)^2 a)^-1", &g).unwrap();
        let v = parse_word("a^-1 w^-1 a^-1 w^-1 a^-1", &g).unwrap();
        assert_eq!(w, v);
        assert_eq!(parse_word("a ^ -2", &g).unwrap(), parse_word("a^-2", &g).unwrap());
    }

    #[test]
    fn errors() {
        let g = aw();
        assert_eq!(
            parse_word("a b", &g),
            Err(Error::UnknownGenerator {
                name: "b".into(),
                offset: 2
            })
        );
        assert_eq!(parse_word("aw", &g).unwrap_err().kind(), "UnknownGenerator");
        assert_eq!(parse_word("a^", &g), Err(Error::MalformedExponent(2)));
        assert_eq!(parse_word("a^-", &g), Err(Error::MalformedExponent(2)));
        assert_eq!(parse_word("a^x", &g), Err(Error::MalformedExponent(2)));
        assert_eq!(parse_word("(a w", &g), Err(Error::UnbalancedParentheses(0)));
        assert_eq!(parse_word("a w)", &g), Err(Error::UnbalancedParentheses(3)));
        assert_eq!(parse_word("a^99999999999999999999", &g), Err(Error::ExponentOverflow));
        assert_eq!(parse_word("a * w", &g).unwrap_err().kind(), "UnexpectedCharacter");
        assert_eq!(parse_word("2", &g).unwrap_err().kind(), "UnexpectedCharacter");
    }
}
