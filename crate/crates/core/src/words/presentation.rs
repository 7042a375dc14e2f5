use std::fmt;
use std::str::FromStr;

use super::{parse_word, Generator, Word};
use crate::error::{Error, Result};

/// A deficiency-one group presentation.
///
/// Text form, one directive per line, `#` starting a comment:
///
/// ```text
/// gens: a w
/// rel: w (a w) a^-1 (a w)^-1 = (w a)^-1 a (w a)
/// meridian: a
/// ```
///
/// A relator written `u = v` is stored as the single word `u v^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Generator>,
    relators: Vec<Word>,
    meridian: Option<Generator>,
}

impl Presentation {
    pub fn new(
        generators: Vec<Generator>,
        relators: Vec<Word>,
        meridian: Option<Generator>,
    ) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(Error::DuplicateGenerator(g.name().to_string()));
            }
        }
        if generators.is_empty() || relators.len() + 1 != generators.len() {
            return Err(Error::NotDeficiencyOne {
                generators: generators.len(),
                relators: relators.len(),
            });
        }
        for r in &relators {
            for g in r.generators() {
                if !generators.contains(&g) {
                    return Err(Error::UnknownGenerator {
                        name: g.name().to_string(),
                        offset: 0,
                    });
                }
            }
        }
        if let Some(m) = &meridian {
            if !generators.contains(m) {
                return Err(Error::UnknownGenerator {
                    name: m.name().to_string(),
                    offset: 0,
                });
            }
        }
        Ok(Presentation {
            generators,
            relators,
            meridian,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn meridian(&self) -> Option<&Generator> {
        self.meridian.as_ref()
    }

    pub fn generator(&self, name: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.name() == name)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut generators: Option<Vec<Generator>> = None;
        let mut relator_text: Vec<(usize, String)> = Vec::new();
        let mut meridian_text: Option<(usize, String)> = None;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |message: String| Error::PresentationSyntax {
                line: line_no,
                message,
            };
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| syntax(format!("expected `key: value`, found {line:?}")))?;
            let value = value.trim();
            match key.trim() {
                "gens" => {
                    if generators.is_some() {
                        return Err(syntax("`gens` given twice".into()));
                    }
                    let gens = value
                        .split(|c: char| c.is_whitespace() || c == ',')
                        .filter(|s| !s.is_empty())
                        .map(Generator::new)
                        .collect::<Result<Vec<_>>>()?;
                    generators = Some(gens);
                }
                "rel" => relator_text.push((line_no, value.to_string())),
                "meridian" => {
                    if meridian_text.is_some() {
                        return Err(syntax("`meridian` given twice".into()));
                    }
                    meridian_text = Some((line_no, value.to_string()));
                }
                other => return Err(syntax(format!("unknown directive {other:?}"))),
            }
        }

        let generators = generators.ok_or(Error::PresentationSyntax {
            line: 0,
            message: "missing `gens` line".into(),
        })?;
        let mut relators = Vec::with_capacity(relator_text.len());
        for (line, text) in relator_text {
            let with_line = |e: Error| match e {
                Error::UnknownGenerator { .. } | Error::ExponentOverflow => e,
                other => Error::PresentationSyntax {
                    line,
                    message: other.to_string(),
                },
            };
            let word = match text.split_once('=') {
                Some((lhs, rhs)) => {
                    let l = parse_word(lhs, &generators).map_err(with_line)?;
                    let r = parse_word(rhs, &generators).map_err(with_line)?;
                    l.checked_mul(&r.inverse())?
                }
                None => parse_word(&text, &generators).map_err(with_line)?,
            };
            relators.push(word);
        }
        let meridian = match meridian_text {
            None => None,
            Some((line, name)) => Some(
                generators
                    .iter()
                    .find(|g| g.name() == name)
                    .cloned()
                    .ok_or(Error::PresentationSyntax {
                        line,
                        message: format!("meridian {name:?} is not a generator"),
                    })?,
            ),
        };
        Presentation::new(generators, relators, meridian)
    }
}

impl FromStr for Presentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Presentation::parse(s)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.generators.iter().map(|g| g.name()).collect();
        writeln!(f, "gens: {}", names.join(" "))?;
        for r in &self.relators {
            writeln!(f, "rel: {r}")?;
        }
        if let Some(m) = &self.meridian {
            writeln!(f, "meridian: {m}")?;
        }
        Ok(())
    }
}
