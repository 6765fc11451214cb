use std::fmt;

use crate::error::{Error, Result};

use super::generator::{Generator, Surface};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub exponent: i64,
}

/// A freely reduced product of generator powers on a fixed surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    surface: Surface,
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty(surface: Surface) -> Self {
        Word {
            surface,
            letters: Vec::new(),
        }
    }

    pub fn from_letters(
        surface: Surface,
        letters: impl IntoIterator<Item = (Generator, i64)>,
    ) -> Result<Self> {
        let mut w = Word::empty(surface);
        for (g, e) in letters {
            w.push(g, e)?;
        }
        Ok(w)
    }

    /// Shorthand for a product of generators with exponent one.
    pub fn product(surface: Surface, gens: &[Generator]) -> Result<Self> {
        Word::from_letters(surface, gens.iter().map(|&g| (g, 1)))
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Appends `gen^exp`, merging with the last letter when possible.
    pub fn push(&mut self, gen: Generator, exp: i64) -> Result<()> {
        self.surface.require(gen)?;
        if exp == 0 {
            return Ok(());
        }
        match self.letters.last_mut() {
            Some(last) if last.generator == gen => {
                last.exponent += exp;
                if last.exponent == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(Letter {
                generator: gen,
                exponent: exp,
            }),
        }
        Ok(())
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.surface != other.surface {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply words on {} and {}",
                self.surface, other.surface
            )));
        }
        let mut out = self.clone();
        for l in &other.letters {
            out.push(l.generator, l.exponent)?;
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Word {
        Word {
            surface: self.surface,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    generator: l.generator,
                    exponent: -l.exponent,
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty(self.surface);
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base).expect("same surface");
        }
        out
    }

    /// Parses whitespace-separated atoms such as `d1 u3^-1 e2^2`.
    /// The lone atom `1` denotes the empty word.
    pub fn parse(text: &str, surface: Surface) -> Result<Word> {
        let mut w = Word::empty(surface);
        let bytes = text.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            if bytes[pos].is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            let start = pos;
            while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            let token = &text[start..pos];
            if token == "1" {
                continue;
            }
            let (gen, exp) = parse_atom(token, start)?;
            surface
                .require(gen)
                .map_err(|e| Error::parse(start, e.to_string()))?;
            w.push(gen, exp)?;
        }
        Ok(w)
    }
}

fn parse_atom(token: &str, at: usize) -> Result<(Generator, i64)> {
    let mut chars = token.char_indices();
    let (_, letter) = chars.next().expect("nonempty token");
    let (base, exp) = match token.split_once('^') {
        Some((b, e)) => {
            let exp: i64 = e
                .parse()
                .map_err(|_| Error::parse(at + b.len() + 1, format!("bad exponent `{e}`")))?;
            (b, exp)
        }
        None => (token, 1),
    };
    let digits = &base[letter.len_utf8()..];
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return Err(Error::parse(
            at + 1,
            format!("expected an index after `{letter}`"),
        ));
    }
    let index: usize = digits
        .parse()
        .map_err(|_| Error::parse(at + 1, "index too large"))?;
    let gen = Generator::from_letter(letter, index)
        .ok_or_else(|| Error::parse(at, format!("unknown generator letter `{letter}`")))?;
    Ok((gen, exp))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if l.exponent == 1 {
                write!(f, "{}", l.generator)?;
            } else {
                write!(f, "{}^{}", l.generator, l.exponent)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn parse_examples() {
        let n5 = Surface::closed(5);
        let s = Word::parse("d1 d2 d3 d4", n5).unwrap();
        assert_eq!(s.len(), 4);
        assert!(Word::parse("u3^-1 u3", n5).unwrap().is_empty());
        let e = Word::parse("e2^2", n5).unwrap();
        assert_eq!(
            e.letters(),
            &[Letter {
                generator: TEps(2),
                exponent: 2
            }]
        );
    }

    #[test]
    fn parse_errors_carry_position() {
        let n5 = Surface::closed(5);
        match Word::parse("d1 x2", n5) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Word::parse("d5", n5).is_err());
        assert!(Word::parse("d1^x", n5).is_err());
        assert!(Word::parse("d", n5).is_err());
    }

    #[test]
    fn printing_round_trips() {
        let n6 = Surface::closed(6);
        let w = Word::parse("d1 u3^-2 e3", n6).unwrap();
        assert_eq!(w.to_string(), "d1 u3^-2 e3");
        assert_eq!(Word::parse(&w.to_string(), n6).unwrap(), w);
        assert_eq!(Word::empty(n6).to_string(), "1");
    }

    #[test]
    fn inverse_cancels() {
        let n5 = Surface::closed(5);
        let w = Word::parse("d1 u2 e2^3", n5).unwrap();
        assert!(w.concat(&w.inverse()).unwrap().is_empty());
    }
}
