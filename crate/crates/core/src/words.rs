//! Words over the three involutory generators `a`, `b`, `c` (= r0, r1, r2).
//!
//! All generators are involutions, so words carry no inverse letters: the
//! inverse of a word is its reversal, and negative powers like `(ab)⁻⁴` are
//! written as the reversed positive word `(ba)⁴`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::Perm;

/// One of the three involutory generators.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `a` = r0
    A,
    /// `b` = r1
    B,
    /// `c` = r2
    C,
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::A => 0,
            Letter::B => 1,
            Letter::C => 2,
        }
    }

    pub fn from_index(i: usize) -> Letter {
        match i {
            0 => Letter::A,
            1 => Letter::B,
            2 => Letter::C,
            _ => panic!("letter index {i} out of range"),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid word character {0:?}: words use only 'a', 'b', 'c'")]
pub struct ParseWordError(pub char);

/// A finite word over `{a, b, c}`, acting on flags on the right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    /// Parses a plain letter string such as `"cabab"`.
    pub fn parse(s: &str) -> Word {
        s.parse().expect("word literal uses only a, b, c")
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn pow(&self, k: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }

    /// The inverse word: the reversal, since every generator is an involution.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Cancels adjacent equal letters until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word { letters: stack }
    }

    /// Evaluates the word against three involution images of `a`, `b`, `c`,
    /// applying letters left-to-right (the right action on points).
    pub fn evaluate_in(&self, gens: &[Perm; 3]) -> Perm {
        let degree = gens[0].degree();
        let mut acc = Perm::identity(degree);
        for &l in &self.letters {
            acc = acc.compose(&gens[l.index()]);
        }
        acc
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Word, ParseWordError> {
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            letters.push(match ch {
                'a' => Letter::A,
                'b' => Letter::B,
                'c' => Letter::C,
                other => return Err(ParseWordError(other)),
            });
        }
        Ok(Word { letters })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Word, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The word `c(ab)²c(ab)³`; its square is the extra relator presenting the
/// minimal regular cover of every prism.
pub fn prism_relator_half() -> Word {
    Word::parse("c")
        .concat(&Word::parse("ab").pow(2))
        .concat(&Word::parse("c"))
        .concat(&Word::parse("ab").pow(3))
}

/// `(c(ab)²c(ab)³)²`, the single extra relator for prism covers (24 letters).
pub fn prism_relator() -> Word {
    prism_relator_half().pow(2)
}

/// The word `c(ab)²cbc(ab)²`; its square is the extra relator presenting the
/// minimal regular cover of every antiprism.
pub fn antiprism_relator_half() -> Word {
    Word::parse("c")
        .concat(&Word::parse("ab").pow(2))
        .concat(&Word::parse("cbc"))
        .concat(&Word::parse("ab").pow(2))
}

/// `(c(ab)²cbc(ab)²)²`, the single extra relator for antiprism covers (24 letters).
pub fn antiprism_relator() -> Word {
    antiprism_relator_half().pow(2)
}
