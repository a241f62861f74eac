use std::fmt;

use crate::error::{Error, Result};

/// Dense letter index into an [`Alphabet`].
pub type Letter = u8;

/// Largest supported alphabet. One more index is reserved for the sentinel
/// used by the classified text, and `u8::MAX` marks unclassified memo slots.
pub const MAX_SIGMA: usize = 253;

/// Characters with a meaning in the sequence file format.
const RESERVED: &[char] = &['[', ']', ':', ',', '#'];

/// Ordered set of distinct symbols, each mapped to a dense index `0..sigma`.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.len() < 2 || letters.len() > MAX_SIGMA {
            return Err(Error::InvalidAlphabet(format!(
                "size must be between 2 and {MAX_SIGMA}, got {}",
                letters.len()
            )));
        }
        for (k, &c) in letters.iter().enumerate() {
            if c.is_whitespace() || RESERVED.contains(&c) {
                return Err(Error::InvalidAlphabet(format!("{c:?} cannot be a letter")));
            }
            if letters[..k].contains(&c) {
                return Err(Error::InvalidAlphabet(format!("duplicate letter {c:?}")));
            }
        }
        Ok(Alphabet { letters })
    }

    /// The DNA alphabet `ACGT`.
    pub fn dna() -> Self {
        Alphabet::new("ACGT".chars()).expect("valid alphabet")
    }

    /// Default alphabet for a given size: `ACGT` for 4, the twenty amino acids
    /// for 20, otherwise the first `sigma` of `A-Z`, `a-z`, `0-9`.
    pub fn with_size(sigma: usize) -> Result<Self> {
        match sigma {
            4 => Ok(Self::dna()),
            20 => Alphabet::new("ACDEFGHIKLMNPQRSTVWY".chars()),
            _ => {
                let pool = ('A'..='Z').chain('a'..='z').chain('0'..='9');
                if sigma > 62 {
                    return Err(Error::InvalidAlphabet(format!(
                        "no default alphabet of size {sigma}"
                    )));
                }
                Alphabet::new(pool.take(sigma))
            }
        }
    }

    pub fn size(&self) -> usize {
        self.letters.len()
    }

    /// Index reserved for the sentinel symbol that matches no letter.
    pub fn sentinel(&self) -> Letter {
        self.letters.len() as Letter
    }

    pub fn index_of(&self, c: char) -> Option<Letter> {
        self.letters
            .iter()
            .position(|&l| l == c)
            .map(|i| i as Letter)
    }

    pub fn letter(&self, index: Letter) -> Option<char> {
        self.letters.get(index as usize).copied()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    /// Encodes a string of symbols; `None` if some symbol is not in the alphabet.
    pub fn encode(&self, s: &str) -> Option<Vec<Letter>> {
        s.chars().map(|c| self.index_of(c)).collect()
    }

    pub fn decode(&self, letters: &[Letter]) -> String {
        letters
            .iter()
            .map(|&l| self.letter(l).unwrap_or('?'))
            .collect()
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({})", self.letters.iter().collect::<String>())
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
