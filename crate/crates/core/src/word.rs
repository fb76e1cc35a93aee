//! Words over the alphabet `{1, .., n}`.
//!
//! Letters are 1-based. The empty word stands for the identity element.
//! The text form is `[2,1,3,4]`, with `[]` for the empty word.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single letter, i.e. a vertex of the Dynkin diagram.
pub type Letter = u8;

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn extend_from(&mut self, other: &[Letter]) {
        self.0.extend_from_slice(other);
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(other);
        Word(letters)
    }

    /// `s_r w`: swaps the letters at 1-based positions `r` and `r + 1`.
    ///
    /// Returns `None` when `r` is out of range.
    pub fn swapped(&self, r: usize) -> Option<Word> {
        if r == 0 || r >= self.0.len() {
            return None;
        }
        let mut letters = self.0.clone();
        letters.swap(r - 1, r);
        Some(Word(letters))
    }

    /// Largest letter, or 0 for the empty word.
    pub fn max_letter(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Multiplicity of each letter `1..=n`, indexed from 0.
    pub fn content(&self, n: usize) -> Vec<u32> {
        let mut counts = vec![0u32; n];
        for &a in &self.0 {
            if (1..=n).contains(&(a as usize)) {
                counts[a as usize - 1] += 1;
            }
        }
        counts
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

impl<const N: usize> From<[Letter; N]> for Word {
    fn from(letters: [Letter; N]) -> Self {
        Word(letters.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| Error::parse(0, format!("expected a bracketed word, got {t:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Word::empty());
        }
        inner
            .split(',')
            .enumerate()
            .map(|(i, tok)| {
                let tok = tok.trim();
                match tok.parse::<Letter>() {
                    Ok(0) | Err(_) => Err(Error::parse(i, format!("bad letter {tok:?}"))),
                    Ok(a) => Ok(a),
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// Shorthand for building a word in tests and examples: `word![2, 1, 3]`.
#[macro_export]
macro_rules! word {
    () => { $crate::Word::empty() };
    ($($x:expr),+ $(,)?) => { $crate::Word::new(vec![$($x),+]) };
}
