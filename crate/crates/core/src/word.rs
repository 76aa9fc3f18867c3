//! Words over the two-letter alphabet {x, y} and their 2×2 matrices.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    /// Unit step east.
    X,
    /// Unit step north.
    Y,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'x' | 'X' => Some(Letter::X),
            'y' | 'Y' => Some(Letter::Y),
            _ => None,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("invalid letter {0:?}: words use only 'x' and 'y'")]
    BadLetter(char),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn parse(s: &str) -> Result<Word, WordError> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| Letter::from_char(c).ok_or(WordError::BadLetter(c)))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    /// `l` repeated `n` times.
    pub fn power(l: Letter, n: usize) -> Word {
        Word(vec![l; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn count(&self, l: Letter) -> usize {
        self.0.iter().filter(|&&c| c == l).count()
    }

    pub fn contains_both(&self) -> bool {
        self.count(Letter::X) > 0 && self.count(Letter::Y) > 0
    }

    /// Reverse the word and exchange x with y; the lattice path reflected
    /// through the diagonal and walked backwards.
    pub fn transpose(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.swap()).collect())
    }

    /// Exchange x with y letterwise.
    pub fn swapped(&self) -> Word {
        Word(self.0.iter().map(|l| l.swap()).collect())
    }

    pub fn concat(parts: &[&Word]) -> Word {
        Word(parts.iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    /// An anti-palindrome equals its own transpose.
    pub fn is_anti_palindrome(&self) -> bool {
        *self == self.transpose()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Word {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Word, WordError> {
        Word::parse(s)
    }
}

/// 2×2 matrix with natural entries, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2(pub [[BigUint; 2]; 2]);

impl Mat2 {
    pub fn identity() -> Mat2 {
        Mat2([
            [BigUint::one(), BigUint::zero()],
            [BigUint::zero(), BigUint::one()],
        ])
    }

    /// M(x) = [[1,1],[0,1]], M(y) = [[1,0],[1,1]].
    pub fn of_letter(l: Letter) -> Mat2 {
        let mut m = Mat2::identity();
        m.push(l);
        m
    }

    pub fn of_word(w: &[Letter]) -> Mat2 {
        let mut m = Mat2::identity();
        for &l in w {
            m.push(l);
        }
        m
    }

    /// Right multiplication by M(l), done by a column addition.
    pub fn push(&mut self, l: Letter) {
        for row in self.0.iter_mut() {
            let (first, second) = row.split_at_mut(1);
            match l {
                Letter::X => second[0] += &first[0],
                Letter::Y => first[0] += &second[0],
            }
        }
    }

    pub fn sum(&self) -> BigUint {
        self.0.iter().flat_map(|r| r.iter()).sum()
    }
}
