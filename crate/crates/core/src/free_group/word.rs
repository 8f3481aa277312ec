use std::fmt;

use crate::{Error, Result};

/// Letters used for fiber generators x₁, x₂, … in the text syntax. `t` is
/// reserved for the stable letter of a mapping torus.
pub const FIBER_ALPHABET: &[u8] = b"abcdefghijklmnopqrsuvwxyz";

/// A generator or its inverse. Ordered `x₁ < x₁⁻¹ < x₂ < x₂⁻¹ < …`, which is
/// the letter order used for every shortlex choice in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Self { generator: self.generator, inverse: !self.inverse }
    }

    /// All `2·rank` letters in shortlex order.
    pub fn alphabet(rank: usize) -> impl Iterator<Item = Letter> {
        (0..rank).flat_map(|g| [Letter::new(g, false), Letter::new(g, true)])
    }

    fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// Freely reduced word in a free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(g: usize) -> Self {
        Self { letters: vec![Letter::new(g, false)] }
    }

    pub fn from_letter(l: Letter) -> Self {
        Self { letters: vec![l] }
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self { letters: out }
    }

    /// Signed generator shorthand: `+k` is xₖ, `-k` is xₖ⁻¹ (1-based).
    pub fn from_signed(seq: &[i32]) -> Self {
        Self::from_letters(seq.iter().map(|&s| {
            assert!(s != 0, "signed letters are nonzero");
            Letter::new(s.unsigned_abs() as usize - 1, s < 0)
        }))
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

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// One more than the largest generator index used, or 0.
    pub fn min_rank(&self) -> usize {
        self.letters.iter().map(|l| l.generator + 1).max().unwrap_or(0)
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.letters.iter().find(|l| l.generator >= rank) {
            Some(l) => Err(Error::GeneratorOutOfRange { index: l.generator, rank }),
            None => Ok(()),
        }
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_letters(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(), |acc, _| acc.mul(&base))
    }

    /// `u⁻¹ v⁻¹ u v`.
    pub fn commutator(u: &Self, v: &Self) -> Self {
        Self::from_letters(
            u.inverse().letters.into_iter().chain(v.inverse().letters).chain(u.letters.clone()).chain(v.letters.clone()),
        )
    }

    /// `u w u⁻¹`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        u.mul(self).mul(&u.inverse())
    }

    /// Exponent sum of each generator, i.e. the image in ℤ^rank.
    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut sums = vec![0; rank];
        for l in &self.letters {
            sums[l.generator] += l.exponent();
        }
        sums
    }

    /// Parses a fiber word: `a`–`z` (skipping `t`) are generators, upper
    /// case their inverses, whitespace is ignored and `1` or an empty string
    /// is the identity.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        Self::parse_impl(s, rank, None)
    }

    /// Parses a word in the mapping torus generators, where `t`/`T` is the
    /// stable letter with index `fiber_rank`.
    pub fn parse_torus(s: &str, fiber_rank: usize) -> Result<Self> {
        Self::parse_impl(s, fiber_rank, Some(fiber_rank))
    }

    fn parse_impl(s: &str, rank: usize, stable: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        let trimmed = s.trim();
        if trimmed == "1" {
            return Ok(Self::identity());
        }
        for (pos, c) in s.char_indices() {
            if c.is_whitespace() {
                continue;
            }
            let lower = c.to_ascii_lowercase() as u8;
            let inverse = c.is_ascii_uppercase();
            let generator = if lower == b't' {
                stable.ok_or_else(|| Error::Parse {
                    position: pos,
                    message: "'t' is reserved for the stable letter".into(),
                })?
            } else {
                let idx = FIBER_ALPHABET.iter().position(|&a| a == lower).filter(|_| c.is_ascii_alphabetic());
                let idx = idx.ok_or_else(|| Error::Parse {
                    position: pos,
                    message: format!("unexpected character {c:?}"),
                })?;
                if idx >= rank {
                    return Err(Error::Parse {
                        position: pos,
                        message: format!("generator {c:?} out of range for rank {rank}"),
                    });
                }
                idx
            };
            letters.push(Letter::new(generator, inverse));
        }
        Ok(Self::from_letters(letters))
    }

    /// Renders a mapping-torus word, printing generator `fiber_rank` as `t`.
    pub fn to_torus_string(&self, fiber_rank: usize) -> String {
        if self.is_empty() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|l| {
                let c = if l.generator == fiber_rank { 't' } else { letter_char(l.generator) };
                if l.inverse {
                    c.to_ascii_uppercase()
                } else {
                    c
                }
            })
            .collect()
    }
}

fn letter_char(g: usize) -> char {
    FIBER_ALPHABET.get(g).map_or('?', |&b| b as char)
}

/// Free reduction of a raw letter sequence, checking generator indices.
pub fn reduce(raw: &[Letter], rank: usize) -> Result<FreeWord> {
    if let Some(l) = raw.iter().find(|l| l.generator >= rank) {
        return Err(Error::GeneratorOutOfRange { index: l.generator, rank });
    }
    Ok(FreeWord::from_letters(raw.iter().copied()))
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            let c = letter_char(l.generator);
            write!(f, "{}", if l.inverse { c.to_ascii_uppercase() } else { c })?;
        }
        Ok(())
    }
}
