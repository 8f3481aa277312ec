//! Fox free differential calculus and its specialization along a
//! representation twisted by a homomorphism to ℤ.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{FreeWord, Letter};
use crate::exact_algebra::{PolynomialMatrix, Rational, RationalMatrix};
use crate::{Error, Result};

/// Element of the rational group ring of a free group: a finite ℚ-linear
/// combination of reduced words with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingWord {
    terms: BTreeMap<FreeWord, Rational>,
}

impl GroupRingWord {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(FreeWord::identity())
    }

    pub fn from_word(w: FreeWord) -> Self {
        Self::from_term(Rational::one(), w)
    }

    pub fn from_term(c: Rational, w: FreeWord) -> Self {
        let mut out = Self::zero();
        out.add_term(c, w);
        out
    }

    pub fn add_term(&mut self, c: Rational, w: FreeWord) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &FreeWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(c.clone(), w.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(a * b, u.mul(v));
            }
        }
        out
    }

    /// Augmentation: sum of coefficients.
    pub fn augmentation(&self) -> Rational {
        self.terms.values().sum()
    }
}

/// `∂w/∂x_generator`, computed letter by letter from the Fox rules
/// `∂(uv) = ∂u + u·∂v` and `∂(x⁻¹)/∂x = -x⁻¹`.
pub fn fox_derivative(w: &FreeWord, generator: usize, rank: usize) -> Result<GroupRingWord> {
    if generator >= rank {
        return Err(Error::GeneratorOutOfRange { index: generator, rank });
    }
    w.check_rank(rank)?;
    let mut out = GroupRingWord::zero();
    let mut prefix: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if l.generator == generator {
            if l.inverse {
                let mut p = prefix.clone();
                p.push(l);
                out.add_term(-Rational::one(), FreeWord::from_letters(p));
            } else {
                out.add_term(Rational::one(), FreeWord::from_letters(prefix.iter().copied()));
            }
        }
        prefix.push(l);
    }
    Ok(out)
}

/// The ring homomorphism ℚ[F] → M_k(ℚ[t, t⁻¹]) extending
/// `g ↦ α(g)·t^φ(g)` from generator data.
#[derive(Clone, Debug)]
pub struct Specializer {
    dim: usize,
    matrices: Vec<RationalMatrix>,
    inverses: Vec<RationalMatrix>,
    phi: Vec<i64>,
}

impl Specializer {
    /// `matrices[i]` and `phi[i]` are the images of generator `i`.
    pub fn new(matrices: Vec<RationalMatrix>, phi: Vec<i64>) -> Result<Self> {
        if matrices.len() != phi.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices but {} exponents",
                matrices.len(),
                phi.len()
            )));
        }
        let dim = matrices.first().map_or(1, RationalMatrix::rows);
        let mut inverses = Vec::with_capacity(matrices.len());
        for (i, m) in matrices.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "generator {i} has a {}x{} matrix, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            let inv = m.inverse()?.ok_or_else(|| Error::NotInvertible(format!("generator {i}")))?;
            inverses.push(inv);
        }
        Ok(Self { dim, matrices, inverses, phi })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.matrices.len()
    }

    /// `(α(w), φ(w))`.
    pub fn word_image(&self, w: &FreeWord) -> Result<(RationalMatrix, i64)> {
        w.check_rank(self.rank())?;
        let mut m = RationalMatrix::identity(self.dim);
        let mut e = 0;
        for l in w.letters() {
            if l.inverse {
                m = m.checked_mul(&self.inverses[l.generator])?;
                e -= self.phi[l.generator];
            } else {
                m = m.checked_mul(&self.matrices[l.generator])?;
                e += self.phi[l.generator];
            }
        }
        Ok((m, e))
    }

    pub fn specialize(&self, x: &GroupRingWord) -> Result<PolynomialMatrix> {
        let mut out = PolynomialMatrix::zeros(self.dim, self.dim);
        for (w, c) in x.terms() {
            let (m, e) = self.word_image(w)?;
            out.add_block(0, 0, &PolynomialMatrix::from_rational(&m, c, e));
        }
        Ok(out)
    }
}

/// One-shot form of [`Specializer::specialize`].
pub fn specialize(x: &GroupRingWord, rep: &[RationalMatrix], phi: &[i64]) -> Result<PolynomialMatrix> {
    Specializer::new(rep.to_vec(), phi.to_vec())?.specialize(x)
}
