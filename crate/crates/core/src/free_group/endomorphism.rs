use super::FreeWord;
use crate::exact_algebra::{Rational, RationalMatrix};
use crate::{Error, Result};

/// Endomorphism of the free group of rank `rank`, given by generator images.
/// When `inverse_images` is present the pair has been checked to compose to
/// the identity in both orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeEndomorphism {
    rank: usize,
    images: Vec<FreeWord>,
    inverse_images: Option<Vec<FreeWord>>,
}

impl FreeEndomorphism {
    pub fn new(rank: usize, images: Vec<FreeWord>) -> Result<Self> {
        if images.len() != rank {
            return Err(Error::RankMismatch { expected: rank, found: images.len() });
        }
        for im in &images {
            im.check_rank(rank)?;
        }
        Ok(Self { rank, images, inverse_images: None })
    }

    /// Builds a certified automorphism, verifying both compositions.
    pub fn certified(rank: usize, images: Vec<FreeWord>, inverse_images: Vec<FreeWord>) -> Result<Self> {
        let fwd = Self::new(rank, images)?;
        let inv = Self::new(rank, inverse_images)
            .map_err(|e| Error::NotCertified(format!("inverse images invalid: {e}")))?;
        for g in 0..rank {
            let x = FreeWord::generator(g);
            let there_and_back = inv.apply(&fwd.apply(&x)?)?;
            let back_and_there = fwd.apply(&inv.apply(&x)?)?;
            if there_and_back != x || back_and_there != x {
                return Err(Error::NotCertified(format!(
                    "generator {x} goes to {there_and_back} and {back_and_there}"
                )));
            }
        }
        Ok(Self { rank, images: fwd.images, inverse_images: Some(inv.images) })
    }

    /// Parses generator images written in the word syntax.
    pub fn parse(rank: usize, images: &[&str], inverse_images: Option<&[&str]>) -> Result<Self> {
        let parse_all =
            |xs: &[&str]| xs.iter().map(|s| FreeWord::parse(s, rank)).collect::<Result<Vec<_>>>();
        let images = parse_all(images)?;
        match inverse_images {
            Some(inv) => Self::certified(rank, images, parse_all(inv)?),
            None => Self::new(rank, images),
        }
    }

    pub fn identity(rank: usize) -> Self {
        let gens: Vec<_> = (0..rank).map(FreeWord::generator).collect();
        Self { rank, images: gens.clone(), inverse_images: Some(gens) }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn inverse_images(&self) -> Option<&[FreeWord]> {
        self.inverse_images.as_deref()
    }

    pub fn is_certified(&self) -> bool {
        self.inverse_images.is_some()
    }

    /// The certified inverse, if known.
    pub fn inverse(&self) -> Option<Self> {
        self.inverse_images.as_ref().map(|inv| Self {
            rank: self.rank,
            images: inv.clone(),
            inverse_images: Some(self.images.clone()),
        })
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        w.check_rank(self.rank)?;
        Ok(FreeWord::from_letters(w.letters().iter().flat_map(|l| {
            let im = &self.images[l.generator];
            let im = if l.inverse { im.inverse() } else { im.clone() };
            im.letters().to_vec()
        })))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: other.rank });
        }
        let images = other.images.iter().map(|w| self.apply(w)).collect::<Result<Vec<_>>>()?;
        let inverse_images = match (self.inverse(), other.inverse()) {
            (Some(si), Some(oi)) => Some(si.images.iter().map(|w| oi.apply(w)).collect::<Result<Vec<_>>>()?),
            _ => None,
        };
        Ok(Self { rank: self.rank, images, inverse_images })
    }

    /// `self^k`; negative powers need a certified inverse.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 {
            self.inverse().ok_or_else(|| Error::NotCertified("negative power of an uncertified map".into()))?
        } else {
            self.clone()
        };
        let mut acc = Self::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base)?;
        }
        Ok(acc)
    }

    /// Post-composition with the inner automorphism `x ↦ u x u⁻¹`.
    pub fn then_conjugate(&self, u: &FreeWord) -> Result<Self> {
        u.check_rank(self.rank)?;
        let images = self.images.iter().map(|w| w.conjugate_by(u)).collect();
        let inverse_images = match &self.inverse_images {
            Some(_) => {
                let inv = self.inverse().unwrap();
                let ui = u.inverse();
                Some((0..self.rank).map(|g| inv.apply(&FreeWord::generator(g).conjugate_by(&ui))).collect::<Result<_>>()?)
            }
            None => None,
        };
        Ok(Self { rank: self.rank, images, inverse_images })
    }

    /// Action on H₁(F; ℤ): column `j` holds the exponent sums of the image of
    /// generator `j`.
    pub fn abelianization_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.rank, self.rank);
        for (j, im) in self.images.iter().enumerate() {
            for (i, s) in im.exponent_sums(self.rank).into_iter().enumerate() {
                m[(i, j)] = Rational::from_integer(s.into());
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig8() -> FreeEndomorphism {
        FreeEndomorphism::parse(2, &["ab", "bab"], Some(&["aaB", "bA"])).unwrap()
    }

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s, 2).unwrap()
    }

    #[test]
    fn apply_examples() {
        let th = fig8();
        assert_eq!(th.apply(&w("a")).unwrap(), w("ab"));
        assert_eq!(th.apply(&w("A")).unwrap(), w("BA"));
        assert_eq!(FreeEndomorphism::identity(2).apply(&w("abAB")).unwrap(), w("abAB"));
        assert!(matches!(th.apply(&FreeWord::generator(2)), Err(Error::GeneratorOutOfRange { .. })));
    }

    #[test]
    fn compose_examples() {
        let th = fig8();
        let id = FreeEndomorphism::identity(2);
        assert_eq!(th.compose(&id).unwrap().images(), th.images());
        let back = th.compose(&th.inverse().unwrap()).unwrap();
        assert_eq!(back.images(), id.images());
        let sq = th.compose(&th).unwrap().abelianization_matrix();
        let a = th.abelianization_matrix();
        assert_eq!(sq, &a * &a);
        assert!(th.compose(&FreeEndomorphism::identity(3)).is_err());
    }

    #[test]
    fn abelianization_examples() {
        assert_eq!(fig8().abelianization_matrix(), RationalMatrix::from_ints(&[[1, 1], [1, 2]]));
        assert_eq!(FreeEndomorphism::identity(3).abelianization_matrix(), RationalMatrix::identity(3));
        let flip = FreeEndomorphism::parse(2, &["A", "b"], None).unwrap();
        assert_eq!(flip.abelianization_matrix(), RationalMatrix::from_ints(&[[-1, 0], [0, 1]]));
    }

    #[test]
    fn certification_rejects_wrong_inverse() {
        let bad = FreeEndomorphism::parse(2, &["ab", "bab"], Some(&["aB", "bA"]));
        assert!(matches!(bad, Err(Error::NotCertified(_))));
        let wrong_len = FreeEndomorphism::parse(2, &["ab"], None);
        assert!(matches!(wrong_len, Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn conjugated_monodromy_stays_certified() {
        let th = fig8().then_conjugate(&w("aB")).unwrap();
        assert!(th.is_certified());
        let id = th.compose(&th.inverse().unwrap()).unwrap();
        assert_eq!(id.images(), FreeEndomorphism::identity(2).images());
        assert_eq!(th.pow(-2).unwrap().compose(&th.pow(2).unwrap()).unwrap().images(), id.images());
    }
}
