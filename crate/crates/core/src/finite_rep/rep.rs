use num_traits::One;

use super::{Permutation, TorusHomomorphism};
use crate::exact_algebra::{Rational, RationalMatrix};
use crate::free_group::{FreeEndomorphism, FreeWord};
use crate::{Error, Result};

/// Largest multiplicative order accepted for a generator matrix.
pub const ORDER_BOUND: u32 = 1000;

/// Linear representation of the mapping torus group over ℚ with finite
/// image, given by matrices for `x₁, …, xₙ` and `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRepresentation {
    dim: usize,
    fiber: Vec<RationalMatrix>,
    stable: RationalMatrix,
}

/// Which representation of the target group to pull back along a
/// homomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepresentationKind {
    Trivial,
    /// The one-dimensional sign of a permutation.
    Sign,
    /// Permutation matrices on the points moved by the target group.
    Permutation,
    /// The sum-zero part of the permutation representation.
    Standard,
    Regular,
}

impl RepresentationKind {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "trivial" => Self::Trivial,
            "sign" => Self::Sign,
            "permutation" => Self::Permutation,
            "standard" => Self::Standard,
            "regular" => Self::Regular,
            _ => return Err(Error::Parse { position: 0, message: format!("unknown representation kind {s:?}") }),
        })
    }
}

impl FiniteRepresentation {
    /// Validates invertibility, finite order and the relations
    /// `α(t) α(xᵢ) α(t)⁻¹ = α(θ(xᵢ))`.
    pub fn new(monodromy: &FreeEndomorphism, fiber: Vec<RationalMatrix>, stable: RationalMatrix) -> Result<Self> {
        if fiber.len() != monodromy.rank() {
            return Err(Error::RankMismatch { expected: monodromy.rank(), found: fiber.len() });
        }
        let dim = stable.rows();
        for (i, m) in fiber.iter().chain([&stable]).enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "matrix {i} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.multiplicative_order(ORDER_BOUND).is_none() {
                return Err(Error::NotInvertible(format!("matrix {i} has no finite order up to {ORDER_BOUND}")));
            }
        }
        let rep = Self { dim, fiber, stable };
        rep.check_relations(monodromy)?;
        Ok(rep)
    }

    fn check_relations(&self, monodromy: &FreeEndomorphism) -> Result<()> {
        let t_inv = self.stable.inverse()?.ok_or_else(|| Error::NotInvertible("alpha(t)".into()))?;
        for (i, x) in self.fiber.iter().enumerate() {
            let lhs = self.stable.checked_mul(x)?.checked_mul(&t_inv)?;
            let rhs = self.eval_fiber(&monodromy.images()[i])?;
            if lhs != rhs {
                return Err(Error::IllDefined(format!("representation violates the relation for x{}", i + 1)));
            }
        }
        Ok(())
    }

    pub fn trivial(monodromy: &FreeEndomorphism) -> Self {
        let one = RationalMatrix::identity(1);
        Self { dim: 1, fiber: vec![one.clone(); monodromy.rank()], stable: one }
    }

    /// Left multiplication on the group algebra of the image of `f`, with
    /// the image's elements in breadth-first order.
    pub fn regular(monodromy: &FreeEndomorphism, f: &TorusHomomorphism) -> Result<Self> {
        let f = f.restrict_to_image(monodromy)?;
        let g = f.target();
        let left = |x: usize| RationalMatrix::permutation(&(0..g.order()).map(|h| g.mul(x, h)).collect::<Vec<_>>());
        let fiber = f.fiber_images().iter().map(|&x| left(x)).collect();
        Self::new(monodromy, fiber, left(f.stable_image()))
    }

    pub fn from_homomorphism(monodromy: &FreeEndomorphism, f: &TorusHomomorphism, kind: RepresentationKind) -> Result<Self> {
        if kind == RepresentationKind::Regular {
            return Self::regular(monodromy, f);
        }
        let g = f.target();
        let image = |x: usize| -> RationalMatrix {
            let p = g.element(x);
            match kind {
                RepresentationKind::Trivial => RationalMatrix::identity(1),
                RepresentationKind::Sign => RationalMatrix::from_ints(&[[p.sign()]]),
                RepresentationKind::Permutation => RationalMatrix::permutation(p.images()),
                RepresentationKind::Standard => standard_matrix(p),
                RepresentationKind::Regular => unreachable!(),
            }
        };
        let fiber = f.fiber_images().iter().map(|&x| image(x)).collect();
        Self::new(monodromy, fiber, image(f.stable_image()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn fiber_matrices(&self) -> &[RationalMatrix] {
        &self.fiber
    }

    pub fn stable_matrix(&self) -> &RationalMatrix {
        &self.stable
    }

    /// Matrices for `x₁, …, xₙ, t` in that order.
    pub fn matrices(&self) -> Vec<RationalMatrix> {
        self.fiber.iter().cloned().chain([self.stable.clone()]).collect()
    }

    pub fn eval_fiber(&self, w: &FreeWord) -> Result<RationalMatrix> {
        let mut m = RationalMatrix::identity(self.dim);
        for l in w.letters() {
            let x = &self.fiber[l.generator];
            if l.inverse {
                m = m.checked_mul(&x.inverse()?.ok_or_else(|| Error::NotInvertible(format!("x{}", l.generator + 1)))?)?;
            } else {
                m = m.checked_mul(x)?;
            }
        }
        Ok(m)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.fiber.len() != other.fiber.len() {
            return Err(Error::RankMismatch { expected: self.fiber.len(), found: other.fiber.len() });
        }
        Ok(Self {
            dim: self.dim + other.dim,
            fiber: self.fiber.iter().zip(&other.fiber).map(|(a, b)| a.block_diag(b)).collect(),
            stable: self.stable.block_diag(&other.stable),
        })
    }
}

/// Action of `p` on the sum-zero vectors in the basis `eᵢ − e_last`.
fn standard_matrix(p: &Permutation) -> RationalMatrix {
    let n = p.degree();
    if n <= 1 {
        return RationalMatrix::zeros(0, 0);
    }
    let last = n - 1;
    let mut m = RationalMatrix::zeros(last, last);
    for i in 0..last {
        let (a, b) = (p.apply(i), p.apply(last));
        if a != last {
            m[(a, i)] += Rational::one();
        }
        if b != last {
            m[(b, i)] -= Rational::one();
        }
    }
    m
}

/// Regular representation of the image of `f`.
pub fn regular_representation(monodromy: &FreeEndomorphism, f: &TorusHomomorphism) -> Result<FiniteRepresentation> {
    FiniteRepresentation::regular(monodromy, f)
}

pub fn direct_sum(a: &FiniteRepresentation, b: &FiniteRepresentation) -> Result<FiniteRepresentation> {
    a.direct_sum(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_rep::{all_homomorphisms, FiniteGroup};

    fn fig8() -> FreeEndomorphism {
        FreeEndomorphism::parse(2, &["ab", "bab"], Some(&["aaB", "bA"])).unwrap()
    }

    fn hom(m: &FreeEndomorphism, cycles: &[&str], degree: usize, fiber: Vec<usize>, t: usize) -> TorusHomomorphism {
        let g = FiniteGroup::from_cycle_strings(degree, cycles).unwrap();
        TorusHomomorphism::new(m, g, fiber, t).unwrap()
    }

    #[test]
    fn regular_examples() {
        let m = fig8();
        let f = hom(&m, &["(1 2)"], 2, vec![0, 0], 1);
        let r = regular_representation(&m, &f).unwrap();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.stable_matrix(), &RationalMatrix::from_ints(&[[0, 1], [1, 0]]));
        assert!(r.fiber_matrices().iter().all(RationalMatrix::is_identity));

        let f = hom(&m, &["()"], 1, vec![0, 0], 0);
        assert_eq!(regular_representation(&m, &f).unwrap(), FiniteRepresentation::trivial(&m));

        let f = hom(&m, &["(1 2 3)"], 3, vec![0, 0], 1);
        let r = regular_representation(&m, &f).unwrap();
        assert_eq!(r.stable_matrix().multiplicative_order(10), Some(3));
        assert!(!r.stable_matrix().is_identity());
    }

    #[test]
    fn pullbacks_satisfy_relations() {
        // identity monodromy admits any commuting images; the swap monodromy
        // a ↦ b, b ↦ a admits f(t) = (1 2) acting by conjugation
        let swap = FreeEndomorphism::parse(2, &["b", "a"], Some(&["b", "a"])).unwrap();
        let s3 = FiniteGroup::from_cycle_strings(3, &["(1 2)", "(1 2 3)"]).unwrap();
        let homs = all_homomorphisms(&swap, &s3);
        assert!(!homs.is_empty());
        for f in &homs {
            for kind in [
                RepresentationKind::Trivial,
                RepresentationKind::Sign,
                RepresentationKind::Permutation,
                RepresentationKind::Standard,
                RepresentationKind::Regular,
            ] {
                let r = FiniteRepresentation::from_homomorphism(&swap, f, kind).unwrap();
                assert_eq!(r.matrices().len(), 3);
            }
        }
    }

    #[test]
    fn standard_is_a_homomorphism() {
        let s3 = FiniteGroup::from_cycle_strings(3, &["(1 2)", "(1 2 3)"]).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let lhs = standard_matrix(s3.element(s3.mul(i, j)));
                let rhs = standard_matrix(s3.element(i)).checked_mul(&standard_matrix(s3.element(j))).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn direct_sum_and_validation() {
        let m = fig8();
        let e = FiniteRepresentation::trivial(&m);
        let ee = e.direct_sum(&e).unwrap();
        assert_eq!(ee.dim(), 2);
        assert!(ee.matrices().iter().all(RationalMatrix::is_identity));
        let other = FiniteRepresentation::trivial(&FreeEndomorphism::identity(3));
        assert!(e.direct_sum(&other).is_err());

        let two = RationalMatrix::from_ints(&[[2]]);
        let one = RationalMatrix::identity(1);
        assert!(FiniteRepresentation::new(&m, vec![one.clone(), one.clone()], two).is_err());
        let neg = RationalMatrix::from_ints(&[[-1]]);
        // a ↦ ab forces α(b) = 1
        assert!(matches!(FiniteRepresentation::new(&m, vec![one.clone(), neg], one), Err(Error::IllDefined(_))));
    }
}
