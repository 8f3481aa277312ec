//! Mapping tori of free-group automorphisms and their classical and twisted
//! Alexander polynomials.
//!
//! The group is presented as `⟨x₁, …, xₙ, t | t xᵢ t⁻¹ θ(xᵢ)⁻¹⟩` with `t`
//! the generator of index `n`, and `φ` is the fibration class
//! `φ(xᵢ) = 0`, `φ(t) = 1`. Chains are row vectors and boundary maps act by
//! right multiplication.

use std::fmt;

use num_traits::One;

use crate::exact_algebra::{char_poly, LaurentPolynomial, PolynomialMatrix, Rational, RationalMatrix};
use crate::finite_rep::FiniteRepresentation;
use crate::free_group::{fox_derivative, FreeEndomorphism, FreeWord, GroupRingWord, Specializer};
use crate::{Error, Result};

/// Fibered manifold given by a certified automorphism of the free group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingTorus {
    monodromy: FreeEndomorphism,
    label: String,
}

/// Invariant factor data of a first homology module over ℚ[t, t⁻¹].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderResult {
    /// Canonical product of the invariant factors, or zero when the module
    /// has positive rank.
    pub polynomial: LaurentPolynomial,
    /// The non-unit invariant factors `p₁ | p₂ | …`, canonical.
    pub invariant_factors: Vec<LaurentPolynomial>,
    pub free_rank: usize,
}

impl AlexanderResult {
    fn from_diagonal(diag: Vec<LaurentPolynomial>, cols: usize) -> Self {
        let nonzero: Vec<_> = diag.into_iter().filter(|p| !p.is_zero()).collect();
        let free_rank = cols - nonzero.len();
        let invariant_factors: Vec<_> = nonzero.into_iter().filter(|p| !p.is_unit()).collect();
        let polynomial = if free_rank > 0 {
            LaurentPolynomial::zero()
        } else {
            invariant_factors.iter().cloned().product::<LaurentPolynomial>().canonicalize()
        };
        Self { polynomial, invariant_factors, free_rank }
    }
}

impl fmt::Display for AlexanderResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.polynomial)
    }
}

impl MappingTorus {
    pub fn new(monodromy: FreeEndomorphism, label: impl Into<String>) -> Result<Self> {
        if !monodromy.is_certified() {
            return Err(Error::NotCertified("monodromy has no verified inverse".into()));
        }
        if monodromy.rank() == 0 {
            return Err(Error::DimensionMismatch("fiber rank must be at least 1".into()));
        }
        Ok(Self { monodromy, label: label.into() })
    }

    /// Parses images and inverse images in the word syntax.
    pub fn parse(rank: usize, images: &[&str], inverse_images: &[&str], label: impl Into<String>) -> Result<Self> {
        Self::new(FreeEndomorphism::parse(rank, images, Some(inverse_images))?, label)
    }

    pub fn fiber_rank(&self) -> usize {
        self.monodromy.rank()
    }

    pub fn monodromy(&self) -> &FreeEndomorphism {
        &self.monodromy
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Relators `t xᵢ t⁻¹ θ(xᵢ)⁻¹` over the `n + 1` generators.
    pub fn presentation(&self) -> Vec<FreeWord> {
        let n = self.fiber_rank();
        let t = FreeWord::generator(n);
        self.monodromy
            .images()
            .iter()
            .enumerate()
            .map(|(i, im)| t.mul(&FreeWord::generator(i)).mul(&t.inverse()).mul(&im.inverse()))
            .collect()
    }

    /// Characteristic polynomial of the monodromy on the first homology of
    /// the fiber.
    pub fn classical_alexander(&self) -> Result<AlexanderResult> {
        let a = self.monodromy.abelianization_matrix();
        let n = a.rows();
        // tI − A as a polynomial matrix, for the invariant factors
        let mut m = PolynomialMatrix::from_rational(&RationalMatrix::identity(n), &Rational::one(), 1);
        m.add_block(0, 0, &PolynomialMatrix::from_rational(&a, &-Rational::one(), 0));
        let mut res = AlexanderResult::from_diagonal(m.smith_normal_form(), n);
        let direct = char_poly(&a)?.canonicalize();
        if res.polynomial != direct {
            return Err(Error::Inconsistent(format!(
                "invariant factors give {} but the characteristic polynomial is {direct}",
                res.polynomial
            )));
        }
        res.polynomial = direct;
        Ok(res)
    }

    /// Boundary maps `∂₂` (relators × generators blocks of Fox derivatives)
    /// and `∂₁` (blocks `Φ(gⱼ) − I`) of the presentation 2-complex.
    pub fn boundary_maps(&self, rep: &FiniteRepresentation, d_scale: i64) -> Result<(PolynomialMatrix, PolynomialMatrix)> {
        if d_scale < 1 {
            return Err(Error::NonPositiveExponent(d_scale));
        }
        let n = self.fiber_rank();
        let mats = rep.matrices();
        if mats.len() != n + 1 {
            return Err(Error::RankMismatch { expected: n + 1, found: mats.len() });
        }
        let mut phi = vec![0; n + 1];
        phi[n] = d_scale;
        let specializer = Specializer::new(mats, phi)?;
        let k = specializer.dim();

        let mut d2 = PolynomialMatrix::zeros(n * k, (n + 1) * k);
        for (i, r) in self.presentation().iter().enumerate() {
            for j in 0..=n {
                let block = specializer.specialize(&fox_derivative(r, j, n + 1)?)?;
                d2.add_block(i * k, j * k, &block);
            }
        }
        let mut d1 = PolynomialMatrix::zeros((n + 1) * k, k);
        for j in 0..=n {
            let g = GroupRingWord::from_word(FreeWord::generator(j)).sub(&GroupRingWord::one());
            d1.add_block(j * k, 0, &specializer.specialize(&g)?);
        }
        Ok((d2, d1))
    }

    /// First twisted Alexander polynomial for `rep ⊗ d_scale·φ`, with its
    /// invariant factors. The result is cross-checked against the quotient
    /// `det(∂₂ without the t columns) · Δ₀ / det(Φ(t) − I)`.
    pub fn twisted_alexander(&self, rep: &FiniteRepresentation, d_scale: i64) -> Result<AlexanderResult> {
        let (d2, d1) = self.boundary_maps(rep, d_scale)?;
        let pres = PolynomialMatrix::homology_presentation(&d2, &d1)?;
        let res = AlexanderResult::from_diagonal(pres.smith_normal_form(), pres.cols());

        let n = self.fiber_rank();
        let k = rep.dim();
        let fiber_cols: Vec<usize> = (0..n * k).collect();
        let rows: Vec<usize> = (0..n * k).collect();
        let fiber_det = d2.submatrix(&rows, &fiber_cols).determinant()?;
        let t_rows: Vec<usize> = (n * k..(n + 1) * k).collect();
        let t_det = d1.submatrix(&t_rows, &(0..k).collect::<Vec<_>>()).determinant()?;
        let h0_order: LaurentPolynomial = d1.smith_normal_form().into_iter().product();

        let lhs = (&res.polynomial * &t_det).canonicalize();
        let rhs = (&fiber_det * &h0_order).canonicalize();
        if lhs != rhs {
            return Err(Error::Inconsistent(format!(
                "invariant factors give {} but the Wada quotient gives {rhs} / {}",
                res.polynomial,
                t_det.canonicalize()
            )));
        }
        Ok(res)
    }

    /// Multiplicativity of the twisted polynomial under direct sums.
    pub fn lemma5_check(&self, a: &FiniteRepresentation, b: &FiniteRepresentation) -> Result<bool> {
        let sum = self.twisted_alexander(&a.direct_sum(b)?, 1)?.polynomial;
        let product = &self.twisted_alexander(a, 1)?.polynomial * &self.twisted_alexander(b, 1)?.polynomial;
        Ok(sum == product.canonicalize())
    }

    /// Rescaling `φ` by `d` substitutes `t ↦ t^d`.
    pub fn lemma4_check(&self, rep: &FiniteRepresentation, d: i64) -> Result<bool> {
        let scaled = self.twisted_alexander(rep, d)?.polynomial;
        let base = self.twisted_alexander(rep, 1)?.polynomial;
        Ok(scaled == base.substitute_power(d)?.canonicalize())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_rep::{all_homomorphisms, FiniteGroup, RepresentationKind, TorusHomomorphism};

    fn fig8() -> MappingTorus {
        MappingTorus::parse(2, &["aba", "ba"], &["aB", "bbA"], "figure-eight").unwrap()
    }

    fn poly(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn presentation_examples() {
        let torus = MappingTorus::new(FreeEndomorphism::identity(1), "torus").unwrap();
        let rels = torus.presentation();
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].to_torus_string(1), "taTA");

        let m = MappingTorus::parse(2, &["ab", "bab"], &["aaB", "bA"], "").unwrap();
        let rels: Vec<_> = m.presentation().iter().map(|r| r.to_torus_string(2)).collect();
        assert_eq!(rels, ["taTBA", "tbTBAB"]);
    }

    #[test]
    fn uncertified_monodromy_rejected() {
        let plain = FreeEndomorphism::parse(2, &["ab", "b"], None).unwrap();
        assert!(matches!(MappingTorus::new(plain, ""), Err(Error::NotCertified(_))));
    }

    #[test]
    fn classical_examples() {
        assert_eq!(fig8().classical_alexander().unwrap().polynomial, poly("t^2 - 3t + 1"));
        let id = MappingTorus::new(FreeEndomorphism::identity(2), "").unwrap();
        let res = id.classical_alexander().unwrap();
        assert_eq!(res.polynomial, poly("t^2 - 2t + 1"));
        assert_eq!(res.invariant_factors, vec![poly("t - 1"), poly("t - 1")]);
        let flip = MappingTorus::parse(1, &["A"], &["A"], "").unwrap();
        assert_eq!(flip.classical_alexander().unwrap().polynomial, poly("t + 1"));
    }

    #[test]
    fn trivial_representation_gives_classical() {
        let m = fig8();
        let eps = FiniteRepresentation::trivial(m.monodromy());
        let res = m.twisted_alexander(&eps, 1).unwrap();
        assert_eq!(res.polynomial, poly("t^2 - 3t + 1"));
        assert_eq!(res.free_rank, 0);
        assert_eq!(m.twisted_alexander(&eps, 2).unwrap().polynomial, poly("t^4 - 3t^2 + 1"));
    }

    #[test]
    fn regular_z2_on_figure_eight() {
        let m = fig8();
        let z2 = FiniteGroup::from_cycle_strings(2, &["(1 2)"]).unwrap();
        let f = TorusHomomorphism::new(m.monodromy(), z2, vec![0, 0], 1).unwrap();
        let rep = FiniteRepresentation::regular(m.monodromy(), &f).unwrap();
        let res = m.twisted_alexander(&rep, 1).unwrap();
        assert_eq!(res.polynomial, (&poly("t^2 + 3t + 1") * &poly("t^2 - 3t + 1")).canonicalize());
    }

    #[test]
    fn sign_twist_on_a_product() {
        // F₂ × ℤ twisted by the sign of a: H₁ of the fiber with these
        // coefficients is one-dimensional and t acts trivially on it
        let id = MappingTorus::new(FreeEndomorphism::identity(2), "").unwrap();
        let z2 = FiniteGroup::from_cycle_strings(2, &["(1 2)"]).unwrap();
        let f = TorusHomomorphism::new(id.monodromy(), z2, vec![1, 0], 0).unwrap();
        let rep = FiniteRepresentation::from_homomorphism(id.monodromy(), &f, RepresentationKind::Sign).unwrap();
        let res = id.twisted_alexander(&rep, 1).unwrap();
        assert_eq!(res.free_rank, 0);
        assert_eq!(res.polynomial, poly("t - 1"));
    }

    #[test]
    fn lemmas_4_and_5_on_small_groups() {
        let m = fig8();
        let s3 = FiniteGroup::from_cycle_strings(3, &["(1 2)", "(1 2 3)"]).unwrap();
        let eps = FiniteRepresentation::trivial(m.monodromy());
        for f in all_homomorphisms(m.monodromy(), &s3).iter().take(4) {
            let rep = FiniteRepresentation::regular(m.monodromy(), f).unwrap();
            assert!(m.lemma4_check(&rep, 2).unwrap());
            assert!(m.lemma5_check(&rep, &eps).unwrap());
        }
    }
}
