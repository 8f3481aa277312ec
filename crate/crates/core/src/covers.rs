//! Finite regular covers of a mapping torus, realised on the fiber: the
//! subgroup `F̃ = F ∩ ker f` with a Reidemeister–Schreier basis and the
//! lift of the monodromy to it.

use serde::Serialize;

use crate::finite_rep::{cover_degree, FiberCayley, FiniteRepresentation, TorusHomomorphism};
use crate::free_group::{FreeEndomorphism, FreeWord, Letter};
use crate::mapping_torus::{AlexanderResult, MappingTorus};
use crate::{Error, Result};

/// Fiber of the cover of `base` determined by `hom`.
#[derive(Clone, Debug)]
pub struct CoverData {
    pub base: MappingTorus,
    pub hom: TorusHomomorphism,
    /// Smallest power of `t` whose image lies in `f(F)`.
    pub d: i64,
    /// Fiber word with `f(t^d w) = 1`.
    pub w: FreeWord,
    /// Shortlex-minimal coset representatives of `F̃` in `F`.
    pub schreier_transversal: Vec<FreeWord>,
    /// Free basis of `F̃`, as words in `F`.
    pub subgroup_basis: Vec<FreeWord>,
    /// Conjugation by `t^d w`, written in the subgroup basis.
    pub lifted_monodromy: FreeEndomorphism,
    rewriter: Rewriter,
}

/// Reidemeister–Schreier rewriting from words of `F` lying in `F̃` to words
/// in the Schreier basis.
#[derive(Clone, Debug)]
struct Rewriter {
    hom: TorusHomomorphism,
    /// `basis_index[coset][generator]` for nontrivial Schreier generators
    basis_index: Vec<Vec<Option<usize>>>,
    /// target element index ↦ position in the transversal
    coset_of: Vec<Option<usize>>,
}

impl Rewriter {
    fn rewrite(&self, w: &FreeWord) -> Result<FreeWord> {
        let g = self.hom.target();
        let mut c = g.identity();
        let mut out = Vec::new();
        for &l in w.letters() {
            let x = self.hom.fiber_images()[l.generator];
            if l.inverse {
                c = g.mul(c, g.inverse(x));
                if let Some(k) = self.basis_index[self.coset_of[c].unwrap()][l.generator] {
                    out.push(Letter::new(k, true));
                }
            } else {
                if let Some(k) = self.basis_index[self.coset_of[c].unwrap()][l.generator] {
                    out.push(Letter::new(k, false));
                }
                c = g.mul(c, x);
            }
        }
        if c != g.identity() {
            return Err(Error::Inconsistent(format!("word {w} does not lie in the kernel")));
        }
        Ok(FreeWord::from_letters(out))
    }
}

/// Builds the fiber of the cover determined by `f`.
pub fn build_cover(m: &MappingTorus, f: &TorusHomomorphism) -> Result<CoverData> {
    let n = m.fiber_rank();
    if f.fiber_rank() != n {
        return Err(Error::RankMismatch { expected: n, found: f.fiber_rank() });
    }
    // f was validated against its own monodromy; recheck against this one
    let f = TorusHomomorphism::new(m.monodromy(), f.target().clone(), f.fiber_images().to_vec(), f.stable_image())?;
    let g = f.target();
    let cayley = FiberCayley::new(&f);
    let transversal: Vec<FreeWord> = cayley.elements().iter().map(|&e| cayley.word(e).unwrap().clone()).collect();
    let mut coset_of = vec![None; g.order()];
    for (k, &e) in cayley.elements().iter().enumerate() {
        coset_of[e] = Some(k);
    }

    let mut basis = Vec::new();
    let mut basis_index = vec![vec![None; n]; transversal.len()];
    for (k, &e) in cayley.elements().iter().enumerate() {
        for (x, &image) in f.fiber_images().iter().enumerate() {
            let next = g.mul(e, image);
            let s = transversal[k].mul(&FreeWord::generator(x)).mul(&cayley.word(next).unwrap().inverse());
            if !s.is_identity() {
                basis_index[k][x] = Some(basis.len());
                basis.push(s);
            }
        }
    }
    let expected = transversal.len() * (n - 1) + 1;
    if basis.len() != expected {
        return Err(Error::Inconsistent(format!(
            "Schreier basis has {} elements, expected {expected}",
            basis.len()
        )));
    }

    let (d, w) = cover_degree(&f);
    let rewriter = Rewriter { hom: f.clone(), basis_index, coset_of };
    let mut cover = CoverData {
        base: m.clone(),
        hom: f,
        d,
        w: w.clone(),
        schreier_transversal: transversal,
        subgroup_basis: basis,
        lifted_monodromy: FreeEndomorphism::identity(expected),
        rewriter,
    };
    cover.lifted_monodromy = cover.lift_monodromy(&w)?;
    Ok(cover)
}

impl CoverData {
    pub fn rank(&self) -> usize {
        self.subgroup_basis.len()
    }

    pub fn index(&self) -> usize {
        self.schreier_transversal.len()
    }

    /// Writes an element of `F̃` in the subgroup basis.
    pub fn rewrite(&self, w: &FreeWord) -> Result<FreeWord> {
        self.rewriter.rewrite(w)
    }

    /// Substitutes the subgroup basis into a word over it.
    pub fn expand(&self, w: &FreeWord) -> FreeWord {
        w.letters().iter().fold(FreeWord::identity(), |acc, l| {
            let b = &self.subgroup_basis[l.generator];
            acc.mul(&if l.inverse { b.inverse() } else { b.clone() })
        })
    }

    /// The automorphism `y ↦ θ^d(w y w⁻¹)` of `F̃`, certified with the
    /// inverse `y ↦ w⁻¹ θ^(-d)(y) w`. Requires `f(t^d w) = 1`.
    pub fn lift_monodromy(&self, w: &FreeWord) -> Result<FreeEndomorphism> {
        let g = self.hom.target();
        if g.mul(g.pow(self.hom.stable_image(), self.d), self.hom.eval_fiber(w)) != g.identity() {
            return Err(Error::IllDefined(format!("f(t^{} {w}) is not the identity", self.d)));
        }
        let theta = self.base.monodromy();
        let fwd = theta.pow(self.d)?;
        let back = theta.pow(-self.d)?;
        let mut images = Vec::with_capacity(self.rank());
        let mut inverse_images = Vec::with_capacity(self.rank());
        for y in &self.subgroup_basis {
            images.push(self.rewrite(&fwd.apply(&y.conjugate_by(w))?)?);
            inverse_images.push(self.rewrite(&back.apply(y)?.conjugate_by(&w.inverse()))?);
        }
        FreeEndomorphism::certified(self.rank(), images, inverse_images)
    }

    /// `det(t^d I − θ̃_*)`, canonical.
    pub fn cover_alexander(&self) -> Result<AlexanderResult> {
        let cover = MappingTorus::new(self.lifted_monodromy.clone(), format!("{} cover", self.base.label()))?;
        let res = cover.classical_alexander()?;
        let sub = |p: &crate::LaurentPolynomial| p.substitute_power(self.d).map(|q| q.canonicalize());
        Ok(AlexanderResult {
            polynomial: sub(&res.polynomial)?,
            invariant_factors: res.invariant_factors.iter().map(sub).collect::<Result<_>>()?,
            free_rank: res.free_rank,
        })
    }
}

/// Free-function form of [`CoverData::cover_alexander`].
pub fn cover_alexander(c: &CoverData) -> Result<AlexanderResult> {
    c.cover_alexander()
}

/// Comparison of the twisted polynomial of the regular representation with
/// the rescaled classical polynomial of the cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapiroReport {
    pub twisted: String,
    pub cover: String,
    pub equal: bool,
    pub d: i64,
    /// False when `f` misses part of its target and the image was used.
    pub surjective: bool,
}

pub fn verify_shapiro(m: &MappingTorus, f: &TorusHomomorphism) -> Result<ShapiroReport> {
    let rep = FiniteRepresentation::regular(m.monodromy(), f)?;
    let twisted = m.twisted_alexander(&rep, 1)?.polynomial;
    let cover = build_cover(m, f)?;
    let lifted = cover.cover_alexander()?.polynomial;
    Ok(ShapiroReport {
        equal: twisted == lifted,
        twisted: twisted.to_string(),
        cover: lifted.to_string(),
        d: cover.d,
        surjective: f.is_surjective(),
    })
}
