//! Exact computation of classical and twisted Alexander polynomials for
//! mapping tori of free-group automorphisms, together with the
//! bi-orderability criteria that consume them.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact_algebra`]: rationals, Laurent polynomials in one variable,
//!   matrices over ℚ and ℚ[t, t⁻¹], Smith normal form, Sturm counting.
//! * [`free_group`]: reduced words, endomorphisms and Fox calculus.
//! * [`finite_rep`]: permutation groups, homomorphisms out of a mapping
//!   torus group, and their finite representations.
//! * [`mapping_torus`]: classical and twisted Alexander polynomials.
//! * [`covers`]: Reidemeister–Schreier lifts of the monodromy to finite
//!   covers of the fiber.
//! * [`orderability`]: the Magnus ordering of a free group and the
//!   positive-root verdicts.

pub mod catalog;
pub mod covers;
pub mod error;
pub mod exact_algebra;
pub mod finite_rep;
pub mod free_group;
pub mod mapping_torus;
pub mod orderability;

pub use error::{Error, Result};
pub use exact_algebra::{LaurentPolynomial, PolynomialMatrix, Rational, RationalMatrix};
pub use free_group::{FreeEndomorphism, FreeWord, GroupRingWord, Letter};
pub use finite_rep::{FiniteGroup, FiniteRepresentation, Permutation, TorusHomomorphism};
pub use mapping_torus::{AlexanderResult, MappingTorus};



