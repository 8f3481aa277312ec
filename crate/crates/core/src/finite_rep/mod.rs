//! Finite permutation groups, homomorphisms from the mapping torus group
//! onto them, and the finite representations they induce.

mod group;
mod hom;
mod perm;
mod rep;

pub use group::{FiniteGroup, DEFAULT_ENUMERATION_BOUND};
pub use hom::{all_homomorphisms, cover_degree, distinct_kernels, FiberCayley, TorusHomomorphism};
pub use perm::Permutation;
pub use rep::{direct_sum, regular_representation, FiniteRepresentation, RepresentationKind, ORDER_BOUND};
