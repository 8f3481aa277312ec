//! Free groups: reduced words, endomorphisms and Fox calculus.

mod endomorphism;
mod fox;
mod word;

pub use endomorphism::FreeEndomorphism;
pub use fox::{fox_derivative, specialize, GroupRingWord, Specializer};
pub use word::{reduce, FreeWord, Letter, FIBER_ALPHABET};
