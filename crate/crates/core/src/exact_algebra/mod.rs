//! Exact arithmetic over ℚ and ℚ[t, t⁻¹].

mod laurent;
mod matrix;
mod poly_matrix;
mod roots;

pub use laurent::{canonicalize, divides, substitute_power, LaurentPolynomial};
pub use matrix::{char_poly, RationalMatrix};
pub use poly_matrix::{smith_normal_form, PolynomialMatrix};
pub use roots::{
    all_roots_real_positive, square_free_decomposition, square_free_part, sturm_positive_root_count,
    sturm_real_root_count, RootCheck,
};

/// Arbitrary-precision rational number, always stored in lowest terms.
pub type Rational = num_rational::BigRational;
