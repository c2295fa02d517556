//! Exact multivariate polynomials and Gröbner basis computations.
//!
//! Ring variables occupy slots `1..=m` of a [`Monomial`]; slot 0 is the
//! auxiliary variable `t` used to eliminate during intersections.

mod field;
mod groebner;
mod ideal;
mod monomial;
mod order;
mod polynomial;

pub use field::{Field, Fp, Rational, DEFAULT_PRIME};
pub use groebner::{buchberger, is_reduced_basis, normal_form};
pub use ideal::{
    colon_ideal, colon_poly, count_standard_monomials, hilbert_value, ideal_equal, ideal_member, initial_degree_gap,
    intersect, Ideal,
};
pub use monomial::{Monomial, MAX_VARS};
pub use order::{MonomialOrder, OrderKind};
pub use polynomial::Polynomial;
