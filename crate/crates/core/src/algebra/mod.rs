//! Exact arithmetic: integer and rational linear algebra, polynomials,
//! truncated q-series and short-vector enumeration.

pub mod enumerate;
pub mod int;
pub mod linear;
pub mod matrix;
pub mod poly;
pub mod qseries;

pub use enumerate::enumerate_by_norm;
pub use int::{
    coordinates_in_hermite_basis, determinant_z, hermite_normal_form, integer_kernel_basis, rank_z,
    smith_normal_form,
};
pub use linear::{
    dot, is_positive_definite, kernel_basis, leading_principal_minors, min_norm_affine,
    min_norm_solution, rank, rref, solve,
};
pub use matrix::{Matrix, MatrixQ, MatrixZ};
pub use poly::{BiPoly, UniPoly};
pub use qseries::{psi_series, QSeries};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// `n / d`; panics if `d == 0`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Least common multiple of the denominators.
pub fn denominator_lcm(v: &[Rational]) -> num_bigint::BigInt {
    use num_integer::Integer;
    v.iter()
        .fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()))
}
