//! 3×3 matrix arithmetic: exact rationals, singular values and `φˢ`.

pub mod jacobi;
pub mod matrix;
pub mod svd;

pub use matrix::{format_rational, parse_rational, rat, Float3, Matrix3};
pub use svd::{
    float_svd, operator_norm, singular_values, svf, svf_via_norms, FloatSvd, LogRatios,
    NormBracket, SvTriple,
};

/// `exterior_square(A)`; also available as a method on [`Matrix3`].
pub fn exterior_square(a: &Matrix3) -> Matrix3 {
    a.exterior_square()
}

/// Exact product `A·B`.
pub fn mat_mul(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    a.mul(b)
}
