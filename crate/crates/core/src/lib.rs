//! Dimension estimates for finite subsets of SL(3,ℝ) acting projectively on
//! the positive cone.
//!
//! The crate computes affinity dimensions from pressure zeros, Lyapunov
//! dimensions of Bernoulli measures, empirical dimensions of projected
//! stationary measures, and covering and box-counting cross-checks. Word
//! products are formed in exact rational arithmetic; floating point enters
//! only when singular values are taken.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod cover;
pub mod ergodic;
pub mod error;
pub mod estimate;
pub mod linalg;
pub mod par;
pub mod pressure;
pub mod projective;
pub mod rng;
pub mod semigroup;

pub use error::{Error, Result};
pub use estimate::{DimensionEstimate, Method};
pub use linalg::{Matrix3, SvTriple};
pub use semigroup::{SystemSpec, Word};
