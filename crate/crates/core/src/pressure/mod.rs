//! Partition sums, pressure brackets, the truncated zeta series and the
//! affinity dimension.

pub mod affinity;
pub mod estimate;
pub mod rauzy;
pub mod sums;
pub mod zeta;

pub use crate::semigroup::rauzy::rauzy_gamma_system;
pub use affinity::{affinity_dimension, affinity_from_tables, pressure_grid, PressureCurves};
pub use estimate::{pressure_estimate, PairSample, PressureEstimate};
pub use rauzy::rauzy_dimension;
pub use sums::{log_sum_exp, partition_sum};
pub use zeta::{zeta_truncated, ZetaResult};
