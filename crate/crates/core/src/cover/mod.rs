//! Covering bounds and box counting.

pub mod boxdim;
pub mod cone;
pub mod upper;

pub use boxdim::{box_count, box_dimension_estimate};
pub use cone::{base_radius, cone_constant};
pub use upper::{svd_cover_upper, CoverReport};
