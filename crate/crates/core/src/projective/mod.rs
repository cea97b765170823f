//! Projective action on the plane chart, frames and rescaling.

pub mod attractor;
pub mod frame;
pub mod lft;
pub mod rescale;

pub use attractor::{attractor_points, project_measure_samples, Coords, PointCloud, Sampler};
pub use frame::{frame_for_plane, plane_frame_orthonormal, PlaneFrame};
pub use lft::{lft3, lft_apply};
pub use rescale::{rescale_decompose, scale_bounds, xi_partition, Rescale, ScaleBounds};
