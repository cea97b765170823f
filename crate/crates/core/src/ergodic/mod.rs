//! Entropy, Lyapunov exponents and dimensions of projected measures.

pub mod delta;
pub mod entropy;
pub mod furstenberg;
pub mod lyapunov;

pub use delta::empirical_delta;
pub use entropy::{dyadic_entropy, shannon_entropy};
pub use furstenberg::furstenberg_plane_sample;
pub use lyapunov::{lyapunov_dimension, lyapunov_exponents, LyapunovStats};
