pub mod curves;
pub mod plucker;
pub mod quadrics;
pub mod span;
pub mod stretch;

pub use curves::{fit_rnc_degree, ruling_curve, Ruling};
pub use plucker::{plucker, PluckerVec};
pub use quadrics::{plucker_quadric_space, QuadricSpace};
pub use span::{restrict_quadrics, vps_span, SpanReport};
