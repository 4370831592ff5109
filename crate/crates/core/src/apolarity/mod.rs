pub mod orthogonalize;
pub mod polarity;
pub mod quadric;

pub use orthogonalize::{orthogonalize_first_order, FirstOrderDeformation};
pub use polarity::{line_in_inverse_quadric, polarity_conditions, LinearSubspace, PolarityReport};
pub use quadric::{apolar_ideal, apply_diff, inverse_quadric, Quadric};
