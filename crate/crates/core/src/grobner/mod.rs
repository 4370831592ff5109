pub mod buchberger;
pub mod hilbert;
pub mod ideal;
pub mod poly;
pub mod saturate;
pub mod syzygy;

pub use buchberger::GroebnerBasis;
pub use hilbert::HilbFn;
pub use ideal::GradedIdeal;
pub use saturate::{intersect_ideals, is_saturated, saturate};
