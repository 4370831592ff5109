pub mod criteria;
pub mod families;
pub mod gorenstein;
pub mod macaulay;
pub mod points;
pub mod sampler;
pub mod witness;

pub use criteria::{build_unsat_limit, check_vps, detect_line, kri_check, sbl_necessary, VpsVerdict};
pub use gorenstein::{is_locally_gorenstein, local_socle_dimension};
pub use macaulay::macaulay_bound;
pub use points::{points_ideal, SchemeSpec};
pub use sampler::{cayley_orthogonal, polar_simplex_sample, PolarSimplex};
pub use witness::{apolar_quadrics, ApolarQuadrics};
