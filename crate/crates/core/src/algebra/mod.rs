pub mod form;
pub mod linalg;
pub mod modular;
pub mod mono;
pub mod scalar;

pub use form::{Form, Ring};
pub use linalg::{ExactMatrix, SVec, Subspace};
pub use mono::{Mono, MonoOrder};
pub use scalar::Scalar;
