//! Exact computations around varieties of polar simplices of quadrics:
//! apolarity, graded ideals and their Hilbert functions, flat limits,
//! tangent spaces and Plücker models.

pub mod algebra;
pub mod apolarity;
pub mod error;
pub mod grassmann;
pub mod grobner;
pub mod io;
pub mod limits;
pub mod reproduce;
pub mod tangent;
pub mod vps;

pub use error::{Error, Result};
