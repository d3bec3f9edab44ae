//! Supersingular abelian threefolds over binary finite fields and the
//! Jacobians of Picard-type curves `Y⁴ + fY² + gY = X³ + dX² + e`.

pub mod error;
pub mod field;
pub mod linalg;
pub mod quartic;
pub mod synthesis;
pub mod auxgeom;
pub mod elliptic;
pub mod tower;

pub use error::{Error, Result};
pub use field::{Fe, Field, ModulusTable};
