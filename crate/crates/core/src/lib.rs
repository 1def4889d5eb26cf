pub mod cli;
pub mod error;
pub mod exactalg;
pub mod homology;
pub mod orbifold;
pub mod path_algebra;
pub mod quiver;
pub mod random;
pub mod stability;

pub use error::{Error, Result};
