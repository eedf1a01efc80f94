pub mod birational;
pub mod cartier;
pub mod error;
pub mod fixed;
pub mod geometry;
pub mod ideal;
pub mod oracle;
pub mod semigroup;

pub use error::{Error, Result};
