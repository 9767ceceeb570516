pub mod checks;
pub mod cli;
pub mod error;
pub mod fold;
pub mod monomial;
pub mod partition;
pub mod resolution;
pub mod sweep;
pub mod symbolic;
pub mod verify;

pub use error::{Error, Result};
