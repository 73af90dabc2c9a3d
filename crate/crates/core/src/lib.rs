pub mod classes;
pub mod cli;
pub mod classify;
pub mod error;
pub mod limits;
pub mod order;
pub mod powerspace;
pub mod rudin;
pub mod set;
pub mod space;
pub mod theorems;
pub mod zoo;

pub use error::{Error, Result};
pub use order::{FinitePoset, MonotoneMap};
pub use set::PointSet;
pub use space::FiniteSpace;
