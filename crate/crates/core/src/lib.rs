pub mod bounds;
pub mod decimal;
pub mod dominance;
pub mod error;
pub mod interval;
pub mod partitions;
pub mod rootdata;
pub mod witness;

pub use error::{Error, Result};
