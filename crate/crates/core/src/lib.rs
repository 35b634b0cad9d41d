pub mod cli;
pub mod error;
pub mod exactla;
pub mod fan;
pub mod present;
pub mod stacky;

pub use error::{Error, Result};
