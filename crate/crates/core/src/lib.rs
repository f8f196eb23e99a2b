//! Exact character theory for `Sp4(2^e)` and its maximal subgroups.

pub mod chartab;
pub mod error;
pub mod exactnum;
pub mod families;
pub mod gelfand;
pub mod gfield;
pub mod groups;
pub mod verify;

pub use error::{Error, Result};
