//! Exact sequences of finite-dimensional Hopf algebras and the dimension
//! arithmetic of fusion categories built from finite groups.

pub mod caps;
pub mod cli;
pub mod error;
pub mod exact;
pub mod fusion;
pub mod group;
pub mod hopf;
pub mod matched_pair;

pub use error::{Error, Result};
