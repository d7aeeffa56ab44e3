//! Spectral extremal graph toolkit.

pub mod bitset;
pub mod error;
pub mod family;
pub mod graph;
pub mod search;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
