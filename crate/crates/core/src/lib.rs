//! Exact determinantal counting of cycle systems in hamburger graphs, with
//! applications to domino tilings of Aztec diamonds and Aztec pillows.

pub mod bench;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod propp;
pub mod region;
pub mod schroeder;
pub mod tiling;

pub use error::{Error, Result};
