//! Exact arithmetic for the exterior square of `GL_n` over commutative
//! rings, and an engine that writes elementary exterior transvections as
//! short products of elementary conjugates of a given matrix.

pub mod cli;
pub mod error;
pub mod exterior;
#[doc(hidden)]
pub mod fault;
pub mod identities;
pub mod indexing;
pub mod level;
pub mod linalg;
pub mod pluecker;
pub mod rdu;
pub mod ring;
pub mod sample;
pub mod stabilizer;
pub mod words;

pub use error::{Error, Result};
