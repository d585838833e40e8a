//! Kakeya line sets in the linear representation of a conic in PG(3,q).

pub mod error;
pub mod gf;
pub mod linalg;
pub mod projective;
pub mod quadrics;
pub mod cliques;
pub mod kakeya;
pub mod classify;
pub mod cli;

pub use error::{Error, Result};
pub use gf::{FieldElement, GaloisField};
