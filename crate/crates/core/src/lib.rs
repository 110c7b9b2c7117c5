//! Bruhat intervals, Billey-Postnikov decompositions, pattern avoidance,
//! inversion arrangements and staircase diagrams for Coxeter groups.
//!
//! Everything is exact and meant to be checked by exhaustive enumeration at
//! small rank.

pub mod arrangements;
pub mod bp;
pub mod coxeter;
mod error;
pub mod patterns;
pub mod poly;
pub mod staircase;
pub mod verify;

pub use coxeter::{
    from_entries, parse_element, CoxeterSystem, Family, GenSet, GroupElement, Interval,
    ParabolicDecomposition, RootSystem,
};
pub use error::{Error, Result};
pub use poly::IntPolynomial;
