//! Coxeter systems, element arithmetic and the Bruhat order.
//!
//! One-line notation composes as functions, `(x·y)(i) = x(y(i))`, so
//! `w·s_i` swaps the entries in positions `i, i+1` and `s_i·w` swaps the
//! values `i, i+1`.

mod element;
mod genset;
mod order;
mod parse;
mod roots;
mod system;

pub use element::GroupElement;
pub use genset::GenSet;
pub use order::{Interval, IntervalJson, NodeJson, ParabolicDecomposition};
pub use parse::{from_entries, parse_element};
pub use roots::RootSystem;
pub use system::{CoxeterSystem, Family};

