//! Rook monoid `R_n` and its Bruhat-Chevalley order.
//!
//! Elements are stored in one-line notation: entry `j` is the row of the
//! nonzero cell in column `j`, or `0` when the column is empty. On top of
//! that representation the crate provides
//!
//! * the monoid product, rank and exhaustive enumeration ([`element`]),
//! * the length function and its orbit-dimension decomposition ([`length`]),
//! * an exact-rank linear algebra oracle for the same dimensions ([`oracle`]),
//! * two independent realizations of the order, Deodhar's truncation
//!   criterion and the closure of raise/swap generator moves, together
//!   with covering predicates ([`order`]),
//! * the graded Hasse diagram of `R_n` ([`poset`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod element;
pub mod error;
pub mod length;
pub mod oracle;
pub mod order;
pub mod poset;

pub use element::{enumerate, rook_monoid_size, Elements, OneLine, Rank, RookMatrix};
pub use error::Error;
pub use length::{CoinversionSet, LengthBreakdown};
pub use oracle::MatrixSpan;
pub use order::{GeneratorMove, IntVector};
pub use poset::{HasseDiagram, Node};

pub type Result<T> = core::result::Result<T, Error>;
