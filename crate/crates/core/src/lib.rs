//! Exact combinatorics of cyclic quotient singularities.
//!
//! Everything here is integer arithmetic, with arbitrary precision throughout:
//! Hirzebruch-Jung continued fractions and their duals ([`cfrac`]), blow-up and
//! blow-down rewriting of curve chains ([`chains`]), Wahl singularities and
//! their exceptional chains ([`wahl`]), extremal neighborhoods with their Mori
//! sequences, flips and extremal P-resolutions ([`mori`]), and enumeration of
//! embedded rational homology balls ([`embeddings`]).
//!
//! The `antiflip` binary exposes the same operations on the command line with
//! text, JSON and Graphviz output; see [`cli`].

#![forbid(unsafe_code)]

pub mod cfrac;
pub mod chains;
pub mod cli;
pub mod embeddings;
mod error;
pub mod mori;
pub mod wahl;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
