//! Exact torus-level arithmetic for the metaplectic double cover of
//! `GSpin(2n+1)` over a p-adic field of odd residual characteristic.
//!
//! Field elements are tracked at square-class resolution (a valuation and a
//! unit square class), which is all that Hilbert symbols, absolute values,
//! Weil factors and square-class characters can see. Everything else is
//! built on that quotient:
//!
//! - [`rootdata`]: roots, coroots, Weyl group, torus coordinate systems.
//! - [`covertorus`]: the 2-cocycle on the torus and conjugation of lifts.
//! - [`subgroups`]: `T²`, `Tᵐ`, centers and brute-force centralizers.
//! - [`exceptional`]: exceptional characters, Gindikin-Karpelevich constants
//!   and pole counts.
//! - [`orbits`]: orthogonal partitions, dominance and the weights `j_α`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod covertorus;
mod error;
pub mod exceptional;
pub mod laurent;
pub mod localfield;
pub mod oracle;
pub mod orbits;
pub mod rootdata;
pub mod subgroups;

pub use error::Error;

pub type Result<T> = core::result::Result<T, Error>;
