//! Exact computations with binomial edge ideals of finite simple graphs.
//!
//! The crate is `no_std` and only needs `alloc`. It covers
//!
//! * graph families and graph invariants ([`graph`]),
//! * cut sets with the cut point property and the minimal primes `P_T(G)`
//!   they index ([`primes`]),
//! * multivariate polynomials over `Q` or `GF(p)` with Buchberger's
//!   algorithm, ideal intersection and colon ideals ([`poly`]),
//! * binomial edge ideals, witness polynomials and local v-numbers
//!   ([`binomial`]),
//! * projective dimension through squarefree initial ideals and Hochster's
//!   formula ([`homology`]).
//!
//! Everything is deterministic. Expensive routines take a [`Limits`] value
//! and fail with [`Error::ResourceLimit`] instead of truncating silently.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod binomial;
mod error;
pub mod graph;
pub mod homology;
mod limits;
pub mod poly;
pub mod primes;

pub use error::{Error, Result};
pub use limits::Limits;
