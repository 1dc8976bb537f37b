//! Exact-arithmetic toolkit for generalized f-Eulerian polynomials and their
//! relatives: d-Narayana polynomials, Jacobi-Pineiro multiple orthogonal
//! polynomials, and the Miller-Paris transformation machinery connecting them.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere. Zero location is decided exactly by Sturm chains,
//! identities are checked coefficient-by-coefficient, and every polynomial
//! family is constructed by at least two independent routes so the routes can
//! be played against each other.
//!
//! The crate is `no_std` (with `alloc`); IO, JSON and the command-line front
//! end live in the companion `feulerian-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod exactmath;
pub mod feulerian;
pub mod jacobipineiro;
pub mod millerparis;
pub mod narayana;
pub mod polyalgebra;

pub use error::{Error, Result};
pub use exactmath::{FormalSeries, Rational};
pub use polyalgebra::{Poly, ZoneCounts};
