//! Exact computer algebra for universal quantum groups.
//!
//! The crate compiles finitely presented monoidal categories with fiber
//! functors into presentations of their coend bialgebras and Hopf algebras,
//! and specializes the compiler to the universal bialgebra `uend(A)` and the
//! universal Hopf algebra `uaut(A)` of a quadratic algebra `A`, and to the
//! universal quantum group `H(b)` of a non-degenerate bilinear form.
//!
//! Everything here is `no_std` with `alloc`; file formats and the command
//! line front end live in the companion `tannakit` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bilform;
pub mod coendc;
pub mod comodrep;
mod error;
pub mod exactlin;
pub mod moncat;
pub mod ncpoly;
pub mod quadalg;

pub use error::{Error, Result};
pub use exactlin::{Field, MatrixExact, Scalar, Subspace};
