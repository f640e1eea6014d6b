//! Exact representation-theoretic data for the rank-3 simple Lie algebras
//! A3, B3 and C3: irreducible characters, weight multiplicities, and the
//! closed-form generating functions that package them.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in this crate.  Results that are mathematically
//! integers (dimensions, multiplicities, character coefficients) are checked
//! for integrality at the API boundary and returned as integers.
//!
//! The crate offers three independent routes to the same data and is designed
//! so they can be cross-checked against each other:
//!
//! * [`calogero`] — characters as polynomial eigenfunctions of a
//!   Calogero–Sutherland operator, solved by exact back-substitution;
//! * [`genfun`] and [`mult`] — closed-form rational generating functions
//!   expanded as truncated power series;
//! * [`roots`] and [`kostant`] — the Weyl character formula evaluated by
//!   exact alternant division, and Kostant's multiplicity formula driven by
//!   a piecewise-polynomial partition function.
//!
//! The [`selftest`] module wires the cross-checks into a runnable suite.
//!
//! The crate is `no_std` (with `alloc`); the `std` feature only forwards to
//! the bignum backends.

#![cfg_attr(not(any(feature = "std", test)), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod calogero;
pub mod diffop;
pub mod error;
pub mod genfun;
pub mod golden;
pub mod kostant;
pub mod mult;
pub mod poly;
pub mod ratfn;
pub mod roots;
pub mod selftest;
pub mod series;
pub mod text;
pub mod vars;

pub use error::Error;
pub use poly::{Coef, LaurentPoly};
pub use ratfn::RationalFn;
pub use roots::{Algebra, RootSystem, Weight};
pub use series::TruncatedSeries;
pub use vars::VarSet;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
