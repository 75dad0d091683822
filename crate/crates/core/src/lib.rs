//! Exact computation of real double Hurwitz numbers with positive real
//! branch points.
//!
//! Three independent engines compute the same numbers and are cross-checked
//! against each other:
//!
//! * [`oracle`] — brute-force enumeration of monodromy tuples in the
//!   symmetric group,
//! * [`tropical`] — enumeration of colored monodromy graphs with exact
//!   multiplicities,
//! * [`cayley`] — walk counting in the restricted Cayley graph of
//!   involutions (the Hasse diagram of matchings).
//!
//! The [`genus0`] module adds the piecewise-constant structure function for
//! genus zero and its wall-crossings.  All arithmetic is exact: big integers
//! and dyadic rationals, never floating point.

pub mod cayley;
pub mod dyadic;
pub mod error;
pub mod genus0;
pub mod oracle;
pub mod symgrp;
pub mod tropical;

pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use oracle::HurwitzQuery;
