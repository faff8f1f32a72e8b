//! Exact computation with piecewise-linear homeomorphisms.
//!
//! Everything in this crate runs on arbitrary-precision rationals; there is
//! no floating point and no tolerance anywhere. The building blocks are
//! 1-periodic PL functions and PL homeomorphisms of the line commuting with
//! the unit translation ([`plmap`]), which combine into planar skew-product
//! homeomorphisms ([`skew`]), circle dynamics via lifts ([`circle`]), and
//! constructive group actions on the line ([`actions`]). The [`checks`]
//! module bundles the named identity suite exposed by the `plhomeo` CLI.

pub mod actions;
pub mod checks;
pub mod circle;
pub mod fixedset;
pub mod format;
pub mod plmap;
pub mod rational;
pub mod skew;
pub mod word;

#[doc(hidden)]
pub mod testkit;

pub use fixedset::{Component, FixedSet};
pub use plmap::{PLFunc, PLLift, Piece, PlError};
pub use rational::Rational;
pub use skew::{Orientation, SkewMap};
