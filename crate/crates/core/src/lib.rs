//! Ranking of alternatives described by fuzzy multi-attribute data.
//!
//! Attribute values (crisp, trapezoidal fuzzy or interval) are reduced to
//! intervals by α-cut, normalized onto a common scale and compared with an
//! ideal reference through grey relational coefficients. Those coefficients
//! feed a pair of additive DEA programs per alternative: an optimistic one
//! against the best-practice frontier and a pessimistic one against the
//! worst-practice frontier, with attribute weights bounded below by AHP
//! priorities. A β-blend of the normalized grades gives the final ranking.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod ahp;
pub mod dea;
pub mod error;
pub mod fuzzy;
pub mod gra;
pub mod lp;
pub mod pipeline;

pub use error::{Error, ErrorKind, Result};
pub use fuzzy::{alpha_cut, interval_distance, Interval, TrapezoidalFuzzy};
