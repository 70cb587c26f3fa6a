//! Exact operator calculus for the real quaternion algebra.
//!
//! R-linear endomorphisms of `H` are 4×4 rational matrices ([`Operator4`]).
//! On top of that the crate provides the catalog of linear and antilinear
//! automorphisms ([`autos`]), exact recovery of inner conjugators, and the
//! unique expansion of any endomorphism against a frame of four base
//! operators with quaternion coefficients ([`frames`]).
//!
//! All arithmetic is exact; floating point appears only in display helpers.

pub mod autos;
pub mod cli;
pub mod elim;
pub mod error;
pub mod frames;
pub mod linop;
pub mod scalarq;

pub use autos::{AutoKind, Conjugator};
pub use error::{Error, Result};
pub use frames::{Expansion, Frame, FrameTerm, RankReport, Side};
pub use linop::Operator4;
pub use scalarq::{Quaternion, Rational};
