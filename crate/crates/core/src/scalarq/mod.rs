//! Exact scalars and quaternions.
//!
//! Every value here is immutable and canonical, so derived `PartialEq` is
//! exact mathematical equality.

mod quaternion;
mod rational;

pub use quaternion::Quaternion;
pub use rational::Rational;
