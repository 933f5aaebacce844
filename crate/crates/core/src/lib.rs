//! Interval-arithmetic verification of the inequalities behind the optimal
//! partition of the sphere into twelve equal areas.

pub mod catalog;
pub mod error;
pub mod expr;
pub mod functional;
pub mod geometry;
pub mod interval;
pub mod jet;
pub mod oracle;
pub mod prover;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use interval::{dec, Interval, IntervalBox};
pub use jet::Jet2;
pub use scalar::Scalar;
