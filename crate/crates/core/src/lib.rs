//! Numerical companion to the lemniscate/squircle arc-length and area
//! identities: quadrature and root-finding kernels, the two curves, the
//! lemniscatic and squigonometric functions, and a verification engine that
//! checks every identity as a residual over a grid.

// Reference values and Lanczos coefficients are quoted to full published
// precision, and `!(x > 0.0)` is used on purpose to reject NaN.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod curves;
pub mod error;
pub mod lemnifuncs;
pub mod numerics;
pub mod relations;

pub use error::{Error, Result};
