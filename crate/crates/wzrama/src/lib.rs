//! Symbolic summation and arbitrary-precision verification of
//! Ramanujan-type series for 1/pi.
//!
//! The crate certifies telescoping (WZ-style) identities for proper
//! hypergeometric sums, solves for complementary linear weights, determines
//! closed-form constants at special parameter values, and verifies every
//! series and constant numerically to configurable precision.
//!
//! Layered bottom-up:
//! - [`exact`]: rationals and quadratic surds (the coefficient field)
//! - [`poly`]: sparse multivariate polynomials and rational functions,
//!   with the gcd/resultant/dispersion machinery telescoping needs
//! - [`hyperterm`]: proper hypergeometric summands and their shift quotients
//! - [`wz`]: Gosper summation, creative telescoping, certification,
//!   complement solving, constant determination
//! - [`numerics`]: big-float kernel, Gamma, series summation with tail
//!   bounds, alternating-series acceleration, formal-series transformation
//!   checks
//! - [`catalog`]: the identity catalog as data, the verification harness,
//!   and report types

pub mod catalog;
pub mod exact;
pub mod hyperterm;
pub mod numerics;
pub mod poly;
pub mod wz;
