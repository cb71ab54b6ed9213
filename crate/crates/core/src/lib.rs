//! Data-driven stochastic model predictive control for linear time-invariant
//! systems with additive process noise.
//!
//! The library combines two ingredients:
//!
//! * behavioral (Hankel-matrix) system representations built from recorded
//!   input/state data, and
//! * polynomial chaos expansions (PCE) that propagate the distributions of
//!   states, inputs and noise through the dynamics as deterministic
//!   coefficient trajectories.
//!
//! Together these allow posing stochastic optimal control problems with
//! chance constraints as second-order cone programs whose equality blocks are
//! Hankel matrices of past data instead of explicit `(A, B)` matrices. Past
//! process-noise realizations, which the Hankel blocks require, are estimated
//! from input/state records alone.
//!
//! Module map:
//!
//! * [`pce`] — orthogonal polynomial bases, PCE coefficient containers,
//!   moments and germ sampling
//! * [`lti`] — realization and coefficient dynamics, excitation data
//!   generation
//! * [`hankel`] — Hankel matrices, persistency of excitation, behavior
//!   solvers and column-space tests
//! * [`estimation`] — reconstruction of past noise realizations from data
//! * [`ocp`] — assembly of the stochastic OCPs as conic programs
//! * [`solver`] — conic solve with independent feasibility certification
//! * [`mpc`] — receding-horizon closed loop and bookkeeping
//! * [`scenario`] — named benchmark scenarios and configuration
//! * [`acceptance`] — end-to-end verification checks used by the test suite
//!   and the `verify` CLI command

pub mod acceptance;
pub mod error;
pub mod estimation;
pub mod hankel;
pub mod linalg;
pub mod lti;
pub mod mpc;
pub mod ocp;
pub mod pce;
pub mod scenario;
pub mod solver;

pub use error::{Error, Result};
