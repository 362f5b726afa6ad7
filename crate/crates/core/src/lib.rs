//! Fractional calculus kernels and a gauge-invariant fractional electromagnetic
//! field theory on uniform lattices.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs; IO, file formats and the command-line front end
//! live in the `fracfield` companion crate.
//!
//! Module map:
//!
//! * [`fracops`]: Grünwald-Letnikov discretisations of the left and right
//!   Riemann-Liouville derivatives, the left-right operator and its partial
//!   form on 4-D grids, plus closed-form oracles.
//! * [`grid`]: the lattice and scalar sample arrays.
//! * [`fields`]: four-potentials, field-strength tensors, gauge transforms and
//!   the fractional Lorenz condition.
//! * [`maxwell`]: fractional grad/div/curl and residuals of both Maxwell pairs.
//! * [`variational`]: the discrete action, its Euler-Lagrange residual and a
//!   Gâteaux-variation check.
//! * [`specwave`]: the 1+1-D spectral solver for the fractional wave equation.
#![no_std]
#![forbid(unsafe_code)]
// `!(x > a)` also rejects NaN, which is the point of those guards.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

mod error;
pub mod fields;
pub mod fracops;
pub mod grid;
pub mod maxwell;
pub mod special;
pub mod specwave;
pub mod variational;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Number of space-time axes. Axis 0 is `x0 = c t`, axes 1..=3 are `x, y, z`.
pub const AXES: usize = 4;
