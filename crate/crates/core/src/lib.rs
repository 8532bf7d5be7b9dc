//! Radii of starlikeness associated with the right half of the lemniscate of
//! Bernoulli `|w² − 1| < 1` and with the half-plane `Re w < β`.
//!
//! The crate is organised around a single geometric object, the [`RealDisk`]
//! `{w : |w − a| < ρ}` with real center `a ≥ 0`. Every class handled here has
//! a disk bound for `zf'(z)/f(z)` on `|z| = r`, and every radius is the
//! largest `r` for which that disk stays inside the target region.
//!
//! * [`lemniscate`]: membership, boundary parametrisation, and the inner and
//!   outer disk radii `r_a` / `R_a` about a point `a` on the real axis.
//! * [`classes`]: class descriptors, the disk bounds, target predicates and
//!   the closed-form extremal maps `w(z) = zf'(z)/f(z)`.
//! * [`radius`]: the closed-form radius for every (class, target) pair.
//! * [`oracle`]: brute-force numerical counterparts used to verify the
//!   closed forms and their sharpness.
//!
//! The crate is `no_std` and only needs `alloc` for the audit report list.
//!
//! ```
//! use lemni_core::radius::sl_radius_of_janowski_b_nonpos;
//!
//! let r = sl_radius_of_janowski_b_nonpos(1, 1.0, -1.0).unwrap();
//! assert!((r.value - (3.0 - 2.0 * core::f64::consts::SQRT_2)).abs() < 1e-15);
//! ```
#![no_std]
#![warn(missing_debug_implementations)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod classes;
mod error;
pub mod lemniscate;
pub mod oracle;
pub mod radius;
pub mod search;

pub use classes::{ClassSpec, ExtremalMap, TargetSpec};
pub use error::{Error, Result};
pub use lemniscate::{BoundaryPoint, RealDisk};
pub use oracle::{GridSpec, VerificationReport};
pub use radius::{FormulaId, InclusionVerdict, RadiusResult};

/// √2 − 1, the distance from 1 to the vertex `√2` of the lemniscate.
pub const SQRT2_MINUS_1: f64 = core::f64::consts::SQRT_2 - 1.0;

/// 2√2/3, the branch point of the inner radius `r_a`.
pub const INNER_BRANCH: f64 = 2.0 * core::f64::consts::SQRT_2 / 3.0;
