//! Geometry of the right half of the lemniscate of Bernoulli.
//!
//! The region is `{w : |w² − 1| < 1}`; its boundary in the right half-plane is
//! the loop `(x² + y²)² = 2(x² − y²)`, `x ≥ 0`, which passes through the
//! origin and has its vertex at `√2`.
//!
//! For a point `a` on the positive real axis two radii are known in closed
//! form: the largest disk about `a` that fits inside the loop ([`inner_radius`])
//! and the smallest disk about `a` that contains it ([`outer_radius`]).

use core::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, SQRT_2};

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::search::golden_section_min;
use crate::INNER_BRANCH;

/// Tolerance used when checking the implicit lemniscate equation.
pub const IMPLICIT_TOL: f64 = 1e-12;

/// Default number of grid points for [`extremal_distance_oracle`].
pub const ORACLE_GRID: usize = 10_001;

/// Width to which the oracle refines its best bracket.
pub const ORACLE_WIDTH: f64 = 1e-12;

/// A disk `{w : |w − center| < radius}` centered on the nonnegative real axis.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RealDisk {
    center: f64,
    radius: f64,
}

impl RealDisk {
    pub fn new(center: f64, radius: f64) -> Result<Self> {
        if !(center.is_finite() && center >= 0.0) {
            return Err(Error::domain("disk center", "finite and ≥ 0", center));
        }
        if !(radius.is_finite() && radius >= 0.0) {
            return Err(Error::domain("disk radius", "finite and ≥ 0", radius));
        }
        Ok(RealDisk { center, radius })
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Rightmost real point `center + radius`.
    pub fn right_end(&self) -> f64 {
        self.center + self.radius
    }

    /// Point of the bounding circle at angle `theta`.
    pub fn boundary_at(&self, theta: f64) -> Complex64 {
        Complex64::new(
            self.center + self.radius * theta.cos(),
            self.radius * theta.sin(),
        )
    }
}

/// A point on the right loop together with its parameter `t ∈ [−π/2, π/2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundaryPoint {
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

impl BoundaryPoint {
    /// Residual of `(x² + y²)² − 2(x² − y²)`.
    pub fn implicit_residual(&self) -> f64 {
        let (x2, y2) = (self.x * self.x, self.y * self.y);
        (x2 + y2) * (x2 + y2) - 2.0 * (x2 - y2)
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }
}

/// Strict membership `|w² − 1| < 1`.
pub fn in_lemniscate(w: Complex64) -> bool {
    lemniscate_level(w) < 1.0
}

/// `|w² − 1|`; the region is the sublevel set below 1.
pub fn lemniscate_level(w: Complex64) -> f64 {
    (w * w - 1.0).norm()
}

fn check_t(t: f64) -> Result<()> {
    if !(-FRAC_PI_2..=FRAC_PI_2).contains(&t) {
        return Err(Error::domain("t", "in [-π/2, π/2]", t));
    }
    Ok(())
}

/// `x(t) = √2 cos t / (1 + sin²t)`, `y(t) = √2 sin t cos t / (1 + sin²t)`.
pub fn boundary_point(t: f64) -> Result<BoundaryPoint> {
    check_t(t)?;
    let (s, c) = t.sin_cos();
    // cos(±π/2) is ~6e-17 in floating point; pin the endpoints to the origin
    let c = if t.abs() == FRAC_PI_2 { 0.0 } else { c };
    let d = 1.0 + s * s;
    Ok(BoundaryPoint {
        t,
        x: SQRT_2 * c / d,
        y: SQRT_2 * s * c / d,
    })
}

/// Squared distance from `(a, 0)` to the boundary point with parameter `t`:
/// `a² + 2(cos²t − √2 a cos t) / (1 + sin²t)`.
pub fn squared_distance(a: f64, t: f64) -> f64 {
    let (s, c) = t.sin_cos();
    let z = a * a + 2.0 * (c * c - SQRT_2 * a * c) / (1.0 + s * s);
    z.max(0.0)
}

/// Derivative of [`squared_distance`] in `t`.
pub fn squared_distance_derivative(a: f64, t: f64) -> f64 {
    let (s, c) = t.sin_cos();
    let d = 1.0 + s * s;
    2.0 * (-4.0 * c + SQRT_2 * a * (2.0 + c * c)) * s / (d * d)
}

/// `cos t₀ = √2(1 − √(1 − a²)) / a`, the interior critical point of the
/// squared distance. `None` when it does not exist (`a > 2√2/3`).
///
/// Diagnostic only: nothing in the solvers or oracles depends on it.
pub fn critical_cos_t0(a: f64) -> Option<f64> {
    if !(a > 0.0 && a <= 1.0) {
        return None;
    }
    let c = SQRT_2 * (1.0 - (1.0 - a * a).sqrt()) / a;
    // at the branch point a = 2√2/3 rounding can push c a hair above 1
    (c <= 1.0 + 1e-12).then_some(c.min(1.0))
}

/// Largest `r_a` with `{|w − a| < r_a} ⊆ {|w² − 1| < 1}`, for `0 < a < √2`.
pub fn inner_radius(a: f64) -> Result<f64> {
    if !(a > 0.0 && a < SQRT_2) {
        return Err(Error::domain("a", "in (0, √2)", a));
    }
    if a <= INNER_BRANCH {
        let q = 1.0 - a * a;
        Ok((q.sqrt() - q).sqrt())
    } else {
        Ok(SQRT_2 - a)
    }
}

/// Smallest `R_a` with `{|w² − 1| < 1} ⊆ {|w − a| < R_a}`, for `a > 0`.
pub fn outer_radius(a: f64) -> Result<f64> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::domain("a", "> 0", a));
    }
    Ok(if a <= FRAC_1_SQRT_2 { SQRT_2 - a } else { a })
}

/// Whether the disk lies in the lemniscate region.
///
/// Tangency (`radius == inner_radius(center)`) is accepted. Centers outside
/// `(0, √2)` have no inner disk and are rejected, degenerate disks included.
pub fn disk_in_lemniscate(disk: &RealDisk) -> bool {
    match inner_radius(disk.center) {
        Ok(r_a) => disk.radius <= r_a,
        Err(_) => false,
    }
}

/// Which extremum of the distance to the loop is wanted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    Min,
    Max,
}

/// Extremal distance from `(a, 0)` to the loop by brute force: a uniform
/// `grid_size`-point scan of `t ∈ [−π/2, π/2]`, then golden-section
/// refinement on the bracket around the best grid point.
pub fn extremal_distance_oracle(a: f64, mode: Extremum, grid_size: usize) -> Result<f64> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::domain("a", "> 0", a));
    }
    if grid_size < 1000 {
        return Err(Error::domain("grid_size", "≥ 1000", grid_size as f64));
    }
    let sign = match mode {
        Extremum::Min => 1.0,
        Extremum::Max => -1.0,
    };
    let objective = |t: f64| sign * squared_distance(a, t);
    let h = core::f64::consts::PI / (grid_size - 1) as f64;
    let t_at = |k: usize| (-FRAC_PI_2 + h * k as f64).min(FRAC_PI_2);

    let mut best_k = 0;
    let mut best = objective(t_at(0));
    for k in 1..grid_size {
        let v = objective(t_at(k));
        if v < best {
            best = v;
            best_k = k;
        }
    }
    let lo = t_at(best_k.saturating_sub(1));
    let hi = t_at((best_k + 1).min(grid_size - 1));
    let (_, refined) = golden_section_min(objective, lo, hi, ORACLE_WIDTH);
    Ok((sign * refined.min(best)).max(0.0).sqrt())
}
