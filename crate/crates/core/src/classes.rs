//! Function classes, their disk bounds on `|z| = r`, the target regions,
//! and the extremal maps `w(z) = zf'(z)/f(z)` that certify sharpness.
//!
//! All classes are subsets of the normalized functions `z + a_{n+1}z^{n+1} + …`,
//! so every bound depends on `r` only through `x = rⁿ`.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{check_n, check_unit_r, Error, Result};
use crate::lemniscate::{lemniscate_level, RealDisk};

/// A function class together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind"))]
pub enum ClassSpec {
    /// `f(z)/z` has positive real part.
    #[cfg_attr(feature = "serde", serde(rename = "s"))]
    S { n: u32 },
    /// Close-to-starlike of type `α`: `f/g` has positive real part for some
    /// `g` starlike of order `α`.
    #[cfg_attr(feature = "serde", serde(rename = "cs"))]
    CloseToStarlike { n: u32, alpha: f64 },
    /// Janowski starlike: `zf'/f ≺ (1 + Az)/(1 + Bz)`.
    #[cfg_attr(feature = "serde", serde(rename = "st"))]
    Janowski {
        n: u32,
        #[cfg_attr(feature = "serde", serde(rename = "A"))]
        a: f64,
        #[cfg_attr(feature = "serde", serde(rename = "B"))]
        b: f64,
    },
    /// `Re(zf'/f) < β`.
    #[cfg_attr(feature = "serde", serde(rename = "m"))]
    M { n: u32, beta: f64 },
    /// `|(zf'/f)² − 1| < 1`.
    #[cfg_attr(feature = "serde", serde(rename = "sl"))]
    Sl { n: u32 },
}

impl ClassSpec {
    pub fn s(n: u32) -> Result<Self> {
        let c = ClassSpec::S { n };
        c.validate()?;
        Ok(c)
    }

    pub fn close_to_starlike(n: u32, alpha: f64) -> Result<Self> {
        let c = ClassSpec::CloseToStarlike { n, alpha };
        c.validate()?;
        Ok(c)
    }

    pub fn janowski(n: u32, a: f64, b: f64) -> Result<Self> {
        let c = ClassSpec::Janowski { n, a, b };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        check_n(self.n())?;
        match *self {
            ClassSpec::S { .. } | ClassSpec::Sl { .. } => Ok(()),
            ClassSpec::CloseToStarlike { alpha, .. } => check_alpha(alpha),
            ClassSpec::Janowski { a, b, .. } => check_janowski(a, b),
            ClassSpec::M { beta, .. } => check_beta(beta),
        }
    }

    pub fn n(&self) -> u32 {
        match *self {
            ClassSpec::S { n }
            | ClassSpec::CloseToStarlike { n, .. }
            | ClassSpec::Janowski { n, .. }
            | ClassSpec::M { n, .. }
            | ClassSpec::Sl { n } => n,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ClassSpec::S { .. } => "s",
            ClassSpec::CloseToStarlike { .. } => "cs",
            ClassSpec::Janowski { .. } => "st",
            ClassSpec::M { .. } => "m",
            ClassSpec::Sl { .. } => "sl",
        }
    }

    /// The disk containing `zf'(z)/f(z)` on `|z| = r` for every member.
    pub fn proof_disk(&self, r: f64) -> Result<RealDisk> {
        match *self {
            ClassSpec::S { n } => s_class_disk(n, r),
            ClassSpec::CloseToStarlike { n, alpha } => cs_disk(n, alpha, r),
            ClassSpec::Janowski { n, a, b } => janowski_disk(n, a, b, r),
            ClassSpec::M { .. } | ClassSpec::Sl { .. } => Err(Error::UnsupportedClass(self.name())),
        }
    }
}

/// The region `zf'/f` must stay in.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "lowercase"))]
pub enum TargetSpec {
    /// Right half of the lemniscate, `|w² − 1| < 1`.
    Sl,
    /// Half-plane `Re w < β`, `β > 1`.
    M { beta: f64 },
}

impl TargetSpec {
    pub fn m(beta: f64) -> Result<Self> {
        check_beta(beta)?;
        Ok(TargetSpec::M { beta })
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            TargetSpec::Sl => Ok(()),
            TargetSpec::M { beta } => check_beta(beta),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TargetSpec::Sl => "sl",
            TargetSpec::M { .. } => "m",
        }
    }

    /// Signed violation: negative strictly inside the region, zero on its
    /// boundary, `+∞` for non-finite `w` (a pole counts as leaving the region).
    pub fn violation(&self, w: Complex64) -> f64 {
        if !(w.re.is_finite() && w.im.is_finite()) {
            return f64::INFINITY;
        }
        match *self {
            TargetSpec::Sl => lemniscate_level(w) - 1.0,
            TargetSpec::M { beta } => w.re - beta,
        }
    }
}

pub fn in_target(w: Complex64, target: &TargetSpec) -> bool {
    target.violation(w) < 0.0
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::domain("alpha", "in [0, 1)", alpha));
    }
    Ok(())
}

pub(crate) fn check_beta(beta: f64) -> Result<()> {
    if !(beta > 1.0 && beta.is_finite()) {
        return Err(Error::domain("beta", "> 1", beta));
    }
    Ok(())
}

pub(crate) fn check_janowski(a: f64, b: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&b) {
        return Err(Error::domain("B", "in [-1, 1]", b));
    }
    if !(a <= 1.0) {
        return Err(Error::domain("A", "≤ 1", a));
    }
    if !(b < a) {
        return Err(Error::domain("A", "> B", a));
    }
    Ok(())
}

/// `|zp'(z)/p(z)| ≤ 2nrⁿ/(1 − r²ⁿ)` for `p` with positive real part.
pub fn macgregor_bound(n: u32, r: f64) -> Result<f64> {
    check_n(n)?;
    check_unit_r(r)?;
    let x = r.powi(n as i32);
    Ok(2.0 * n as f64 * x / (1.0 - x * x))
}

/// Disk of values of `p ≺ (1 + Az)/(1 + Bz)` on `|z| = r`:
/// center `(1 − ABr²ⁿ)/(1 − B²r²ⁿ)`, radius `(A − B)rⁿ/(1 − B²r²ⁿ)`.
pub fn janowski_disk(n: u32, a: f64, b: f64, r: f64) -> Result<RealDisk> {
    check_n(n)?;
    check_janowski(a, b)?;
    check_unit_r(r)?;
    let x = r.powi(n as i32);
    let x2 = x * x;
    let d = 1.0 - b * b * x2;
    RealDisk::new((1.0 - a * b * x2) / d, (a - b) * x / d)
}

/// Disk of `zf'/f` for `f ∈ CSₙ(α)`: the order-`α` disk of `zg'/g` widened
/// by the positive-real-part bound of `f/g`.
pub fn cs_disk(n: u32, alpha: f64, r: f64) -> Result<RealDisk> {
    check_n(n)?;
    check_alpha(alpha)?;
    check_unit_r(r)?;
    let x = r.powi(n as i32);
    let x2 = x * x;
    let d = 1.0 - x2;
    RealDisk::new(
        (1.0 + (1.0 - 2.0 * alpha) * x2) / d,
        2.0 * (1.0 + n as f64 - alpha) * x / d,
    )
}

/// Disk of `zf'/f` for `f ∈ Sₙ`: center 1, radius [`macgregor_bound`].
pub fn s_class_disk(n: u32, r: f64) -> Result<RealDisk> {
    RealDisk::new(1.0, macgregor_bound(n, r)?)
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Shape {
    S { n: u32 },
    Cs { n: u32, alpha: f64 },
    Janowski { n: u32, a: f64, b: f64 },
}

/// Closed form of `zf'(z)/f(z)` for the extremal member of a class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalMap {
    class: ClassSpec,
    shape: Shape,
}

impl ExtremalMap {
    pub fn class(&self) -> &ClassSpec {
        &self.class
    }

    /// Evaluate `w(z)`. Returns non-finite values at poles.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match self.shape {
            // f = z(1 + zⁿ)/(1 − zⁿ)
            Shape::S { n } => {
                let zn = z.powu(n);
                one + zn * (2.0 * n as f64) / (one - zn * zn)
            }
            // f = z(1 + zⁿ)/(1 − zⁿ)^{(n+2−2α)/n}
            Shape::Cs { n, alpha } => {
                let zn = z.powu(n);
                let k = 1.0 + n as f64 - alpha;
                (one + zn * (2.0 * k) + zn * zn * (1.0 - 2.0 * alpha)) / (one - zn * zn)
            }
            // f = z(1 + Bzⁿ)^{(A−B)/(nB)}, or z·exp(Azⁿ/n) when B = 0
            Shape::Janowski { n, a, b } => {
                let zn = z.powu(n);
                if b == 0.0 {
                    one + zn * a
                } else {
                    (one + zn * a) / (one + zn * b)
                }
            }
        }
    }
}

pub fn extremal_map(class: &ClassSpec) -> Result<ExtremalMap> {
    class.validate()?;
    let shape = match *class {
        ClassSpec::S { n } => Shape::S { n },
        ClassSpec::CloseToStarlike { n, alpha } => Shape::Cs { n, alpha },
        ClassSpec::Janowski { n, a, b } => Shape::Janowski { n, a, b },
        ClassSpec::M { .. } | ClassSpec::Sl { .. } => {
            return Err(Error::UnsupportedClass(class.name()))
        }
    };
    Ok(ExtremalMap {
        class: *class,
        shape,
    })
}
