//! Closed-form radii.
//!
//! Each radius is the largest `r` for which the class's disk bound on
//! `|z| = r` stays inside the target. In every case the bound reduces to a
//! quadratic inequality `c2·x² + c1·x + c0 ≤ 0` in `x = rⁿ`, solved by
//! [`smallest_positive_root_in_rn`]. The one exception is the Janowski class
//! with `0 < B < A`, where the disk center drifts below `2√2/3` and the
//! curved branch of the inner radius takes over.

use core::f64::consts::SQRT_2;

#[allow(unused_imports)]
use num_traits::Float;

use crate::classes::{check_alpha, check_beta, check_janowski, ClassSpec, TargetSpec};
use crate::error::{check_n, Error, Result};
use crate::lemniscate::{disk_in_lemniscate, RealDisk};
use crate::search::first_failure;
use crate::SQRT2_MINUS_1;

/// Scan resolution used before bisecting for the curved-branch radius.
pub const R3_SCAN_STEPS: usize = 4096;

/// Bisection width for the curved-branch radius.
pub const R3_WIDTH: f64 = 1e-15;

/// Which closed form produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum FormulaId {
    #[cfg_attr(feature = "serde", serde(rename = "sl_radius_of_S"))]
    SlOfS,
    #[cfg_attr(feature = "serde", serde(rename = "sl_radius_of_CS"))]
    SlOfCs,
    #[cfg_attr(feature = "serde", serde(rename = "sl_radius_of_STAB_Bnonpos"))]
    SlOfJanowskiBNonpos,
    /// `0 < B < A`, vertex-tangency case `R₂ ≤ R₁`.
    #[cfg_attr(feature = "serde", serde(rename = "sl_radius_of_STAB_Bpos_R2"))]
    SlOfJanowskiBPosR2,
    /// `0 < B < A`, curved-branch case `R₂ > R₁`.
    #[cfg_attr(feature = "serde", serde(rename = "sl_radius_of_STAB_Bpos_R3"))]
    SlOfJanowskiBPosR3,
    #[cfg_attr(feature = "serde", serde(rename = "m_radius_of_S"))]
    MOfS,
    #[cfg_attr(feature = "serde", serde(rename = "m_radius_of_CS"))]
    MOfCs,
}

impl FormulaId {
    pub fn as_str(&self) -> &'static str {
        match self {
            FormulaId::SlOfS => "sl_radius_of_S",
            FormulaId::SlOfCs => "sl_radius_of_CS",
            FormulaId::SlOfJanowskiBNonpos => "sl_radius_of_STAB_Bnonpos",
            FormulaId::SlOfJanowskiBPosR2 => "sl_radius_of_STAB_Bpos_R2",
            FormulaId::SlOfJanowskiBPosR3 => "sl_radius_of_STAB_Bpos_R3",
            FormulaId::MOfS => "m_radius_of_S",
            FormulaId::MOfCs => "m_radius_of_CS",
        }
    }
}

impl core::fmt::Display for FormulaId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed radius with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RadiusResult {
    /// Radius in `(0, 1]`.
    pub value: f64,
    pub formula_id: FormulaId,
    pub class: ClassSpec,
    pub target: TargetSpec,
    /// Whether an extremal function attains the bound at `|z| = value`.
    pub sharp: bool,
    /// The unclamped root was beyond 1 and `value` was set to 1.
    pub clamped: bool,
}

/// A root of the quadratic in `x = rⁿ`, mapped back to `r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootInRn {
    /// `min(1, x^{1/n})`.
    pub radius: f64,
    /// The smallest positive `x` itself, before clamping.
    pub x: f64,
    pub clamped: bool,
}

/// Smallest positive root `x` of `c2·x² + c1·x + c0 = 0`, returned as
/// `r = x^{1/n}` clamped to 1.
///
/// Both roots are formed without cancellation: with
/// `q = −(c1 + √(c1² − 4c2c0))/2` they are `c0/q` and `q/c2`.
pub fn smallest_positive_root_in_rn(c2: f64, c1: f64, c0: f64, n: u32) -> Result<RootInRn> {
    check_n(n)?;
    if !(c1 > 0.0) {
        return Err(Error::domain("c1", "> 0", c1));
    }
    let disc = c1 * c1 - 4.0 * c2 * c0;
    if !(disc >= 0.0) {
        return Err(Error::NoPositiveRoot);
    }
    let q = -0.5 * (c1 + disc.sqrt());
    let mut x = f64::INFINITY;
    for root in [c0 / q, if c2 != 0.0 { q / c2 } else { f64::NAN }] {
        if root > 0.0 && root < x {
            x = root;
        }
    }
    if !x.is_finite() {
        return Err(Error::NoPositiveRoot);
    }
    let r = x.powf(1.0 / n as f64);
    Ok(RootInRn {
        radius: r.min(1.0),
        x,
        clamped: r > 1.0,
    })
}

fn result(
    root: RootInRn,
    formula_id: FormulaId,
    class: ClassSpec,
    target: TargetSpec,
) -> RadiusResult {
    RadiusResult {
        value: root.radius,
        formula_id,
        class,
        target,
        sharp: !root.clamped,
        clamped: root.clamped,
    }
}

/// `SLₙ`-radius of `Sₙ`:
/// `{(√2 − 1)/(n + √(n² + (√2 − 1)²))}^{1/n}`.
pub fn sl_radius_of_s(n: u32) -> Result<RadiusResult> {
    let class = ClassSpec::s(n)?;
    let c = SQRT2_MINUS_1;
    let root = smallest_positive_root_in_rn(c, 2.0 * n as f64, -c, n)?;
    Ok(result(root, FormulaId::SlOfS, class, TargetSpec::Sl))
}

/// `SLₙ`-radius of `CSₙ(α)`. The proof disk has center ≥ 1, so the
/// condition is vertex tangency `center + radius ≤ √2`:
/// `(1 − 2α + √2)x² + 2(1 + n − α)x − (√2 − 1) ≤ 0`.
pub fn sl_radius_of_cs(n: u32, alpha: f64) -> Result<RadiusResult> {
    let class = ClassSpec::close_to_starlike(n, alpha)?;
    let k = 1.0 + n as f64 - alpha;
    let root =
        smallest_positive_root_in_rn(1.0 - 2.0 * alpha + SQRT_2, 2.0 * k, -SQRT2_MINUS_1, n)?;
    Ok(result(root, FormulaId::SlOfCs, class, TargetSpec::Sl))
}

/// Coefficients of `(√2B − A)B·x² + (A − B)x − (√2 − 1)`, the vertex
/// tangency condition for the Janowski disk.
fn janowski_vertex_quadratic(a: f64, b: f64) -> (f64, f64, f64) {
    ((SQRT_2 * b - a) * b, a - b, -SQRT2_MINUS_1)
}

/// `SLₙ`-radius of `STₙ[A, B]` for `B ≤ 0`:
/// `min(1, (2(√2 − 1)/((A − B) + √((A − B)² + 4(√2B − A)B(√2 − 1))))^{1/n})`.
pub fn sl_radius_of_janowski_b_nonpos(n: u32, a: f64, b: f64) -> Result<RadiusResult> {
    let class = ClassSpec::janowski(n, a, b)?;
    if b > 0.0 {
        return Err(Error::domain("B", "≤ 0", b));
    }
    let (c2, c1, c0) = janowski_vertex_quadratic(a, b);
    let root = smallest_positive_root_in_rn(c2, c1, c0, n)?;
    Ok(result(
        root,
        FormulaId::SlOfJanowskiBNonpos,
        class,
        TargetSpec::Sl,
    ))
}

/// Which case of the `0 < B < A` radius applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum JanowskiCase {
    /// `R₂ ≤ R₁`: the disk meets the vertex first.
    Vertex,
    /// `R₂ > R₁`: the center crosses `2√2/3` first.
    Curved,
}

/// All intermediate radii of the `0 < B < A` radius.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct JanowskiBPosBreakdown {
    /// `r` at which the disk center equals `2√2/3`; may exceed 1.
    pub r1: f64,
    /// Vertex-tangency radius, clamped to 1.
    pub r2: f64,
    pub r2_clamped: bool,
    /// Largest `ρ ≤ 1` with the disk inside the lemniscate for all `r ≤ ρ`.
    pub r3: f64,
    /// Same as `r3` but from the printed polynomial inequality.
    pub r3_printed: f64,
    pub case: JanowskiCase,
}

fn check_b_pos(n: u32, a: f64, b: f64) -> Result<()> {
    check_n(n)?;
    check_janowski(a, b)?;
    if !(b > 0.0) {
        return Err(Error::domain("B", "> 0", b));
    }
    Ok(())
}

/// Janowski disk at `r ∈ [0, 1]`; `r = 1` gives the limit disk, which is
/// finite for `|B| < 1`.
fn janowski_disk_closed(n: u32, a: f64, b: f64, r: f64) -> Option<RealDisk> {
    let x = r.powi(n as i32);
    let x2 = x * x;
    let d = 1.0 - b * b * x2;
    if d <= 0.0 {
        return None;
    }
    RealDisk::new((1.0 - a * b * x2) / d, (a - b) * x / d).ok()
}

/// Geometric form of the curved-branch radius: largest `ρ ∈ (0, 1]` such
/// that the Janowski disk lies inside the lemniscate for every `r ≤ ρ`.
pub fn janowski_geometric_radius(n: u32, a: f64, b: f64) -> Result<f64> {
    check_n(n)?;
    check_janowski(a, b)?;
    let inside = |r: f64| janowski_disk_closed(n, a, b, r).is_some_and(|d| disk_in_lemniscate(&d));
    Ok(first_failure(inside, 0.0, 1.0, R3_SCAN_STEPS, R3_WIDTH))
}

/// Left-hand side of the printed curved-branch inequality
/// `(A−B)x(1−B²x²) + (1−B²x²)² − (1−ABx²)² − √((1−B²x²)² − (1−ABx²)²) ≤ 0`.
pub fn janowski_printed_r3_lhs(n: u32, a: f64, b: f64, r: f64) -> f64 {
    let x = r.powi(n as i32);
    let x2 = x * x;
    let p = 1.0 - b * b * x2;
    let q = 1.0 - a * b * x2;
    (a - b) * x * p + p * p - q * q - (p * p - q * q).sqrt()
}

pub fn janowski_b_pos_breakdown(n: u32, a: f64, b: f64) -> Result<JanowskiBPosBreakdown> {
    check_b_pos(n, a, b)?;
    let (c2, c1, c0) = janowski_vertex_quadratic(a, b);
    // no real root: the vertex condition never binds on (0, 1]
    let (r2, r2_clamped) = match smallest_positive_root_in_rn(c2, c1, c0, n) {
        Ok(root) => (root.radius, root.clamped),
        Err(Error::NoPositiveRoot) => (1.0, true),
        Err(e) => return Err(e),
    };
    // (2√2 − 3) < 0, so R₁ is real iff (2√2B − 3A)B < 0, which 0 < B < A ≤ 1 forces
    let denom = (2.0 * SQRT_2 * b - 3.0 * a) * b;
    let r1 = if denom < 0.0 {
        ((2.0 * SQRT_2 - 3.0) / denom).powf(1.0 / (2.0 * n as f64))
    } else {
        f64::INFINITY
    };
    let r3 = janowski_geometric_radius(n, a, b)?;
    let printed_ok = |r: f64| janowski_printed_r3_lhs(n, a, b, r) <= 0.0;
    let r3_printed = first_failure(printed_ok, 0.0, 1.0, R3_SCAN_STEPS, R3_WIDTH);
    let case = if r2 <= r1 {
        JanowskiCase::Vertex
    } else {
        JanowskiCase::Curved
    };
    Ok(JanowskiBPosBreakdown {
        r1,
        r2,
        r2_clamped,
        r3,
        r3_printed,
        case,
    })
}

/// `SLₙ`-radius of `STₙ[A, B]` for `0 < B < A ≤ 1`: `R₂` if `R₂ ≤ R₁`,
/// else the curved-branch radius `R₃` (computed geometrically).
pub fn sl_radius_of_janowski_b_pos(n: u32, a: f64, b: f64) -> Result<RadiusResult> {
    let parts = janowski_b_pos_breakdown(n, a, b)?;
    let class = ClassSpec::Janowski { n, a, b };
    let (value, clamped, formula_id) = match parts.case {
        JanowskiCase::Vertex => (parts.r2, parts.r2_clamped, FormulaId::SlOfJanowskiBPosR2),
        JanowskiCase::Curved => (parts.r3, parts.r3 >= 1.0, FormulaId::SlOfJanowskiBPosR3),
    };
    Ok(RadiusResult {
        value,
        formula_id,
        class,
        target: TargetSpec::Sl,
        sharp: !clamped,
        clamped,
    })
}

/// `SLₙ`-radius of `STₙ[A, B]`, dispatching on the sign of `B`.
pub fn sl_radius_of_janowski(n: u32, a: f64, b: f64) -> Result<RadiusResult> {
    if b > 0.0 {
        sl_radius_of_janowski_b_pos(n, a, b)
    } else {
        sl_radius_of_janowski_b_nonpos(n, a, b)
    }
}

/// `Mₙ(β)`-radius of `Sₙ`: `[(β − 1)/(n + √(n² + (β − 1)²))]^{1/n}`.
pub fn m_radius_of_s(n: u32, beta: f64) -> Result<RadiusResult> {
    let class = ClassSpec::s(n)?;
    let target = TargetSpec::m(beta)?;
    let root = smallest_positive_root_in_rn(beta - 1.0, 2.0 * n as f64, 1.0 - beta, n)?;
    Ok(result(root, FormulaId::MOfS, class, target))
}

/// `Mₙ(β)`-radius of `CSₙ(α)`: the `1/n`-th power of
/// `(β − 1)/((1 + n − α) + √((1 + n − α)² + (β − 1)(1 + β − 2α)))`.
pub fn m_radius_of_cs(n: u32, alpha: f64, beta: f64) -> Result<RadiusResult> {
    let class = ClassSpec::close_to_starlike(n, alpha)?;
    let target = TargetSpec::m(beta)?;
    let k = 1.0 + n as f64 - alpha;
    let root = smallest_positive_root_in_rn(1.0 - 2.0 * alpha + beta, 2.0 * k, 1.0 - beta, n)?;
    Ok(result(root, FormulaId::MOfCs, class, target))
}

/// The `Mₙ(β)`-radius expression for `CSₙ(α)` without the `1/n` power.
/// Agrees with [`m_radius_of_cs`] only for `n = 1`.
pub fn m_radius_of_cs_printed(n: u32, alpha: f64, beta: f64) -> Result<f64> {
    check_n(n)?;
    check_alpha(alpha)?;
    check_beta(beta)?;
    let k = 1.0 + n as f64 - alpha;
    Ok((beta - 1.0) / (k + (k * k + (beta - 1.0) * (1.0 + beta - 2.0 * alpha)).sqrt()))
}

/// Radius for any covered (class, target) pair.
pub fn radius_for(class: &ClassSpec, target: &TargetSpec) -> Result<RadiusResult> {
    class.validate()?;
    target.validate()?;
    match (*class, *target) {
        (ClassSpec::S { n }, TargetSpec::Sl) => sl_radius_of_s(n),
        (ClassSpec::CloseToStarlike { n, alpha }, TargetSpec::Sl) => sl_radius_of_cs(n, alpha),
        (ClassSpec::Janowski { n, a, b }, TargetSpec::Sl) => sl_radius_of_janowski(n, a, b),
        (ClassSpec::S { n }, TargetSpec::M { beta }) => m_radius_of_s(n, beta),
        (ClassSpec::CloseToStarlike { n, alpha }, TargetSpec::M { beta }) => {
            m_radius_of_cs(n, alpha, beta)
        }
        (class, target) => Err(Error::Uncovered {
            class: class.name(),
            target: target.name(),
        }),
    }
}

/// How an inclusion verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum ConditionUsed {
    /// Printed condition (i) holds and agrees with the geometry.
    CondI,
    /// Printed condition (ii) holds and agrees with the geometry.
    CondIi,
    /// `B = −1` (unbounded limit disk), or `B ≤ 0` with `1 + A < √2(1 + B)`.
    Shortcut,
    /// Decided by the limit disk alone.
    Oracle,
}

/// Whether the whole class `STₙ[A, B]` lies in `SLₙ`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InclusionVerdict {
    /// Geometric verdict on the `r → 1⁻` disk; this is the contract.
    pub included: bool,
    pub condition_used: ConditionUsed,
    /// The printed conditions (i) ∨ (ii), evaluated verbatim.
    pub literal_condition_result: bool,
    pub literal_i: bool,
    pub literal_ii: bool,
    /// Center `(1 − AB)/(1 − B²)`, radius `(A − B)/(1 − B²)`; `None` for `B = −1`.
    pub limit_disk: Option<RealDisk>,
}

impl InclusionVerdict {
    /// The printed conditions disagree with the geometric verdict.
    pub fn literal_disagrees(&self) -> bool {
        self.literal_condition_result != self.included
    }
}

/// Printed condition (i):
/// `1 + A ≤ √2(1 + B)` and `2√2(1 − B²) ≤ 3(1 − AB) < 3√2(1 − B²)`.
pub fn inclusion_condition_i(a: f64, b: f64) -> bool {
    let p = 1.0 - b * b;
    let q = 1.0 - a * b;
    1.0 + a <= SQRT_2 * (1.0 + b) && 2.0 * SQRT_2 * p <= 3.0 * q && 3.0 * q < 3.0 * SQRT_2 * p
}

/// Printed condition (ii), square-root argument `(1 − B²) − (1 − AB)²`
/// taken as written. A negative argument makes the condition false.
pub fn inclusion_condition_ii(a: f64, b: f64) -> bool {
    let p = 1.0 - b * b;
    let q = 1.0 - a * b;
    let arg = p - q * q;
    if arg < 0.0 {
        return false;
    }
    (a - b) * p + p * p <= p * arg.sqrt() + q * q && 2.0 * SQRT_2 * p >= 3.0 * q
}

pub fn sl_inclusion_stab(a: f64, b: f64) -> Result<InclusionVerdict> {
    check_janowski(a, b)?;
    let p = 1.0 - b * b;
    if p <= 0.0 {
        // B = −1: the disks blow up as r → 1, and SL functions are bounded
        return Ok(InclusionVerdict {
            included: false,
            condition_used: ConditionUsed::Shortcut,
            literal_condition_result: false,
            literal_i: false,
            literal_ii: false,
            limit_disk: None,
        });
    }
    let disk = RealDisk::new((1.0 - a * b) / p, (a - b) / p)?;
    let included = disk_in_lemniscate(&disk);
    let literal_i = inclusion_condition_i(a, b);
    let literal_ii = inclusion_condition_ii(a, b);
    let shortcut = b <= 0.0 && 1.0 + a < SQRT_2 * (1.0 + b);
    let condition_used = if included && shortcut {
        ConditionUsed::Shortcut
    } else if included && literal_i {
        ConditionUsed::CondI
    } else if included && literal_ii {
        ConditionUsed::CondIi
    } else {
        ConditionUsed::Oracle
    };
    Ok(InclusionVerdict {
        included,
        condition_used,
        literal_condition_result: literal_i || literal_ii,
        literal_i,
        literal_ii,
        limit_disk: Some(disk),
    })
}
