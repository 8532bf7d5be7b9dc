//! Brute-force verification of the closed-form radii.
//!
//! The oracle never looks at the disk bounds. It evaluates the extremal map
//! `w(z)` on circles `|z| = r`, asks the target predicate directly, and
//! bisects on `r`. Agreement with the closed form checks both the algebra
//! and the claim that the extremal function is the worst case.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Euclid;
#[allow(unused_imports)]
use num_traits::Float;

use crate::classes::{extremal_map, ClassSpec, ExtremalMap, TargetSpec};
use crate::error::{Error, Result};
use crate::radius::{m_radius_of_cs_printed, radius_for, FormulaId, RadiusResult};
use crate::search::{bisect_last_true, golden_section_max, golden_section_min};

/// Minimum and default number of angles on each test circle.
pub const ANGULAR_SAMPLES: usize = 720;

/// Width of the golden-section refinement around the worst sampled angle.
pub const ANGLE_WIDTH: f64 = 1e-12;

/// Default pass tolerance of an audit.
pub const DEFAULT_TOLERANCE: f64 = 1e-6;

/// Worst point of a circle `|z| = r` with respect to a target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularExtreme {
    pub theta: f64,
    pub value: f64,
}

fn check_samples(samples: usize) -> Result<()> {
    if samples < ANGULAR_SAMPLES {
        return Err(Error::domain("angular_samples", "≥ 720", samples as f64));
    }
    Ok(())
}

/// Maximum over `|z| = r` of the target violation of `w(z)`: a uniform
/// angular scan followed by golden-section refinement around the worst angle.
pub fn max_violation(
    map: &ExtremalMap,
    target: &TargetSpec,
    r: f64,
    samples: usize,
) -> AngularExtreme {
    let violation = |theta: f64| target.violation(map.eval(Complex64::from_polar(r, theta)));
    let h = 2.0 * PI / samples as f64;
    let mut worst = AngularExtreme {
        theta: 0.0,
        value: f64::NEG_INFINITY,
    };
    for k in 0..samples {
        let theta = h * k as f64;
        let v = violation(theta);
        if v > worst.value {
            worst = AngularExtreme { theta, value: v };
        }
        if v == f64::INFINITY {
            return worst;
        }
    }
    let (theta, value) =
        golden_section_max(violation, worst.theta - h, worst.theta + h, ANGLE_WIDTH);
    if value > worst.value {
        worst = AngularExtreme {
            theta: Euclid::rem_euclid(&theta, &(2.0 * PI)),
            value,
        };
    }
    worst
}

/// Largest `r` such that `w(r·e^{iθ})` is in the target for every sampled
/// `θ`, located by bisection on `(0, 1)` to width `tol`.
pub fn empirical_radius(
    map: &ExtremalMap,
    target: &TargetSpec,
    angular_samples: usize,
    tol: f64,
) -> Result<f64> {
    check_samples(angular_samples)?;
    if !(1e-14..=1e-4).contains(&tol) {
        return Err(Error::domain("tol", "in [1e-14, 1e-4]", tol));
    }
    target.validate()?;
    let inside = |r: f64| max_violation(map, target, r, angular_samples).value < 0.0;
    Ok(bisect_last_true(inside, 0.0, 1.0, tol))
}

/// Smallest distance-to-boundary residual on `|z| = radius`:
/// `||w² − 1| − 1|` for the lemniscate, `|Re w − β|` for the half-plane.
/// Near zero when the circle's image touches the target boundary.
pub fn sharpness_check(
    map: &ExtremalMap,
    target: &TargetSpec,
    radius: f64,
    tol: f64,
) -> Result<f64> {
    if !(radius > 0.0 && radius < 1.0) {
        return Err(Error::domain("R", "in (0, 1)", radius));
    }
    let residual = |theta: f64| {
        target
            .violation(map.eval(Complex64::from_polar(radius, theta)))
            .abs()
    };
    let samples = ANGULAR_SAMPLES;
    let h = 2.0 * PI / samples as f64;
    let (mut best_theta, mut best) = (0.0, f64::INFINITY);
    for k in 0..samples {
        let theta = h * k as f64;
        let v = residual(theta);
        if v < best {
            best = v;
            best_theta = theta;
        }
    }
    let width = tol.clamp(1e-15, h);
    let (_, refined) = golden_section_min(residual, best_theta - h, best_theta + h, width);
    Ok(best.min(refined))
}

/// One closed form checked against its oracle.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VerificationReport {
    pub formula_id: FormulaId,
    pub class: ClassSpec,
    pub target: TargetSpec,
    pub closed_form: f64,
    pub empirical: f64,
    pub abs_gap: f64,
    /// Boundary residual at `|z| = closed_form`; zero when the result makes
    /// no sharpness claim.
    pub sharpness_residual: f64,
    pub sharp: bool,
    pub clamped: bool,
    pub passed: bool,
    pub samples: usize,
    pub tolerance: f64,
    /// For `m_radius_of_CS`: the expression without the `1/n` power.
    pub printed_value: Option<f64>,
    /// `|printed_value − empirical|`.
    pub printed_gap: Option<f64>,
    pub note: Option<String>,
}

impl VerificationReport {
    fn failed(class: ClassSpec, target: TargetSpec, tolerance: f64, err: &Error) -> Self {
        VerificationReport {
            formula_id: FormulaId::SlOfS,
            class,
            target,
            closed_form: 0.0,
            empirical: 0.0,
            abs_gap: 0.0,
            sharpness_residual: 0.0,
            sharp: false,
            clamped: false,
            passed: false,
            samples: 0,
            tolerance,
            printed_value: None,
            printed_gap: None,
            note: Some(format!("{err}")),
        }
    }
}

/// Bisection width used for a given pass tolerance.
pub fn bisection_tol(tol: f64) -> f64 {
    (tol * 1e-3).clamp(1e-14, 1e-4)
}

/// Check one closed-form radius against the oracle.
pub fn verify_radius(result: &RadiusResult, tol: f64) -> Result<VerificationReport> {
    let map = extremal_map(&result.class)?;
    let empirical = empirical_radius(&map, &result.target, ANGULAR_SAMPLES, bisection_tol(tol))?;
    let abs_gap = (result.value - empirical).abs();
    let sharpness_residual = if result.sharp {
        sharpness_check(&map, &result.target, result.value, ANGLE_WIDTH)?
    } else {
        0.0
    };
    let (mut printed_value, mut printed_gap, mut note) = (None, None, None);
    if let (ClassSpec::CloseToStarlike { n, alpha }, TargetSpec::M { beta }) =
        (result.class, result.target)
    {
        let printed = m_radius_of_cs_printed(n, alpha, beta)?;
        let gap = (printed - empirical).abs();
        printed_value = Some(printed);
        printed_gap = Some(gap);
        if n >= 2 {
            note = Some(format!(
                "expression without the 1/n power gives {printed}, off the oracle by {gap:.3e}; \
                 the 1/n power is applied"
            ));
        }
    }
    if result.clamped {
        note = Some(String::from("root beyond 1, radius clamped to 1"));
    }
    Ok(VerificationReport {
        formula_id: result.formula_id,
        class: result.class,
        target: result.target,
        closed_form: result.value,
        empirical,
        abs_gap,
        sharpness_residual,
        sharp: result.sharp,
        clamped: result.clamped,
        passed: abs_gap <= tol && sharpness_residual <= tol,
        samples: ANGULAR_SAMPLES,
        tolerance: tol,
        printed_value,
        printed_gap,
        note,
    })
}

/// Parameter grid of an audit.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GridSpec {
    pub ns: Vec<u32>,
    pub alphas: Vec<f64>,
    pub betas: Vec<f64>,
    /// `(A, B)` pairs for the Janowski class.
    pub ab_pairs: Vec<(f64, f64)>,
    pub include_s: bool,
    pub include_cs: bool,
    pub include_st: bool,
    pub include_sl: bool,
    pub include_m: bool,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            ns: alloc::vec![1, 2, 3],
            alphas: alloc::vec![0.0, 0.25, 0.5],
            betas: alloc::vec![1.5, 2.0, 3.0],
            ab_pairs: alloc::vec![(1.0, -1.0), (0.5, -0.5), (1.0, 0.0), (0.75, 0.25)],
            include_s: true,
            include_cs: true,
            include_st: true,
            include_sl: true,
            include_m: true,
        }
    }
}

impl GridSpec {
    pub fn empty() -> Self {
        GridSpec {
            ns: Vec::new(),
            alphas: Vec::new(),
            betas: Vec::new(),
            ab_pairs: Vec::new(),
            ..GridSpec::default()
        }
    }

    /// Every covered (class, target) pair of the grid, in audit order.
    pub fn points(&self) -> Vec<(ClassSpec, TargetSpec)> {
        let mut out = Vec::new();
        for &n in &self.ns {
            if self.include_s {
                if self.include_sl {
                    out.push((ClassSpec::S { n }, TargetSpec::Sl));
                }
                if self.include_m {
                    for &beta in &self.betas {
                        out.push((ClassSpec::S { n }, TargetSpec::M { beta }));
                    }
                }
            }
            if self.include_cs {
                for &alpha in &self.alphas {
                    let class = ClassSpec::CloseToStarlike { n, alpha };
                    if self.include_sl {
                        out.push((class, TargetSpec::Sl));
                    }
                    if self.include_m {
                        for &beta in &self.betas {
                            out.push((class, TargetSpec::M { beta }));
                        }
                    }
                }
            }
            if self.include_st && self.include_sl {
                for &(a, b) in &self.ab_pairs {
                    out.push((ClassSpec::Janowski { n, a, b }, TargetSpec::Sl));
                }
            }
        }
        out
    }
}

/// Verify every grid point. Failures, including parameter errors, are
/// recorded in the reports rather than returned.
pub fn audit_all(grid: &GridSpec, tol: f64) -> Vec<VerificationReport> {
    grid.points()
        .into_iter()
        .map(|(class, target)| {
            radius_for(&class, &target)
                .and_then(|r| verify_radius(&r, tol))
                .unwrap_or_else(|e| VerificationReport::failed(class, target, tol, &e))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radius::{m_radius_of_s, sl_radius_of_janowski_b_nonpos, sl_radius_of_s};
    use approx::assert_abs_diff_eq;

    #[test]
    fn empirical_examples() {
        let s1 = extremal_map(&ClassSpec::s(1).unwrap()).unwrap();
        let r = empirical_radius(&s1, &TargetSpec::Sl, 720, 1e-12).unwrap();
        assert_abs_diff_eq!(r, sl_radius_of_s(1).unwrap().value, epsilon = 1e-6);
        let m = empirical_radius(&s1, &TargetSpec::m(2.0).unwrap(), 720, 1e-12).unwrap();
        assert_abs_diff_eq!(m, core::f64::consts::SQRT_2 - 1.0, epsilon = 1e-6);
        let st = extremal_map(&ClassSpec::janowski(1, 1.0, -1.0).unwrap()).unwrap();
        let v = empirical_radius(&st, &TargetSpec::Sl, 720, 1e-12).unwrap();
        assert_abs_diff_eq!(v, 3.0 - 2.0 * core::f64::consts::SQRT_2, epsilon = 1e-6);
    }

    #[test]
    fn empirical_rejects_bad_parameters() {
        let s1 = extremal_map(&ClassSpec::s(1).unwrap()).unwrap();
        assert!(empirical_radius(&s1, &TargetSpec::Sl, 719, 1e-10).is_err());
        assert!(empirical_radius(&s1, &TargetSpec::Sl, 720, 1e-3).is_err());
        assert!(empirical_radius(&s1, &TargetSpec::Sl, 720, 1e-15).is_err());
        assert!(empirical_radius(&s1, &TargetSpec::M { beta: 0.9 }, 720, 1e-10).is_err());
    }

    #[test]
    fn sharpness_examples() {
        let s1 = extremal_map(&ClassSpec::s(1).unwrap()).unwrap();
        let r = sl_radius_of_s(1).unwrap().value;
        assert!(sharpness_check(&s1, &TargetSpec::Sl, r, ANGLE_WIDTH).unwrap() < 1e-9);
        assert!(sharpness_check(&s1, &TargetSpec::Sl, r / 2.0, ANGLE_WIDTH).unwrap() > 1e-3);

        let cs = extremal_map(&ClassSpec::close_to_starlike(1, 0.0).unwrap()).unwrap();
        let m2 = TargetSpec::m(2.0).unwrap();
        let rm = crate::radius::m_radius_of_cs(1, 0.0, 2.0).unwrap().value;
        assert!(sharpness_check(&cs, &m2, rm, ANGLE_WIDTH).unwrap() < 1e-9);
        assert!(sharpness_check(&cs, &m2, 1.0, ANGLE_WIDTH).is_err());
    }

    #[test]
    fn pole_counts_as_failure() {
        let s1 = extremal_map(&ClassSpec::s(1).unwrap()).unwrap();
        let w = max_violation(&s1, &TargetSpec::m(100.0).unwrap(), 1.0, 720);
        assert_eq!(w.value, f64::INFINITY);
    }

    #[test]
    fn audit_empty_and_single() {
        assert!(audit_all(&GridSpec::empty(), 1e-6).is_empty());
        let grid = GridSpec {
            ns: alloc::vec![1],
            ab_pairs: alloc::vec![(1.0, -1.0)],
            include_s: false,
            include_cs: false,
            include_m: false,
            ..GridSpec::empty()
        };
        let reports = audit_all(&grid, 1e-6);
        assert_eq!(reports.len(), 1);
        let expected = sl_radius_of_janowski_b_nonpos(1, 1.0, -1.0).unwrap().value;
        assert_eq!(reports[0].closed_form, expected);
        assert!(reports[0].passed, "{:?}", reports[0]);
    }

    #[test]
    fn audit_records_domain_failures() {
        let grid = GridSpec {
            ns: alloc::vec![0],
            include_cs: false,
            include_st: false,
            include_m: false,
            ..GridSpec::default()
        };
        let reports = audit_all(&grid, 1e-6);
        assert_eq!(reports.len(), 1);
        assert!(!reports[0].passed);
        assert!(reports[0].note.as_deref().unwrap().contains("n must be"));
    }

    #[test]
    fn m_radius_monotone_in_beta_empirically() {
        let s2 = extremal_map(&ClassSpec::s(2).unwrap()).unwrap();
        let mut prev = 0.0;
        for beta in [1.2, 1.5, 2.0, 3.0, 5.0] {
            let r = empirical_radius(&s2, &TargetSpec::m(beta).unwrap(), 720, 1e-12).unwrap();
            assert!(r > prev);
            assert_abs_diff_eq!(r, m_radius_of_s(2, beta).unwrap().value, epsilon = 1e-6);
            prev = r;
        }
    }
}
