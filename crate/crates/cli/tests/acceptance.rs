//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::f64::consts::SQRT_2;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lemni_core::classes::{cs_disk, extremal_map, janowski_disk, s_class_disk};
use lemni_core::lemniscate::{
    disk_in_lemniscate, extremal_distance_oracle, inner_radius, lemniscate_level, outer_radius,
    Extremum, ORACLE_GRID,
};
use lemni_core::oracle::{
    audit_all, empirical_radius, sharpness_check, verify_radius, ANGULAR_SAMPLES,
};
use lemni_core::radius::{
    janowski_geometric_radius, m_radius_of_cs, m_radius_of_cs_printed, m_radius_of_s, radius_for,
    sl_inclusion_stab,
};
use lemni_core::{GridSpec, RadiusResult, RealDisk, TargetSpec, INNER_BRANCH};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lemni").chain(args.iter().copied());
    let code = lemni::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf-8 output"))
}

fn within(elapsed: Duration, limit_s: f64) -> bool {
    elapsed.as_secs_f64() < limit_s
}

fn starlike_radius() -> Outcome {
    let start = Instant::now();
    let (code, text) = run_cli(&[
        "radius", "--class", "st", "--n", "1", "--A", "1", "--B", "-1", "--target", "sl",
    ]);
    if code != 0 {
        return Err(format!("exit code {code}"));
    }
    let record: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let result: RadiusResult =
        serde_json::from_value(record["results"][0].clone()).map_err(|e| e.to_string())?;
    let map = extremal_map(&result.class).map_err(|e| e.to_string())?;
    let empirical = empirical_radius(&map, &TargetSpec::Sl, ANGULAR_SAMPLES, 1e-10)
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let closed_gap = (result.value - (3.0 - 2.0 * SQRT_2)).abs();
    let oracle_gap = (result.value - empirical).abs();
    check(
        closed_gap <= 1e-12 && oracle_gap <= 1e-6 && within(elapsed, 1.0),
        format!(
            "R = {:.17}, |R - (3 - 2√2)| = {closed_gap:.1e}, |R - empirical| = {oracle_gap:.1e}, {elapsed:.2?}",
            result.value
        ),
    )
}

fn distance_closed_forms() -> Outcome {
    let start = Instant::now();
    let count = 500;
    let grid =
        |lo: f64, hi: f64| (0..count).map(move |k| lo + (hi - lo) * k as f64 / (count - 1) as f64);
    let mut worst_inner: f64 = 0.0;
    for a in grid(0.01, SQRT_2 - 0.01) {
        let closed = inner_radius(a).map_err(|e| e.to_string())?;
        let oracle =
            extremal_distance_oracle(a, Extremum::Min, ORACLE_GRID).map_err(|e| e.to_string())?;
        worst_inner = worst_inner.max((closed - oracle).abs());
    }
    let mut worst_outer: f64 = 0.0;
    for a in grid(0.01, 3.0) {
        let closed = outer_radius(a).map_err(|e| e.to_string())?;
        let oracle =
            extremal_distance_oracle(a, Extremum::Max, ORACLE_GRID).map_err(|e| e.to_string())?;
        worst_outer = worst_outer.max((closed - oracle).abs());
    }
    let branch_inner =
        (inner_radius(INNER_BRANCH).map_err(|e| e.to_string())? - SQRT_2 / 3.0).abs();
    let branch_outer =
        (outer_radius(1.0 / SQRT_2).map_err(|e| e.to_string())? - 1.0 / SQRT_2).abs();
    let elapsed = start.elapsed();
    check(
        worst_inner < 1e-8
            && worst_outer < 1e-8
            && branch_inner <= 1e-12
            && branch_outer <= 1e-12
            && within(elapsed, 10.0),
        format!(
            "max inner gap {worst_inner:.1e}, max outer gap {worst_outer:.1e}, \
             branch gaps {branch_inner:.1e}/{branch_outer:.1e}, {elapsed:.2?}"
        ),
    )
}

fn default_audit() -> Outcome {
    let start = Instant::now();
    let reports = audit_all(&GridSpec::default(), 1e-6);
    let elapsed = start.elapsed();
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !(r.passed && r.abs_gap < 1e-6 && r.sharpness_residual < 1e-6))
        .map(|r| format!("{} {:?} {:?}", r.formula_id, r.class, r.target))
        .collect();
    let max_gap = reports.iter().map(|r| r.abs_gap).fold(0.0, f64::max);
    let max_res = reports
        .iter()
        .map(|r| r.sharpness_residual)
        .fold(0.0, f64::max);
    check(
        failed.is_empty() && !reports.is_empty() && within(elapsed, 60.0),
        format!(
            "{} reports, max gap {max_gap:.1e}, max sharpness residual {max_res:.1e}, {elapsed:.2?}{}",
            reports.len(),
            if failed.is_empty() {
                String::new()
            } else {
                format!(", failed: {failed:?}")
            }
        ),
    )
}

fn tangency() -> Outcome {
    let grid = GridSpec {
        include_m: false,
        ..GridSpec::default()
    };
    let mut checked = 0;
    let mut worst: f64 = 0.0;
    for (class, target) in grid.points() {
        let result = radius_for(&class, &target).map_err(|e| e.to_string())?;
        if result.clamped {
            continue;
        }
        let disk = class.proof_disk(result.value).map_err(|e| e.to_string())?;
        if disk.center() >= INNER_BRANCH {
            checked += 1;
            worst = worst.max((disk.right_end() - SQRT_2).abs());
        }
    }
    check(
        checked > 0 && worst <= 1e-10,
        format!("{checked} radii checked, max |center + radius - √2| = {worst:.1e}"),
    )
}

fn exponent_adjudication() -> Outcome {
    let (n, alpha, beta) = (2, 0.0, 2.0);
    let result = m_radius_of_cs(n, alpha, beta).map_err(|e| e.to_string())?;
    let printed = m_radius_of_cs_printed(n, alpha, beta).map_err(|e| e.to_string())?;
    let map = extremal_map(&result.class).map_err(|e| e.to_string())?;
    let empirical = empirical_radius(&map, &result.target, ANGULAR_SAMPLES, 1e-10)
        .map_err(|e| e.to_string())?;
    let report = verify_radius(&result, 1e-6).map_err(|e| e.to_string())?;
    let corrected_gap = (result.value - empirical).abs();
    let printed_gap = (printed - empirical).abs();
    let recorded = report.printed_gap.is_some_and(|g| g > 1e-2) && report.note.is_some();
    check(
        corrected_gap <= 1e-6 && printed_gap > 1e-2 && recorded,
        format!(
            "corrected {:.9} vs empirical {empirical:.9} (gap {corrected_gap:.1e}), \
             printed {printed:.9} (gap {printed_gap:.3}), recorded in report: {recorded}",
            result.value
        ),
    )
}

/// Last `r` of a uniform grid on `[lo, hi]` before the disk first leaves the
/// lemniscate, paired with the first grid point outside it.
fn scan_last_inside(lo: f64, hi: f64, points: usize) -> (f64, f64) {
    let inside = |r: f64| {
        janowski_disk(1, 1.0, 0.5, r)
            .map(|d| disk_in_lemniscate(&d))
            .unwrap_or(false)
    };
    let h = (hi - lo) / (points - 1) as f64;
    let mut last = lo;
    for k in 0..points {
        let r = lo + h * k as f64;
        if !inside(r) {
            return (last, r);
        }
        last = r;
    }
    (hi, hi)
}

fn r3_consistency() -> Outcome {
    let r3 = janowski_geometric_radius(1, 1.0, 0.5).map_err(|e| e.to_string())?;
    let (coarse_in, coarse_out) = scan_last_inside(0.0, 1.0, 10_000);
    let (fine_in, _) = scan_last_inside(coarse_in, coarse_out, 10_000);
    let radius = radius_for(
        &lemni_core::ClassSpec::janowski(1, 1.0, 0.5).map_err(|e| e.to_string())?,
        &TargetSpec::Sl,
    )
    .map_err(|e| e.to_string())?;
    let gap = (r3 - fine_in).abs();
    check(
        gap <= 1e-6 && radius.value == r3,
        format!(
            "R3 = {r3:.12}, scan = {fine_in:.12}, gap {gap:.1e}, reported {:.12} ({})",
            radius.value, radius.formula_id
        ),
    )
}

/// Brute-force inclusion: every sampled boundary point of the disk lies in
/// the closed right loop.
fn sampled_inclusion(disk: &RealDisk, samples: usize) -> bool {
    if disk.center() <= 0.0 {
        return false;
    }
    (0..samples).all(|k| {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / samples as f64;
        let w = disk.boundary_at(theta);
        w.re >= 0.0 && lemniscate_level(w) <= 1.0 + 1e-12
    })
}

fn inclusion_oracle() -> Outcome {
    let side = 20;
    let values: Vec<f64> = (0..side)
        .map(|k| (-0.9 + 1.9 * k as f64 / (side - 1) as f64).min(1.0))
        .collect();
    let (mut total, mut agree, mut included, mut warnings) = (0, 0, 0, 0);
    let mut mismatches = Vec::new();
    for &a in &values {
        for &b in &values {
            if b >= a {
                continue;
            }
            total += 1;
            let verdict = sl_inclusion_stab(a, b).map_err(|e| e.to_string())?;
            let brute = verdict
                .limit_disk
                .is_some_and(|d| sampled_inclusion(&d, 4096));
            if brute == verdict.included {
                agree += 1;
            } else {
                mismatches.push((a, b));
            }
            if verdict.included {
                included += 1;
            }
            if verdict.literal_disagrees() {
                warnings += 1;
                eprintln!(
                    "warning: printed inclusion conditions give {} at A = {a:.4}, B = {b:.4}; \
                     geometry gives {}",
                    verdict.literal_condition_result, verdict.included
                );
            }
        }
    }
    check(
        agree == total && total > 0,
        format!(
            "{agree}/{total} agree ({included} included), {warnings} printed-condition warnings{}",
            if mismatches.is_empty() {
                String::new()
            } else {
                format!(", mismatches at {mismatches:?}")
            }
        ),
    )
}

fn monotone(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[0] <= w[1])
}

fn properties() -> Outcome {
    let rs: Vec<f64> = (0..200).map(|k| 0.995 * k as f64 / 199.0).collect();
    let mut radii_ok = true;
    for n in 1..=3 {
        let s: Vec<f64> = rs
            .iter()
            .map(|&r| s_class_disk(n, r).unwrap().radius())
            .collect();
        radii_ok &= monotone(&s);
        for alpha in [0.0, 0.25, 0.5] {
            let c: Vec<f64> = rs
                .iter()
                .map(|&r| cs_disk(n, alpha, r).unwrap().radius())
                .collect();
            radii_ok &= monotone(&c);
        }
        for (a, b) in [(1.0, -1.0), (0.5, -0.5), (1.0, 0.0), (0.75, 0.25)] {
            let j: Vec<f64> = rs
                .iter()
                .map(|&r| janowski_disk(n, a, b, r).unwrap().radius())
                .collect();
            radii_ok &= monotone(&j);
        }
    }

    let betas: Vec<f64> = (0..200).map(|k| 1.01 + 5.0 * k as f64 / 199.0).collect();
    let mut beta_ok = true;
    for n in 1..=3 {
        let v: Vec<f64> = betas
            .iter()
            .map(|&beta| m_radius_of_s(n, beta).unwrap().value)
            .collect();
        beta_ok &= v.windows(2).all(|w| w[0] < w[1]);
    }

    let mut min_interior = f64::INFINITY;
    for (class, target) in GridSpec::default().points() {
        let result = radius_for(&class, &target).map_err(|e| e.to_string())?;
        let map = extremal_map(&class).map_err(|e| e.to_string())?;
        let residual =
            sharpness_check(&map, &target, result.value / 2.0, 1e-12).map_err(|e| e.to_string())?;
        min_interior = min_interior.min(residual);
    }

    let round_trip = json_csv_round_trip()?;
    check(
        radii_ok && beta_ok && min_interior > 1e-3 && round_trip,
        format!(
            "disk radii monotone: {radii_ok}, m_radius_of_S monotone: {beta_ok}, \
             min residual at R/2 = {min_interior:.3e}, JSON/CSV round trip: {round_trip}"
        ),
    )
}

fn json_csv_round_trip() -> Result<bool, String> {
    let base = [
        "sweep", "--vary", "alpha", "--from", "0", "--to", "0.9", "--steps", "10", "--class", "cs",
        "--n", "2", "--target", "m", "--beta", "2.5",
    ];
    let (c1, json_text) = run_cli(&[&base[..], &["--format", "json"]].concat());
    let (c2, csv_text) = run_cli(&[&base[..], &["--format", "csv"]].concat());
    if c1 != 0 || c2 != 0 {
        return Err(format!("exit codes {c1}/{c2}"));
    }
    let parsed: Value = serde_json::from_str(&json_text).map_err(|e| e.to_string())?;
    let reserialized = serde_json::to_string_pretty(&parsed).map_err(|e| e.to_string())? + "\n";
    let byte_identical = reserialized == json_text;

    let body = csv_text.split_once('\n').map(|x| x.1).unwrap_or("");
    let mut reader = csv::Reader::from_reader(body.as_bytes());
    let csv_radii: Vec<f64> = reader
        .records()
        .map(|rec| rec.unwrap()[2].parse::<f64>().unwrap())
        .collect();
    let json_radii: Vec<f64> = parsed["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["radius"].as_f64().unwrap())
        .collect();
    Ok(byte_identical && !csv_radii.is_empty() && csv_radii == json_radii)
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("starlike SL radius", starlike_radius),
        ("distance closed forms vs geometry", distance_closed_forms),
        ("formula-oracle agreement on default grid", default_audit),
        ("tangency identity", tangency),
        ("exponent adjudication", exponent_adjudication),
        ("R3 consistency", r3_consistency),
        ("inclusion oracle", inclusion_oracle),
        ("property suite", properties),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(detail) => {
                all = false;
                println!("FAIL {}. {name}: {detail}", i + 1);
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
