use std::f64::consts::PI;
use std::io::Write;

use lemni_core::lemniscate::boundary_point;
use lemni_core::oracle::audit_all;
use lemni_core::radius::radius_for;
use lemni_core::{ClassSpec, GridSpec, RealDisk, TargetSpec};
use serde_json::{json, Map, Value};

use crate::args::{
    ClassFilter, ClassFlags, ClassKind, RadiusArgs, RegionArgs, SweepArgs, SweepParam,
    TargetFilter, TargetKind, VerifyArgs,
};
use crate::output::{emit, OutputRecord, PointRow, SweepRow};
use crate::CliError;

/// Smallest `--points` accepted by `region`.
pub const MIN_POINTS: usize = 16;

fn required(value: Option<f64>, flag: &str, context: &str) -> Result<f64, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{flag} is required for {context}")))
}

fn class_spec(flags: &ClassFlags) -> Result<ClassSpec, CliError> {
    let n = flags
        .n
        .ok_or_else(|| CliError::Usage("--n is required".into()))?;
    let spec = match flags.class {
        ClassKind::S => ClassSpec::s(n)?,
        ClassKind::Cs => {
            ClassSpec::close_to_starlike(n, required(flags.alpha, "--alpha", "class cs")?)?
        }
        ClassKind::St => ClassSpec::janowski(
            n,
            required(flags.a, "--A", "class st")?,
            required(flags.b, "--B", "class st")?,
        )?,
    };
    Ok(spec)
}

fn target_spec(flags: &ClassFlags) -> Result<TargetSpec, CliError> {
    match flags.target {
        TargetKind::Sl => Ok(TargetSpec::Sl),
        TargetKind::M => Ok(TargetSpec::m(required(flags.beta, "--beta", "target m")?)?),
    }
}

fn class_inputs(flags: &ClassFlags) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert(
        "class".into(),
        json!(match flags.class {
            ClassKind::S => "s",
            ClassKind::Cs => "cs",
            ClassKind::St => "st",
        }),
    );
    if let Some(n) = flags.n {
        m.insert("n".into(), json!(n));
    }
    for (key, v) in [("alpha", flags.alpha), ("A", flags.a), ("B", flags.b)] {
        if let Some(v) = v {
            m.insert(key.into(), json!(v));
        }
    }
    m.insert(
        "target".into(),
        json!(match flags.target {
            TargetKind::Sl => "sl",
            TargetKind::M => "m",
        }),
    );
    if let Some(beta) = flags.beta {
        m.insert("beta".into(), json!(beta));
    }
    m
}

pub fn radius(args: &RadiusArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let class = class_spec(&args.class)?;
    let target = target_spec(&args.class)?;
    let result = radius_for(&class, &target)?;
    let record = OutputRecord::new("radius", class_inputs(&args.class), vec![result]);
    emit(&record, args.format, out)?;
    Ok(())
}

fn or_default<T: Clone>(given: &[T], default: &[T]) -> Vec<T> {
    if given.is_empty() {
        default.to_vec()
    } else {
        given.to_vec()
    }
}

fn verify_grid(args: &VerifyArgs) -> Result<GridSpec, CliError> {
    if args.a.len() != args.b.len() {
        return Err(CliError::Usage(format!(
            "--A and --B must have the same length (got {} and {})",
            args.a.len(),
            args.b.len()
        )));
    }
    let defaults = GridSpec::default();
    let pairs: Vec<(f64, f64)> = args.a.iter().copied().zip(args.b.iter().copied()).collect();
    let grid = GridSpec {
        ns: or_default(&args.n, &defaults.ns),
        alphas: or_default(&args.alpha, &defaults.alphas),
        betas: or_default(&args.beta, &defaults.betas),
        ab_pairs: or_default(&pairs, &defaults.ab_pairs),
        include_s: matches!(args.class, ClassFilter::S | ClassFilter::All),
        include_cs: matches!(args.class, ClassFilter::Cs | ClassFilter::All),
        include_st: matches!(args.class, ClassFilter::St | ClassFilter::All),
        include_sl: matches!(args.target, TargetFilter::Sl | TargetFilter::All),
        include_m: matches!(args.target, TargetFilter::M | TargetFilter::All),
    };
    for (class, target) in grid.points() {
        class.validate()?;
        target.validate()?;
    }
    Ok(grid)
}

/// Returns whether every report passed.
pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    if !(args.tol.is_finite() && args.tol > 0.0) {
        return Err(CliError::Usage(format!(
            "tol must be positive (got {})",
            args.tol
        )));
    }
    let grid = verify_grid(args)?;
    if grid.points().is_empty() {
        return Err(CliError::Usage(
            "the selected class and target have no covered pair".into(),
        ));
    }
    let reports = audit_all(&grid, args.tol);
    let passed = reports.iter().all(|r| r.passed);
    let mut inputs = Map::new();
    inputs.insert(
        "grid".into(),
        serde_json::to_value(&grid).map_err(std::io::Error::from)?,
    );
    inputs.insert("tol".into(), json!(args.tol));
    let record = OutputRecord::new("verify", inputs, reports);
    emit(&record, args.format, out)?;
    Ok(passed)
}

pub fn region(args: &RegionArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let points = args.points;
    if points < MIN_POINTS {
        return Err(CliError::Usage(format!(
            "points must be ≥ {MIN_POINTS} (got {points})"
        )));
    }
    let mut rows = Vec::with_capacity(2 * points);
    for k in 0..points {
        let t = -PI / 2.0 + PI * k as f64 / (points - 1) as f64;
        let p = boundary_point(t)?;
        rows.push(PointRow {
            curve: "lemniscate".into(),
            t,
            x: p.x,
            y: p.y,
        });
    }
    let mut inputs = Map::new();
    inputs.insert("points".into(), json!(points));
    if let (Some(a), Some(r)) = (args.a, args.r) {
        let disk = RealDisk::new(a, r)?;
        inputs.insert("a".into(), json!(a));
        inputs.insert("r".into(), json!(r));
        for k in 0..points {
            let theta = 2.0 * PI * k as f64 / points as f64;
            let w = disk.boundary_at(theta);
            rows.push(PointRow {
                curve: "disk".into(),
                t: theta,
                x: w.re,
                y: w.im,
            });
        }
    }
    let record = OutputRecord::new("region", inputs, rows);
    emit(&record, args.format, out)?;
    Ok(())
}

fn linspace(from: f64, to: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![from];
    }
    let h = (to - from) / (steps - 1) as f64;
    (0..steps)
        .map(|k| {
            if k + 1 == steps {
                to
            } else {
                from + h * k as f64
            }
        })
        .collect()
}

fn as_order(v: f64) -> Result<u32, CliError> {
    if v.fract() == 0.0 && v >= 1.0 && v <= u32::MAX as f64 {
        Ok(v as u32)
    } else {
        Err(CliError::Usage(format!(
            "n must be an integer ≥ 1 (got {v})"
        )))
    }
}

pub fn sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.steps < 1 {
        return Err(CliError::Usage(format!(
            "steps must be ≥ 1 (got {})",
            args.steps
        )));
    }
    if !(args.from.is_finite() && args.to.is_finite()) {
        return Err(CliError::Usage("from and to must be finite".into()));
    }
    let mut rows = Vec::with_capacity(args.steps);
    for value in linspace(args.from, args.to, args.steps) {
        let mut flags = args.class.clone();
        match args.vary {
            SweepParam::N => flags.n = Some(as_order(value)?),
            SweepParam::Alpha => flags.alpha = Some(value),
            SweepParam::Beta => flags.beta = Some(value),
            SweepParam::A => flags.a = Some(value),
            SweepParam::B => flags.b = Some(value),
        }
        let result = radius_for(&class_spec(&flags)?, &target_spec(&flags)?)?;
        rows.push(SweepRow {
            param: args.vary.name().into(),
            param_value: value,
            radius: result.value,
            formula_id: result.formula_id.as_str().into(),
            clamped: result.clamped,
        });
    }
    let mut inputs = class_inputs(&args.class);
    inputs.insert("vary".into(), json!(args.vary.name()));
    inputs.insert("from".into(), json!(args.from));
    inputs.insert("to".into(), json!(args.to));
    inputs.insert("steps".into(), json!(args.steps));
    let record = OutputRecord::new("sweep", inputs, rows);
    emit(&record, args.format, out)?;
    Ok(())
}
