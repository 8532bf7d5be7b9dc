//! Bracketing search kernels shared by the solvers and the oracles.

/// Hard cap on bisection halvings; 80 halvings of a unit bracket reach
/// widths far below `f64` resolution.
pub const MAX_BISECTIONS: usize = 80;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for a minimum of a unimodal `f` on `[lo, hi]`.
///
/// Stops when the bracket is narrower than `width` and returns the best
/// abscissa seen together with its value. The endpoints are also evaluated,
/// so a monotone `f` converges to the correct endpoint.
pub fn golden_section_min<F: FnMut(f64) -> f64>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    width: f64,
) -> (f64, f64) {
    let mut best = (lo, f(lo));
    let f_hi = f(hi);
    if f_hi < best.1 {
        best = (hi, f_hi);
    }
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    // ~ log(width)/log(0.618) iterations, plus slack for degenerate widths
    for _ in 0..200 {
        if hi - lo <= width {
            break;
        }
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    for (x, fx) in [(x1, f1), (x2, f2)] {
        if fx < best.1 {
            best = (x, fx);
        }
    }
    best
}

/// Golden-section search for a maximum; see [`golden_section_min`].
pub fn golden_section_max<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    hi: f64,
    width: f64,
) -> (f64, f64) {
    let (x, neg) = golden_section_min(|t| -f(t), lo, hi, width);
    (x, -neg)
}

/// Bisection for the transition point of a predicate that holds at `lo` and
/// fails at `hi`. Returns the last abscissa known to satisfy the predicate.
pub fn bisect_last_true<P: FnMut(f64) -> bool>(
    mut holds: P,
    mut lo: f64,
    mut hi: f64,
    width: f64,
) -> f64 {
    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= width {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if holds(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Largest `ρ ∈ [lo, hi]` such that `holds(r)` for every scanned `r ≤ ρ`.
///
/// Scans `steps` equally spaced points, then bisects between the last
/// passing and the first failing point. Returns `hi` when nothing fails.
/// `holds(lo)` is assumed.
pub fn first_failure<P: FnMut(f64) -> bool>(
    mut holds: P,
    lo: f64,
    hi: f64,
    steps: usize,
    width: f64,
) -> f64 {
    let steps = steps.max(1);
    let h = (hi - lo) / steps as f64;
    let mut prev = lo;
    for k in 1..=steps {
        let r = if k == steps { hi } else { lo + h * k as f64 };
        if !holds(r) {
            return bisect_last_true(&mut holds, prev, r, width);
        }
        prev = r;
    }
    hi
}
