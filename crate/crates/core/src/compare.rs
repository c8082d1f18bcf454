//! Error measures shared by tests, the verification suite and reports.

use num_complex::Complex64;

/// `|a − b| / max(|a|, |b|)`, or `0` when both vanish.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// Complex analogue of [`rel_diff`].
pub fn rel_diff_c(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}
