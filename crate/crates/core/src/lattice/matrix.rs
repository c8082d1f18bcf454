//! Dense `n × n` complex matrix kernels on row-major slices.

use num_complex::Complex64;

pub(crate) fn mul_into(n: usize, a: &[Complex64], b: &[Complex64], out: &mut [Complex64]) {
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..n {
                acc += a[i * n + k] * b[k * n + j];
            }
            out[i * n + j] = acc;
        }
    }
}

pub(crate) fn mul(n: usize, a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    mul_into(n, a, b, &mut out);
    out
}

/// `ab − ba`.
pub(crate) fn commutator_into(n: usize, a: &[Complex64], b: &[Complex64], out: &mut [Complex64]) {
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..n {
                acc += a[i * n + k] * b[k * n + j] - b[i * n + k] * a[k * n + j];
            }
            out[i * n + j] = acc;
        }
    }
}

/// Conjugate transpose.
pub(crate) fn adjoint_into(n: usize, a: &[Complex64], out: &mut [Complex64]) {
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = a[j * n + i].conj();
        }
    }
}

pub(crate) fn adjoint(n: usize, a: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    adjoint_into(n, a, &mut out);
    out
}

pub(crate) fn trace(n: usize, a: &[Complex64]) -> Complex64 {
    (0..n).map(|i| a[i * n + i]).sum()
}

pub(crate) fn frobenius(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub(crate) fn identity(n: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        out[i * n + i] = Complex64::new(1.0, 0.0);
    }
    out
}

/// Matrix exponential via nalgebra's Padé approximant.
pub(crate) fn expm(n: usize, a: &[Complex64]) -> Vec<Complex64> {
    let m = nalgebra::DMatrix::from_row_slice(n, n, a);
    let e = m.exp();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(e[(i, j)]);
        }
    }
    out
}

/// Elementary matrix `E_{ij}` (zero-based indices).
pub fn elementary(n: usize, i: usize, j: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    out[i * n + j] = Complex64::new(1.0, 0.0);
    out
}

/// Diagonal matrix from complex entries.
pub fn diag(entries: &[Complex64]) -> Vec<Complex64> {
    let n = entries.len();
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for (i, e) in entries.iter().enumerate() {
        out[i * n + i] = *e;
    }
    out
}
