//! Brute-force quadrature oracles shared by the unit tests.
//!
//! These work directly on the stored coefficients with plain loops and a
//! naive sum, without going through the 1-form or wedge machinery.

use num_complex::Complex64;

use crate::lattice::{MatrixField, TangentVector};

/// `Σ_sites tr(A B*) · cell area`.
pub fn int_tr_adj(a: &MatrixField, b: &MatrixField) -> Complex64 {
    let w = a.grid().cell_area();
    a.data().iter().zip(b.data()).map(|(x, y)| x * y.conj()).sum::<Complex64>() * w
}

/// `Σ_sites tr(A B) · cell area`.
pub fn int_tr(a: &MatrixField, b: &MatrixField) -> Complex64 {
    let n = a.grid().n();
    let w = a.grid().cell_area();
    let mut acc = Complex64::new(0.0, 0.0);
    for s in 0..a.grid().num_sites() {
        let (ma, mb) = (a.site(s), b.site(s));
        for i in 0..n {
            for j in 0..n {
                acc += ma[i * n + j] * mb[j * n + i];
            }
        }
    }
    acc * w
}

/// `∫ tr(a b* + c d*) dx dy`.
pub fn hermitian_pairing(x: &TangentVector, y: &TangentVector) -> Complex64 {
    int_tr_adj(&x.alpha_zbar, &y.alpha_zbar) + int_tr_adj(&x.gamma_z, &y.gamma_z)
}

/// `u = ∫ tr(a d − c b) dx dy`.
pub fn cross_pairing(x: &TangentVector, y: &TangentVector) -> Complex64 {
    int_tr(&x.alpha_zbar, &y.gamma_z) - int_tr(&x.gamma_z, &y.alpha_zbar)
}

pub fn oracle_g(x: &TangentVector, y: &TangentVector) -> f64 {
    4.0 * hermitian_pairing(x, y).re
}

pub fn oracle_omega(x: &TangentVector, y: &TangentVector) -> f64 {
    4.0 * hermitian_pairing(x, y).im
}

pub fn oracle_q1(x: &TangentVector, y: &TangentVector) -> f64 {
    4.0 * cross_pairing(x, y).im
}

pub fn oracle_q2(x: &TangentVector, y: &TangentVector) -> f64 {
    -4.0 * cross_pairing(x, y).re
}

/// `(∂_z̄ f, ∂_z f)` by an explicit discrete Fourier transform per entry,
/// with the Nyquist mode dropped.
pub fn naive_dbar_d(f: &MatrixField) -> (MatrixField, MatrixField) {
    use std::f64::consts::PI;
    let grid = *f.grid();
    let nn = grid.sites();
    let len = grid.site_len();
    let freq = |k: usize| {
        if k < nn / 2 {
            k as f64
        } else if k == nn / 2 {
            0.0
        } else {
            k as f64 - nn as f64
        }
    };
    let mut out_bar = vec![Complex64::new(0.0, 0.0); grid.len()];
    let mut out_d = out_bar.clone();
    for e in 0..len {
        let val = |iy: usize, ix: usize| f.data()[(iy * nn + ix) * len + e];
        let mut hat = vec![Complex64::new(0.0, 0.0); nn * nn];
        for ky in 0..nn {
            for kx in 0..nn {
                let mut acc = Complex64::new(0.0, 0.0);
                for iy in 0..nn {
                    for ix in 0..nn {
                        let ph = -2.0 * PI * ((kx * ix + ky * iy) % nn) as f64 / nn as f64;
                        acc += val(iy, ix) * Complex64::from_polar(1.0, ph);
                    }
                }
                hat[ky * nn + kx] = acc / (nn * nn) as f64;
            }
        }
        for iy in 0..nn {
            for ix in 0..nn {
                let mut gx = Complex64::new(0.0, 0.0);
                let mut gy = Complex64::new(0.0, 0.0);
                for ky in 0..nn {
                    for kx in 0..nn {
                        let ph = 2.0 * PI * ((kx * ix + ky * iy) % nn) as f64 / nn as f64;
                        let term = hat[ky * nn + kx] * Complex64::from_polar(1.0, ph);
                        gx += term * Complex64::new(0.0, 2.0 * PI * freq(kx) / grid.lx());
                        gy += term * Complex64::new(0.0, 2.0 * PI * freq(ky) / grid.ly());
                    }
                }
                let i = Complex64::new(0.0, 1.0);
                out_bar[(iy * nn + ix) * len + e] = 0.5 * (gx + i * gy);
                out_d[(iy * nn + ix) * len + e] = 0.5 * (gx - i * gy);
            }
        }
    }
    (MatrixField::from_data(grid, out_bar).unwrap(), MatrixField::from_data(grid, out_d).unwrap())
}

fn matmul(n: usize, a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i * n + j] += a[i * n + k] * b[k * n + j];
            }
        }
    }
    out
}

fn dagger(n: usize, a: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = a[i * n + j].conj();
        }
    }
    out
}

fn comm(n: usize, a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    matmul(n, a, b).iter().zip(matmul(n, b, a)).map(|(x, y)| x - y).collect()
}

/// Energy of `(a_z̄, φ_z)` from [`naive_dbar_d`] and per-site loops.
pub fn naive_energy(a: &MatrixField, p: &MatrixField) -> f64 {
    let grid = *a.grid();
    let n = grid.n();
    let az = MatrixField::from_data(
        grid,
        (0..grid.num_sites()).flat_map(|s| dagger(n, a.site(s)).into_iter().map(|v| -v)).collect(),
    )
    .unwrap();
    let (_, d_a) = naive_dbar_d(a);
    let (dbar_az, _) = naive_dbar_d(&az);
    let (dbar_p, _) = naive_dbar_d(p);
    let mut total = 0.0;
    for s in 0..grid.num_sites() {
        let comm_a = comm(n, az.site(s), a.site(s));
        let comm_p = comm(n, p.site(s), &dagger(n, p.site(s)));
        let comm_ap = comm(n, a.site(s), p.site(s));
        for k in 0..n * n {
            let r1 = d_a.site(s)[k] - dbar_az.site(s)[k] + comm_a[k] + comm_p[k];
            let r2 = dbar_p.site(s)[k] + comm_ap[k];
            total += r1.norm_sqr() + r2.norm_sqr();
        }
    }
    total * grid.cell_area()
}
