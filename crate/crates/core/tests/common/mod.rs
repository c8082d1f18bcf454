//! Independent oracles for the integration tests.
//!
//! Everything here works on raw coefficient arrays with plain loops: no
//! 1-forms, wedge products, circulant stencils or pairwise sums.

#![allow(dead_code)]

use std::f64::consts::PI;

use hitchin_lattice::lattice::{Configuration, DerivScheme, Grid, MatrixField, TangentVector};
use num_complex::Complex64;

pub const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

pub fn torus(sites: usize) -> Grid {
    Grid::new(sites, 2.0 * PI, 2.0 * PI, 2, DerivScheme::Spectral).unwrap()
}

pub fn rel(a: f64, b: f64) -> f64 {
    let s = a.abs().max(b.abs());
    if s == 0.0 {
        0.0
    } else {
        (a - b).abs() / s
    }
}

pub fn rel_c(a: Complex64, b: Complex64) -> f64 {
    let s = a.norm().max(b.norm());
    if s == 0.0 {
        0.0
    } else {
        (a - b).norm() / s
    }
}

fn sites(f: &MatrixField) -> impl Iterator<Item = &[Complex64]> {
    f.data().chunks(f.grid().site_len())
}

pub fn matmul(n: usize, a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
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

pub fn dagger(n: usize, a: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = a[i * n + j].conj();
        }
    }
    out
}

pub fn comm(n: usize, a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    matmul(n, a, b).iter().zip(matmul(n, b, a)).map(|(x, y)| x - y).collect()
}

pub fn field_dagger(f: &MatrixField) -> MatrixField {
    let n = f.grid().n();
    MatrixField::from_data(*f.grid(), sites(f).flat_map(|m| dagger(n, m)).collect()).unwrap()
}

/// `∫ tr(A B*) dx dy`.
pub fn int_tr_adj(a: &MatrixField, b: &MatrixField) -> Complex64 {
    let w = a.grid().cell_area();
    a.data().iter().zip(b.data()).map(|(x, y)| x * y.conj()).sum::<Complex64>() * w
}

/// `∫ tr(A B) dx dy`.
pub fn int_tr(a: &MatrixField, b: &MatrixField) -> Complex64 {
    let n = a.grid().n();
    let w = a.grid().cell_area();
    let mut acc = Complex64::new(0.0, 0.0);
    for (ma, mb) in sites(a).zip(sites(b)) {
        for i in 0..n {
            for j in 0..n {
                acc += ma[i * n + j] * mb[j * n + i];
            }
        }
    }
    acc * w
}

fn hermitian(x: &TangentVector, y: &TangentVector) -> Complex64 {
    int_tr_adj(&x.alpha_zbar, &y.alpha_zbar) + int_tr_adj(&x.gamma_z, &y.gamma_z)
}

/// `u = ∫ tr(a d − c b)` for `X = (a, c)`, `Y = (b, d)`.
pub fn cross(x: &TangentVector, y: &TangentVector) -> Complex64 {
    int_tr(&x.alpha_zbar, &y.gamma_z) - int_tr(&x.gamma_z, &y.alpha_zbar)
}

pub fn g(x: &TangentVector, y: &TangentVector) -> f64 {
    4.0 * hermitian(x, y).re
}

pub fn omega(x: &TangentVector, y: &TangentVector) -> f64 {
    4.0 * hermitian(x, y).im
}

pub fn q1(x: &TangentVector, y: &TangentVector) -> f64 {
    4.0 * cross(x, y).im
}

pub fn q2(x: &TangentVector, y: &TangentVector) -> f64 {
    -4.0 * cross(x, y).re
}

/// `θ₁ = −4 Im ∫ tr(φ a)`.
pub fn theta1(c: &Configuration, x: &TangentVector) -> f64 {
    -4.0 * int_tr(c.phi_z(), &x.alpha_zbar).im
}

/// `θ₂ = 4 Re ∫ tr(φ a)`.
pub fn theta2(c: &Configuration, x: &TangentVector) -> f64 {
    4.0 * int_tr(c.phi_z(), &x.alpha_zbar).re
}

pub fn complex_i(x: &TangentVector) -> TangentVector {
    let f = |m: &MatrixField| MatrixField::from_data(*m.grid(), m.data().iter().map(|v| I * v).collect()).unwrap();
    TangentVector::new(f(&x.alpha_zbar), f(&x.gamma_z)).unwrap()
}

pub fn complex_j(x: &TangentVector) -> TangentVector {
    let s = |m: &MatrixField, k: Complex64| {
        MatrixField::from_data(*m.grid(), field_dagger(m).data().iter().map(|v| k * v).collect()).unwrap()
    };
    TangentVector::new(s(&x.gamma_z, I), s(&x.alpha_zbar, -I)).unwrap()
}

pub fn complex_k(x: &TangentVector) -> TangentVector {
    let one = Complex64::new(1.0, 0.0);
    let s = |m: &MatrixField, k: Complex64| {
        MatrixField::from_data(*m.grid(), field_dagger(m).data().iter().map(|v| k * v).collect()).unwrap()
    };
    TangentVector::new(s(&x.gamma_z, -one), s(&x.alpha_zbar, one)).unwrap()
}

/// `(∂_z̄ f, ∂_z f)` by an explicit discrete Fourier transform, Nyquist
/// mode dropped.
pub fn dbar_d(f: &MatrixField) -> (MatrixField, MatrixField) {
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
    let phase =
        |k: usize, i: usize, sign: f64| Complex64::from_polar(1.0, sign * 2.0 * PI * ((k * i) % nn) as f64 / nn as f64);
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
                        acc += val(iy, ix) * phase(kx, ix, -1.0) * phase(ky, iy, -1.0);
                    }
                }
                hat[ky * nn + kx] = acc / (nn * nn) as f64;
            }
        }
        for iy in 0..nn {
            for ix in 0..nn {
                let (mut gx, mut gy) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
                for ky in 0..nn {
                    for kx in 0..nn {
                        let term = hat[ky * nn + kx] * phase(kx, ix, 1.0) * phase(ky, iy, 1.0);
                        gx += term * I * (2.0 * PI * freq(kx) / grid.lx());
                        gy += term * I * (2.0 * PI * freq(ky) / grid.ly());
                    }
                }
                out_bar[(iy * nn + ix) * len + e] = 0.5 * (gx + I * gy);
                out_d[(iy * nn + ix) * len + e] = 0.5 * (gx - I * gy);
            }
        }
    }
    (MatrixField::from_data(grid, out_bar).unwrap(), MatrixField::from_data(grid, out_d).unwrap())
}

/// `(r1, r2)` as `dz∧dz̄` coefficients:
/// `r1 = ∂a − ∂̄a_z + [a_z, a] + [φ, φ*]`, `r2 = −(∂̄φ + [a, φ])`, `a_z = −a*`.
pub fn residuals(c: &Configuration) -> (MatrixField, MatrixField) {
    let grid = *c.grid();
    let n = grid.n();
    let (a, p) = (c.a_zbar(), c.phi_z());
    let az = MatrixField::from_data(grid, field_dagger(a).data().iter().map(|v| -v).collect()).unwrap();
    let (_, d_a) = dbar_d(a);
    let (dbar_az, _) = dbar_d(&az);
    let (dbar_p, _) = dbar_d(p);
    let mut r1 = Vec::with_capacity(grid.len());
    let mut r2 = Vec::with_capacity(grid.len());
    for s in 0..grid.num_sites() {
        let ca = comm(n, az.site(s), a.site(s));
        let cp = comm(n, p.site(s), &dagger(n, p.site(s)));
        let cap = comm(n, a.site(s), p.site(s));
        for k in 0..n * n {
            r1.push(d_a.site(s)[k] - dbar_az.site(s)[k] + ca[k] + cp[k]);
            r2.push(-(dbar_p.site(s)[k] + cap[k]));
        }
    }
    (MatrixField::from_data(grid, r1).unwrap(), MatrixField::from_data(grid, r2).unwrap())
}

pub fn energy(c: &Configuration) -> f64 {
    let (r1, r2) = residuals(c);
    let w = c.grid().cell_area();
    w * r1.data().iter().chain(r2.data()).map(|v| v.norm_sqr()).sum::<f64>()
}

/// Largest per-site entry difference.
pub fn max_entry_diff(a: &MatrixField, b: &MatrixField) -> f64 {
    a.data().iter().zip(b.data()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}
