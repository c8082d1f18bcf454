//! Periodic derivatives `∂/∂x`, `∂/∂y`, `∂/∂z̄ = ½(∂ₓ + i∂_y)` and
//! `∂/∂z = ½(∂ₓ − i∂_y)`.
//!
//! Both schemes are real circulant convolutions, so `∂_z(f*) = (∂_z̄ f)*`
//! holds exactly and `∂_z` is minus the adjoint of `∂_z̄` in the Euclidean
//! site inner product.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::field::MatrixField;
use super::grid::{DerivScheme, Grid};

/// Circulant weights `w[m]` with `(Df)_j = Σ_m w[m] f_{j−m}`.
///
/// Both schemes are antisymmetric, `w[N−m] = −w[m]` and `w[0] = w[N/2] = 0`;
/// the antisymmetry is imposed exactly rather than left to rounding.
fn stencil(sites: usize, period: f64, scheme: DerivScheme) -> Vec<f64> {
    let h = period / sites as f64;
    let mut w = vec![0.0; sites];
    match scheme {
        DerivScheme::Spectral => {
            let scale = 2.0 * PI / period;
            for m in 1..sites / 2 {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                w[m] = 0.5 * sign * scale / (m as f64 * PI / sites as f64).tan();
                w[sites - m] = -w[m];
            }
        }
        DerivScheme::Central2 => {
            // f_{j+1} sits at m = N − 1, f_{j−1} at m = 1
            w[1] = -1.0 / (2.0 * h);
            w[sites - 1] = 1.0 / (2.0 * h);
        }
    }
    w
}

#[derive(Clone, Copy)]
enum Axis {
    X,
    Y,
}

fn apply(f: &MatrixField, axis: Axis) -> MatrixField {
    let grid = *f.grid();
    let nn = grid.sites();
    let len = grid.site_len();
    let period = match axis {
        Axis::X => grid.lx(),
        Axis::Y => grid.ly(),
    };
    let w = stencil(nn, period, grid.scheme());
    let taps: Vec<(usize, f64)> = w.iter().copied().enumerate().take(nn / 2).filter(|(_, c)| *c != 0.0).collect();
    let src = f.data();
    let mut out = MatrixField::zeros(grid);
    out.data_mut().par_chunks_mut(len).with_min_len(64).enumerate().for_each(|(s, o)| {
        let (iy, ix) = (s / nn, s % nn);
        let site = |m: usize, back: bool| {
            let shift = if back { nn - m } else { m };
            match axis {
                Axis::X => iy * nn + (ix + shift) % nn,
                Axis::Y => ((iy + shift) % nn) * nn + ix,
            }
        };
        // w[m] f_{j−m} + w[N−m] f_{j+m} = w[m] (f_{j−m} − f_{j+m})
        for &(m, c) in &taps {
            let (b, a) = (site(m, true), site(m, false));
            let back = &src[b * len..(b + 1) * len];
            let ahead = &src[a * len..(a + 1) * len];
            for k in 0..len {
                o[k] += (back[k] - ahead[k]) * c;
            }
        }
    });
    out
}

/// `∂f/∂x`.
pub fn dx(f: &MatrixField) -> MatrixField {
    apply(f, Axis::X)
}

/// `∂f/∂y`.
pub fn dy(f: &MatrixField) -> MatrixField {
    apply(f, Axis::Y)
}

/// `∂f/∂z̄ = ½(∂ₓ + i∂_y) f`.
pub fn dbar(f: &MatrixField) -> MatrixField {
    let fx = dx(f);
    let fy = dy(f);
    let half_i = Complex64::new(0.0, 0.5);
    fx.zip_sites(&fy, |a, b, o| {
        for k in 0..a.len() {
            o[k] = a[k] * 0.5 + b[k] * half_i;
        }
    })
}

/// `∂f/∂z = ½(∂ₓ − i∂_y) f`.
pub fn d(f: &MatrixField) -> MatrixField {
    let fx = dx(f);
    let fy = dy(f);
    let half_i = Complex64::new(0.0, 0.5);
    fx.zip_sites(&fy, |a, b, o| {
        for k in 0..a.len() {
            o[k] = a[k] * 0.5 - b[k] * half_i;
        }
    })
}

/// Derivative stencil exposed for diagnostics.
pub fn weights(grid: &Grid, along_x: bool) -> Vec<f64> {
    let period = if along_x { grid.lx() } else { grid.ly() };
    stencil(grid.sites(), period, grid.scheme())
}
