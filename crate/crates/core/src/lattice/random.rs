//! Seeded band-limited random fields.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use super::field::MatrixField;
use super::grid::Grid;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldFlag {
    General,
    AntiHermitian,
    Unitary,
}

/// Band-limited random field with unit per-entry variance.
///
/// Every Fourier mode with `max(|kx|, |ky|) ≤ cutoff` gets an independent
/// complex Gaussian coefficient; modes above the cutoff are zero.
pub fn random_field(seed: u64, grid: &Grid, cutoff: usize, flag: FieldFlag) -> Result<MatrixField> {
    random_field_scaled(seed, grid, cutoff, flag, 1.0)
}

/// As [`random_field`], with every Fourier coefficient multiplied by
/// `amplitude` before the anti-Hermitian projection or exponential.
pub fn random_field_scaled(
    seed: u64,
    grid: &Grid,
    cutoff: usize,
    flag: FieldFlag,
    amplitude: f64,
) -> Result<MatrixField> {
    let nn = grid.sites();
    let limit = nn / 4;
    if cutoff > limit {
        return Err(Error::CutoffTooLarge { cutoff, limit });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = 2 * cutoff + 1;
    let sigma = amplitude / (2.0 * (width * width) as f64).sqrt();
    let len = grid.site_len();

    // phase[k][i] = exp(2πi·k·i/N) with k offset by cutoff
    let phase: Vec<Vec<Complex64>> = (0..width)
        .map(|kk| {
            let k = kk as i64 - cutoff as i64;
            (0..nn)
                .map(|i| {
                    let r = (k * i as i64).rem_euclid(nn as i64) as f64;
                    Complex64::from_polar(1.0, 2.0 * PI * r / nn as f64)
                })
                .collect()
        })
        .collect();

    let mut data = vec![Complex64::new(0.0, 0.0); grid.len()];
    for entry in 0..len {
        let mut coeff = vec![Complex64::new(0.0, 0.0); width * width];
        for c in coeff.iter_mut() {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            *c = Complex64::new(re, im) * sigma;
        }
        // partial[iy][kx] = Σ_ky coeff[ky][kx] e^{2πi ky iy / N}
        let mut partial = vec![Complex64::new(0.0, 0.0); nn * width];
        for iy in 0..nn {
            for kx in 0..width {
                let mut acc = Complex64::new(0.0, 0.0);
                for ky in 0..width {
                    acc += coeff[ky * width + kx] * phase[ky][iy];
                }
                partial[iy * width + kx] = acc;
            }
        }
        for iy in 0..nn {
            for ix in 0..nn {
                let mut acc = Complex64::new(0.0, 0.0);
                for kx in 0..width {
                    acc += partial[iy * width + kx] * phase[kx][ix];
                }
                data[(iy * nn + ix) * len + entry] = acc;
            }
        }
    }
    let field = MatrixField::from_data(*grid, data)?;
    Ok(match flag {
        FieldFlag::General => field,
        FieldFlag::AntiHermitian => anti_hermitian_part(&field),
        FieldFlag::Unitary => anti_hermitian_part(&field).expm(),
    })
}

/// `(f − f*)/2` per site.
pub fn anti_hermitian_part(f: &MatrixField) -> MatrixField {
    (f - &f.adjoint()).scale_real(0.5)
}
