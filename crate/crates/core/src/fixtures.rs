//! Seeded configurations, tangent vectors and gauge transformations used by
//! the verification suites, the examples and the tests.

use num_complex::Complex64;

use crate::error::Result;
use crate::lattice::matrix::diag;
use crate::lattice::{random_field_scaled, Configuration, FieldFlag, GaugeTransform, Grid, TangentVector};

/// Deterministic sub-seed `k` of `seed`.
pub fn subseed(seed: u64, k: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k.wrapping_mul(0xD1B5_4A32_D192_ED03)) ^ k
}

/// Random band-limited tangent vector with unit per-entry variance.
pub fn random_tangent(seed: u64, grid: &Grid, cutoff: usize) -> Result<TangentVector> {
    TangentVector::new(
        random_field_scaled(subseed(seed, 0), grid, cutoff, FieldFlag::General, 1.0)?,
        random_field_scaled(subseed(seed, 1), grid, cutoff, FieldFlag::General, 1.0)?,
    )
}

/// Random band-limited configuration with per-entry standard deviation
/// `amplitude`.
pub fn random_configuration(seed: u64, grid: &Grid, cutoff: usize, amplitude: f64) -> Result<Configuration> {
    Configuration::new(
        random_field_scaled(subseed(seed, 2), grid, cutoff, FieldFlag::General, amplitude)?,
        random_field_scaled(subseed(seed, 3), grid, cutoff, FieldFlag::General, amplitude)?,
    )
}

/// `diag(1, −1, 1, −1, …)`.
pub fn alternating_diag(n: usize) -> Vec<Complex64> {
    let entries: Vec<Complex64> = (0..n).map(|i| Complex64::new(if i % 2 == 0 { 1.0 } else { -1.0 }, 0.0)).collect();
    diag(&entries)
}

/// The exact solution `A = 0`, `φ_z = diag(1, −1, …)`.
pub fn diag_higgs(grid: Grid) -> Result<Configuration> {
    Configuration::constant_higgs(grid, &alternating_diag(grid.n()))
}

/// [`diag_higgs`] plus band-limited noise of amplitude `eps` in both
/// components.
pub fn diag_higgs_perturbed(grid: Grid, seed: u64, eps: f64) -> Result<Configuration> {
    let cutoff = 2.min(grid.sites() / 4);
    let base = diag_higgs(grid)?;
    let noise = random_configuration(seed, &grid, cutoff, eps)?;
    Configuration::new(base.a_zbar() + noise.a_zbar(), base.phi_z() + noise.phi_z())
}

/// Band-limited non-constant gauge transformation `exp(ψ)` with
/// anti-Hermitian generator of amplitude `amplitude`.
pub fn band_limited_gauge(seed: u64, grid: &Grid, cutoff: usize, amplitude: f64) -> Result<GaugeTransform> {
    GaugeTransform::new(random_field_scaled(subseed(seed, 4), grid, cutoff, FieldFlag::Unitary, amplitude)?)
}

/// Constant unitary gauge transformation.
pub fn constant_gauge(seed: u64, grid: &Grid) -> Result<GaugeTransform> {
    GaugeTransform::new(random_field_scaled(subseed(seed, 5), grid, 0, FieldFlag::Unitary, 3.0)?)
}
