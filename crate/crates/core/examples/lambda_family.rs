//! The family of complex connections `A + λΦ + λ⁻¹Φ*` on the unit circle:
//! flatness, its Laurent decomposition, and the curvature of the twistor
//! line bundle.
//!
//! ```bash
//! cargo run --example lambda_family
//! ```

use std::f64::consts::PI;

use hitchin_lattice::family::{f_lambda, f_lambda_from_omegas, flatness_scan, laurent_fit, omega123, root_of_unity};
use hitchin_lattice::fixtures::{diag_higgs, random_configuration, random_tangent};
use hitchin_lattice::lattice::{DerivScheme, Grid};
use num_complex::Complex64;

fn main() -> hitchin_lattice::Result<()> {
    let grid = Grid::new(16, 2.0 * PI, 2.0 * PI, 2, DerivScheme::Spectral)?;

    for (name, c) in [("exact", diag_higgs(grid)?), ("random", random_configuration(5, &grid, 2, 0.3)?)] {
        let scan = flatness_scan(&c, 8)?;
        println!(
            "{name}: max |F(B_l)| {:.3e}, Laurent residual {:.3e}",
            scan.max_flatness(),
            scan.max_decomposition_residual()
        );
    }

    let x = random_tangent(1, &grid, 4)?;
    let y = random_tangent(2, &grid, 4)?;
    let w = omega123(&x, &y)?;
    println!("omega_1 {:.5}  omega_2 {:.5}  omega_3 {:.5}", w[0], w[1], w[2]);
    for k in 0..4 {
        let l = root_of_unity(k, 4);
        println!("l = {l:.2}: F direct {:.6}  from omegas {:.6}", f_lambda(&x, &y, l)?, f_lambda_from_omegas(&w, l));
    }

    // three samples of a Laurent polynomial determine it
    let samples: Vec<(Complex64, Complex64)> = (0..3)
        .map(|k| root_of_unity(k, 3))
        .map(|l| Ok((l, f_lambda(&x, &y, l)?)))
        .collect::<hitchin_lattice::Result<_>>()?;
    let fit = laurent_fit([samples[0], samples[1], samples[2]])?;
    let pre = Complex64::new(0.0, 1.0 / (2.0 * PI));
    println!("fitted coefficients / (i/2pi): {:.5} {:.5} {:.5}", fit[0] / pre, fit[1] / pre, fit[2] / pre);
    Ok(())
}
