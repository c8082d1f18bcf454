//! Matrix fields on the torus, their derivatives, and the curvature of a
//! unitary connection.
//!
//! ```bash
//! cargo run --example fields_and_derivatives
//! ```

use std::f64::consts::PI;

use hitchin_lattice::fixtures::{band_limited_gauge, random_configuration};
use hitchin_lattice::lattice::{
    curvature, d, dbar, gauge_act, random_field, DerivScheme, FieldFlag, Grid, MatrixField,
};
use num_complex::Complex64;

fn main() -> hitchin_lattice::Result<()> {
    // f = e^{i(x + 2y)} times a fixed matrix
    let m = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 2.0), Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0)];
    let wave = |x: f64, y: f64| Complex64::from_polar(1.0, x + 2.0 * y);

    println!("{:>4} {:>14} {:>14}", "N", "spectral err", "central2 err");
    for sites in [8, 16, 32, 64] {
        let grid = Grid::new(sites, 2.0 * PI, 2.0 * PI, 2, DerivScheme::Spectral)?;
        let exact = MatrixField::scalar_times(grid, &m, |x, y| 0.5 * (Complex64::new(0.0, 1.0) - 2.0) * wave(x, y))?;
        let mut errs = Vec::new();
        for scheme in [DerivScheme::Spectral, DerivScheme::Central2] {
            let g = grid.with_scheme(scheme);
            let f = MatrixField::scalar_times(g, &m, wave)?;
            errs.push(dbar(&f).max_diff(&MatrixField::from_data(g, exact.data().to_vec())?));
        }
        println!("{sites:>4} {:>14.3e} {:>14.3e}", errs[0], errs[1]);
    }

    let grid = Grid::new(16, 2.0 * PI, 2.0 * PI, 2, DerivScheme::Spectral)?;
    let f = random_field(7, &grid, 4, FieldFlag::General)?;
    println!("d(f*) - (dbar f)*      {:.2e}", d(&f.adjoint()).max_diff(&dbar(&f).adjoint()));

    // exp(ψ) is not band-limited, so covariance is checked on a finer grid
    let fine = Grid::new(32, 2.0 * PI, 2.0 * PI, 2, DerivScheme::Spectral)?;
    let c = random_configuration(3, &fine, 4, 1.0)?;
    let g = band_limited_gauge(9, &fine, 1, 1.0)?;
    let moved = gauge_act(&g, &c)?;
    let covariance = curvature(&moved.conn).max_diff(&curvature(&c.conn).conjugate_by(g.field()));
    println!("F(g.A) - g F(A) g^-1  {covariance:.2e}");
    Ok(())
}
