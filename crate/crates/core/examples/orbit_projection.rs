//! Tangent vectors along gauge orbits and the projection onto their
//! `g`-orthogonal complement.
//!
//! ```bash
//! cargo run --example orbit_projection
//! ```

use std::f64::consts::PI;

use hitchin_lattice::fixtures::{random_configuration, random_tangent};
use hitchin_lattice::hitchin::{orbit_tangent, project_orthogonal_with_info};
use hitchin_lattice::hk::metric_g;
use hitchin_lattice::lattice::{random_field, DerivScheme, FieldFlag, Grid};

fn main() -> hitchin_lattice::Result<()> {
    let grid = Grid::new(16, 2.0 * PI, 2.0 * PI, 2, DerivScheme::Spectral)?;
    let c = random_configuration(4, &grid, 2, 0.5)?;
    let psi = random_field(8, &grid, 2, FieldFlag::AntiHermitian)?;
    let gauge_dir = orbit_tangent(&psi, &c)?;

    let x = random_tangent(6, &grid, 4)?;
    let mixed = x.add(&gauge_dir);
    let p = project_orthogonal_with_info(&mixed, &c)?;
    println!("CG iterations {}, relative residual {:.2e}", p.iterations, p.relative_residual);

    let probe = orbit_tangent(&random_field(10, &grid, 2, FieldFlag::AntiHermitian)?, &c)?;
    println!("g(P X, orbit direction) {:.2e}", metric_g(&p.tangent, &probe)?);

    let pure = project_orthogonal_with_info(&gauge_dir, &c)?;
    println!("|P(pure gauge)| / |pure gauge| {:.2e}", pure.tangent.max_norm() / gauge_dir.max_norm());

    let twice = project_orthogonal_with_info(&p.tangent, &c)?;
    println!("|P P X - P X| {:.2e}", twice.tangent.max_diff(&p.tangent));
    Ok(())
}
