//! The metric, the three complex structures and the symplectic forms on a
//! pair of random tangent vectors.
//!
//! ```bash
//! cargo run --example hyperkahler_identities -- 42
//! ```

use std::f64::consts::PI;

use hitchin_lattice::fixtures::{random_configuration, random_tangent};
use hitchin_lattice::hk::{
    apply_i, apply_j, apply_k, dtheta, kw_forms, metric_g, prequantum_curvatures, BilinearReport, Potential,
};
use hitchin_lattice::lattice::{DerivScheme, Grid};

fn main() -> hitchin_lattice::Result<()> {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let grid = Grid::new(16, 2.0 * PI, 2.0 * PI, 2, DerivScheme::Spectral)?;
    let x = random_tangent(seed, &grid, 4)?;
    let y = random_tangent(seed + 1, &grid, 4)?;

    let report = BilinearReport::evaluate(&x, &y)?;
    println!("{}", report.to_json());

    let ij = apply_i(&apply_j(&x)).max_diff(&apply_k(&x));
    println!("|IJ X - K X|     {ij:.2e}");
    println!("g(X, X)          {:.6}", metric_g(&x, &x)?);

    let (wi, wj, wk) = kw_forms(&x, &y)?;
    println!("(w_I, w_J, w_K)  ({wi:.6}, {wj:.6}, {wk:.6})");
    let [c0, c1, c2] = prequantum_curvatures(&x, &y)?;
    println!("line bundle curvatures  {c0:.4}  {c1:.4}  {c2:.4}");

    let c = random_configuration(seed + 2, &grid, 2, 1.0)?;
    for which in [Potential::Theta1, Potential::Theta2] {
        let v = dtheta(which, &c, &x, &y)?;
        println!("{which:?}: analytic {:.10} finite difference {:.10}", v.analytic, v.finite_difference);
    }
    Ok(())
}
