//! Gradient flow onto a solution of the self-duality equations, starting from
//! a perturbed diagonal Higgs field.
//!
//! ```bash
//! cargo run --release --example solve_self_duality
//! ```

use std::f64::consts::PI;

use hitchin_lattice::fixtures::diag_higgs_perturbed;
use hitchin_lattice::hitchin::{residuals, solve, SolveOptions};
use hitchin_lattice::lattice::{DerivScheme, Grid};

fn main() -> hitchin_lattice::Result<()> {
    let grid = Grid::new(16, 2.0 * PI, 2.0 * PI, 2, DerivScheme::Spectral)?;
    let start = diag_higgs_perturbed(grid, 3, 1e-2)?;
    let opts = SolveOptions { tol: 1e-14, ..SolveOptions::default() };
    let (solved, trace) = solve(&start, &opts)?;

    let stride = (trace.records.len() / 10).max(1);
    println!("{:>6} {:>12} {:>12} {:>12} {:>10}", "iter", "energy", "|r1|", "|r2|", "step");
    for r in trace.records.iter().step_by(stride).chain(trace.records.last()) {
        println!("{:>6} {:>12.4e} {:>12.4e} {:>12.4e} {:>10.3e}", r.iteration, r.energy, r.r1_norm, r.r2_norm, r.step);
    }
    println!("status {:?} after {} iterations", trace.status, trace.iterations());

    let r = residuals(&solved);
    println!("r1 dxdy coefficient anti-Hermitian defect {:.2e}", r.r1_dxdy().anti_hermitian_defect());
    Ok(())
}
