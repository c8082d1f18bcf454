use std::fs;
use std::path::Path;

use serde_json::json;

use super::config::RunConfig;
use super::verify::run_verify;
use crate::error::{Error, Result};
use crate::family::{flatness, flatness_scan, laurent_eval, laurent_fit_fields, root_of_unity};
use crate::fixtures::{diag_higgs, diag_higgs_perturbed, random_configuration, random_tangent, subseed};
use crate::hitchin::{residuals, solve, SolveStatus};
use crate::hk::BilinearReport;
use crate::lattice::io::{read_configuration, write_configuration};
use crate::lattice::Configuration;

fn write(out: &Path, name: &str, text: &str) -> Result<()> {
    fs::create_dir_all(out)?;
    fs::write(out.join(name), text)?;
    Ok(())
}

/// The starting configuration: the input file when given, else the fixture.
pub fn initial_configuration(cfg: &RunConfig) -> Result<Configuration> {
    if let Some(path) = &cfg.input {
        if !path.exists() {
            return Err(Error::InvalidArgument(format!("input file not found: {}", path.display())));
        }
        return read_configuration(path, cfg.grid.deriv_scheme);
    }
    let grid = cfg.grid.grid()?;
    match cfg.fixture.as_str() {
        "zero" => Ok(Configuration::zero(grid)),
        "diag-higgs" => diag_higgs(grid),
        "diag-higgs-perturbed" => diag_higgs_perturbed(grid, cfg.seed, cfg.perturbation),
        "random" => random_configuration(cfg.seed, &grid, (grid.sites() / 8).max(1), 1.0),
        other => Err(Error::InvalidArgument(format!("unknown fixture {other:?}"))),
    }
}

pub fn verify(cfg: &RunConfig) -> Result<i32> {
    let report = run_verify(cfg)?;
    write(&cfg.out, "report.json", &report.to_json())?;
    let total = report.checks.len();
    let failing = report.failing();
    for name in &failing {
        let c = &report.checks[*name];
        println!("FAIL {name}: measured {:e} > tolerance {:e}", c.measured, c.tolerance);
    }
    println!("{} of {total} checks passed", total - failing.len());
    Ok(if report.pass { 0 } else { 1 })
}

pub fn solve_command(cfg: &RunConfig) -> Result<i32> {
    let c0 = initial_configuration(cfg)?;
    let (c, trace) = solve(&c0, &cfg.solver)?;
    write(&cfg.out, "trace.jsonl", &trace.to_jsonl())?;
    fs::create_dir_all(&cfg.out)?;
    write_configuration(&cfg.out.join("final.json"), &c)?;
    let last = trace.records.last().copied().expect("trace has the initial record");
    let summary = json!({
        "status": trace.status,
        "iterations": last.iteration,
        "energy": last.energy,
        "r1_norm": last.r1_norm,
        "r2_norm": last.r2_norm,
    });
    write(&cfg.out, "report.json", &serde_json::to_string_pretty(&summary)?)?;
    println!("status {:?}, iterations {}, energy {:e}", trace.status, last.iteration, last.energy);
    Ok(if trace.status == SolveStatus::Converged { 0 } else { 1 })
}

/// Largest per-site error when `F(B_λ)` on the `K`-grid is predicted from a
/// Laurent fit at the three cube roots of unity, relative to the field scale.
pub fn laurent_cross_prediction(c: &Configuration, count: usize) -> Result<f64> {
    let fitted = laurent_fit_fields(c, [root_of_unity(0, 3), root_of_unity(1, 3), root_of_unity(2, 3)])?;
    let mut worst: f64 = 0.0;
    for k in 0..count {
        let lambda = root_of_unity(k, count);
        let f = flatness(c, lambda)?;
        worst = worst.max(f.max_diff(&laurent_eval(&fitted, lambda)) / f.max_frobenius().max(1.0));
    }
    Ok(worst)
}

pub fn family(cfg: &RunConfig) -> Result<i32> {
    let c = initial_configuration(cfg)?;
    let scan = flatness_scan(&c, cfg.lambda_count)?;
    let cross = laurent_cross_prediction(&c, cfg.lambda_count)?;
    let decomposition_tol = cfg.tolerance("family", "decomposition", 1e-11);
    let cross_tol = cfg.tolerance("family", "laurent_cross_prediction", 1e-10);
    let pass = scan.max_decomposition_residual() <= decomposition_tol && cross <= cross_tol;

    let mut value = serde_json::to_value(&scan)?;
    let obj = value.as_object_mut().expect("scan serializes to an object");
    obj.insert("laurent_cross_prediction".into(), json!(cross));
    obj.insert("pass".into(), json!(pass));
    write(&cfg.out, "report.json", &serde_json::to_string_pretty(&value)?)?;
    println!(
        "max flatness {:e}, max decomposition residual {:e}, Laurent cross-prediction {:e}",
        scan.max_flatness(),
        scan.max_decomposition_residual(),
        cross
    );
    Ok(if pass { 0 } else { 1 })
}

pub fn report(cfg: &RunConfig) -> Result<i32> {
    let c = initial_configuration(cfg)?;
    let grid = *c.grid();
    let cutoff = grid.sites() / 4;
    let x = random_tangent(subseed(cfg.seed, 20), &grid, cutoff)?;
    let y = random_tangent(subseed(cfg.seed, 21), &grid, cutoff)?;
    let bilinear = BilinearReport::evaluate(&x, &y)?;
    let r = residuals(&c);
    let value = json!({
        "bilinear": bilinear,
        "residuals": {
            "r1_norm": r.norms.0,
            "r2_norm": r.norms.1,
            "energy": r.norms.0 * r.norms.0 + r.norms.1 * r.norms.1,
        },
    });
    write(&cfg.out, "report.json", &serde_json::to_string_pretty(&value)?)?;
    let tol = cfg.tolerance("report", "identity_residuals", 1e-10);
    println!("g {:e}, omega {:e}, q1 {:e}, q2 {:e}", bilinear.g, bilinear.omega, bilinear.q1, bilinear.q2);
    Ok(if bilinear.max_residual() <= tol { 0 } else { 1 })
}
