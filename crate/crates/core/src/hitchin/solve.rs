use serde::{Deserialize, Serialize};

use super::{energy_gradient, residuals};
use crate::error::Result;
use crate::lattice::{Configuration, HiggsField, UnitaryConnection};

/// Armijo sufficient-decrease constant.
const ARMIJO: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SolveOptions {
    pub max_iters: usize,
    pub tol: f64,
    pub step0: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { max_iters: 5000, tol: 1e-16, step0: 1.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Converged,
    MaxIters,
    Diverged,
}

/// One line of the solver trace. Iteration 0 is the initial state and has
/// step 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolveRecord {
    pub iteration: usize,
    pub energy: f64,
    pub r1_norm: f64,
    pub r2_norm: f64,
    pub step: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveTrace {
    pub records: Vec<SolveRecord>,
    pub status: SolveStatus,
}

impl SolveTrace {
    pub fn final_energy(&self) -> f64 {
        self.records.last().map_or(f64::NAN, |r| r.energy)
    }

    pub fn iterations(&self) -> usize {
        self.records.last().map_or(0, |r| r.iteration)
    }

    /// One JSON object per line.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("record serializes"));
            out.push('\n');
        }
        out
    }
}

fn record(iteration: usize, c: &Configuration, step: f64) -> SolveRecord {
    let r = residuals(c);
    let (n1, n2) = r.norms;
    SolveRecord { iteration, energy: n1 * n1 + n2 * n2, r1_norm: n1, r2_norm: n2, step }
}

/// Gradient descent on the energy with backtracking line search.
///
/// Each iteration first tries twice the previously accepted step (starting
/// from `step0`) and halves until the Armijo condition
/// `E(c − sG) ≤ E(c) − 1e-4 · s · ‖G‖²` holds. The run is declared diverged
/// when the trial step falls below `1e-12 · step0`.
pub fn solve(c0: &Configuration, opts: &SolveOptions) -> Result<(Configuration, SolveTrace)> {
    c0.ensure_finite()?;
    let mut c = c0.clone();
    let mut current = record(0, &c, 0.0);
    let mut records = vec![current];
    let min_step = 1e-12 * opts.step0;
    let mut step = opts.step0;

    let status = loop {
        if current.energy <= opts.tol {
            break SolveStatus::Converged;
        }
        if current.iteration >= opts.max_iters {
            break SolveStatus::MaxIters;
        }
        let (ga, gp) = energy_gradient(&c);
        let gnorm2 = ga.norm_sqr() + gp.norm_sqr();
        let mut trial = step;
        let accepted = loop {
            if trial < min_step {
                break None;
            }
            let candidate = Configuration {
                conn: UnitaryConnection::new(c.a_zbar().axpy(-trial, &ga)),
                higgs: HiggsField::new(c.phi_z().axpy(-trial, &gp)),
            };
            let rec = record(current.iteration + 1, &candidate, trial);
            if rec.energy.is_finite() && rec.energy <= current.energy - ARMIJO * trial * gnorm2 {
                break Some((candidate, rec));
            }
            trial *= 0.5;
        };
        match accepted {
            Some((next, rec)) => {
                c = next;
                current = rec;
                records.push(rec);
                step = 2.0 * trial;
            }
            None => break SolveStatus::Diverged,
        }
    };
    Ok((c, SolveTrace { records, status }))
}
