use std::time::Instant;

use indexmap::IndexMap;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::config::RunConfig;
use crate::compare::{rel_diff, rel_diff_c};
use crate::error::Result;
use crate::family::{
    f_lambda, f_lambda_from_omegas, flatness, flatness_scan, laurent_coefficients, laurent_eval, omega123,
    root_of_unity, tau_curvature, trivial_bundle_curvatures,
};
use crate::fixtures::{band_limited_gauge, constant_gauge, diag_higgs, random_configuration, random_tangent, subseed};
use crate::hitchin::energy;
use crate::hk::{
    apply_i, apply_j, apply_k, dtheta, hitchin_g1, metric_g, metric_hodge, omega, q1, q2, q_complex, theta1, theta2,
    Potential,
};
use crate::lattice::{gauge_act, gauge_act_tangent, integrate_wedge, Configuration, Grid, TangentVector};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub pass: bool,
    pub measured: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    pub grid: Grid,
    pub seed: u64,
    pub scheme: crate::lattice::DerivScheme,
    pub pairs: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub checks: IndexMap<String, CheckResult>,
    pub environment: Environment,
    /// Wall-clock seconds per suite.
    pub timing: IndexMap<String, f64>,
}

impl VerificationReport {
    pub fn failing(&self) -> Vec<&str> {
        self.checks.iter().filter(|(_, c)| !c.pass).map(|(k, _)| k.as_str()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report without its timing section, for reproducibility checks.
    pub fn numerical_content(&self) -> String {
        let mut copy = self.clone();
        copy.timing.clear();
        copy.to_json()
    }
}

struct Suite<'a> {
    cfg: &'a RunConfig,
    name: &'static str,
    checks: &'a mut IndexMap<String, CheckResult>,
}

impl Suite<'_> {
    fn record(&mut self, check: &str, measured: f64, default_tol: f64) {
        let tolerance = self.cfg.tolerance(self.name, check, default_tol);
        let pass = measured.is_finite() && measured <= tolerance;
        self.checks.insert(check.to_string(), CheckResult { pass, measured, tolerance });
    }
}

struct Context {
    grid: Grid,
    pairs: Vec<(TangentVector, TangentVector)>,
    config: Configuration,
}

fn max_over<T>(items: &[T], f: impl Fn(&T) -> Result<f64>) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for item in items {
        let v = f(item)?;
        // NaN must win
        worst = if v.is_nan() || v > worst { v } else { worst };
    }
    Ok(worst)
}

type SuiteFn = fn(&mut Suite, &Context) -> Result<()>;

/// Runs every suite in order and collects the checks.
pub fn run_verify(cfg: &RunConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let grid = cfg.grid.grid()?;
    let cutoff = grid.sites() / 4;
    let pairs = (0..cfg.pairs as u64)
        .map(|k| {
            let s = subseed(cfg.seed, 10 + k);
            Ok((random_tangent(subseed(s, 0), &grid, cutoff)?, random_tangent(subseed(s, 1), &grid, cutoff)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let config = random_configuration(subseed(cfg.seed, 1), &grid, (grid.sites() / 8).max(1), 1.0)?;
    let ctx = Context { grid, pairs, config };

    let suites: [(&'static str, SuiteFn); 10] = [
        ("quaternion", quaternion),
        ("compatibility", compatibility),
        ("identity4", identity4),
        ("q_complex", complex_form),
        ("dtheta", exactness),
        ("metric_chain", metric_chain),
        ("gauge", gauge_invariance),
        ("f_lambda", lambda_decomposition),
        ("special_lambda", special_lambda),
        ("tau", tau_identities),
    ];
    let mut checks = IndexMap::new();
    let mut timing = IndexMap::new();
    for (name, suite) in suites {
        let start = Instant::now();
        suite(&mut Suite { cfg, name, checks: &mut checks }, &ctx)?;
        timing.insert(name.to_string(), start.elapsed().as_secs_f64());
    }
    let pass = checks.values().all(|c| c.pass);
    let environment = Environment { grid, seed: cfg.seed, scheme: grid.scheme(), pairs: cfg.pairs };
    Ok(VerificationReport { pass, checks, environment, timing })
}

fn quaternion(s: &mut Suite, ctx: &Context) -> Result<()> {
    type Op = fn(&TangentVector) -> TangentVector;
    let ident: Op = |x| x.clone();
    let relations: [(&str, Op, Op, Op, f64); 9] = [
        ("quaternion_ii", apply_i, apply_i, ident, -1.0),
        ("quaternion_jj", apply_j, apply_j, ident, -1.0),
        ("quaternion_kk", apply_k, apply_k, ident, -1.0),
        ("quaternion_ij", apply_i, apply_j, apply_k, 1.0),
        ("quaternion_ji", apply_j, apply_i, apply_k, -1.0),
        ("quaternion_jk", apply_j, apply_k, apply_i, 1.0),
        ("quaternion_kj", apply_k, apply_j, apply_i, -1.0),
        ("quaternion_ki", apply_k, apply_i, apply_j, 1.0),
        ("quaternion_ik", apply_i, apply_k, apply_j, -1.0),
    ];
    for (name, outer, inner, target, sign) in relations {
        let err = max_over(&ctx.pairs, |(x, _)| Ok(outer(&inner(x)).max_diff(&target(x).scale(sign))))?;
        s.record(name, err, 1e-13);
    }
    Ok(())
}

fn compatibility(s: &mut Suite, ctx: &Context) -> Result<()> {
    let om = max_over(&ctx.pairs, |(x, y)| Ok(rel_diff(omega(x, y)?, metric_g(x, &apply_i(y))?)))?;
    s.record("compatibility_omega", om, 1e-10);
    let a = max_over(&ctx.pairs, |(x, y)| Ok(rel_diff(q1(x, y)?, metric_g(x, &apply_j(y))?)))?;
    s.record("compatibility_q1", a, 1e-10);
    let b = max_over(&ctx.pairs, |(x, y)| Ok(rel_diff(q2(x, y)?, metric_g(x, &apply_k(y))?)))?;
    s.record("compatibility_q2", b, 1e-10);

    // g(X, X) = 4 ΔA Σ|X|² makes positivity quantitative
    let samples: Vec<u64> = (0..1000).collect();
    let w = ctx.grid.cell_area();
    let pd = max_over(&samples, |k| {
        let x = random_tangent(subseed(s.cfg.seed, 5000 + k), &ctx.grid, 1)?;
        let gxx = metric_g(&x, &x)?;
        let norm = 4.0 * w * x.euclidean_norm().powi(2);
        Ok(if gxx > 0.0 { (gxx / norm - 1.0).abs() } else { f64::INFINITY })
    })?;
    s.record("positive_definite", pd, 1e-10);
    Ok(())
}

fn identity4(s: &mut Suite, ctx: &Context) -> Result<()> {
    let err = max_over(&ctx.pairs, |(x, y)| {
        let lhs = integrate_wedge(&x.alpha01().conj(), &y.alpha10().conj())?;
        let rhs = integrate_wedge(&x.alpha10(), &y.alpha01())?;
        Ok(rel_diff_c(lhs, rhs))
    })?;
    s.record("identity4", err, 1e-10);
    Ok(())
}

fn complex_form(s: &mut Suite, ctx: &Context) -> Result<()> {
    let err = max_over(&ctx.pairs, |(x, y)| Ok(rel_diff_c(q_complex(x, y)?, Complex64::new(q1(x, y)?, q2(x, y)?))))?;
    s.record("q_complex_sum", err, 1e-10);
    Ok(())
}

fn exactness(s: &mut Suite, ctx: &Context) -> Result<()> {
    let few = &ctx.pairs[..ctx.pairs.len().min(5)];
    for (which, label, form) in [
        (Potential::Theta1, "dtheta1", q1 as fn(&TangentVector, &TangentVector) -> Result<f64>),
        (Potential::Theta2, "dtheta2", q2),
    ] {
        let analytic = max_over(few, |(x, y)| Ok(rel_diff(dtheta(which, &ctx.config, x, y)?.analytic, form(x, y)?)))?;
        s.record(&format!("{label}_analytic"), analytic, 1e-10);
        let fd =
            max_over(few, |(x, y)| Ok(rel_diff(dtheta(which, &ctx.config, x, y)?.finite_difference, form(x, y)?)))?;
        s.record(&format!("{label}_fd"), fd, 1e-6);
    }
    Ok(())
}

fn metric_chain(s: &mut Suite, ctx: &Context) -> Result<()> {
    let g1 = max_over(&ctx.pairs, |(x, _)| Ok(rel_diff(metric_g(x, x)?, hitchin_g1(x)?.re)))?;
    s.record("metric_g1", g1, 1e-10);
    let hodge = max_over(&ctx.pairs, |(x, y)| Ok(rel_diff(metric_g(x, y)?, metric_hodge(x, y)?.re)))?;
    s.record("metric_hodge", hodge, 1e-10);
    Ok(())
}

type PairForm = fn(&TangentVector, &TangentVector) -> Result<f64>;

fn invariance_errors(
    c: &Configuration,
    gauge: &crate::lattice::GaugeTransform,
    pairs: &[(TangentVector, TangentVector)],
) -> Result<Vec<(&'static str, f64)>> {
    let gc = gauge_act(gauge, c)?;
    let forms: [(&str, PairForm); 4] = [("g", metric_g), ("omega", omega), ("q1", q1), ("q2", q2)];
    let mut out = Vec::new();
    for (name, form) in forms {
        let e = max_over(pairs, |(x, y)| {
            Ok(rel_diff(form(&gauge_act_tangent(gauge, x)?, &gauge_act_tangent(gauge, y)?)?, form(x, y)?))
        })?;
        out.push((name, e));
    }
    let t1 = max_over(pairs, |(x, _)| Ok(rel_diff(theta1(&gc, &gauge_act_tangent(gauge, x)?)?, theta1(c, x)?)))?;
    let t2 = max_over(pairs, |(x, _)| Ok(rel_diff(theta2(&gc, &gauge_act_tangent(gauge, x)?)?, theta2(c, x)?)))?;
    out.push(("theta1", t1));
    out.push(("theta2", t2));
    out.push(("energy", rel_diff(energy(&gc), energy(c))));
    Ok(out)
}

fn gauge_invariance(s: &mut Suite, ctx: &Context) -> Result<()> {
    let few = &ctx.pairs[..ctx.pairs.len().min(10)];
    let g = constant_gauge(subseed(s.cfg.seed, 2), &ctx.grid)?;
    for (name, e) in invariance_errors(&ctx.config, &g, few)? {
        s.record(&format!("gauge_constant_{name}"), e, 1e-12);
    }

    // non-constant gauge transformations are checked at N = 32
    let big = Grid::new(32, ctx.grid.lx(), ctx.grid.ly(), ctx.grid.n(), ctx.grid.scheme())?;
    let c = random_configuration(subseed(s.cfg.seed, 3), &big, 4, 1.0)?;
    let gb = band_limited_gauge(subseed(s.cfg.seed, 4), &big, 1, 1.0)?;
    let pairs = (0..3)
        .map(|k| {
            let sd = subseed(s.cfg.seed, 900 + k);
            Ok((random_tangent(subseed(sd, 0), &big, 4)?, random_tangent(subseed(sd, 1), &big, 4)?))
        })
        .collect::<Result<Vec<_>>>()?;
    for (name, e) in invariance_errors(&c, &gb, &pairs)? {
        s.record(&format!("gauge_band_limited_{name}"), e, 1e-6);
    }
    Ok(())
}

fn lambda_decomposition(s: &mut Suite, ctx: &Context) -> Result<()> {
    let count = s.cfg.lambda_count;
    let lambdas: Vec<Complex64> = (0..count).map(|k| root_of_unity(k, count)).collect();
    let few = &ctx.pairs[..ctx.pairs.len().min(20)];
    let err = max_over(few, |(x, y)| {
        let w = omega123(x, y)?;
        max_over(&lambdas, |l| Ok(rel_diff_c(f_lambda(x, y, *l)?, f_lambda_from_omegas(&w, *l))))
    })?;
    s.record("f_lambda_decomposition", err, 1e-10);

    let coeffs = laurent_coefficients(&ctx.config);
    let per_site = max_over(&lambdas, |l| Ok(flatness(&ctx.config, *l)?.max_diff(&laurent_eval(&coeffs, *l))))?;
    s.record("flatness_decomposition", per_site, 1e-11);

    let exact = flatness_scan(&diag_higgs(ctx.grid)?, count)?;
    s.record("flatness_exact", exact.max_flatness(), 1e-12);
    Ok(())
}

fn special_lambda(s: &mut Suite, ctx: &Context) -> Result<()> {
    let pre = I / (2.0 * std::f64::consts::PI);
    let cases: [(&str, Complex64, Complex64, bool); 4] = [
        ("f_lambda_plus_i", I, -I, true),
        ("f_lambda_minus_i", -I, I, true),
        ("f_lambda_plus_one", Complex64::new(1.0, 0.0), -I, false),
        ("f_lambda_minus_one", Complex64::new(-1.0, 0.0), I, false),
    ];
    for (name, lambda, coeff, uses_q1) in cases {
        let err = max_over(&ctx.pairs, |(x, y)| {
            let q = if uses_q1 { q1(x, y)? } else { q2(x, y)? };
            Ok(rel_diff_c(f_lambda(x, y, lambda)?, pre * (omega(x, y)? + coeff * q)))
        })?;
        s.record(name, err, 1e-10);
    }
    Ok(())
}

fn tau_identities(s: &mut Suite, ctx: &Context) -> Result<()> {
    let pi = std::f64::consts::PI;
    let tau = max_over(&ctx.pairs, |(x, y)| Ok(rel_diff_c(tau_curvature(x, y)?, I / pi * omega(x, y)?)))?;
    s.record("tau_omega", tau, 1e-10);
    let first = max_over(&ctx.pairs, |(x, y)| {
        Ok(rel_diff_c(trivial_bundle_curvatures(x, y)?.0, Complex64::new(q1(x, y)? / pi, 0.0)))
    })?;
    s.record("tau_q1", first, 1e-10);
    let second = max_over(&ctx.pairs, |(x, y)| {
        Ok(rel_diff_c(trivial_bundle_curvatures(x, y)?.1, Complex64::new(q2(x, y)? / pi, 0.0)))
    })?;
    s.record("tau_q2", second, 1e-10);
    Ok(())
}
