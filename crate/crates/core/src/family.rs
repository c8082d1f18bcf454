//! The circle of complex connections `B_λ = A + λΦ^{1,0} + λ⁻¹Φ^{1,0}*`,
//! their curvature, and the curvature 2-forms `F_λ` on tangent vectors.
//!
//! `F(B_λ) = r1 + λ r2 + λ⁻¹ r̃2` per site, where `r1`, `r2` are the Hitchin
//! residuals and `r̃2 = ∂_z φ_z* + [a_z, φ_z*]` is the coefficient of
//! `d'_A Φ^{1,0}*`; the `λ²` and `λ⁻²` terms vanish since `dz∧dz = 0`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hitchin::residuals;
use crate::hk::omega;
use crate::lattice::{d, dbar, integrate_wedge, Configuration, MatrixField, OneForm, TangentVector};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Accepted deviation of `|λ|` from 1.
pub const UNIT_TOL: f64 = 1e-12;

fn check_unit(lambda: Complex64) -> Result<()> {
    let modulus = lambda.norm();
    if (modulus - 1.0).abs() <= UNIT_TOL {
        Ok(())
    } else {
        Err(Error::LambdaNotUnit { modulus })
    }
}

/// `λ_k = exp(2πik/K)`.
pub fn root_of_unity(k: usize, count: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / count as f64)
}

/// A `GL(n, ℂ)` connection with independent `dz` and `dz̄` coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexConnection {
    pub b_z: MatrixField,
    pub b_zbar: MatrixField,
}

impl ComplexConnection {
    /// `dz∧dz̄` coefficient of `F(B) = ∂_z b_z̄ − ∂_z̄ b_z + [b_z, b_z̄]`.
    pub fn curvature(&self) -> MatrixField {
        &(&d(&self.b_zbar) - &dbar(&self.b_z)) + &self.b_z.commutator(&self.b_zbar)
    }
}

/// `b_z = −a_z̄* + λφ_z`, `b_z̄ = a_z̄ + λ⁻¹φ_z*`.
pub fn b_lambda(c: &Configuration, lambda: Complex64) -> Result<ComplexConnection> {
    check_unit(lambda)?;
    let phi = c.phi_z();
    let b_z = &c.conn.a_z() + &phi.scale(lambda);
    let b_zbar = c.a_zbar() + &phi.adjoint().scale(lambda.inv());
    Ok(ComplexConnection { b_z, b_zbar })
}

/// `dz∧dz̄` coefficient of `F(B_λ)`.
pub fn flatness(c: &Configuration, lambda: Complex64) -> Result<MatrixField> {
    Ok(b_lambda(c, lambda)?.curvature())
}

/// `r̃2 = ∂_z φ_z* + [a_z, φ_z*]`, the `λ⁻¹` coefficient of `F(B_λ)`.
pub fn conjugate_residual(c: &Configuration) -> MatrixField {
    let ps = c.phi_z().adjoint();
    &d(&ps) + &c.conn.a_z().commutator(&ps)
}

/// The three Laurent coefficients `(r1, r2, r̃2)` of `F(B_λ)`, each computed
/// from its own formula.
pub fn laurent_coefficients(c: &Configuration) -> [MatrixField; 3] {
    let r = residuals(c);
    [r.r1, r.r2, conjugate_residual(c)]
}

/// `c₀ + λc₁ + λ⁻¹c₋₁` per site.
pub fn laurent_eval(coeffs: &[MatrixField; 3], lambda: Complex64) -> MatrixField {
    &(&coeffs[0] + &coeffs[1].scale(lambda)) + &coeffs[2].scale(lambda.inv())
}

/// Flatness norms and decomposition residuals over the `K`-th roots of unity.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaScanReport {
    pub lambda_values: Vec<Complex64>,
    /// Quadrature-weighted `L²` norm of `F(B_λ)`.
    pub flatness_norms: Vec<f64>,
    /// Max per-site `‖F(B_λ) − (r1 + λr2 + λ⁻¹r̃2)‖_F`.
    pub decomposition_residuals: Vec<f64>,
}

impl LambdaScanReport {
    pub fn max_flatness(&self) -> f64 {
        self.flatness_norms.iter().copied().fold(0.0, f64::max)
    }

    pub fn max_decomposition_residual(&self) -> f64 {
        self.decomposition_residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scan serializes")
    }
}

impl Serialize for LambdaScanReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(4))?;
        m.serialize_entry("K", &self.lambda_values.len())?;
        let lambdas: Vec<[f64; 2]> = self.lambda_values.iter().map(|z| [z.re, z.im]).collect();
        m.serialize_entry("lambdas", &lambdas)?;
        m.serialize_entry("flatness_norms", &self.flatness_norms)?;
        m.serialize_entry("decomposition_residuals", &self.decomposition_residuals)?;
        m.end()
    }
}

pub fn flatness_scan(c: &Configuration, count: usize) -> Result<LambdaScanReport> {
    if count < 4 {
        return Err(Error::InvalidArgument(format!("lambda grid needs K >= 4, got {count}")));
    }
    let coeffs = laurent_coefficients(c);
    let mut report = LambdaScanReport {
        lambda_values: Vec::with_capacity(count),
        flatness_norms: Vec::with_capacity(count),
        decomposition_residuals: Vec::with_capacity(count),
    };
    for k in 0..count {
        let lambda = root_of_unity(k, count);
        let f = flatness(c, lambda)?;
        report.lambda_values.push(lambda);
        report.flatness_norms.push(f.l2_norm());
        report.decomposition_residuals.push(f.max_diff(&laurent_eval(&coeffs, lambda)));
    }
    Ok(report)
}

/// Solves the 3×3 Vandermonde system in `(1, λ, λ⁻¹)` for three sample values.
pub fn laurent_fit(samples: [(Complex64, Complex64); 3]) -> Result<[Complex64; 3]> {
    let m = nalgebra::Matrix3::from_fn(|i, j| {
        let l = samples[i].0;
        match j {
            0 => Complex64::new(1.0, 0.0),
            1 => l,
            _ => l.inv(),
        }
    });
    let rhs = nalgebra::Vector3::new(samples[0].1, samples[1].1, samples[2].1);
    let sol =
        m.lu().solve(&rhs).ok_or_else(|| Error::InvalidArgument("spectral parameters must be distinct".into()))?;
    Ok([sol[0], sol[1], sol[2]])
}

/// Recovers the per-site Laurent coefficients of `F(B_λ)` from its values at
/// three distinct `λ`.
pub fn laurent_fit_fields(c: &Configuration, lambdas: [Complex64; 3]) -> Result<[MatrixField; 3]> {
    let f: Vec<MatrixField> = lambdas.iter().map(|l| flatness(c, *l)).collect::<Result<_>>()?;
    let grid = *c.grid();
    let mut out = [MatrixField::zeros(grid), MatrixField::zeros(grid), MatrixField::zeros(grid)];
    for k in 0..grid.len() {
        let coeffs =
            laurent_fit([(lambdas[0], f[0].data()[k]), (lambdas[1], f[1].data()[k]), (lambdas[2], f[2].data()[k])])?;
        for (o, v) in out.iter_mut().zip(coeffs) {
            o.data_mut()[k] = v;
        }
    }
    Ok(out)
}

/// `α̃ = α^{1,0} + α^{0,1} + λγ^{1,0} − λ⁻¹γ^{0,1}`:
/// `dz` slot `−α_z̄* + λγ_z`, `dz̄` slot `α_z̄ + λ⁻¹γ_z*`.
pub fn tilde_lift(x: &TangentVector, lambda: Complex64) -> Result<OneForm> {
    check_unit(lambda)?;
    let dz = &(-x.alpha_zbar.adjoint()) + &x.gamma_z.scale(lambda);
    let dzbar = &x.alpha_zbar + &x.gamma_z.adjoint().scale(lambda.inv());
    Ok(OneForm { dz, dzbar })
}

/// `(ω₁, ω₂, ω₃)` with `ω₁ = Ω`,
/// `ω₂ = ∫Tr(α^{0,1}∧δ^{1,0} + γ^{1,0}∧β^{0,1})`,
/// `ω₃ = −∫Tr(α^{1,0}∧δ^{0,1} + γ^{0,1}∧β^{1,0})`.
pub fn omega123(x: &TangentVector, y: &TangentVector) -> Result<[Complex64; 3]> {
    x.ensure_same_grid(y)?;
    let w1 = Complex64::new(omega(x, y)?, 0.0);
    let w2 = integrate_wedge(&x.alpha01(), &y.gamma10())? + integrate_wedge(&x.gamma10(), &y.alpha01())?;
    let w3 = -(integrate_wedge(&x.alpha10(), &y.gamma01())? + integrate_wedge(&x.gamma01(), &y.alpha10())?);
    Ok([w1, w2, w3])
}

/// `F_λ(X, Y) = (i/2π) ∫Tr(α̃ ∧ β̃)`, evaluated directly from the lifts.
pub fn f_lambda(x: &TangentVector, y: &TangentVector, lambda: Complex64) -> Result<Complex64> {
    x.ensure_same_grid(y)?;
    let a = tilde_lift(x, lambda)?;
    let b = tilde_lift(y, lambda)?;
    Ok(I / (2.0 * PI) * integrate_wedge(&a, &b)?)
}

/// `(i/2π)(ω₁ + λω₂ + λ⁻¹ω₃)`.
pub fn f_lambda_from_omegas(w: &[Complex64; 3], lambda: Complex64) -> Complex64 {
    I / (2.0 * PI) * (w[0] + lambda * w[1] + lambda.inv() * w[2])
}

/// `F_i + F_{−i}`, the curvature of `ℒ_i ⊗ ℒ_{−i}`.
pub fn tau_curvature(x: &TangentVector, y: &TangentVector) -> Result<Complex64> {
    Ok(f_lambda(x, y, I)? + f_lambda(x, y, -I)?)
}

/// `(2F_i − τ, 2F_1 − τ)`, the curvatures of `ℒ_i² ⊗ τ⁻¹` and `ℒ_1² ⊗ τ⁻¹`.
pub fn trivial_bundle_curvatures(x: &TangentVector, y: &TangentVector) -> Result<(Complex64, Complex64)> {
    let tau = tau_curvature(x, y)?;
    let one = Complex64::new(1.0, 0.0);
    Ok((2.0 * f_lambda(x, y, I)? - tau, 2.0 * f_lambda(x, y, one)? - tau))
}
