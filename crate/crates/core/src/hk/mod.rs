//! HyperKähler structure on tangent vectors of the configuration space.
//!
//! With `X = (a, c)` and `Y = (b, d)` the stored coefficients `(α_z̄, γ_z)`,
//! the metric reduces to `g(X, Y) = 4 Re ∫ tr(a b* + c d*) dx dy`. Every form
//! below is evaluated from its own wedge-product expression; the relations
//! between them are checked, never assumed.

mod report;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::Result;
use crate::lattice::{integrate_wedge, Configuration, HiggsField, OneForm, TangentVector, UnitaryConnection};

pub use report::BilinearReport;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

fn wedge(xi: &OneForm, eta: &OneForm) -> Result<Complex64> {
    integrate_wedge(xi, eta)
}

/// `g(X, Y) = 2 Im ∫Tr(α^{0,1} ∧ β^{0,1}*) − 2 Im ∫Tr(γ^{1,0} ∧ δ^{1,0}*)`.
pub fn metric_g(x: &TangentVector, y: &TangentVector) -> Result<f64> {
    x.ensure_same_grid(y)?;
    let alpha = wedge(&x.alpha01(), &y.alpha01().adjoint())?;
    let gamma = wedge(&x.gamma10(), &y.gamma10().adjoint())?;
    Ok(2.0 * alpha.im - 2.0 * gamma.im)
}

/// Hitchin's quadratic form
/// `g₁(X, X) = 2i ∫Tr(α^{0,1}* ∧ α^{0,1}) + 2i ∫Tr(γ^{1,0} ∧ γ^{1,0}*)`,
/// returned as the complex value of the integral.
pub fn hitchin_g1(x: &TangentVector) -> Result<Complex64> {
    let alpha = wedge(&x.alpha01().adjoint(), &x.alpha01())?;
    let gamma = wedge(&x.gamma10(), &x.gamma10().adjoint())?;
    Ok(I * 2.0 * alpha + I * 2.0 * gamma)
}

/// The Hodge-star form of the metric,
/// `−∫Tr(α ∧ *₁β) − 2 Im ∫Tr(γ^{1,0} ∧ ∗̃₂δ^{1,0})`.
///
/// The first term is returned as a complex value whose imaginary part should
/// vanish; the second is real by construction.
pub fn metric_hodge(x: &TangentVector, y: &TangentVector) -> Result<Complex64> {
    x.ensure_same_grid(y)?;
    let alpha = -wedge(&x.alpha(), &y.alpha().star1())?;
    let gamma = wedge(&x.gamma10(), &y.gamma10().tilde_star2())?;
    Ok(alpha - 2.0 * gamma.im)
}

/// `ℐ(a, c) = (ia, ic)`.
pub fn apply_i(x: &TangentVector) -> TangentVector {
    TangentVector { alpha_zbar: x.alpha_zbar.scale(I), gamma_z: x.gamma_z.scale(I) }
}

/// `𝒥(a, c) = (i c*, −i a*)`, i.e. `i∗̃₂` on the off-diagonal slots.
pub fn apply_j(x: &TangentVector) -> TangentVector {
    TangentVector { alpha_zbar: x.gamma_z.adjoint().scale(I), gamma_z: x.alpha_zbar.adjoint().scale(-I) }
}

/// `𝒦(a, c) = (−c*, a*)`, i.e. `−∗̃₂` on the off-diagonal slots.
pub fn apply_k(x: &TangentVector) -> TangentVector {
    TangentVector { alpha_zbar: -x.gamma_z.adjoint(), gamma_z: x.alpha_zbar.adjoint() }
}

/// Raw complex value of `∫Tr(α∧β) − ∫Tr(γ∧δ)`.
pub fn omega_integral(x: &TangentVector, y: &TangentVector) -> Result<Complex64> {
    x.ensure_same_grid(y)?;
    Ok(wedge(&x.alpha(), &y.alpha())? - wedge(&x.gamma(), &y.gamma())?)
}

/// `Ω(X, Y) = ∫Tr(α∧β) − ∫Tr(γ∧δ)`.
pub fn omega(x: &TangentVector, y: &TangentVector) -> Result<f64> {
    Ok(omega_integral(x, y)?.re)
}

/// Raw complex value of `−[∫Tr(α∧δ) + ∫Tr(γ∧β)]`.
pub fn q1_integral(x: &TangentVector, y: &TangentVector) -> Result<Complex64> {
    x.ensure_same_grid(y)?;
    Ok(-(wedge(&x.alpha(), &y.gamma())? + wedge(&x.gamma(), &y.alpha())?))
}

/// `𝒬₁(X, Y) = −[∫Tr(α∧δ) + ∫Tr(γ∧β)]`.
pub fn q1(x: &TangentVector, y: &TangentVector) -> Result<f64> {
    Ok(q1_integral(x, y)?.re)
}

/// Raw complex value of `∫Tr(α∧δ̃ + γ̃∧β)`.
pub fn q2_integral(x: &TangentVector, y: &TangentVector) -> Result<Complex64> {
    x.ensure_same_grid(y)?;
    Ok(wedge(&x.alpha(), &y.gamma_tilde())? + wedge(&x.gamma_tilde(), &y.alpha())?)
}

/// `𝒬₂(X, Y) = ∫Tr(α∧δ̃ + γ̃∧β)` with `δ̃ = i(δ^{1,0} − δ^{0,1})`.
pub fn q2(x: &TangentVector, y: &TangentVector) -> Result<f64> {
    Ok(q2_integral(x, y)?.re)
}

/// `𝒬(X, Y) = 2 ∫Tr(δ^{1,0}∧α^{0,1} − γ^{1,0}∧β^{0,1})`.
pub fn q_complex(x: &TangentVector, y: &TangentVector) -> Result<Complex64> {
    x.ensure_same_grid(y)?;
    Ok(2.0 * (wedge(&y.gamma10(), &x.alpha01())? - wedge(&x.gamma10(), &y.alpha01())?))
}

/// Raw complex value of `−∫Tr(Φ ∧ α)`.
pub fn theta1_integral(c: &Configuration, x: &TangentVector) -> Result<Complex64> {
    c.a_zbar().ensure_same_grid(&x.alpha_zbar)?;
    Ok(-wedge(&c.higgs.one_form(), &x.alpha())?)
}

/// `θ₁(α, γ) = −∫Tr(Φ ∧ α)`.
pub fn theta1(c: &Configuration, x: &TangentVector) -> Result<f64> {
    Ok(theta1_integral(c, x)?.re)
}

/// Raw complex value of `i ∫Tr(Φ^{1,0}∧α^{0,1} − Φ^{0,1}∧α^{1,0})`.
///
/// The factor `i` is the `i dz∧dz̄` weight of the potential written in
/// components; without it the wedge expression is purely imaginary.
pub fn theta2_integral(c: &Configuration, x: &TangentVector) -> Result<Complex64> {
    c.a_zbar().ensure_same_grid(&x.alpha_zbar)?;
    let phi10 = OneForm::type_10(c.phi_z().clone());
    let phi01 = OneForm::type_01(-c.phi_z().adjoint());
    Ok(I * (wedge(&phi10, &x.alpha01())? - wedge(&phi01, &x.alpha10())?))
}

/// `θ₂(α, γ) = i ∫Tr(Φ^{1,0}∧α^{0,1} − Φ^{0,1}∧α^{1,0})`.
pub fn theta2(c: &Configuration, x: &TangentVector) -> Result<f64> {
    Ok(theta2_integral(c, x)?.re)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Potential {
    Theta1,
    Theta2,
}

impl Potential {
    pub fn eval(self, c: &Configuration, x: &TangentVector) -> Result<f64> {
        match self {
            Potential::Theta1 => theta1(c, x),
            Potential::Theta2 => theta2(c, x),
        }
    }
}

/// Both evaluations of the exterior derivative of a potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DThetaValue {
    pub analytic: f64,
    pub finite_difference: f64,
    pub step: f64,
}

impl DThetaValue {
    pub fn discrepancy(&self) -> f64 {
        (self.analytic - self.finite_difference).abs()
    }
}

/// `dθ(X, Y) = D_X[θ(·)(Y)] − D_Y[θ(·)(X)]` with constant vector fields.
///
/// The analytic path uses linearity of `θ` in `Φ`: `D_X θ(Y)` is `θ` at the
/// configuration whose Higgs field is `γ_X`. The finite-difference path uses
/// central differences with step `1e-4 · (1 + max |c|_F)`.
pub fn dtheta(which: Potential, c: &Configuration, x: &TangentVector, y: &TangentVector) -> Result<DThetaValue> {
    x.ensure_same_grid(y)?;
    c.a_zbar().ensure_same_grid(&x.alpha_zbar)?;
    let grid = *c.grid();
    let along = |v: &TangentVector| Configuration {
        conn: UnitaryConnection::trivial(grid),
        higgs: HiggsField::new(v.gamma_z.clone()),
    };
    let analytic = which.eval(&along(x), y)? - which.eval(&along(y), x)?;

    let step = 1e-4 * (1.0 + c.max_norm());
    let directional = |v: &TangentVector, w: &TangentVector| -> Result<f64> {
        let plus = which.eval(&c.shifted(step, v), w)?;
        let minus = which.eval(&c.shifted(-step, v), w)?;
        Ok((plus - minus) / (2.0 * step))
    };
    let finite_difference = directional(x, y)? - directional(y, x)?;
    Ok(DThetaValue { analytic, finite_difference, step })
}

/// The physicists' normalization `(ω_I, ω_J, ω_K) = (−Ω, 𝒬₂, −𝒬₁) / 2π`.
pub fn kw_forms(x: &TangentVector, y: &TangentVector) -> Result<(f64, f64, f64)> {
    let two_pi = 2.0 * PI;
    Ok((-omega(x, y)? / two_pi, q2(x, y)? / two_pi, -q1(x, y)? / two_pi))
}

/// Curvatures `((i/π)Ω, (i/π)𝒬₁, (i/π)𝒬₂)` of the three prequantum line bundles.
pub fn prequantum_curvatures(x: &TangentVector, y: &TangentVector) -> Result<[Complex64; 3]> {
    let s = I / PI;
    Ok([s * omega(x, y)?, s * q1(x, y)?, s * q2(x, y)?])
}
