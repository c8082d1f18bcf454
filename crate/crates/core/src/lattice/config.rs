//! Connections, Higgs fields, configurations and tangent vectors.

use num_complex::Complex64;

use super::deriv::{d, dbar};
use super::field::MatrixField;
use super::forms::OneForm;
use super::grid::Grid;
use crate::error::{Error, Result};

/// Unitary connection stored through `a_z̄`; the `dz` coefficient is `−(a_z̄)*`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryConnection {
    pub a_zbar: MatrixField,
}

impl UnitaryConnection {
    pub fn new(a_zbar: MatrixField) -> Self {
        Self { a_zbar }
    }

    pub fn trivial(grid: Grid) -> Self {
        Self { a_zbar: MatrixField::zeros(grid) }
    }

    /// `a_z = −(a_z̄)*`.
    pub fn a_z(&self) -> MatrixField {
        -self.a_zbar.adjoint()
    }

    /// The full anti-Hermitian 1-form `A = a_z dz + a_z̄ dz̄`.
    pub fn one_form(&self) -> OneForm {
        OneForm { dz: self.a_z(), dzbar: self.a_zbar.clone() }
    }
}

/// Higgs field stored through `φ_z`; `Φ^{0,1}` has coefficient `−(φ_z)*`.
#[derive(Debug, Clone, PartialEq)]
pub struct HiggsField {
    pub phi_z: MatrixField,
}

impl HiggsField {
    pub fn new(phi_z: MatrixField) -> Self {
        Self { phi_z }
    }

    pub fn zero(grid: Grid) -> Self {
        Self { phi_z: MatrixField::zeros(grid) }
    }

    /// `Φ = φ_z dz − φ_z* dz̄`.
    pub fn one_form(&self) -> OneForm {
        OneForm { dz: self.phi_z.clone(), dzbar: -self.phi_z.adjoint() }
    }
}

/// A point `(A^{0,1}, Φ^{1,0})` of the configuration space.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    pub conn: UnitaryConnection,
    pub higgs: HiggsField,
}

impl Configuration {
    pub fn new(a_zbar: MatrixField, phi_z: MatrixField) -> Result<Self> {
        a_zbar.ensure_same_grid(&phi_z)?;
        Ok(Self { conn: UnitaryConnection::new(a_zbar), higgs: HiggsField::new(phi_z) })
    }

    pub fn zero(grid: Grid) -> Self {
        Self { conn: UnitaryConnection::trivial(grid), higgs: HiggsField::zero(grid) }
    }

    /// `A = 0`, `φ_z = m` constant. Exact solution whenever `m` is normal.
    pub fn constant_higgs(grid: Grid, m: &[Complex64]) -> Result<Self> {
        Ok(Self { conn: UnitaryConnection::trivial(grid), higgs: HiggsField::new(MatrixField::constant(grid, m)?) })
    }

    pub fn grid(&self) -> &Grid {
        self.conn.a_zbar.grid()
    }

    pub fn a_zbar(&self) -> &MatrixField {
        &self.conn.a_zbar
    }

    pub fn phi_z(&self) -> &MatrixField {
        &self.higgs.phi_z
    }

    pub fn ensure_finite(&self) -> Result<()> {
        if !self.conn.a_zbar.is_finite() {
            return Err(Error::NonFinite("a_zbar"));
        }
        if !self.higgs.phi_z.is_finite() {
            return Err(Error::NonFinite("phi_z"));
        }
        Ok(())
    }

    /// `c + s·X` on the affine configuration space.
    pub fn shifted(&self, s: f64, x: &TangentVector) -> Configuration {
        Configuration {
            conn: UnitaryConnection::new(self.conn.a_zbar.axpy(s, &x.alpha_zbar)),
            higgs: HiggsField::new(self.higgs.phi_z.axpy(s, &x.gamma_z)),
        }
    }

    /// Largest per-site Frobenius norm over both components.
    pub fn max_norm(&self) -> f64 {
        self.conn.a_zbar.max_frobenius().max(self.higgs.phi_z.max_frobenius())
    }
}

/// Tangent vector `(α^{0,1}, γ^{1,0})` through its coefficients `(α_z̄, γ_z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentVector {
    pub alpha_zbar: MatrixField,
    pub gamma_z: MatrixField,
}

impl TangentVector {
    pub fn new(alpha_zbar: MatrixField, gamma_z: MatrixField) -> Result<Self> {
        alpha_zbar.ensure_same_grid(&gamma_z)?;
        Ok(Self { alpha_zbar, gamma_z })
    }

    pub fn zero(grid: Grid) -> Self {
        Self { alpha_zbar: MatrixField::zeros(grid), gamma_z: MatrixField::zeros(grid) }
    }

    pub fn grid(&self) -> &Grid {
        self.alpha_zbar.grid()
    }

    pub fn ensure_same_grid(&self, other: &TangentVector) -> Result<()> {
        self.alpha_zbar.ensure_same_grid(&other.alpha_zbar)
    }

    /// `α^{0,1} = α_z̄ dz̄`.
    pub fn alpha01(&self) -> OneForm {
        OneForm::type_01(self.alpha_zbar.clone())
    }

    /// `α^{1,0} = −(α_z̄)* dz`.
    pub fn alpha10(&self) -> OneForm {
        OneForm::type_10(-self.alpha_zbar.adjoint())
    }

    /// `α = α^{1,0} + α^{0,1}`.
    pub fn alpha(&self) -> OneForm {
        OneForm { dz: -self.alpha_zbar.adjoint(), dzbar: self.alpha_zbar.clone() }
    }

    /// `γ^{1,0} = γ_z dz`.
    pub fn gamma10(&self) -> OneForm {
        OneForm::type_10(self.gamma_z.clone())
    }

    /// `γ^{0,1} = −(γ_z)* dz̄`.
    pub fn gamma01(&self) -> OneForm {
        OneForm::type_01(-self.gamma_z.adjoint())
    }

    /// `γ = γ^{1,0} + γ^{0,1}`.
    pub fn gamma(&self) -> OneForm {
        OneForm { dz: self.gamma_z.clone(), dzbar: -self.gamma_z.adjoint() }
    }

    /// `γ̃ = i(γ^{1,0} − γ^{0,1})`.
    pub fn gamma_tilde(&self) -> OneForm {
        let i = Complex64::new(0.0, 1.0);
        OneForm { dz: self.gamma_z.scale(i), dzbar: self.gamma_z.adjoint().scale(i) }
    }

    pub fn add(&self, other: &TangentVector) -> TangentVector {
        TangentVector { alpha_zbar: &self.alpha_zbar + &other.alpha_zbar, gamma_z: &self.gamma_z + &other.gamma_z }
    }

    pub fn sub(&self, other: &TangentVector) -> TangentVector {
        TangentVector { alpha_zbar: &self.alpha_zbar - &other.alpha_zbar, gamma_z: &self.gamma_z - &other.gamma_z }
    }

    pub fn scale(&self, s: f64) -> TangentVector {
        TangentVector { alpha_zbar: self.alpha_zbar.scale_real(s), gamma_z: self.gamma_z.scale_real(s) }
    }

    pub fn neg(&self) -> TangentVector {
        self.scale(-1.0)
    }

    /// Euclidean real inner product over all real degrees of freedom.
    pub fn real_dot(&self, other: &TangentVector) -> f64 {
        self.alpha_zbar.real_dot(&other.alpha_zbar) + self.gamma_z.real_dot(&other.gamma_z)
    }

    /// `(Σ |α|² + |γ|²)^{1/2}` without quadrature weight.
    pub fn euclidean_norm(&self) -> f64 {
        (self.alpha_zbar.norm_sqr() + self.gamma_z.norm_sqr()).sqrt()
    }

    pub fn max_diff(&self, other: &TangentVector) -> f64 {
        self.alpha_zbar.max_diff(&other.alpha_zbar).max(self.gamma_z.max_diff(&other.gamma_z))
    }

    pub fn max_norm(&self) -> f64 {
        self.alpha_zbar.max_frobenius().max(self.gamma_z.max_frobenius())
    }
}

/// Per-site unitary gauge transformation.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeTransform {
    g: MatrixField,
}

/// Tolerance of the per-site unitarity check.
pub const UNITARY_TOL: f64 = 1e-12;

impl GaugeTransform {
    pub fn new(g: MatrixField) -> Result<Self> {
        g.assert_unitary(UNITARY_TOL)?;
        Ok(Self { g })
    }

    pub fn identity(grid: Grid) -> Self {
        Self { g: MatrixField::identity(grid) }
    }

    /// `exp(ψ)` for anti-Hermitian `ψ`.
    pub fn exp(psi: &MatrixField) -> Result<Self> {
        psi.assert_anti_hermitian(1e-12)?;
        Self::new(psi.expm())
    }

    pub fn field(&self) -> &MatrixField {
        &self.g
    }

    pub fn inverse(&self) -> GaugeTransform {
        GaugeTransform { g: self.g.adjoint() }
    }
}

/// `a_z̄ ↦ g a_z̄ g⁻¹ − (∂̄g) g⁻¹`, `φ_z ↦ g φ_z g⁻¹`.
pub fn gauge_act(g: &GaugeTransform, c: &Configuration) -> Result<Configuration> {
    let gf = g.field();
    gf.ensure_same_grid(c.a_zbar())?;
    let ginv = gf.adjoint();
    let a = &gf.mul(c.a_zbar()).mul(&ginv) - &dbar(gf).mul(&ginv);
    let phi = gf.mul(c.phi_z()).mul(&ginv);
    Ok(Configuration { conn: UnitaryConnection::new(a), higgs: HiggsField::new(phi) })
}

/// Adjoint action on tangent vectors.
pub fn gauge_act_tangent(g: &GaugeTransform, x: &TangentVector) -> Result<TangentVector> {
    let gf = g.field();
    gf.ensure_same_grid(&x.alpha_zbar)?;
    Ok(TangentVector { alpha_zbar: x.alpha_zbar.conjugate_by(gf), gamma_z: x.gamma_z.conjugate_by(gf) })
}

/// `dz∧dz̄` coefficient of `F(A)`: `∂_z a_z̄ − ∂_z̄ a_z + [a_z, a_z̄]`.
pub fn curvature(conn: &UnitaryConnection) -> MatrixField {
    let a = &conn.a_zbar;
    let az = conn.a_z();
    &(&d(a) - &dbar(&az)) + &az.commutator(a)
}
