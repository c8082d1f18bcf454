//! Matrix-valued 1-forms as coefficient pairs and their pairings.
//!
//! A 1-form is `ξ = ξ_z dz + ξ_z̄ dz̄`; a 2-form is stored as its
//! `dz∧dz̄` coefficient, with `dz∧dz̄ = −2i dx∧dy`.

use num_complex::Complex64;

use super::field::{MatrixField, ScalarField};
use super::matrix;
use super::reduce::pairwise_sum_complex;
use crate::error::Result;

/// `dz∧dz̄ = −2i dx∧dy`.
pub const DZ_DZBAR: Complex64 = Complex64 { re: 0.0, im: -2.0 };

/// Coefficient pair `(ξ_z, ξ_z̄)` of a matrix-valued 1-form.
#[derive(Debug, Clone, PartialEq)]
pub struct OneForm {
    pub dz: MatrixField,
    pub dzbar: MatrixField,
}

impl OneForm {
    pub fn new(dz: MatrixField, dzbar: MatrixField) -> Result<Self> {
        dz.ensure_same_grid(&dzbar)?;
        Ok(Self { dz, dzbar })
    }

    /// `ξ_z dz`.
    pub fn type_10(dz: MatrixField) -> Self {
        let dzbar = MatrixField::zeros(*dz.grid());
        Self { dz, dzbar }
    }

    /// `ξ_z̄ dz̄`.
    pub fn type_01(dzbar: MatrixField) -> Self {
        let dz = MatrixField::zeros(*dzbar.grid());
        Self { dz, dzbar }
    }

    pub fn grid(&self) -> &super::grid::Grid {
        self.dz.grid()
    }

    pub fn scale(&self, s: Complex64) -> OneForm {
        OneForm { dz: self.dz.scale(s), dzbar: self.dzbar.scale(s) }
    }

    pub fn add(&self, other: &OneForm) -> OneForm {
        OneForm { dz: &self.dz + &other.dz, dzbar: &self.dzbar + &other.dzbar }
    }

    pub fn sub(&self, other: &OneForm) -> OneForm {
        OneForm { dz: &self.dz - &other.dz, dzbar: &self.dzbar - &other.dzbar }
    }

    /// Form conjugate transpose: `(p dz + q dz̄)* = q* dz + p* dz̄`.
    pub fn adjoint(&self) -> OneForm {
        OneForm { dz: self.dzbar.adjoint(), dzbar: self.dz.adjoint() }
    }

    /// Entrywise complex conjugate of the form: `conj(p dz + q dz̄) = q̄ dz + p̄ dz̄`.
    pub fn conj(&self) -> OneForm {
        OneForm { dz: self.dzbar.conj(), dzbar: self.dz.conj() }
    }

    /// `*₁(η dz) = −iη dz`, `*₁(η dz̄) = iη dz̄`.
    pub fn star1(&self) -> OneForm {
        OneForm { dz: self.dz.scale(Complex64::new(0.0, -1.0)), dzbar: self.dzbar.scale(Complex64::new(0.0, 1.0)) }
    }

    /// `*₂(η dz) = η̄ dz̄`, `*₂(η̄ dz̄) = −η dz` with entrywise conjugation.
    pub fn star2(&self) -> OneForm {
        OneForm { dz: -self.dzbar.conj(), dzbar: self.dz.conj() }
    }

    /// `*₂` after transpose: `ξ_z dz ↦ ξ_z* dz̄`, `ξ_z̄ dz̄ ↦ −ξ_z̄* dz`.
    pub fn tilde_star2(&self) -> OneForm {
        OneForm { dz: -self.dzbar.adjoint(), dzbar: self.dz.adjoint() }
    }

    /// Largest per-site Frobenius distance over both slots.
    pub fn max_diff(&self, other: &OneForm) -> f64 {
        self.dz.max_diff(&other.dz).max(self.dzbar.max_diff(&other.dzbar))
    }
}

/// `dz∧dz̄` coefficient of `Tr(ξ ∧ η)`: `tr(ξ_z η_z̄ − ξ_z̄ η_z)` per site.
pub fn wedge_trace(xi: &OneForm, eta: &OneForm) -> Result<ScalarField> {
    xi.dz.ensure_same_grid(&eta.dz)?;
    let grid = *xi.grid();
    let n = grid.n();
    let len = grid.site_len();
    let mut data = Vec::with_capacity(grid.num_sites());
    for s in 0..grid.num_sites() {
        let (xz, xzb) = (xi.dz.site(s), xi.dzbar.site(s));
        let (ez, ezb) = (eta.dz.site(s), eta.dzbar.site(s));
        let mut acc = Complex64::new(0.0, 0.0);
        // tr(AB) = Σ_ij A_ij B_ji
        for i in 0..n {
            for j in 0..n {
                acc += xz[i * n + j] * ezb[j * n + i] - xzb[i * n + j] * ez[j * n + i];
            }
        }
        debug_assert!(len == n * n);
        data.push(acc);
    }
    ScalarField::new(grid, data)
}

/// `∫ c dz∧dz̄ = −2i · ΔA · Σ_sites c`.
pub fn integrate_2form_scalar(c: &ScalarField) -> Complex64 {
    DZ_DZBAR * c.grid().cell_area() * pairwise_sum_complex(c.values())
}

/// `∫ tr(c) dz∧dz̄` for a matrix-valued coefficient.
pub fn integrate_2form(c: &MatrixField) -> Complex64 {
    integrate_2form_scalar(&c.trace())
}

/// `∫ Tr(ξ ∧ η)`.
pub fn integrate_wedge(xi: &OneForm, eta: &OneForm) -> Result<Complex64> {
    Ok(integrate_2form_scalar(&wedge_trace(xi, eta)?))
}

/// Trace of a single site matrix, exposed for oracles in tests.
pub fn site_trace(n: usize, m: &[Complex64]) -> Complex64 {
    matrix::trace(n, m)
}
