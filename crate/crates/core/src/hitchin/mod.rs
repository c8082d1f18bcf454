//! Residuals of the self-duality equations, the least-squares energy and its
//! gradient, gauge-orbit tangents, and the orbit-orthogonal projection.
//!
//! 2-forms are reported as `dz∧dz̄` coefficients. `d''_A Φ^{1,0}` is natively
//! a `dz̄∧dz` form, so its coefficient is stored with the sign flipped once:
//! `r2 = −(∂̄φ_z + [a_z̄, φ_z])`.

mod orbit;
mod solve;

use crate::error::Result;
use crate::lattice::{curvature, d, dbar, Configuration, MatrixField, TangentVector};

pub use orbit::{orbit_tangent, project_orthogonal, project_orthogonal_with_info, Projection};
pub use solve::{solve, SolveOptions, SolveRecord, SolveStatus, SolveTrace};

/// Residuals of `F(A) + [Φ^{1,0}, Φ^{1,0}*] = 0` and `d''_A Φ^{1,0} = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Residuals {
    /// `F_c + [φ_z, φ_z*]`.
    pub r1: MatrixField,
    /// `−(∂̄φ_z + [a_z̄, φ_z])`.
    pub r2: MatrixField,
    /// Quadrature-weighted `L²` norms `(‖r1‖, ‖r2‖)`.
    pub norms: (f64, f64),
}

impl Residuals {
    /// `r1` as a `dx∧dy` coefficient, `−2i · r1`. Anti-Hermitian per site.
    pub fn r1_dxdy(&self) -> MatrixField {
        self.r1.scale(num_complex::Complex64::new(0.0, -2.0))
    }
}

pub fn residuals(c: &Configuration) -> Residuals {
    let a = c.a_zbar();
    let phi = c.phi_z();
    let r1 = &curvature(&c.conn) + &phi.commutator(&phi.adjoint());
    let r2 = -(&dbar(phi) + &a.commutator(phi));
    let norms = (r1.l2_norm(), r2.l2_norm());
    Residuals { r1, r2, norms }
}

/// `‖r1‖² + ‖r2‖²` with the grid quadrature weight.
pub fn energy(c: &Configuration) -> f64 {
    let r = residuals(c);
    r.norms.0 * r.norms.0 + r.norms.1 * r.norms.1
}

/// Gradient of [`energy`] with respect to the real and imaginary parts of
/// every entry of `(a_z̄, φ_z)`, returned as complex fields `G` so that
/// `dE = Re Σ tr(G* δ)` over sites.
///
/// Computed as `2ΔA · Lᵀ r` where `L` is [`linearized_residuals`] and `Lᵀ` its
/// adjoint for the Euclidean real inner product.
pub fn energy_gradient(c: &Configuration) -> (MatrixField, MatrixField) {
    let r = residuals(c);
    let (u1, u2) = (&r.r1, &r.r2);
    let a = c.a_zbar();
    let p = c.phi_z();
    let u1s = u1.adjoint();

    // α-slot: Lᵀ of ∂_z α + ∂_z̄ α* − [α*, a] + [a_z, α] and of −[α, φ]
    let ga = &(&(&(-&dbar(u1)) - &dbar(&u1s)) - &a.commutator(&u1s)) - &a.commutator(u1);
    let ga = &ga + &p.adjoint().commutator(u2);
    // γ-slot: Lᵀ of [γ, φ*] + [φ, γ*] and of −∂̄γ − [a, γ]
    let gp = &(-&p.commutator(u1)) - &p.commutator(&u1s);
    let gp = &(&gp + &d(u2)) - &a.adjoint().commutator(u2);

    let s = 2.0 * c.grid().cell_area();
    (ga.scale_real(s), gp.scale_real(s))
}

/// Directional derivative of `(r1, r2)` at `c` along `X = (α_z̄, γ_z)`:
///
/// `δr1 = ∂_z α_z̄ − ∂_z̄ α_z + [α_z, a_z̄] + [a_z, α_z̄] + [γ_z, φ_z*] + [φ_z, γ_z*]`,
/// `δr2 = −(∂̄γ_z + [α_z̄, φ_z] + [a_z̄, γ_z])`, with `α_z = −α_z̄*`, `a_z = −a_z̄*`.
pub fn linearized_residuals(c: &Configuration, x: &TangentVector) -> Result<(MatrixField, MatrixField)> {
    c.a_zbar().ensure_same_grid(&x.alpha_zbar)?;
    let a = c.a_zbar();
    let az = c.conn.a_z();
    let p = c.phi_z();
    let al = &x.alpha_zbar;
    let alz = -al.adjoint();
    let ga = &x.gamma_z;

    let dr1 = &(&d(al) - &dbar(&alz)) + &alz.commutator(a);
    let dr1 = &(&dr1 + &az.commutator(al)) + &ga.commutator(&p.adjoint());
    let dr1 = &dr1 + &p.commutator(&ga.adjoint());
    let dr2 = -(&(&dbar(ga) + &al.commutator(p)) + &a.commutator(ga));
    Ok((dr1, dr2))
}
