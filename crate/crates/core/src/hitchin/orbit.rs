use crate::error::{Error, Result};
use crate::lattice::random::anti_hermitian_part;
use crate::lattice::{d, dbar, Configuration, MatrixField, TangentVector};

/// Tolerance for the anti-Hermitian check on gauge generators.
const GENERATOR_TOL: f64 = 1e-12;

/// Relative residual at which the normal-equation solve stops.
const CG_TOL: f64 = 1e-10;

/// Infinitesimal gauge direction generated by anti-Hermitian `ψ`:
/// `α_z̄ = −(∂̄ψ + [a_z̄, ψ])`, `γ_z = [ψ, φ_z]`.
///
/// This is `d/dt|₀` of the finite action with `g = exp(tψ)`.
pub fn orbit_tangent(psi: &MatrixField, c: &Configuration) -> Result<TangentVector> {
    psi.ensure_same_grid(c.a_zbar())?;
    psi.assert_anti_hermitian(GENERATOR_TOL)?;
    Ok(orbit_map(psi, c))
}

fn orbit_map(psi: &MatrixField, c: &Configuration) -> TangentVector {
    let alpha = -(&dbar(psi) + &c.a_zbar().commutator(psi));
    let gamma = psi.commutator(c.phi_z());
    TangentVector { alpha_zbar: alpha, gamma_z: gamma }
}

/// Adjoint of [`orbit_map`] for the Euclidean real inner product, followed by
/// projection onto anti-Hermitian generators.
fn orbit_adjoint(x: &TangentVector, c: &Configuration) -> MatrixField {
    let u = &x.alpha_zbar;
    let v = &x.gamma_z;
    let raw = &(&d(u) - &c.a_zbar().adjoint().commutator(u)) - &c.phi_z().adjoint().commutator(v);
    anti_hermitian_part(&raw)
}

/// Removes the components `s(x, y)·1` with `s` one of the four sign patterns
/// `1, (−1)^ix, (−1)^iy, (−1)^(ix+iy)`. Both derivative schemes annihilate
/// these patterns and scalar matrices commute with everything, so they span
/// a kernel of [`orbit_map`] that is present at every configuration.
fn remove_center(f: &MatrixField) -> MatrixField {
    let grid = *f.grid();
    let n = grid.n();
    let nn = grid.sites();
    let tr = f.trace();
    let sign = |s: usize, pattern: usize| {
        let (iy, ix) = (s / nn, s % nn);
        let odd = (pattern & 1 == 1 && ix % 2 == 1) ^ (pattern & 2 == 2 && iy % 2 == 1);
        if odd {
            -1.0
        } else {
            1.0
        }
    };
    let mut out = f.clone();
    for pattern in 0..4 {
        let weighted: Vec<_> = tr.values().iter().enumerate().map(|(s, v)| v * sign(s, pattern)).collect();
        let mean = crate::lattice::reduce::pairwise_sum_complex(&weighted) / (grid.num_sites() * n) as f64;
        for (s, site) in out.data_mut().chunks_mut(grid.site_len()).enumerate() {
            for i in 0..n {
                site[i * n + i] -= mean * sign(s, pattern);
            }
        }
    }
    out
}

fn normal_op(psi: &MatrixField, c: &Configuration) -> MatrixField {
    orbit_adjoint(&orbit_map(psi, c), c)
}

/// Result of the orbit-orthogonal projection.
#[derive(Debug, Clone)]
pub struct Projection {
    pub tangent: TangentVector,
    /// Minimizing generator `ψ*`.
    pub generator: MatrixField,
    pub iterations: usize,
    pub relative_residual: f64,
}

/// `X − orbit_tangent(ψ*, c)` where `ψ*` minimizes the `g`-norm of the
/// difference over anti-Hermitian `ψ`.
pub fn project_orthogonal(x: &TangentVector, c: &Configuration) -> Result<TangentVector> {
    Ok(project_orthogonal_with_info(x, c)?.tangent)
}

/// Conjugate gradient on the normal equations `Tᵀ T ψ = Tᵀ X`.
///
/// `g` is a constant multiple of the Euclidean real inner product, so the
/// Euclidean adjoint gives the same minimizer. The operator has a kernel
/// (generators that commute with everything, e.g. constant multiples of `i·1`);
/// the right-hand side lies in its range, and the identity component is
/// removed from every residual so rounding cannot excite that kernel.
pub fn project_orthogonal_with_info(x: &TangentVector, c: &Configuration) -> Result<Projection> {
    x.ensure_same_grid(&TangentVector::zero(*c.grid()))?;
    let grid = *c.grid();
    let rhs = remove_center(&orbit_adjoint(x, c));
    let rhs_norm = rhs.norm_sqr().sqrt();
    let mut psi = MatrixField::zeros(grid);
    let max_iters = (10.0 * ((grid.len() as f64).sqrt())).ceil() as usize;

    if rhs_norm == 0.0 {
        return Ok(Projection { tangent: x.clone(), generator: psi, iterations: 0, relative_residual: 0.0 });
    }

    let mut r = rhs.clone();
    let mut p = r.clone();
    let mut rr = r.real_dot(&r);
    let mut iterations = 0;
    let mut rel = 1.0;
    while iterations < max_iters {
        rel = rr.sqrt() / rhs_norm;
        if rel <= CG_TOL {
            break;
        }
        let ap = normal_op(&p, c);
        let pap = p.real_dot(&ap);
        if pap <= 0.0 {
            break;
        }
        let step = rr / pap;
        psi = psi.axpy(step, &p);
        r = remove_center(&r.axpy(-step, &ap));
        let rr_next = r.real_dot(&r);
        p = r.axpy(rr_next / rr, &p);
        rr = rr_next;
        iterations += 1;
    }
    rel = if iterations == max_iters { rr.sqrt() / rhs_norm } else { rel };
    if rel > CG_TOL {
        return Err(Error::CgNotConverged { iterations, residual: rel });
    }
    let tangent = x.sub(&orbit_map(&psi, c));
    Ok(Projection { tangent, generator: psi, iterations, relative_residual: rel })
}
