use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use rayon::prelude::*;

use super::grid::Grid;
use super::matrix;
use super::reduce::{pairwise_sum, pairwise_sum_complex};
use crate::error::{Error, Result};

const PAR_MIN_SITES: usize = 64;

/// A complex `n × n` matrix at every site of a periodic grid.
///
/// Storage is site-major in row-major `(iy, ix)` order; each site holds its
/// matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixField {
    grid: Grid,
    data: Vec<Complex64>,
}

/// A complex scalar at every site.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    grid: Grid,
    data: Vec<Complex64>,
}

impl ScalarField {
    pub fn new(grid: Grid, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != grid.num_sites() {
            return Err(Error::Shape(format!(
                "scalar field has {} values, grid has {} sites",
                data.len(),
                grid.num_sites()
            )));
        }
        Ok(Self { grid, data })
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64, f64) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(grid.num_sites());
        for iy in 0..grid.sites() {
            for ix in 0..grid.sites() {
                let (x, y) = grid.coords(iy, ix);
                data.push(f(x, y));
            }
        }
        Self { grid, data }
    }

    pub fn constant(grid: Grid, value: Complex64) -> Self {
        Self { grid, data: vec![value; grid.num_sites()] }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.data
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl MatrixField {
    pub fn zeros(grid: Grid) -> Self {
        Self { grid, data: vec![Complex64::new(0.0, 0.0); grid.len()] }
    }

    /// The same matrix at every site.
    pub fn constant(grid: Grid, m: &[Complex64]) -> Result<Self> {
        if m.len() != grid.site_len() {
            return Err(Error::Shape(format!("constant matrix has {} entries, expected {}", m.len(), grid.site_len())));
        }
        let mut data = Vec::with_capacity(grid.len());
        for _ in 0..grid.num_sites() {
            data.extend_from_slice(m);
        }
        Ok(Self { grid, data })
    }

    pub fn identity(grid: Grid) -> Self {
        Self::constant(grid, &matrix::identity(grid.n())).expect("identity has matching shape")
    }

    /// Builds a field from a function of the physical coordinates `(x, y)`.
    pub fn from_fn(grid: Grid, f: impl Fn(f64, f64) -> Vec<Complex64>) -> Result<Self> {
        let mut data = Vec::with_capacity(grid.len());
        for iy in 0..grid.sites() {
            for ix in 0..grid.sites() {
                let (x, y) = grid.coords(iy, ix);
                let m = f(x, y);
                if m.len() != grid.site_len() {
                    return Err(Error::Shape(format!(
                        "site matrix has {} entries, expected {}",
                        m.len(),
                        grid.site_len()
                    )));
                }
                data.extend(m);
            }
        }
        Ok(Self { grid, data })
    }

    /// `s(x, y) · m` for a scalar profile `s` and constant matrix `m`.
    pub fn scalar_times(grid: Grid, m: &[Complex64], s: impl Fn(f64, f64) -> Complex64) -> Result<Self> {
        Self::from_fn(grid, |x, y| {
            let v = s(x, y);
            m.iter().map(|e| e * v).collect()
        })
    }

    pub fn from_data(grid: Grid, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != grid.len() {
            return Err(Error::Shape(format!("field has {} entries, grid requires {}", data.len(), grid.len())));
        }
        Ok(Self { grid, data })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<Complex64> {
        self.data
    }

    /// Matrix at flat site index `s = iy·N + ix`.
    pub fn site(&self, s: usize) -> &[Complex64] {
        let len = self.grid.site_len();
        &self.data[s * len..(s + 1) * len]
    }

    pub fn site_at(&self, iy: usize, ix: usize) -> &[Complex64] {
        self.site(iy * self.grid.sites() + ix)
    }

    pub fn ensure_same_grid(&self, other: &MatrixField) -> Result<()> {
        self.grid.ensure_same(&other.grid)
    }

    /// Applies `f(site_in, site_out)` at every site.
    pub fn map_sites<F>(&self, f: F) -> MatrixField
    where
        F: Fn(&[Complex64], &mut [Complex64]) + Sync,
    {
        let len = self.grid.site_len();
        let mut out = MatrixField::zeros(self.grid);
        out.data
            .par_chunks_mut(len)
            .with_min_len(PAR_MIN_SITES)
            .zip(self.data.par_chunks(len))
            .for_each(|(o, a)| f(a, o));
        out
    }

    /// Applies `f(a_site, b_site, out_site)` at every site. Panics on grid mismatch.
    pub fn zip_sites<F>(&self, other: &MatrixField, f: F) -> MatrixField
    where
        F: Fn(&[Complex64], &[Complex64], &mut [Complex64]) + Sync,
    {
        assert_eq!(self.grid, other.grid, "grid mismatch in site-wise operation");
        let len = self.grid.site_len();
        let mut out = MatrixField::zeros(self.grid);
        out.data
            .par_chunks_mut(len)
            .with_min_len(PAR_MIN_SITES)
            .zip(self.data.par_chunks(len).zip(other.data.par_chunks(len)))
            .for_each(|(o, (a, b))| f(a, b, o));
        out
    }

    /// Entrywise map.
    pub fn map_entries(&self, f: impl Fn(Complex64) -> Complex64 + Sync) -> MatrixField {
        MatrixField { grid: self.grid, data: self.data.par_iter().with_min_len(PAR_MIN_SITES).map(|z| f(*z)).collect() }
    }

    /// Per-site conjugate transpose.
    pub fn adjoint(&self) -> MatrixField {
        let n = self.grid.n();
        self.map_sites(|a, o| matrix::adjoint_into(n, a, o))
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> MatrixField {
        self.map_entries(|z| z.conj())
    }

    /// Per-site transpose (no conjugation).
    pub fn transpose(&self) -> MatrixField {
        let n = self.grid.n();
        self.map_sites(|a, o| {
            for i in 0..n {
                for j in 0..n {
                    o[i * n + j] = a[j * n + i];
                }
            }
        })
    }

    pub fn scale(&self, s: Complex64) -> MatrixField {
        self.map_entries(|z| z * s)
    }

    pub fn scale_real(&self, s: f64) -> MatrixField {
        self.map_entries(|z| z * s)
    }

    /// Per-site matrix product `self · other`.
    pub fn mul(&self, other: &MatrixField) -> MatrixField {
        let n = self.grid.n();
        self.zip_sites(other, |a, b, o| matrix::mul_into(n, a, b, o))
    }

    /// Per-site commutator `[self, other]`.
    pub fn commutator(&self, other: &MatrixField) -> MatrixField {
        let n = self.grid.n();
        self.zip_sites(other, |a, b, o| matrix::commutator_into(n, a, b, o))
    }

    /// `g · self · g*` per site, for unitary `g`.
    pub fn conjugate_by(&self, g: &MatrixField) -> MatrixField {
        g.mul(self).mul(&g.adjoint())
    }

    /// `self + s · other`.
    pub fn axpy(&self, s: f64, other: &MatrixField) -> MatrixField {
        self.zip_sites(other, |a, b, o| {
            for k in 0..a.len() {
                o[k] = a[k] + b[k] * s;
            }
        })
    }

    /// Per-site trace.
    pub fn trace(&self) -> ScalarField {
        let n = self.grid.n();
        let data = self.data.chunks(self.grid.site_len()).map(|a| matrix::trace(n, a)).collect();
        ScalarField { grid: self.grid, data }
    }

    /// Per-site `tr(self* · other)`.
    pub fn trace_inner(&self, other: &MatrixField) -> ScalarField {
        assert_eq!(self.grid, other.grid, "grid mismatch in trace_inner");
        let len = self.grid.site_len();
        let data = self
            .data
            .chunks(len)
            .zip(other.data.chunks(len))
            .map(|(a, b)| {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..len {
                    acc += a[k].conj() * b[k];
                }
                acc
            })
            .collect();
        ScalarField { grid: self.grid, data }
    }

    /// Euclidean real inner product `Re Σ_sites tr(self* · other)` over all
    /// real degrees of freedom (no quadrature weight).
    pub fn real_dot(&self, other: &MatrixField) -> f64 {
        let per_site: Vec<f64> = self.trace_inner(other).data.iter().map(|z| z.re).collect();
        pairwise_sum(&per_site)
    }

    /// `Σ_sites |f|_F²`, no quadrature weight.
    pub fn norm_sqr(&self) -> f64 {
        let len = self.grid.site_len();
        let per_site: Vec<f64> = self.data.chunks(len).map(|a| a.iter().map(|z| z.norm_sqr()).sum()).collect();
        pairwise_sum(&per_site)
    }

    /// Quadrature-weighted `L²` norm `(ΔA · Σ |f|_F²)^{1/2}`.
    pub fn l2_norm(&self) -> f64 {
        (self.grid.cell_area() * self.norm_sqr()).sqrt()
    }

    /// Largest per-site Frobenius norm.
    pub fn max_frobenius(&self) -> f64 {
        self.data.chunks(self.grid.site_len()).map(matrix::frobenius).fold(0.0, f64::max)
    }

    /// Largest per-site Frobenius norm of `self − other`.
    pub fn max_diff(&self, other: &MatrixField) -> f64 {
        assert_eq!(self.grid, other.grid, "grid mismatch in max_diff");
        let len = self.grid.site_len();
        self.data
            .chunks(len)
            .zip(other.data.chunks(len))
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt())
            .fold(0.0, f64::max)
    }

    /// Max per-site `‖f + f*‖_F`.
    pub fn anti_hermitian_defect(&self) -> f64 {
        let n = self.grid.n();
        self.data
            .chunks(self.grid.site_len())
            .map(|a| {
                let mut acc = 0.0;
                for i in 0..n {
                    for j in 0..n {
                        acc += (a[i * n + j] + a[j * n + i].conj()).norm_sqr();
                    }
                }
                acc.sqrt()
            })
            .fold(0.0, f64::max)
    }

    /// Max per-site `‖f − f*‖_F`.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.grid.n();
        self.data
            .chunks(self.grid.site_len())
            .map(|a| {
                let mut acc = 0.0;
                for i in 0..n {
                    for j in 0..n {
                        acc += (a[i * n + j] - a[j * n + i].conj()).norm_sqr();
                    }
                }
                acc.sqrt()
            })
            .fold(0.0, f64::max)
    }

    /// Max per-site `‖g* g − 1‖_F`.
    pub fn unitary_defect(&self) -> f64 {
        let n = self.grid.n();
        let id = matrix::identity(n);
        self.data
            .chunks(self.grid.site_len())
            .map(|a| {
                let gg = matrix::mul(n, &matrix::adjoint(n, a), a);
                gg.iter().zip(&id).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
            })
            .fold(0.0, f64::max)
    }

    pub fn assert_anti_hermitian(&self, tol: f64) -> Result<()> {
        let defect = self.anti_hermitian_defect();
        if defect <= tol {
            Ok(())
        } else {
            Err(Error::NotAntiHermitian { defect })
        }
    }

    pub fn assert_unitary(&self, tol: f64) -> Result<()> {
        let defect = self.unitary_defect();
        if defect <= tol {
            Ok(())
        } else {
            Err(Error::NotUnitary { defect })
        }
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Per-site exponential.
    pub fn expm(&self) -> MatrixField {
        let n = self.grid.n();
        self.map_sites(|a, o| o.copy_from_slice(&matrix::expm(n, a)))
    }

    /// Mean over sites.
    pub fn mean(&self) -> Vec<Complex64> {
        let len = self.grid.site_len();
        let sites = self.grid.num_sites();
        (0..len)
            .map(|k| {
                let col: Vec<Complex64> = (0..sites).map(|s| self.data[s * len + k]).collect();
                pairwise_sum_complex(&col) / sites as f64
            })
            .collect()
    }
}

impl Add for &MatrixField {
    type Output = MatrixField;
    fn add(self, rhs: &MatrixField) -> MatrixField {
        self.zip_sites(rhs, |a, b, o| {
            for k in 0..a.len() {
                o[k] = a[k] + b[k];
            }
        })
    }
}

impl Sub for &MatrixField {
    type Output = MatrixField;
    fn sub(self, rhs: &MatrixField) -> MatrixField {
        self.zip_sites(rhs, |a, b, o| {
            for k in 0..a.len() {
                o[k] = a[k] - b[k];
            }
        })
    }
}

impl Neg for &MatrixField {
    type Output = MatrixField;
    fn neg(self) -> MatrixField {
        self.map_entries(|z| -z)
    }
}

impl Mul<Complex64> for &MatrixField {
    type Output = MatrixField;
    fn mul(self, rhs: Complex64) -> MatrixField {
        self.scale(rhs)
    }
}

impl Mul<f64> for &MatrixField {
    type Output = MatrixField;
    fn mul(self, rhs: f64) -> MatrixField {
        self.scale_real(rhs)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for MatrixField {
            type Output = MatrixField;
            fn $m(self, rhs: MatrixField) -> MatrixField {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MatrixField> for MatrixField {
            type Output = MatrixField;
            fn $m(self, rhs: &MatrixField) -> MatrixField {
                (&self).$m(rhs)
            }
        }
        impl $tr<MatrixField> for &MatrixField {
            type Output = MatrixField;
            fn $m(self, rhs: MatrixField) -> MatrixField {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);

impl Neg for MatrixField {
    type Output = MatrixField;
    fn neg(self) -> MatrixField {
        -&self
    }
}
