use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite-difference scheme used for `∂/∂x` and `∂/∂y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum DerivScheme {
    /// Trigonometric-interpolant derivative; exact on modes below Nyquist.
    #[default]
    Spectral,
    /// Second-order centered differences.
    Central2,
}

/// A periodic `N × N` grid on the flat torus `[0, Lx) × [0, Ly)` carrying
/// `n × n` complex matrices at every site.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    #[serde(rename = "N")]
    sites: usize,
    #[serde(rename = "Lx")]
    lx: f64,
    #[serde(rename = "Ly")]
    ly: f64,
    n: usize,
    #[serde(default)]
    scheme: DerivScheme,
}

impl Grid {
    pub fn new(sites: usize, lx: f64, ly: f64, n: usize, scheme: DerivScheme) -> Result<Self> {
        if sites < 4 {
            return Err(Error::InvalidGrid(format!("N = {sites} < 4")));
        }
        if !sites.is_power_of_two() {
            return Err(Error::InvalidGrid(format!("N = {sites} is not a power of two")));
        }
        if !(lx.is_finite() && ly.is_finite() && lx > 0.0 && ly > 0.0) {
            return Err(Error::InvalidGrid(format!("periods must be positive, got {lx} x {ly}")));
        }
        if n == 0 {
            return Err(Error::InvalidGrid("matrix rank must be positive".into()));
        }
        Ok(Self { sites, lx, ly, n, scheme })
    }

    /// Unit-period square grid with spectral derivatives.
    pub fn unit(sites: usize, n: usize) -> Result<Self> {
        Self::new(sites, 1.0, 1.0, n, DerivScheme::Spectral)
    }

    /// Re-validates a grid obtained by deserialization.
    pub fn validated(self) -> Result<Self> {
        Self::new(self.sites, self.lx, self.ly, self.n, self.scheme)
    }

    pub fn with_scheme(mut self, scheme: DerivScheme) -> Self {
        self.scheme = scheme;
        self
    }

    /// Sites per side.
    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn lx(&self) -> f64 {
        self.lx
    }

    pub fn ly(&self) -> f64 {
        self.ly
    }

    /// Matrix rank.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scheme(&self) -> DerivScheme {
        self.scheme
    }

    pub fn num_sites(&self) -> usize {
        self.sites * self.sites
    }

    /// Complex entries per site.
    pub fn site_len(&self) -> usize {
        self.n * self.n
    }

    pub fn len(&self) -> usize {
        self.num_sites() * self.site_len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dx(&self) -> f64 {
        self.lx / self.sites as f64
    }

    pub fn dy(&self) -> f64 {
        self.ly / self.sites as f64
    }

    pub fn cell_area(&self) -> f64 {
        self.dx() * self.dy()
    }

    pub fn area(&self) -> f64 {
        self.lx * self.ly
    }

    /// Physical coordinates of site `(iy, ix)`.
    pub fn coords(&self, iy: usize, ix: usize) -> (f64, f64) {
        (ix as f64 * self.dx(), iy as f64 * self.dy())
    }

    /// Two grids are compatible when every geometric parameter agrees.
    pub fn ensure_same(&self, other: &Grid) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }
}
