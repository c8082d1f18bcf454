use indexmap::IndexMap;
use num_complex::Complex64;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use super::*;
use crate::compare::{rel_diff, rel_diff_c};
use crate::family::omega123;

/// Every bilinear form evaluated on one pair of tangent vectors, together
/// with the residuals of the identities that relate them.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearReport {
    pub g: f64,
    pub omega: f64,
    pub q1: f64,
    pub q2: f64,
    pub q_complex: Complex64,
    pub omega123: [Complex64; 3],
    pub identity_residuals: IndexMap<String, f64>,
}

impl BilinearReport {
    pub fn evaluate(x: &TangentVector, y: &TangentVector) -> Result<Self> {
        let g = metric_g(x, y)?;
        let om = omega_integral(x, y)?;
        let q1v = q1_integral(x, y)?;
        let q2v = q2_integral(x, y)?;
        let qc = q_complex(x, y)?;
        let w = omega123(x, y)?;

        let mut res = IndexMap::new();
        res.insert("omega_imag".to_string(), om.im.abs() / om.norm().max(f64::MIN_POSITIVE));
        res.insert("q1_imag".to_string(), q1v.im.abs() / q1v.norm().max(f64::MIN_POSITIVE));
        res.insert("q2_imag".to_string(), q2v.im.abs() / q2v.norm().max(f64::MIN_POSITIVE));
        res.insert("omega_vs_g_I".to_string(), rel_diff(om.re, metric_g(x, &apply_i(y))?));
        res.insert("q1_vs_g_J".to_string(), rel_diff(q1v.re, metric_g(x, &apply_j(y))?));
        res.insert("q2_vs_g_K".to_string(), rel_diff(q2v.re, metric_g(x, &apply_k(y))?));
        res.insert("q_complex_sum".to_string(), rel_diff_c(qc, Complex64::new(q1v.re, q2v.re)));
        res.insert("omega1_vs_omega".to_string(), rel_diff_c(w[0], om));
        res.insert("omega3_vs_conj_omega2".to_string(), rel_diff_c(w[2], -w[1].conj()));

        Ok(Self { g, omega: om.re, q1: q1v.re, q2: q2v.re, q_complex: qc, omega123: w, identity_residuals: res })
    }

    pub fn max_residual(&self) -> f64 {
        self.identity_residuals.values().copied().fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Pair(Complex64);

impl Serialize for Pair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.0.re, self.0.im].serialize(s)
    }
}

impl Serialize for BilinearReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(7))?;
        m.serialize_entry("g", &self.g)?;
        m.serialize_entry("omega", &self.omega)?;
        m.serialize_entry("q1", &self.q1)?;
        m.serialize_entry("q2", &self.q2)?;
        m.serialize_entry("q_complex", &Pair(self.q_complex))?;
        let w: Vec<Pair> = self.omega123.iter().map(|z| Pair(*z)).collect();
        m.serialize_entry("omega123", &w)?;
        m.serialize_entry("identity_residuals", &self.identity_residuals)?;
        m.end()
    }
}
