use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::hitchin::SolveOptions;
use crate::lattice::{DerivScheme, Grid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Verify,
    Solve,
    Family,
    Report,
}

impl Command {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "verify" => Some(Command::Verify),
            "solve" => Some(Command::Solve),
            "family" => Some(Command::Family),
            "report" => Some(Command::Report),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GridConfig {
    #[serde(rename = "N")]
    pub sites: usize,
    #[serde(rename = "Lx")]
    pub lx: f64,
    #[serde(rename = "Ly")]
    pub ly: f64,
    pub n: usize,
    pub deriv_scheme: DerivScheme,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self { sites: 16, lx: 2.0 * PI, ly: 2.0 * PI, n: 2, deriv_scheme: DerivScheme::Spectral }
    }
}

impl GridConfig {
    pub fn grid(&self) -> Result<Grid> {
        Grid::new(self.sites, self.lx, self.ly, self.n, self.deriv_scheme)
    }
}

/// Everything a run needs. Unknown keys are rejected.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub grid: GridConfig,
    pub seed: u64,
    /// Random tangent pairs per identity check.
    pub pairs: usize,
    /// Tolerance overrides keyed by check name or suite name.
    pub tolerances: IndexMap<String, f64>,
    /// Configuration file to start from; overrides `fixture`.
    pub input: Option<PathBuf>,
    pub out: PathBuf,
    /// `zero`, `diag-higgs`, `diag-higgs-perturbed` or `random`.
    pub fixture: String,
    pub perturbation: f64,
    pub solver: SolveOptions,
    #[serde(rename = "K")]
    pub lambda_count: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            grid: GridConfig::default(),
            seed: 1,
            pairs: 100,
            tolerances: IndexMap::new(),
            input: None,
            out: PathBuf::from("out"),
            fixture: "diag-higgs-perturbed".to_string(),
            perturbation: 1e-2,
            solver: SolveOptions::default(),
            lambda_count: 16,
        }
    }
}

impl RunConfig {
    pub fn from_value(v: Value) -> Result<Self> {
        let cfg: RunConfig = serde_json::from_value(v)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn read(path: &Path) -> Result<Value> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read config {}: {e}", path.display())))?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn validate(&self) -> Result<()> {
        self.grid.grid()?;
        for (name, tol) in &self.tolerances {
            if !(*tol > 0.0 && tol.is_finite()) {
                return Err(Error::InvalidArgument(format!("tolerance {name} must be positive, got {tol}")));
            }
        }
        if self.pairs == 0 {
            return Err(Error::InvalidArgument("pairs must be at least 1".into()));
        }
        if self.lambda_count < 4 {
            return Err(Error::InvalidArgument(format!("K must be at least 4, got {}", self.lambda_count)));
        }
        if let Some(input) = &self.input {
            if input == &self.out {
                return Err(Error::InvalidArgument("input and output paths must differ".into()));
            }
        }
        Ok(())
    }

    /// Tolerance for `check` in `suite`: an exact override, then a suite
    /// override, then `default`.
    pub fn tolerance(&self, suite: &str, check: &str, default: f64) -> f64 {
        self.tolerances.get(check).or_else(|| self.tolerances.get(suite)).copied().unwrap_or(default)
    }
}

/// Sets `root.a.b.c = value` for the dotted path `a.b.c`, creating objects
/// on the way. The value is parsed as JSON when possible and kept as a
/// string otherwise.
pub fn apply_override(root: &mut Value, path: &str, raw: &str) -> Result<()> {
    let value = serde_json::from_str(raw).unwrap_or_else(|_| Value::String(raw.to_string()));
    let mut node = root;
    let keys: Vec<&str> = path.split('.').collect();
    if keys.iter().any(|k| k.is_empty()) {
        return Err(Error::InvalidArgument(format!("bad override path {path:?}")));
    }
    for key in &keys[..keys.len() - 1] {
        if !node.is_object() {
            return Err(Error::InvalidArgument(format!("override {path}: {key} is not an object")));
        }
        node =
            node.as_object_mut().unwrap().entry(key.to_string()).or_insert_with(|| Value::Object(Default::default()));
    }
    match node.as_object_mut() {
        Some(obj) => {
            obj.insert(keys[keys.len() - 1].to_string(), value);
            Ok(())
        }
        None => Err(Error::InvalidArgument(format!("override {path}: parent is not an object"))),
    }
}
