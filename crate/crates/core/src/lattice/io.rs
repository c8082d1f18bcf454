//! JSON field files.
//!
//! A field file is `{"n", "N", "Lx", "Ly", "data"}` where `data` is nested
//! `[N][N][n][n][2]` holding `(re, im)`, indexed `(iy, ix, row, col)`.
//! Floats are written with 17 significant digits.

use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;
use serde_json::Value;

use super::config::Configuration;
use super::field::MatrixField;
use super::grid::{DerivScheme, Grid};
use crate::error::{Error, Result};

fn fmt_f64(out: &mut String, v: f64) {
    let _ = write!(out, "{v:.16e}");
}

fn write_field_body(out: &mut String, f: &MatrixField) {
    let g = f.grid();
    let (nn, n) = (g.sites(), g.n());
    out.push_str("{\"n\": ");
    let _ = write!(out, "{n}");
    out.push_str(", \"N\": ");
    let _ = write!(out, "{nn}");
    out.push_str(", \"Lx\": ");
    fmt_f64(out, g.lx());
    out.push_str(", \"Ly\": ");
    fmt_f64(out, g.ly());
    out.push_str(", \"data\": [");
    for iy in 0..nn {
        if iy > 0 {
            out.push_str(", ");
        }
        out.push('[');
        for ix in 0..nn {
            if ix > 0 {
                out.push_str(", ");
            }
            let m = f.site_at(iy, ix);
            out.push('[');
            for r in 0..n {
                if r > 0 {
                    out.push_str(", ");
                }
                out.push('[');
                for c in 0..n {
                    if c > 0 {
                        out.push_str(", ");
                    }
                    let z = m[r * n + c];
                    out.push('[');
                    fmt_f64(out, z.re);
                    out.push_str(", ");
                    fmt_f64(out, z.im);
                    out.push(']');
                }
                out.push(']');
            }
            out.push(']');
        }
        out.push(']');
    }
    out.push_str("]}");
}

/// Serializes a field to the JSON field format.
pub fn field_to_json(f: &MatrixField) -> String {
    let mut out = String::new();
    write_field_body(&mut out, f);
    out
}

fn as_usize(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| Error::Shape(format!("missing or invalid integer \"{key}\"")))
}

fn as_f64(v: &Value, key: &str) -> Result<f64> {
    v.get(key).and_then(Value::as_f64).ok_or_else(|| Error::Shape(format!("missing or invalid number \"{key}\"")))
}

fn array_of_len<'a>(v: &'a Value, len: usize, what: &str) -> Result<&'a Vec<Value>> {
    let arr = v.as_array().ok_or_else(|| Error::Shape(format!("{what} is not an array")))?;
    if arr.len() != len {
        return Err(Error::Shape(format!("{what} has length {}, expected {len}", arr.len())));
    }
    Ok(arr)
}

/// Parses a field from an already-decoded JSON value.
pub fn field_from_value(v: &Value, scheme: DerivScheme) -> Result<MatrixField> {
    let n = as_usize(v, "n")?;
    let nn = as_usize(v, "N")?;
    let grid = Grid::new(nn, as_f64(v, "Lx")?, as_f64(v, "Ly")?, n, scheme)?;
    let data = v.get("data").ok_or_else(|| Error::Shape("missing \"data\"".into()))?;
    let mut out = Vec::with_capacity(grid.len());
    for row in array_of_len(data, nn, "data")? {
        for site in array_of_len(row, nn, "data row")? {
            for mrow in array_of_len(site, n, "site matrix")? {
                for entry in array_of_len(mrow, n, "matrix row")? {
                    let pair = array_of_len(entry, 2, "complex entry")?;
                    let re = pair[0].as_f64().ok_or_else(|| Error::Shape("non-numeric real part".into()))?;
                    let im = pair[1].as_f64().ok_or_else(|| Error::Shape("non-numeric imaginary part".into()))?;
                    out.push(Complex64::new(re, im));
                }
            }
        }
    }
    MatrixField::from_data(grid, out)
}

pub fn field_from_json(s: &str, scheme: DerivScheme) -> Result<MatrixField> {
    field_from_value(&serde_json::from_str(s)?, scheme)
}

pub fn write_field(path: &Path, f: &MatrixField) -> Result<()> {
    std::fs::write(path, field_to_json(f))?;
    Ok(())
}

pub fn read_field(path: &Path, scheme: DerivScheme) -> Result<MatrixField> {
    field_from_json(&std::fs::read_to_string(path)?, scheme)
}

/// `{"a_zbar": <field>, "phi_z": <field>}`.
pub fn configuration_to_json(c: &Configuration) -> String {
    let mut out = String::from("{\"a_zbar\": ");
    write_field_body(&mut out, c.a_zbar());
    out.push_str(", \"phi_z\": ");
    write_field_body(&mut out, c.phi_z());
    out.push_str("}\n");
    out
}

pub fn configuration_from_json(s: &str, scheme: DerivScheme) -> Result<Configuration> {
    let v: Value = serde_json::from_str(s)?;
    let a = field_from_value(v.get("a_zbar").ok_or_else(|| Error::Shape("missing \"a_zbar\"".into()))?, scheme)?;
    let phi = field_from_value(v.get("phi_z").ok_or_else(|| Error::Shape("missing \"phi_z\"".into()))?, scheme)?;
    Configuration::new(a, phi)
}

pub fn write_configuration(path: &Path, c: &Configuration) -> Result<()> {
    std::fs::write(path, configuration_to_json(c))?;
    Ok(())
}

pub fn read_configuration(path: &Path, scheme: DerivScheme) -> Result<Configuration> {
    configuration_from_json(&std::fs::read_to_string(path)?, scheme)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::random::{random_field, FieldFlag};
    use proptest::prelude::*;

    #[test]
    fn rejects_shape_mismatch() {
        let g = Grid::unit(4, 2).unwrap();
        let f = random_field(1, &g, 1, FieldFlag::General).unwrap();
        let mut v: Value = serde_json::from_str(&field_to_json(&f)).unwrap();
        v["N"] = Value::from(8);
        assert!(field_from_value(&v, DerivScheme::Spectral).is_err());
        let mut v: Value = serde_json::from_str(&field_to_json(&f)).unwrap();
        v["n"] = Value::from(3);
        assert!(field_from_value(&v, DerivScheme::Spectral).is_err());
    }

    #[test]
    fn seventeen_significant_digits() {
        let g = Grid::unit(4, 1).unwrap();
        let f = MatrixField::constant(g, &[Complex64::new(1.0 / 3.0, -2.0)]).unwrap();
        let s = field_to_json(&f);
        assert!(s.contains("3.3333333333333331e-1"), "{s}");
        assert!(s.contains("-2.0000000000000000e0"));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn json_roundtrip_is_bit_exact(seed in 0u64..1000, n in 1usize..4) {
            let g = Grid::new(4, 1.5, 0.25, n, DerivScheme::Spectral).unwrap();
            let f = random_field(seed, &g, 1, FieldFlag::General).unwrap();
            let back = field_from_json(&field_to_json(&f), DerivScheme::Spectral).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
