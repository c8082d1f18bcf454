//! Discretized fields on a flat periodic surface: grids, matrix fields,
//! derivatives, 1-form pairings, quadrature, and the gauge action.

pub mod config;
pub mod deriv;
pub mod field;
pub mod forms;
pub mod grid;
pub mod io;
pub mod matrix;
pub mod random;
pub mod reduce;

pub use config::{
    curvature, gauge_act, gauge_act_tangent, Configuration, GaugeTransform, HiggsField, TangentVector,
    UnitaryConnection,
};
pub use deriv::{d, dbar};
pub use field::{MatrixField, ScalarField};
pub use forms::{integrate_2form, integrate_2form_scalar, integrate_wedge, wedge_trace, OneForm};
pub use grid::{DerivScheme, Grid};
pub use random::{random_field, random_field_scaled, FieldFlag};
