//! Serializable reports.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SideReport {
    /// Side name such as `"PQ"`; the remaining vertex is the apex.
    pub side: String,
    pub delta: f64,
    pub tangent_gap: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EllipseReport {
    pub a: f64,
    pub b: f64,
    /// Center offset along `axis`.
    pub c: f64,
    pub u: f64,
    pub axis: [f64; 2],
    pub center: [f64; 2],
    /// Quadratic form evaluated at R; zero on the ellipse.
    pub value_at_r: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub triangle: [[f64; 2]; 3],
    pub m: usize,
    /// `δ(P,Q,R) − Δ′(P,Q)`.
    pub margin: f64,
    pub band: f64,
    pub omega: f64,
    pub sides: Vec<SideReport>,
    pub ellipse: EllipseReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RotationReport {
    pub value: f64,
    pub error_bound: f64,
    pub exact_one_third: bool,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MuReport {
    pub lower: f64,
    pub upper: f64,
    pub samples: usize,
    pub grid_resolution: f64,
}
