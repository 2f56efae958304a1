//! Distances and model conversions for the Poincaré disk, the Beltrami–Klein
//! disk and the upper half-plane.
//!
//! All points are [`DiskPoint`]s; the function name says which model the
//! coordinates are read in. Klein distances are computed from the chord
//! endpoints (cross-ratio form) rather than by converting to the Poincaré
//! disk, so the two routes can check each other.

use crate::error::{GeometryError, Result};
use crate::point::{twice_signed_area, BoundaryPoint, DiskPoint, Point, AREA_EPS};

/// Tolerance on the hyperbolic triangle inequality.
pub const TRIANGLE_INEQUALITY_TOL: f64 = 1e-10;

/// Inputs closer than this (Euclidean) do not define a chord.
pub const CHORD_EPS: f64 = 1e-12;

/// `arccosh(1 + w)` for `w ≥ 0`, without the cancellation of `z² − 1` near `z = 1`.
fn arcosh_1p(w: f64) -> f64 {
    let w = w.max(0.0);
    (w + (w * (w + 2.0)).sqrt()).ln_1p()
}

/// Poincaré-disk distance `arccosh(1 + 2|P−Q|² / ((1−|P|²)(1−|Q|²)))`.
pub fn poincare_distance(p: DiskPoint, q: DiskPoint) -> f64 {
    let (p, q) = (p.point(), q.point());
    let w = 2.0 * (p - q).norm_sq() / ((1.0 - p.norm_sq()) * (1.0 - q.norm_sq()));
    arcosh_1p(w)
}

/// `log((eᵈ+1)/(eᵈ−1)) = log coth(d/2)`, the height threshold attached to a
/// side of hyperbolic length `d`. It is an involution on `(0, ∞)`.
pub fn tangent_gap(d: f64) -> Result<f64> {
    if !(d.is_finite() && d > 0.0) {
        return Err(GeometryError::Domain {
            what: "tangent gap distance",
            value: d,
        });
    }
    Ok((2.0 / d.exp_m1()).ln_1p())
}

/// Poincaré disk → Klein disk.
pub fn to_klein(p: DiskPoint) -> DiskPoint {
    let p = p.point();
    DiskPoint::inside_unchecked(p * (2.0 / (1.0 + p.norm_sq())))
}

/// Klein disk → Poincaré disk.
pub fn from_klein(p: DiskPoint) -> DiskPoint {
    let p = p.point();
    DiskPoint::inside_unchecked(p * (1.0 / (1.0 + (1.0 - p.norm_sq()).sqrt())))
}

/// The straight line through two disk points, parametrized by Euclidean arc
/// length `s` from `p` toward `q`. It leaves the disk at `s_minus < 0` and at
/// `s_plus > len`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ChordLine {
    pub origin: Point,
    pub dir: Point,
    pub len: f64,
    pub s_minus: f64,
    pub s_plus: f64,
}

impl ChordLine {
    pub fn through(p: Point, q: Point) -> Option<ChordLine> {
        let len = p.dist(q);
        if len.is_nan() || len <= 0.0 {
            return None;
        }
        let dir = (q - p) * (1.0 / len);
        let b = p.dot(dir);
        let c = p.norm_sq() - 1.0;
        let h = (b * b - c).sqrt();
        // roots of s² + 2bs + c; take the non-cancelling one first
        let (s_minus, s_plus) = if b >= 0.0 {
            let sm = -b - h;
            (sm, c / sm)
        } else {
            let sp = -b + h;
            (c / sp, sp)
        };
        Some(ChordLine {
            origin: p,
            dir,
            len,
            s_minus,
            s_plus,
        })
    }

    pub fn at(&self, s: f64) -> Point {
        self.origin + self.dir * s
    }

    /// Klein distance between the two defining points.
    pub fn klein_length(&self) -> f64 {
        0.5 * ((self.len / -self.s_minus).ln_1p() - (-self.len / self.s_plus).ln_1p())
    }
}

/// The two points at infinity of the Klein line `pq`, ordered `(v₁, v₂)` with
/// `v₁` on the `p` side: the line reads `v₁, p, q, v₂`.
pub fn klein_chord_endpoints(p: DiskPoint, q: DiskPoint) -> Result<(BoundaryPoint, BoundaryPoint)> {
    let (p, q) = (p.point(), q.point());
    if p.dist(q) <= CHORD_EPS {
        return Err(GeometryError::DegenerateChord);
    }
    let line = ChordLine::through(p, q).ok_or(GeometryError::DegenerateChord)?;
    Ok((
        BoundaryPoint::from_xy(line.at(line.s_minus)),
        BoundaryPoint::from_xy(line.at(line.s_plus)),
    ))
}

/// Klein distance `½|log(|v₁Q||v₂P| / (|v₁P||v₂Q|))|`; zero when `p == q`.
pub fn klein_distance(p: DiskPoint, q: DiskPoint) -> f64 {
    match ChordLine::through(p.point(), q.point()) {
        Some(line) => line.klein_length(),
        None => 0.0,
    }
}

/// `tangent_gap(klein_distance(p, q))`.
pub fn klein_tangent_gap(p: DiskPoint, q: DiskPoint) -> Result<f64> {
    tangent_gap(klein_distance(p, q))
}

/// Hyperbolic side lengths of a triangle `PQR`: `alpha = |QR|`,
/// `beta = |RP|`, `gamma = |PQ|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideLengths {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl SideLengths {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        let sides = SideLengths { alpha, beta, gamma };
        if [alpha, beta, gamma].iter().any(|s| !(s.is_finite() && *s >= 0.0)) {
            return Err(GeometryError::Domain {
                what: "side length",
                value: alpha.min(beta).min(gamma),
            });
        }
        let slack = sides.min_slack();
        if slack < -TRIANGLE_INEQUALITY_TOL {
            return Err(GeometryError::TriangleInequality { slack });
        }
        Ok(sides)
    }

    /// Klein side lengths of `PQR`.
    pub fn klein(p: DiskPoint, q: DiskPoint, r: DiskPoint) -> Self {
        SideLengths {
            alpha: klein_distance(q, r),
            beta: klein_distance(r, p),
            gamma: klein_distance(p, q),
        }
    }

    fn min_slack(&self) -> f64 {
        let s = 0.5 * (self.alpha + self.beta + self.gamma);
        (s - self.alpha).min(s - self.beta).min(s - self.gamma)
    }
}

/// Length of the perpendicular from `R` to the line `PQ`.
///
/// `sinh h = √((cosh β − cosh(α−γ))(cosh(α+γ) − cosh β)) / sinh γ`, evaluated
/// in the product form `2√(sinh s · sinh(s−α) · sinh(s−β) · sinh(s−γ)) / sinh γ`
/// with `s` the semi-perimeter, which avoids cancelling differences of
/// hyperbolic cosines for flat triangles.
pub fn foot_distance(sides: SideLengths) -> Result<f64> {
    let SideLengths { alpha, beta, gamma } = SideLengths::new(sides.alpha, sides.beta, sides.gamma)?;
    if gamma.is_nan() || gamma <= 0.0 {
        return Err(GeometryError::Domain {
            what: "base side length",
            value: gamma,
        });
    }
    let s = 0.5 * (alpha + beta + gamma);
    let prod = s.sinh()
        * (s - alpha).max(0.0).sinh()
        * (s - beta).max(0.0).sinh()
        * (s - gamma).max(0.0).sinh();
    Ok((2.0 * prod.sqrt() / gamma.sinh()).asinh())
}

fn check_triangle(p: DiskPoint, q: DiskPoint, r: DiskPoint) -> Result<()> {
    let area = twice_signed_area(p.point(), q.point(), r.point());
    if area.abs() <= AREA_EPS || !area.is_finite() {
        return Err(GeometryError::DegenerateTriangle { area });
    }
    Ok(())
}

/// `δ(P,Q,R)`: Klein distance from `r` to the line `pq`.
pub fn delta(p: DiskPoint, q: DiskPoint, r: DiskPoint) -> Result<f64> {
    check_triangle(p, q, r)?;
    foot_distance(SideLengths::klein(p, q, r))
}

/// Foot of the Klein perpendicular from `r` to the line `pq`.
///
/// The perpendicular passes through the pole of the chord, so its direction
/// is `n − u·r` where `n·x = u` is the chord in normal form.
pub fn klein_perpendicular_foot(p: DiskPoint, q: DiskPoint, r: DiskPoint) -> Result<DiskPoint> {
    let (p, q, r) = (p.point(), q.point(), r.point());
    if p.dist(q) <= CHORD_EPS {
        return Err(GeometryError::DegenerateChord);
    }
    let mut n = (q - p).perp().normalized();
    let mut u = n.dot(p);
    if u < 0.0 {
        n = -n;
        u = -u;
    }
    let d = n - r * u;
    let t = (u - n.dot(r)) / n.dot(d);
    let foot = r + d * t;
    if foot.norm_sq() >= 1.0 {
        return Err(GeometryError::OutsideDisk { x: foot.x, y: foot.y });
    }
    Ok(DiskPoint::inside_unchecked(foot))
}

/// `(δ(P,Q,R) + δ(R,P,Q) + δ(Q,R,P)) / (Δ′(P,Q) + Δ′(R,P) + Δ′(Q,R))`.
pub fn omega(r: DiskPoint, p: DiskPoint, q: DiskPoint) -> Result<f64> {
    check_triangle(p, q, r)?;
    let num = delta(p, q, r)? + delta(r, p, q)? + delta(q, r, p)?;
    let den = klein_tangent_gap(p, q)? + klein_tangent_gap(r, p)? + klein_tangent_gap(q, r)?;
    Ok(num / den)
}

/// Image under `z ↦ (iz + i)/(1 − z)` in the upper half-plane.
pub fn to_half_plane(p: DiskPoint) -> (f64, f64) {
    let p = p.point();
    let den = (1.0 - p.x).powi(2) + p.y * p.y;
    (-2.0 * p.y / den, (1.0 - p.norm_sq()) / den)
}
