//! How many triangles inscribed in the unit circle circumscribe a given
//! triangle, and the conics that separate the answers.
//!
//! Three independent classifiers are provided: the per-side height test
//! ([`count_inscribed`]), the summed ratio ω ([`count_inscribed_via_omega`]),
//! and membership in the tangency ellipse ([`classify_via_ellipse`]). The
//! inscribed triangles themselves come from the period-3 orbits of the
//! circle map ([`construct_inscribed_triangles`]).

use crate::circle_map::find_period3_orbits;
use crate::error::{GeometryError, Result};
use crate::hyperbolic::{
    delta, from_klein, klein_chord_endpoints, klein_tangent_gap, omega, poincare_distance, to_klein,
    CHORD_EPS,
};
use crate::point::{BoundaryPoint, DiskPoint, Point, Triangle};

/// Default half-width of the band around the `m = 1` boundary.
pub const DEFAULT_BAND: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Multiplicity {
    Zero,
    One,
    Two,
}

impl Multiplicity {
    pub fn count(self) -> usize {
        match self {
            Multiplicity::Zero => 0,
            Multiplicity::One => 1,
            Multiplicity::Two => 2,
        }
    }
}

/// Classification result. `margin` is positive on the `Two` side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InscribedCount {
    pub m: Multiplicity,
    pub margin: f64,
    pub boundary_band: f64,
}

impl InscribedCount {
    pub fn from_margin(margin: f64, band: f64) -> Self {
        let m = if margin > band {
            Multiplicity::Two
        } else if margin < -band {
            Multiplicity::Zero
        } else {
            Multiplicity::One
        };
        InscribedCount {
            m,
            margin,
            boundary_band: band,
        }
    }
}

fn check_band(band: f64) -> Result<()> {
    if band >= 0.0 && band.is_finite() {
        Ok(())
    } else {
        Err(GeometryError::Domain {
            what: "boundary band",
            value: band,
        })
    }
}

/// Sign of `δ(P,Q,R) − Δ′(P,Q)` for the triangle read in the Klein disk.
pub fn count_inscribed(t: &Triangle, band: f64) -> Result<InscribedCount> {
    check_band(band)?;
    let margin = delta(t.p, t.q, t.r)? - klein_tangent_gap(t.p, t.q)?;
    Ok(InscribedCount::from_margin(margin, band))
}

/// Sign of `ω − 1`.
pub fn count_inscribed_via_omega(t: &Triangle, band: f64) -> Result<InscribedCount> {
    check_band(band)?;
    let w = omega(t.r, t.p, t.q)?;
    Ok(InscribedCount::from_margin(w - 1.0, band))
}

/// Orthonormal frame attached to the chord through two Klein points.
///
/// `t1`, `t2` are the chord endpoints with `t1 − t2 ∈ (0, 1/2]` turns, `t3`
/// is the midpoint of the short arc from `t2` to `t1` and `t4 = t3 + 1/4`.
/// The chord is the line `x₁ = u` in the coordinates `(x₁, x₂)` along
/// `(t3, t4)`; with this orientation `u ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordFrame {
    pub t1: BoundaryPoint,
    pub t2: BoundaryPoint,
    pub t3: BoundaryPoint,
    pub t4: BoundaryPoint,
    pub u: f64,
}

impl ChordFrame {
    /// Frame coordinates `(x₁, x₂)` of a plane point.
    pub fn coords(&self, p: Point) -> (f64, f64) {
        (p.dot(self.t3.xy()), p.dot(self.t4.xy()))
    }

    pub fn to_plane(&self, x1: f64, x2: f64) -> Point {
        self.t3.xy() * x1 + self.t4.xy() * x2
    }
}

/// Frame of the chord through `p` and `q`.
pub fn chord_frame(p: DiskPoint, q: DiskPoint) -> Result<ChordFrame> {
    let (v1, v2) = klein_chord_endpoints(p, q)?;
    let gap = v2.angle().ccw_to(v1.angle());
    let (t1, t2) = if gap > 0.0 && gap <= 0.5 { (v1, v2) } else { (v2, v1) };
    let mut n = (q.point() - p.point()).perp().normalized();
    if t2.xy().cross(n) < 0.0 {
        n = -n;
    }
    let t3 = BoundaryPoint::from_xy(n);
    let t4 = BoundaryPoint::from_xy(n.perp());
    Ok(ChordFrame {
        t1,
        t2,
        t3,
        t4,
        u: n.dot(p.point()),
    })
}

/// Semi-axes and center offset of a tangency ellipse in its chord frame:
/// `(x₁ − c)²/a² + x₂²/b² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseAxes {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Ellipse through the chord `x₁ = u`, from the second coordinates `p`, `q`
/// of the two defining points.
pub fn ellipse_axes_from_chord(u: f64, p: f64, q: f64) -> EllipseAxes {
    let u2 = u * u;
    let den = p * p * (q * q + u2) - 2.0 * p * q + (q * q - 2.0) * u2 + u2 * u2 + 1.0;
    let s = p * q + u2 - 1.0;
    let a = ((p * p + u2 - 1.0) * (q * q + u2 - 1.0)).sqrt() * s.abs() / den;
    let b = s.abs() / den.sqrt();
    let c = u * (p - q).powi(2) / den;
    EllipseAxes { a, b, c }
}

/// The same ellipse from `k = e^{d′(P,Q)}` and the chord offset `u`.
pub fn ellipse_axes_from_distance(k: f64, u: f64) -> EllipseAxes {
    let kk = k * k + 1.0;
    let prod = (kk - 2.0 * k * u) * (kk + 2.0 * k * u);
    let w2 = 1.0 - u * u;
    EllipseAxes {
        a: 2.0 * k * kk * w2 / prod,
        b: kk * w2.sqrt() / prod.sqrt(),
        c: (k * k - 1.0).powi(2) * u / prod,
    }
}

/// The same ellipse from the scalar `center` of the bounding Poincaré arc
/// (its center is `center · t3`).
pub fn ellipse_axes_from_arc_center(center: f64, u: f64) -> EllipseAxes {
    let a = center;
    let den = (u * u + 1.0) * a * a - 2.0 * a * u + 1.0;
    let r2 = a * a - 2.0 * u * a + 1.0;
    EllipseAxes {
        a: (a * u - 1.0).abs() * r2.sqrt() / den,
        b: (r2 / den).sqrt(),
        c: a * a * u / den,
    }
}

/// Locus of third vertices `R` with exactly one inscribed circumscribing
/// triangle, for a fixed pair `P`, `Q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangencyEllipse {
    pub frame: ChordFrame,
    /// Semi-axis along `t3`.
    pub a: f64,
    /// Semi-axis along `t4`.
    pub b: f64,
    /// Center offset along `t3`.
    pub c: f64,
}

impl TangencyEllipse {
    pub fn center(&self) -> Point {
        self.frame.t3.xy() * self.c
    }

    /// Signed center offset along an arbitrary unit `axis`.
    pub fn center_along(&self, axis: Point) -> f64 {
        self.center().dot(axis)
    }

    /// `(x₁ − c)²/a² + x₂²/b² − 1`.
    pub fn quadratic_form(&self, p: Point) -> f64 {
        let (x1, x2) = self.frame.coords(p);
        ((x1 - self.c) / self.a).powi(2) + (x2 / self.b).powi(2) - 1.0
    }

    pub fn gradient(&self, p: Point) -> Point {
        let (x1, x2) = self.frame.coords(p);
        let g1 = 2.0 * (x1 - self.c) / (self.a * self.a);
        let g2 = 2.0 * x2 / (self.b * self.b);
        self.frame.to_plane(g1, g2)
    }

    /// First-order signed distance to the ellipse, negative inside.
    pub fn signed_offset(&self, p: Point) -> f64 {
        self.quadratic_form(p) / self.gradient(p).norm()
    }

    /// Point at parameter `phi` (radians).
    pub fn point_at(&self, phi: f64) -> Point {
        let (s, c) = phi.sin_cos();
        self.frame.to_plane(self.c + self.a * c, self.b * s)
    }
}

/// Tangency ellipse of the chord through `p` and `q`.
pub fn tangency_ellipse(p: DiskPoint, q: DiskPoint) -> Result<TangencyEllipse> {
    let frame = chord_frame(p, q)?;
    let (_, p2) = frame.coords(p.point());
    let (_, q2) = frame.coords(q.point());
    let EllipseAxes { a, b, c } = ellipse_axes_from_chord(frame.u, p2, q2);
    Ok(TangencyEllipse { frame, a, b, c })
}

/// Third classifier: where `R` sits relative to the tangency ellipse of `PQ`.
/// The band applies to [`TangencyEllipse::signed_offset`].
pub fn classify_via_ellipse(t: &Triangle, band: f64) -> Result<InscribedCount> {
    check_band(band)?;
    let e = tangency_ellipse(t.p, t.q)?;
    Ok(InscribedCount::from_margin(e.signed_offset(t.r.point()), band))
}

/// Coefficients `(α, β, γ)` of the line `αx + βy + γ = 0` through the second
/// intersections of the lines from `(cos θ, sin θ)` through `p` and `q`.
///
/// `p` and `q` must be given in chord-frame form: equal first coordinates.
pub fn envelope_line(p: DiskPoint, q: DiskPoint, theta: f64) -> Result<[f64; 3]> {
    let (u, pp, qq) = chord_form(p, q)?;
    Ok(envelope_coefficients(u, pp, qq, theta))
}

fn chord_form(p: DiskPoint, q: DiskPoint) -> Result<(f64, f64, f64)> {
    if (p.x() - q.x()).abs() > 1e-12 {
        return Err(GeometryError::NotInChordFrame(p.x(), q.x()));
    }
    if p.point().dist(q.point()) <= CHORD_EPS {
        return Err(GeometryError::DegenerateChord);
    }
    Ok((0.5 * (p.x() + q.x()), p.y(), q.y()))
}

fn envelope_coefficients(u: f64, p: f64, q: f64, theta: f64) -> [f64; 3] {
    let (s, c) = theta.sin_cos();
    [
        (u * u + 1.0 - p * q) * c + (p + q) * u * s - 2.0 * u,
        (p + q) * u * c + (1.0 + p * q - u * u) * s - p - q,
        -2.0 * u * c - (p + q) * s + p * q + u * u + 1.0,
    ]
}

/// Point where the line at `theta` touches the envelope of the family,
/// from `F = 0` and `∂F/∂θ = 0`. `None` where the system is singular.
pub fn envelope_point(p: DiskPoint, q: DiskPoint, theta: f64) -> Result<Option<Point>> {
    let (u, pp, qq) = chord_form(p, q)?;
    let [a0, b0, c0] = envelope_coefficients(u, pp, qq, theta);
    let (s, c) = theta.sin_cos();
    let a1 = -(u * u + 1.0 - pp * qq) * s + (pp + qq) * u * c;
    let b1 = -(pp + qq) * u * s + (1.0 + pp * qq - u * u) * c;
    let c1 = 2.0 * u * s - (pp + qq) * c;
    let det = a0 * b1 - a1 * b0;
    let scale = (a0.hypot(b0) * a1.hypot(b1)).max(f64::MIN_POSITIVE);
    if det.abs() <= 1e-12 * scale {
        return Ok(None);
    }
    Ok(Some(Point::new((b0 * c1 - b1 * c0) / det, (a1 * c0 - a0 * c1) / det)))
}

/// A circle through both endpoints of a Poincaré geodesic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcCircle {
    pub center: Point,
    pub radius: f64,
}

impl ArcCircle {
    /// Acute angle between this circle and the unit circle where they cross.
    pub fn boundary_angle(&self) -> f64 {
        let cos = (self.radius * self.radius + 1.0 - self.center.norm_sq()) / (2.0 * self.radius);
        cos.abs().min(1.0).acos()
    }

    pub fn distance_to(&self, p: Point) -> f64 {
        (p.dist(self.center) - self.radius).abs()
    }
}

/// The two circular arcs bounding the `m = 0` region for Poincaré points `p`,
/// `q`; the first is the one nearer `t3` of the chord frame. Both cross the
/// unit circle at the geodesic's endpoints at the acute angle
/// `2·arctan(e^{d(P,Q)}) − π/2`.
pub fn poincare_arcs(p: DiskPoint, q: DiskPoint) -> Result<(ArcCircle, ArcCircle)> {
    let frame = chord_frame(to_klein(p), to_klein(q))?;
    let d = poincare_distance(p, q);
    let k = d.exp();
    let k2m1 = (2.0 * d).exp_m1();
    let u = frame.u;
    let w = (1.0 - u * u).sqrt();
    let arc = |a: f64| ArcCircle {
        center: frame.t3.xy() * a,
        radius: ((a - u).powi(2) + w * w).sqrt(),
    };
    let a1 = k2m1 / (u * k2m1 - 2.0 * k * w);
    let a2 = k2m1 / (u * k2m1 + 2.0 * k * w);
    Ok((arc(a1), arc(a2)))
}

/// Inscribed triangles circumscribing `t`, one per period-3 orbit of ψ.
#[derive(Debug, Clone, PartialEq)]
pub struct InscribedTriangles {
    pub triangles: Vec<[BoundaryPoint; 3]>,
    /// Set when the orbit was accepted as a tangential (double) root.
    pub tangential: bool,
}

pub fn construct_inscribed_triangles(t: &Triangle) -> InscribedTriangles {
    let found = find_period3_orbits(t);
    InscribedTriangles {
        triangles: found
            .orbits
            .iter()
            .map(|o| o.map(BoundaryPoint::from_angle))
            .collect(),
        tangential: found.tangential,
    }
}

/// Largest distance from a side line of `tri` to the nearest obstacle vertex,
/// and whether the obstacle lies inside all three sides (within `tol`).
pub fn circumscription_error(tri: &[BoundaryPoint; 3], t: &Triangle, tol: f64) -> (f64, bool) {
    let verts = t.points();
    let mut worst: f64 = 0.0;
    let mut inside = true;
    let orient = (tri[1].xy() - tri[0].xy()).cross(tri[2].xy() - tri[0].xy()).signum();
    for i in 0..3 {
        let a = tri[i].xy();
        let b = tri[(i + 1) % 3].xy();
        let n = (b - a).perp().normalized() * orient;
        let dists = verts.map(|x| (x - a).dot(n));
        let nearest = dists.iter().cloned().fold(f64::INFINITY, f64::min);
        worst = worst.max(nearest.abs());
        inside &= nearest >= -tol;
    }
    (worst, inside)
}

/// Poincaré-model version of [`count_inscribed`]: the triangle's vertices are
/// read as Poincaré points.
pub fn count_inscribed_poincare(t: &Triangle, band: f64) -> Result<InscribedCount> {
    let k = Triangle::new(to_klein(t.p), to_klein(t.q), to_klein(t.r))?;
    count_inscribed(&k, band)
}

/// Klein ellipse point mapped back to the Poincaré disk.
pub fn ellipse_point_poincare(e: &TangencyEllipse, phi: f64) -> Result<Point> {
    let p = e.point_at(phi);
    Ok(from_klein(DiskPoint::new(p.x, p.y).or_else(|_| {
        // points of tangency sit on the circle; pull them just inside
        let q = p * (1.0 - 1e-12);
        DiskPoint::new(q.x, q.y)
    })?)
    .point())
}
