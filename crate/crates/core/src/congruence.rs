//! Congruent and similar copies of a triangle inside the disk, the size
//! measure κ and the sampled threshold scale μ.

use std::f64::consts::TAU;

use crate::error::{GeometryError, Result};
use crate::inscribed::{count_inscribed, Multiplicity, DEFAULT_BAND};
use crate::point::{Point, Triangle, BOUNDARY_EPS};

/// Rotation angles tried per translation for shapes without 3-fold symmetry.
pub const DEFAULT_ROTATIONS: usize = 36;

/// Translation samples per placement survey in [`mu_estimate`].
pub const DEFAULT_MU_SAMPLES: usize = 1000;

const SHAPE_TOL: f64 = 1e-12;
const MU_LOWER: f64 = 1e-3;
const MU_UPPER: f64 = 1.0 - 1e-6;
const MU_MAX_ITERS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    Acute,
    Right,
    Obtuse,
}

/// A similarity class of triangles: side lengths scaled so the longest is 1,
/// sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleShape {
    sides: [f64; 3],
    kind: ShapeKind,
}

impl TriangleShape {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let mut s = [a, b, c];
        if s.iter().any(|x| !(x.is_finite() && *x > 0.0)) {
            return Err(GeometryError::Domain {
                what: "side length",
                value: s.iter().cloned().fold(f64::INFINITY, f64::min),
            });
        }
        s.sort_by(f64::total_cmp);
        let slack = (s[0] + s[1] - s[2]) / s[2];
        if slack <= SHAPE_TOL {
            return Err(GeometryError::TriangleInequality { slack });
        }
        let sides = s.map(|x| x / s[2]);
        let excess = sides[0] * sides[0] + sides[1] * sides[1] - 1.0;
        let kind = if excess.abs() <= SHAPE_TOL {
            ShapeKind::Right
        } else if excess > 0.0 {
            ShapeKind::Acute
        } else {
            ShapeKind::Obtuse
        };
        Ok(TriangleShape { sides, kind })
    }

    pub fn equilateral() -> Self {
        TriangleShape {
            sides: [1.0; 3],
            kind: ShapeKind::Acute,
        }
    }

    pub fn from_triangle(t: &Triangle) -> Result<Self> {
        let [p, q, r] = t.points();
        TriangleShape::new(q.dist(r), r.dist(p), p.dist(q))
    }

    pub fn sides(&self) -> [f64; 3] {
        self.sides
    }

    pub fn kind(&self) -> ShapeKind {
        self.kind
    }

    pub fn is_equilateral(&self) -> bool {
        self.sides[0] >= 1.0 - SHAPE_TOL
    }

    /// The member of the class with κ equal to `kappa` and its κ-center at
    /// the origin. The longest side is vertical, on the left.
    pub fn canonical_triangle(&self, kappa: f64) -> Result<Triangle> {
        if !(kappa > 0.0 && kappa.is_finite()) {
            return Err(GeometryError::Domain { what: "kappa", value: kappa });
        }
        let [a, b, c] = self.sides;
        let y = (a * a - b * b) / (2.0 * c);
        let x = (b * b - (y - 0.5 * c).powi(2)).max(0.0).sqrt();
        let (center, k0) = match self.kind {
            ShapeKind::Acute => {
                let x0 = (x * x + y * y - 0.25 * c * c) / (2.0 * x);
                (Point::new(x0, 0.0), x0.hypot(0.5 * c))
            }
            _ => (Point::ORIGIN, 0.5 * c),
        };
        let s = kappa / k0;
        let place = |p: Point| (p - center) * s;
        Triangle::from_points(
            place(Point::new(0.0, 0.5 * c)),
            place(Point::new(0.0, -0.5 * c)),
            place(Point::new(x, y)),
        )
    }
}

/// Circumradius of an acute triangle, half the longest side otherwise.
pub fn kappa(t: &Triangle) -> f64 {
    let [p, q, r] = t.points();
    let mut s = [q.dist(r), r.dist(p), p.dist(q)];
    s.sort_by(f64::total_cmp);
    let excess = s[0] * s[0] + s[1] * s[1] - s[2] * s[2];
    if excess <= SHAPE_TOL * s[2] * s[2] {
        0.5 * s[2]
    } else {
        s[0] * s[1] * s[2] / (2.0 * t.twice_area().abs())
    }
}

/// Center used by [`kappa`]: circumcenter or midpoint of the longest side.
pub fn kappa_center(t: &Triangle) -> Point {
    let pts = t.points();
    let longest = (0..3)
        .max_by(|&i, &j| {
            let side = |k: usize| pts[(k + 1) % 3].dist(pts[(k + 2) % 3]);
            side(i).total_cmp(&side(j))
        })
        .unwrap();
    let (a, b, c) = (pts[longest], pts[(longest + 1) % 3], pts[(longest + 2) % 3]);
    let excess = (b - a).dot(c - a);
    if excess <= SHAPE_TOL * b.dist(c).powi(2) {
        return (b + c) * 0.5;
    }
    let (ab, ac) = (b - a, c - a);
    let d = 2.0 * ab.cross(ac);
    let ux = (ac.y * ab.norm_sq() - ab.y * ac.norm_sq()) / d;
    let uy = (ab.x * ac.norm_sq() - ac.x * ab.norm_sq()) / d;
    a + Point::new(ux, uy)
}

/// `λ(x − center) + center`.
pub fn scale_about(x: Point, lambda: f64, center: Point) -> Result<Point> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(GeometryError::Domain { what: "scale factor", value: lambda });
    }
    Ok((x - center) * lambda + center)
}

pub fn translate(x: Point, tau: Point) -> Point {
    Point::new(x.x + tau.x, x.y + tau.y)
}

pub fn rotate_about(x: Point, angle: f64, center: Point) -> Point {
    let (s, c) = angle.sin_cos();
    let d = x - center;
    center + Point::new(c * d.x - s * d.y, s * d.x + c * d.y)
}

fn fits(t: &Triangle, tau: Point) -> bool {
    t.points()
        .iter()
        .all(|&v| translate(v, tau).norm_sq() < 1.0 - BOUNDARY_EPS)
}

/// Translations on a `grid × grid` lattice over `[−B, B]²` that keep every
/// vertex strictly inside the disk. `B = 1 + min |vertex|` bounds the
/// admissible set; an odd grid includes the zero vector.
pub fn admissible_translations(t: &Triangle, grid: usize) -> Vec<Point> {
    let step = translation_lattice(t, grid).1;
    let mut out = Vec::new();
    for i in 0..grid {
        for j in 0..grid {
            let tau = lattice_point(step, grid, i, j);
            if fits(t, tau) {
                out.push(tau);
            }
        }
    }
    out
}

fn translation_lattice(t: &Triangle, grid: usize) -> (f64, f64) {
    let bound = 1.0 + t.points().iter().map(|v| v.norm()).fold(f64::INFINITY, f64::min);
    let step = if grid > 1 { 2.0 * bound / (grid - 1) as f64 } else { 0.0 };
    (bound, step)
}

fn lattice_point(step: f64, grid: usize, i: usize, j: usize) -> Point {
    if grid == 1 {
        return Point::ORIGIN;
    }
    let mid = (grid - 1) as f64 / 2.0;
    let at = |k: usize| if 2 * k == grid - 1 { 0.0 } else { (k as f64 - mid) * step };
    Point::new(at(i), at(j))
}

/// Placement survey over congruent copies of a triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct CongruenceReport {
    /// Every sampled copy has `m ≥ 1`, hence rotation number 1/3.
    pub all_one_third: bool,
    /// Smallest `δ − Δ′` over all copies.
    pub worst_margin: f64,
    /// Translation applied to the rotated κ-centered copy.
    pub worst_translation: Point,
    /// Rotation of the κ-centered copy about the origin, radians.
    pub worst_rotation: f64,
    pub copies: usize,
    pub violations: usize,
    /// Spacing of the translation lattice.
    pub grid_step: f64,
}

/// Surveys at least `samples` admissible translations of `t`, each under
/// several rotations about the κ-center unless the triangle is equilateral.
/// The κ-centered copy is checked first.
pub fn congruence_invariance_report(t: &Triangle, samples: usize) -> Result<CongruenceReport> {
    survey(t, samples, DEFAULT_ROTATIONS, false)
}

/// Like [`congruence_invariance_report`], with an explicit rotation count.
pub fn congruence_invariance_report_with(
    t: &Triangle,
    samples: usize,
    rotations: usize,
) -> Result<CongruenceReport> {
    survey(t, samples, rotations, false)
}

fn survey(t: &Triangle, samples: usize, rotations: usize, stop_early: bool) -> Result<CongruenceReport> {
    let shape = TriangleShape::from_triangle(t)?;
    let rotations = if shape.is_equilateral() { 1 } else { rotations.max(1) };

    let mut report = CongruenceReport {
        all_one_third: true,
        worst_margin: f64::INFINITY,
        worst_translation: Point::ORIGIN,
        worst_rotation: 0.0,
        copies: 0,
        violations: 0,
        grid_step: 0.0,
    };
    let mut visit = |copy: &Triangle, tau: Point, angle: f64| -> Result<bool> {
        let c = count_inscribed(copy, DEFAULT_BAND)?;
        report.copies += 1;
        if c.margin < report.worst_margin {
            report.worst_margin = c.margin;
            report.worst_translation = tau;
            report.worst_rotation = angle;
        }
        if c.m == Multiplicity::Zero {
            report.all_one_third = false;
            report.violations += 1;
            return Ok(stop_early);
        }
        Ok(false)
    };

    let center = kappa_center(t);
    let centered = t.map_points(|x| x - center)?;
    if visit(&centered, Point::ORIGIN, 0.0)? {
        return Ok(report);
    }

    for k in 0..rotations {
        let angle = TAU * k as f64 / rotations as f64;
        let turned = centered.map_points(|x| rotate_about(x, angle, Point::ORIGIN))?;
        let first = ((samples as f64).sqrt().ceil() as usize).max(1) | 1;
        let mut grid = first;
        // thin admissible sets near the circle get at most 8x the density
        let taus = loop {
            let taus = admissible_translations(&turned, grid);
            if taus.len() >= samples || grid > 8 * first {
                break taus;
            }
            grid = (grid * 3 / 2) | 1;
        };
        report.grid_step = report.grid_step.max(translation_lattice(&turned, grid).1);
        for tau in taus {
            let copy = turned.map_points(|x| translate(x, tau))?;
            if visit(&copy, tau, angle)? {
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// Sampled bracket around μ for a shape.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuEstimate {
    /// Largest κ at which a violating copy was found.
    pub lower: f64,
    /// Smallest κ at which every sampled copy had rotation number 1/3.
    pub upper: f64,
    /// Translation samples per survey.
    pub samples: usize,
    /// Translation lattice spacing of the survey at `upper`.
    pub grid_resolution: f64,
}

pub fn mu_estimate(shape: &TriangleShape, tol: f64) -> Result<MuEstimate> {
    mu_estimate_with(shape, tol, DEFAULT_MU_SAMPLES)
}

/// Bisection on κ between a scale with a violating placement and one
/// without. Only the sampled placements are checked.
pub fn mu_estimate_with(shape: &TriangleShape, tol: f64, samples: usize) -> Result<MuEstimate> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(GeometryError::Domain { what: "tolerance", value: tol });
    }
    let check = |k: f64| -> Result<CongruenceReport> {
        survey(&shape.canonical_triangle(k)?, samples, DEFAULT_ROTATIONS, true)
    };
    let (mut lo, mut hi) = (MU_LOWER, MU_UPPER);
    if check(lo)?.all_one_third {
        return Err(GeometryError::NoTransition { lower: lo, upper: hi });
    }
    let top = check(hi)?;
    if !top.all_one_third {
        return Err(GeometryError::NoTransition { lower: lo, upper: hi });
    }
    let mut resolution = top.grid_step;
    for _ in 0..MU_MAX_ITERS {
        if hi - lo <= tol {
            return Ok(MuEstimate {
                lower: lo,
                upper: hi,
                samples,
                grid_resolution: resolution,
            });
        }
        let mid = 0.5 * (lo + hi);
        let r = check(mid)?;
        if r.all_one_third {
            hi = mid;
            resolution = r.grid_step;
        } else {
            lo = mid;
        }
    }
    Err(GeometryError::NotConverged { lower: lo, upper: hi })
}

/// Equilateral triangle with circumcenter at the origin, circumradius `c`,
/// and one vertex at `(c, 0)`.
pub fn centered_equilateral(c: f64) -> Result<Triangle> {
    let h = c * 3f64.sqrt() / 2.0;
    Triangle::from_coords([[-c / 2.0, h], [-c / 2.0, -h], [c, 0.0]])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_examples() {
        let right = Triangle::from_coords([[0.0, 0.0], [0.3, 0.0], [0.0, 0.4]]).unwrap();
        assert!((kappa(&right) - 0.25).abs() < 1e-15);
        let s = 0.6;
        let eq = Triangle::from_coords([[0.0, 0.0], [s, 0.0], [s / 2.0, s * 3f64.sqrt() / 2.0]]).unwrap();
        assert!((kappa(&eq) - s / 3f64.sqrt()).abs() < 1e-15);
        assert!((kappa(&centered_equilateral(0.5).unwrap()) - 0.5).abs() < 1e-15);
        let obtuse = Triangle::from_coords([[-0.4, 0.0], [0.4, 0.0], [0.1, 0.1]]).unwrap();
        assert!((kappa(&obtuse) - 0.4).abs() < 1e-15);
    }

    #[test]
    fn kappa_center_examples() {
        assert!(kappa_center(&centered_equilateral(0.3).unwrap()).norm() < 1e-15);
        let right = Triangle::from_coords([[0.0, 0.0], [0.3, 0.0], [0.0, 0.4]]).unwrap();
        assert!(kappa_center(&right).dist(Point::new(0.15, 0.2)) < 1e-15);
    }

    #[test]
    fn scale_and_translate() {
        let c = Point::new(0.2, -0.1);
        assert_eq!(scale_about(c, 0.3, c).unwrap(), c);
        let x = Point::new(0.8, 0.0);
        assert_eq!(scale_about(x, 1.0, c).unwrap(), x);
        assert_eq!(scale_about(x, 0.5, Point::ORIGIN).unwrap(), Point::new(0.4, 0.0));
        assert!(scale_about(x, 0.0, c).is_err());
        assert!(scale_about(x, -1.0, c).is_err());
        assert_eq!(translate(x, Point::ORIGIN), x);
        let tau = Point::new(0.125, -0.25);
        assert_eq!(translate(translate(x, tau), -tau), x);
    }

    #[test]
    fn shape_classification() {
        assert_eq!(TriangleShape::new(3.0, 4.0, 5.0).unwrap().kind(), ShapeKind::Right);
        assert_eq!(TriangleShape::new(1.0, 1.0, 1.0).unwrap().kind(), ShapeKind::Acute);
        assert_eq!(TriangleShape::new(2.0, 2.0, 3.5).unwrap().kind(), ShapeKind::Obtuse);
        assert!(TriangleShape::new(1.0, 2.0, 3.0).is_err());
        assert!(TriangleShape::new(0.0, 2.0, 3.0).is_err());
        assert!(TriangleShape::new(1.0, 1.0, 1.0).unwrap().is_equilateral());
    }

    #[test]
    fn canonical_equilateral_matches_centered() {
        let t = TriangleShape::equilateral().canonical_triangle(0.5).unwrap();
        let reference = centered_equilateral(0.5).unwrap();
        for (a, b) in t.points().iter().zip(reference.points()) {
            assert!(a.dist(b) < 1e-15);
        }
    }

    #[test]
    fn canonical_has_requested_kappa() {
        for sides in [[3.0, 4.0, 5.0], [2.0, 2.0, 3.5], [4.0, 5.0, 6.0], [1.0, 1.0, 1.0]] {
            let shape = TriangleShape::new(sides[0], sides[1], sides[2]).unwrap();
            let t = shape.canonical_triangle(0.4).unwrap();
            assert!((kappa(&t) - 0.4).abs() < 1e-14);
            assert!(kappa_center(&t).norm() < 1e-14);
            let back = TriangleShape::from_triangle(&t).unwrap();
            for (x, y) in back.sides().iter().zip(shape.sides()) {
                assert!((x - y).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn translations_of_example() {
        let t = centered_equilateral(0.5).unwrap();
        let taus = admissible_translations(&t, 101);
        assert!(!taus.is_empty());
        assert!(taus.contains(&Point::ORIGIN));
        for tau in &taus {
            assert!(fits(&t, *tau));
        }
        // every lattice point within 1 − 0.5 of the origin is admissible
        let step = translation_lattice(&t, 101).1;
        let inner = (0..101)
            .flat_map(|i| (0..101).map(move |j| lattice_point(step, 101, i, j)))
            .filter(|tau| tau.norm() < 0.5 - 1e-9)
            .count();
        assert_eq!(inner, taus.iter().filter(|tau| tau.norm() < 0.5 - 1e-9).count());
        let near_edge = Triangle::from_coords([[0.999, 0.0], [0.9, 0.1], [0.9, -0.1]]).unwrap();
        for tau in admissible_translations(&near_edge, 101) {
            assert!(fits(&near_edge, tau));
            assert!(tau.x < 0.001 + 1e-12);
        }
    }

    #[test]
    fn survey_examples() {
        let r = congruence_invariance_report(&centered_equilateral(0.5).unwrap(), 1000).unwrap();
        assert!(r.all_one_third);
        assert!(r.copies > 1000);
        assert!(r.worst_margin.abs() < 1e-12);
        assert!(r.worst_translation.norm() < 1e-12);

        let r = congruence_invariance_report(&centered_equilateral(0.55).unwrap(), 1000).unwrap();
        assert!(r.all_one_third && r.worst_margin > 0.0);

        let r = congruence_invariance_report(&centered_equilateral(0.45).unwrap(), 1000).unwrap();
        assert!(!r.all_one_third && r.violations > 0);
    }

    #[test]
    fn mu_equilateral() {
        let mu = mu_estimate(&TriangleShape::equilateral(), 1e-4).unwrap();
        assert!(mu.lower <= 0.5 && 0.5 <= mu.upper, "{mu:?}");
        assert!(mu.upper - mu.lower <= 1e-4);
        assert!(mu_estimate(&TriangleShape::equilateral(), 0.0).is_err());
    }
}
