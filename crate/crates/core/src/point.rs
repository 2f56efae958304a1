//! Plane points, disk points, boundary points and the triangle obstacle.

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{GeometryError, Result};

/// Points closer than this to the unit circle are rejected.
pub const BOUNDARY_EPS: f64 = 1e-12;

/// Minimum twice-signed-area of a triangle.
pub const AREA_EPS: f64 = 1e-10;

/// A plain Euclidean point or vector.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3d cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    /// Quarter turn counterclockwise.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn normalized(self) -> Point {
        let n = self.norm();
        Point::new(self.x / n, self.y / n)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Mul<Point> for f64 {
    type Output = Point;
    fn mul(self, p: Point) -> Point {
        p * self
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// A point strictly inside the unit disk, `x² + y² < 1 − BOUNDARY_EPS`.
///
/// The same coordinates serve as a Poincaré-disk or a Beltrami–Klein point;
/// which model applies is decided by the operation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint(Point);

impl DiskPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        let p = Point::new(x, y);
        if !(x.is_finite() && y.is_finite()) || p.norm_sq() >= 1.0 - BOUNDARY_EPS {
            return Err(GeometryError::OutsideDisk { x, y });
        }
        Ok(DiskPoint(p))
    }

    pub fn from_point(p: Point) -> Result<Self> {
        Self::new(p.x, p.y)
    }

    /// For images of valid points under model maps: still inside the open
    /// disk, but possibly inside the guard band.
    pub(crate) fn inside_unchecked(p: Point) -> Self {
        debug_assert!(p.norm_sq() < 1.0);
        DiskPoint(p)
    }

    pub const ORIGIN: DiskPoint = DiskPoint(Point::ORIGIN);

    pub fn x(self) -> f64 {
        self.0.x
    }

    pub fn y(self) -> f64 {
        self.0.y
    }

    pub fn point(self) -> Point {
        self.0
    }
}

impl From<DiskPoint> for Point {
    fn from(p: DiskPoint) -> Point {
        p.0
    }
}

/// A point of S¹ = ℝ/ℤ measured in turns, reduced to `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct CircleAngle(f64);

impl CircleAngle {
    pub fn new(turns: f64) -> Self {
        let t = turns - turns.floor();
        // turns = -1e-18 would otherwise give exactly 1.0
        CircleAngle(if t >= 1.0 { 0.0 } else { t })
    }

    pub fn from_radians(theta: f64) -> Self {
        Self::new(theta / TAU)
    }

    pub fn turns(self) -> f64 {
        self.0
    }

    pub fn radians(self) -> f64 {
        self.0 * TAU
    }

    /// Length of the counterclockwise arc from `self` to `other`, in `[0, 1)`.
    pub fn ccw_to(self, other: CircleAngle) -> f64 {
        CircleAngle::new(other.0 - self.0).0
    }

    /// Shortest distance between two circle points, in `[0, 1/2]`.
    pub fn dist(self, other: CircleAngle) -> f64 {
        let d = self.ccw_to(other);
        d.min(1.0 - d)
    }
}

/// A point on the unit circle carrying both its angle and its Cartesian form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    angle: CircleAngle,
    xy: Point,
}

impl BoundaryPoint {
    pub fn from_angle(angle: CircleAngle) -> Self {
        let (s, c) = angle.radians().sin_cos();
        BoundaryPoint {
            angle,
            xy: Point::new(c, s),
        }
    }

    /// Projects a nonzero vector radially onto the circle.
    pub fn from_xy(p: Point) -> Self {
        let xy = p.normalized();
        BoundaryPoint {
            angle: CircleAngle::from_radians(xy.y.atan2(xy.x)),
            xy,
        }
    }

    pub fn angle(self) -> CircleAngle {
        self.angle
    }

    pub fn xy(self) -> Point {
        self.xy
    }
}

/// Three non-collinear disk points stored in counterclockwise order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    pub p: DiskPoint,
    pub q: DiskPoint,
    pub r: DiskPoint,
}

/// Twice the signed area of `abc`; positive when counterclockwise.
pub fn twice_signed_area(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

impl Triangle {
    /// Builds a triangle, swapping `q` and `r` if needed so the stored
    /// orientation is counterclockwise.
    pub fn new(p: DiskPoint, q: DiskPoint, r: DiskPoint) -> Result<Self> {
        let area = twice_signed_area(p.point(), q.point(), r.point());
        if area.abs() <= AREA_EPS || !area.is_finite() {
            return Err(GeometryError::DegenerateTriangle { area });
        }
        Ok(if area > 0.0 {
            Triangle { p, q, r }
        } else {
            Triangle { p, q: r, r: q }
        })
    }

    pub fn from_coords(coords: [[f64; 2]; 3]) -> Result<Self> {
        let [p, q, r] = coords.map(|[x, y]| DiskPoint::new(x, y));
        Triangle::new(p?, q?, r?)
    }

    pub fn from_points(p: Point, q: Point, r: Point) -> Result<Self> {
        Triangle::new(
            DiskPoint::from_point(p)?,
            DiskPoint::from_point(q)?,
            DiskPoint::from_point(r)?,
        )
    }

    pub fn vertices(&self) -> [DiskPoint; 3] {
        [self.p, self.q, self.r]
    }

    pub fn points(&self) -> [Point; 3] {
        [self.p.point(), self.q.point(), self.r.point()]
    }

    pub fn twice_area(&self) -> f64 {
        twice_signed_area(self.p.point(), self.q.point(), self.r.point())
    }

    /// The three cyclic relabelings `(P,Q,R)`, `(Q,R,P)`, `(R,P,Q)`.
    pub fn rotations(&self) -> [Triangle; 3] {
        [
            *self,
            Triangle { p: self.q, q: self.r, r: self.p },
            Triangle { p: self.r, q: self.p, r: self.q },
        ]
    }

    pub fn centroid(&self) -> Point {
        let [p, q, r] = self.points();
        (p + q + r) * (1.0 / 3.0)
    }

    /// Applies `f` to every vertex and rebuilds the triangle.
    pub fn map_points(&self, f: impl Fn(Point) -> Point) -> Result<Triangle> {
        let [p, q, r] = self.points();
        Triangle::from_points(f(p), f(q), f(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_point_guard() {
        assert!(DiskPoint::new(0.0, 0.0).is_ok());
        assert!(DiskPoint::new(0.999, 0.0).is_ok());
        assert!(DiskPoint::new(1.0, 0.0).is_err());
        assert!(DiskPoint::new((1.0f64 - 1e-13).sqrt(), 0.0).is_err());
        assert!(DiskPoint::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn circle_angle_reduction() {
        assert_eq!(CircleAngle::new(1.25).turns(), 0.25);
        assert_eq!(CircleAngle::new(-0.25).turns(), 0.75);
        assert_eq!(CircleAngle::new(-1e-18).turns(), 0.0);
        let a = CircleAngle::new(0.9);
        let b = CircleAngle::new(0.1);
        assert!((a.ccw_to(b) - 0.2).abs() < 1e-15);
        assert!((b.ccw_to(a) - 0.8).abs() < 1e-15);
        assert!((a.dist(b) - 0.2).abs() < 1e-15);
    }

    #[test]
    fn boundary_point_is_unit() {
        for i in 0..100 {
            let b = BoundaryPoint::from_angle(CircleAngle::new(i as f64 * 0.0137));
            assert!((b.xy().norm() - 1.0).abs() < 1e-14);
            let c = BoundaryPoint::from_xy(b.xy() * 3.0);
            assert!(b.angle().dist(c.angle()) < 1e-15);
        }
    }

    #[test]
    fn triangle_normalizes_orientation() {
        let t = Triangle::from_coords([[0.0, 0.0], [0.0, 0.5], [0.5, 0.0]]).unwrap();
        assert!(t.twice_area() > 0.0);
        assert_eq!(t.q.point(), Point::new(0.5, 0.0));
        let e = Triangle::from_coords([[0.0, 0.0], [0.1, 0.1], [0.2, 0.2]]);
        assert!(matches!(e, Err(GeometryError::DegenerateTriangle { .. })));
    }
}
