#![allow(dead_code)]

use barbilliards::{DiskPoint, Point, Triangle};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const S3: f64 = 1.7320508075688772;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn dp(x: f64, y: f64) -> DiskPoint {
    DiskPoint::new(x, y).unwrap()
}

pub fn example() -> Triangle {
    Triangle::from_coords([[-0.25, S3 / 4.0], [-0.25, -S3 / 4.0], [0.5, 0.0]]).unwrap()
}

pub fn centered(c: f64) -> Triangle {
    Triangle::from_coords([[-c / 2.0, c * S3 / 2.0], [-c / 2.0, -c * S3 / 2.0], [c, 0.0]]).unwrap()
}

pub fn random_point(rng: &mut impl Rng, radius: f64) -> Point {
    let r = radius * rng.gen::<f64>().sqrt();
    let a = rng.gen::<f64>() * std::f64::consts::TAU;
    Point::new(r * a.cos(), r * a.sin())
}

pub fn random_triangle(rng: &mut impl Rng, radius: f64, min_area: f64) -> Triangle {
    loop {
        let [p, q, r] = [0; 3].map(|_| random_point(rng, radius));
        if (q - p).cross(r - p).abs() < min_area {
            continue;
        }
        if let Ok(t) = Triangle::from_points(p, q, r) {
            return t;
        }
    }
}

// --- complex arithmetic for the half-plane oracles ---

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct C(pub f64, pub f64);

impl C {
    pub fn add(self, o: C) -> C {
        C(self.0 + o.0, self.1 + o.1)
    }
    pub fn sub(self, o: C) -> C {
        C(self.0 - o.0, self.1 - o.1)
    }
    pub fn mul(self, o: C) -> C {
        C(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    pub fn div(self, o: C) -> C {
        let d = o.0 * o.0 + o.1 * o.1;
        C((self.0 * o.0 + self.1 * o.1) / d, (self.1 * o.0 - self.0 * o.1) / d)
    }
    pub fn scale(self, s: f64) -> C {
        C(self.0 * s, self.1 * s)
    }
    pub fn abs2(self) -> f64 {
        self.0 * self.0 + self.1 * self.1
    }
}

/// `i(1 + z)/(1 − z)`.
pub fn cayley(p: Point) -> C {
    let z = C(p.x, p.y);
    C(0.0, 1.0).mul(C(1.0, 0.0).add(z)).div(C(1.0, 0.0).sub(z))
}

pub fn half_plane_distance(a: C, b: C) -> f64 {
    (1.0 + b.sub(a).abs2() / (2.0 * a.1 * b.1)).acosh()
}

/// Poincaré distance computed through the upper half plane.
pub fn poincare_oracle(p: Point, q: Point) -> f64 {
    half_plane_distance(cayley(p), cayley(q))
}

/// Klein → Poincaré, written out directly.
pub fn klein_to_poincare(p: Point) -> Point {
    let s = 1.0 + (1.0 - p.norm_sq()).sqrt();
    Point::new(p.x / s, p.y / s)
}

/// Klein distance measured through the Poincaré disk.
pub fn klein_oracle(p: Point, q: Point) -> f64 {
    poincare_oracle(klein_to_poincare(p), klein_to_poincare(q))
}

/// Endpoints of the Klein chord through `p`, `q` as line parameters along
/// `q − p` (unit speed, `p` at 0).
pub fn chord_params(p: Point, q: Point) -> (Point, f64, f64) {
    let d = (q - p).normalized();
    let b = p.dot(d);
    let c = p.norm_sq() - 1.0;
    let disc = (b * b - c).sqrt();
    (d, -b - disc, -b + disc)
}

/// Hyperbolic distance from Klein point `r` to the geodesic through `p`, `q`,
/// by direct minimization along the chord.
pub fn foot_oracle(p: Point, q: Point, r: Point) -> f64 {
    let (d, s0, s1) = chord_params(p, q);
    let f = |s: f64| klein_oracle(r, p + d * s);
    // map (s0, s1) onto ℝ so the search can reach near the endpoints
    let to_s = |t: f64| s0 + (s1 - s0) * (0.5 + 0.5 * t.tanh());
    let (mut a, mut b) = (-30.0, 30.0);
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = b - phi * (b - a);
    let mut x2 = a + phi * (b - a);
    let (mut f1, mut f2) = (f(to_s(x1)), f(to_s(x2)));
    for _ in 0..200 {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(to_s(x1));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(to_s(x2));
        }
    }
    f1.min(f2)
}

/// `ln coth(d/2)`.
pub fn gap_oracle(d: f64) -> f64 {
    (1.0 / (d / 2.0).tanh()).ln()
}

/// Number of inscribed circumscribing triangles from the half-plane
/// normalization: `P ↦ i`, `Q ↦ ki` with `k > 1`, `R ↦ u + vi`, and `m`
/// given by the sign of the discriminant of `(u²+v²)t² − (k²+1)|u|t + k²`.
/// Works on a Klein triangle. Returns `(m, discriminant / scale)`.
pub fn half_plane_count(t: &Triangle) -> (usize, f64) {
    let [p, q, r] = t.points().map(|x| cayley(klein_to_poincare(x)));
    // geodesic through p, q: circle centered on the real axis
    let c = (p.abs2() - q.abs2()) / (2.0 * (p.0 - q.0));
    let rad = (p.0 - c).hypot(p.1);
    let (e1, e2) = (c - rad, c + rad);
    // z ↦ (z − e1)/(e2 − z) has determinant e2 − e1 > 0
    let m = |z: C| z.sub(C(e1, 0.0)).div(C(e2, 0.0).sub(z));
    let (mp, mq, mr) = (m(p), m(q), m(r));
    let s = 1.0 / mp.1;
    let (mut kq, mut w) = (mq.scale(s), mr.scale(s));
    if kq.1 < 1.0 {
        // z ↦ −1/z fixes i and swaps the ends of the axis
        let inv = |z: C| C(-1.0, 0.0).div(z);
        kq = inv(kq);
        w = inv(w);
    }
    let k = kq.1;
    let (u, v) = (w.0.abs(), w.1);
    let disc = (k * k + 1.0).powi(2) * u * u - 4.0 * k * k * (u * u + v * v);
    let scale = (k * k + 1.0).powi(2) * (u * u + v * v);
    let rel = disc / scale;
    let m = if rel > 0.0 { 2 } else if rel < 0.0 { 0 } else { 1 };
    (m, rel)
}
