//! The bar-billiard map ψ on the unit circle.
//!
//! From `v ∈ S¹` draw the two lines tangent to the triangle; ψ(v) is the
//! second intersection with the circle that comes first counterclockwise.
//! The circle is parametrized in turns, so the lift `ψ̄(x) = x + a(π(x))`
//! (with `a ∈ (0, 1)` the counterclockwise advance) commutes with `x ↦ x + 1`.

use std::f64::consts::TAU;

use crate::inscribed::{count_inscribed, Multiplicity, DEFAULT_BAND};
use crate::numeric::{bisect, golden_min};
use crate::point::{CircleAngle, Point, Triangle};

/// Samples used to bracket the roots of `ψ̄³(x) − x − 1`.
pub const ROOT_SCAN_SAMPLES: usize = 720;

/// Bisection stops once the root bracket is this narrow.
pub const ROOT_XTOL: f64 = 1e-14;

/// A minimum of `ψ̄³(x) − x − 1` this close to zero is a tangential (double) root.
pub const DOUBLE_ROOT_TOL: f64 = 1e-10;

/// Roots closer than this are the same root.
const ROOT_MERGE_TOL: f64 = 1e-9;

/// Vertices whose direction angles from `v` differ by less than this are tied.
const TIE_TOL: f64 = 1e-14;

/// The two vertices touched by the tangent lines from a boundary point.
///
/// `forward` carries the line that defines ψ (its second intersection is
/// nearer counterclockwise); `other` carries the remaining tangent line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Support {
    pub forward: usize,
    pub other: usize,
}

fn boundary_xy(v: CircleAngle) -> Point {
    let (s, c) = v.radians().sin_cos();
    Point::new(c, s)
}

/// Extreme vertices of the cone of directions from `v` to the triangle.
pub fn supporting_vertices(t: &Triangle, v: CircleAngle) -> Support {
    support_at(&t.points(), boundary_xy(v))
}

fn support_at(verts: &[Point; 3], v: Point) -> Support {
    let inward = -v;
    let angle = |x: Point| {
        let d = x - v;
        inward.cross(d).atan2(inward.dot(d))
    };
    let angles = verts.map(angle);
    let dist = verts.map(|x| x.dist(v));
    let pick = |better: &dyn Fn(f64, f64) -> bool| {
        let mut best = 0;
        for i in 1..3 {
            let tie = (angles[i] - angles[best]).abs() <= TIE_TOL;
            if (tie && dist[i] > dist[best]) || (!tie && better(angles[i], angles[best])) {
                best = i;
            }
        }
        best
    };
    Support {
        forward: pick(&|a, b| a < b),
        other: pick(&|a, b| a > b),
    }
}

/// Counterclockwise arc from `v` to the second intersection of the line
/// `v x` with the circle, in turns.
fn advance_through(v: Point, x: Point) -> f64 {
    let d = x - v;
    let s = -2.0 * v.dot(d) / d.norm_sq();
    let w = v + d * s;
    let mut ang = v.cross(w).atan2(v.dot(w));
    if ang < 0.0 {
        ang += TAU;
    }
    ang / TAU
}

/// Precomputed vertex data for repeated evaluation of ψ.
#[derive(Debug, Clone, Copy)]
pub struct TangentMap {
    verts: [Point; 3],
}

impl TangentMap {
    pub fn new(t: &Triangle) -> Self {
        TangentMap { verts: t.points() }
    }

    /// Counterclockwise advance `ψ̄(θ) − θ ∈ (0, 1)` for `θ ∈ [0, 1)`.
    pub fn advance(&self, theta: f64) -> f64 {
        let v = boundary_xy(CircleAngle::new(theta));
        let s = support_at(&self.verts, v);
        advance_through(v, self.verts[s.forward])
    }

    pub fn apply(&self, v: CircleAngle) -> CircleAngle {
        CircleAngle::new(v.turns() + self.advance(v.turns()))
    }

    pub fn lift(&self, x: f64) -> f64 {
        let k = x.floor();
        let theta = CircleAngle::new(x).turns();
        k + (theta + self.advance(theta))
    }

    /// `ψ̄³(x) − x − 1`, evaluated as the sum of three advances minus one.
    pub fn cubed_excess(&self, x: f64) -> f64 {
        let mut theta = CircleAngle::new(x).turns();
        let mut total = 0.0;
        for _ in 0..3 {
            let a = self.advance(theta);
            total += a;
            theta = CircleAngle::new(theta + a).turns();
        }
        total - 1.0
    }
}

/// ψ(v).
pub fn psi(t: &Triangle, v: CircleAngle) -> CircleAngle {
    TangentMap::new(t).apply(v)
}

/// The lift ψ̄ with `ψ̄(0) ∈ (0, 1)`.
pub fn psi_lift(t: &Triangle, x: f64) -> f64 {
    TangentMap::new(t).lift(x)
}

/// `[v₀, ψ(v₀), …, ψⁿ(v₀)]`.
pub fn iterate_orbit(t: &Triangle, v0: CircleAngle, n: usize) -> Vec<CircleAngle> {
    let map = TangentMap::new(t);
    let mut out = Vec::with_capacity(n + 1);
    let mut v = v0;
    out.push(v);
    for _ in 0..n {
        v = map.apply(v);
        out.push(v);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationEstimate {
    /// `ψ̄ⁿ(0)/n`.
    pub value: f64,
    /// `1/n`; the rotation number lies within this of `value`.
    pub error_bound: f64,
    /// Set when an inscribed circumscribing triangle exists, which forces ρ = 1/3.
    pub exact_one_third: bool,
    pub iterations: usize,
}

/// Rotation number estimate from `n` iterates of the lift at 0.
///
/// The integer part of the lift is tracked separately so the fractional
/// angle keeps full precision over long orbits.
pub fn rotation_number(t: &Triangle, n: usize) -> RotationEstimate {
    let n = n.max(1);
    let map = TangentMap::new(t);
    let mut wraps: u64 = 0;
    let mut theta = 0.0;
    for _ in 0..n {
        theta += map.advance(theta);
        if theta >= 1.0 {
            theta -= 1.0;
            wraps += 1;
        }
    }
    let value = (wraps as f64 + theta) / n as f64;
    let exact_one_third = count_inscribed(t, DEFAULT_BAND)
        .map(|c| c.m != Multiplicity::Zero)
        .unwrap_or(false);
    RotationEstimate {
        value: CircleAngle::new(value).turns(),
        error_bound: 1.0 / n as f64,
        exact_one_third,
        iterations: n,
    }
}

/// Period-3 orbits found by [`find_period3_orbits`].
#[derive(Debug, Clone, PartialEq)]
pub struct Period3Orbits {
    /// Each orbit is `[u, ψ(u), ψ²(u)]`, rotated so the smallest angle comes first.
    pub orbits: Vec<[CircleAngle; 3]>,
    /// Set when a root was accepted as tangential (a minimum of
    /// `ψ̄³(x) − x − 1` within [`DOUBLE_ROOT_TOL`] of zero).
    pub tangential: bool,
}

/// Roots of `g(x) = ψ̄³(x) − x − 1` on `[0, 1)`, grouped into orbits.
///
/// Sign changes on a [`ROOT_SCAN_SAMPLES`]-point grid are bisected. Every
/// positive local minimum of the samples is refined by golden-section
/// search; a negative refined minimum splits into two bisected roots and a
/// minimum within [`DOUBLE_ROOT_TOL`] of zero is kept as one double root.
pub fn find_period3_orbits(t: &Triangle) -> Period3Orbits {
    let map = TangentMap::new(t);
    let g = |x: f64| map.cubed_excess(x);
    let n = ROOT_SCAN_SAMPLES;
    let xs: Vec<f64> = (0..=n).map(|i| i as f64 / n as f64).collect();
    let mut gs: Vec<f64> = xs[..n].iter().map(|&x| g(x)).collect();
    gs.push(gs[0]);

    let mut roots: Vec<f64> = Vec::new();
    let mut tangential = false;
    for i in 0..n {
        let (a, b) = (xs[i], xs[i + 1]);
        let (ga, gb) = (gs[i], gs[i + 1]);
        if ga == 0.0 {
            roots.push(a);
        } else if (ga < 0.0) != (gb < 0.0) && gb != 0.0 {
            roots.push(bisect(g, a, b, ga, ROOT_XTOL));
        }
    }
    for i in 0..n {
        let prev = gs[(i + n - 1) % n];
        let next = gs[i + 1];
        let cur = gs[i];
        if !(cur > 0.0 && cur <= prev && cur <= next) {
            continue;
        }
        // bracket [x_{i-1}, x_{i+1}] in lift coordinates
        let lo = xs[i] - 1.0 / n as f64;
        let hi = xs[i] + 1.0 / n as f64;
        let (xm, gm) = golden_min(g, lo, hi, 1e-13);
        if gm.abs() <= DOUBLE_ROOT_TOL {
            roots.push(xm);
            tangential = true;
        } else if gm < 0.0 {
            roots.push(bisect(g, lo, xm, prev, ROOT_XTOL));
            roots.push(bisect(g, xm, hi, gm, ROOT_XTOL));
        }
    }

    let mut roots: Vec<f64> = roots.into_iter().map(|x| CircleAngle::new(x).turns()).collect();
    roots.sort_by(f64::total_cmp);
    let mut merged: Vec<f64> = Vec::new();
    for r in roots {
        match merged.last() {
            Some(&last) if CircleAngle::new(last).dist(CircleAngle::new(r)) <= ROOT_MERGE_TOL => {
                tangential = true;
            }
            _ => merged.push(r),
        }
    }
    if merged.len() > 1 {
        let (first, last) = (merged[0], *merged.last().unwrap());
        if CircleAngle::new(first).dist(CircleAngle::new(last)) <= ROOT_MERGE_TOL {
            merged.pop();
            tangential = true;
        }
    }

    let h = 1e-6;
    tangential |= merged.iter().any(|&x| (g(x - h) < 0.0) == (g(x + h) < 0.0));

    let mut used = vec![false; merged.len()];
    let mut orbits = Vec::new();
    for i in 0..merged.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let mut orbit = [CircleAngle::new(merged[i]); 3];
        for k in 1..3 {
            let image = map.apply(orbit[k - 1]);
            orbit[k] = image;
            let nearest = (0..merged.len())
                .filter(|&j| !used[j])
                .min_by(|&a, &b| {
                    let da = image.dist(CircleAngle::new(merged[a]));
                    let db = image.dist(CircleAngle::new(merged[b]));
                    da.total_cmp(&db)
                });
            if let Some(j) = nearest {
                if image.dist(CircleAngle::new(merged[j])) <= 1e-7 {
                    used[j] = true;
                    orbit[k] = CircleAngle::new(merged[j]);
                }
            }
        }
        orbits.push(canonical_rotation(orbit));
    }
    orbits.sort_by(|a, b| a[0].turns().total_cmp(&b[0].turns()));
    Period3Orbits { orbits, tangential }
}

fn canonical_rotation(mut orbit: [CircleAngle; 3]) -> [CircleAngle; 3] {
    let k = (0..3)
        .min_by(|&a, &b| orbit[a].turns().total_cmp(&orbit[b].turns()))
        .unwrap();
    orbit.rotate_left(k);
    orbit
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DynamicsCase {
    /// One semi-stable period-3 orbit; every orbit approaches it from one side.
    BoundaryCase,
    /// An attracting and a repelling period-3 orbit.
    InteriorCase,
    /// No period-3 orbit; ρ > 1/3.
    HighRotation,
}

/// An arc of starting points whose ψ³-orbits converge to `limit`.
///
/// The arc runs counterclockwise from `from` to `to`; both ends are excluded
/// except `to` when `includes_to` is set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Basin {
    pub from: CircleAngle,
    pub to: CircleAngle,
    pub includes_to: bool,
    pub limit: CircleAngle,
}

impl Basin {
    pub fn contains(&self, v: CircleAngle) -> bool {
        let len = self.from.ccw_to(self.to);
        let pos = self.from.ccw_to(v);
        pos > 0.0 && (pos < len || (self.includes_to && pos == len))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DynamicsReport {
    pub case: DynamicsCase,
    /// Attracting orbit `u₁, u₂, u₃`, or the semi-stable one in the boundary case.
    pub attractor: Option<[CircleAngle; 3]>,
    /// Repelling orbit `v₁, v₂, v₃` with `v₁` between `u₁` and `u₂`.
    pub repeller: Option<[CircleAngle; 3]>,
    pub basins: Vec<Basin>,
}

impl DynamicsReport {
    /// Predicted ψ³ limit of a starting point, if it lies in a basin.
    pub fn limit_of(&self, v: CircleAngle) -> Option<CircleAngle> {
        self.basins.iter().find(|b| b.contains(v)).map(|b| b.limit)
    }
}

/// Sorts the period-3 dynamics into the three cases and describes the basins.
pub fn classify_dynamics(t: &Triangle) -> DynamicsReport {
    let map = TangentMap::new(t);
    let found = find_period3_orbits(t);
    match found.orbits.len() {
        0 => DynamicsReport {
            case: DynamicsCase::HighRotation,
            attractor: None,
            repeller: None,
            basins: Vec::new(),
        },
        1 => {
            let u = found.orbits[0];
            let basins = (0..3)
                .map(|j| Basin {
                    from: u[(j + 2) % 3],
                    to: u[j],
                    includes_to: true,
                    limit: u[j],
                })
                .collect();
            DynamicsReport {
                case: DynamicsCase::BoundaryCase,
                attractor: Some(u),
                repeller: None,
                basins,
            }
        }
        _ => {
            // g decreasing through a root means ψ³ contracts there
            let h = 1e-7;
            let attracting = |o: &[CircleAngle; 3]| {
                let x = o[0].turns();
                map.cubed_excess(x - h) > map.cubed_excess(x + h)
            };
            let attr = found.orbits.iter().find(|o| attracting(o)).copied();
            let rep = found.orbits.iter().find(|o| !attracting(o)).copied();
            let (Some(u), Some(v)) = (attr, rep) else {
                // both orbits read with the same stability: numerically flat, treat as tangential
                let u = found.orbits[0];
                return DynamicsReport {
                    case: DynamicsCase::BoundaryCase,
                    attractor: Some(u),
                    repeller: None,
                    basins: Vec::new(),
                };
            };
            // v₁ must lie on the arc (u₁, u₂)
            let span = u[0].ccw_to(u[1]);
            let k = (0..3).find(|&k| u[0].ccw_to(v[k]) < span).unwrap_or(0);
            let mut v = v;
            v.rotate_left(k);
            let basins = (0..3)
                .map(|j| Basin {
                    from: v[(j + 2) % 3],
                    to: v[j],
                    includes_to: false,
                    limit: u[j],
                })
                .collect();
            DynamicsReport {
                case: DynamicsCase::InteriorCase,
                attractor: Some(u),
                repeller: Some(v),
                basins,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const S3: f64 = 1.7320508075688772;

    fn example() -> Triangle {
        Triangle::from_coords([[-0.25, S3 / 4.0], [-0.25, -S3 / 4.0], [0.5, 0.0]]).unwrap()
    }

    fn centered(c: f64) -> Triangle {
        Triangle::from_coords([[-c / 2.0, c * S3 / 2.0], [-c / 2.0, -c * S3 / 2.0], [c, 0.0]]).unwrap()
    }

    #[test]
    fn supporting_vertices_examples() {
        let t = example();
        let s = supporting_vertices(&t, CircleAngle::new(0.0));
        assert_eq!((s.forward, s.other), (0, 1));
        let s = supporting_vertices(&t, CircleAngle::new(1.0 / 6.0));
        assert_eq!((s.forward, s.other), (0, 2));
        // isosceles about the x-axis, v on the axis
        let iso = Triangle::from_coords([[0.0, 0.3], [0.0, -0.3], [-0.5, 0.0]]).unwrap();
        let s = supporting_vertices(&iso, CircleAngle::new(0.0));
        let pts = iso.points();
        let mut ys = [pts[s.forward].y, pts[s.other].y];
        ys.sort_by(f64::total_cmp);
        assert_eq!(ys, [-0.3, 0.3]);
    }

    #[test]
    fn psi_examples() {
        let t = example();
        let expected = (5.0 * S3 / 14.0).atan2(-11.0 / 14.0) / TAU;
        assert!((psi(&t, CircleAngle::new(0.0)).turns() - expected).abs() < 1e-15);
        assert!((expected - 0.39385).abs() < 1e-5);
        assert!((psi(&t, CircleAngle::new(1.0 / 6.0)).turns() - 0.5).abs() < 1e-15);
        assert!((psi(&t, CircleAngle::new(0.5)).turns() - 5.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn forward_tangent_is_nearer_ccw() {
        let t = Triangle::from_coords([[0.1, 0.2], [-0.4, 0.5], [-0.3, -0.6]]).unwrap();
        let pts = t.points();
        for i in 0..500 {
            let v = CircleAngle::new(i as f64 / 500.0);
            let s = supporting_vertices(&t, v);
            let xy = boundary_xy(v);
            assert!(advance_through(xy, pts[s.forward]) <= advance_through(xy, pts[s.other]));
        }
    }

    #[test]
    fn lift_examples() {
        let t = example();
        let l0 = psi_lift(&t, 0.0);
        assert!(l0 > 0.0 && l0 < 1.0);
        assert_eq!(psi_lift(&t, 1.0), l0 + 1.0);
        assert!((psi_lift(&t, 1.0 / 6.0) - 0.5).abs() < 1e-15);
        assert!((psi_lift(&t, -5.0 / 6.0) - (-0.5)).abs() < 1e-15);
    }

    #[test]
    fn orbit_examples() {
        let t = example();
        let orbit = iterate_orbit(&t, CircleAngle::new(1.0 / 6.0), 3);
        let expect = [1.0 / 6.0, 0.5, 5.0 / 6.0, 1.0 / 6.0];
        for (a, e) in orbit.iter().zip(expect) {
            assert!(a.dist(CircleAngle::new(e)) < 1e-14);
        }
        assert_eq!(iterate_orbit(&t, CircleAngle::new(0.3), 0), vec![CircleAngle::new(0.3)]);
        let long = iterate_orbit(&t, CircleAngle::new(0.3), 40);
        assert_eq!(&iterate_orbit(&t, long[17], 23)[..], &long[17..]);
    }

    #[test]
    fn period3_example_is_tangential() {
        let found = find_period3_orbits(&example());
        assert_eq!(found.orbits.len(), 1);
        assert!(found.tangential);
        let o = found.orbits[0];
        for (a, e) in o.iter().zip([1.0 / 6.0, 0.5, 5.0 / 6.0]) {
            assert!(a.dist(CircleAngle::new(e)) < 1e-7, "{a:?}");
        }
        let report = classify_dynamics(&example());
        assert_eq!(report.case, DynamicsCase::BoundaryCase);
    }

    #[test]
    fn period3_counts_for_centered_equilaterals() {
        let big = find_period3_orbits(&centered(0.75));
        assert_eq!(big.orbits.len(), 2);
        assert!(!big.tangential);
        let map = TangentMap::new(&centered(0.75));
        for o in &big.orbits {
            for a in o {
                assert!(map.cubed_excess(a.turns()).abs() <= 1e-12);
            }
        }
        let small = find_period3_orbits(&centered(0.1));
        assert!(small.orbits.is_empty());
        assert_eq!(classify_dynamics(&centered(0.1)).case, DynamicsCase::HighRotation);
    }

    #[test]
    fn interior_case_structure() {
        let report = classify_dynamics(&centered(0.75));
        assert_eq!(report.case, DynamicsCase::InteriorCase);
        let u = report.attractor.unwrap();
        let v = report.repeller.unwrap();
        assert!(u[0].ccw_to(v[0]) < u[0].ccw_to(u[1]));
        for j in 0..3 {
            assert!(report.basins[j].contains(u[j]));
            assert!(!report.basins[j].contains(v[j]));
        }
    }

    #[test]
    fn rotation_number_examples() {
        let est = rotation_number(&example(), 100_000);
        assert!(est.exact_one_third);
        assert!((est.value - 1.0 / 3.0).abs() <= est.error_bound);
        let est = rotation_number(&centered(0.75), 100_000);
        assert!(est.exact_one_third);
        assert!((est.value - 1.0 / 3.0).abs() <= est.error_bound);
        let est = rotation_number(&centered(0.1), 100_000);
        assert!(!est.exact_one_third);
        assert!(est.value > 1.0 / 3.0 + 1e-3 && est.value < 0.5);
    }
}
