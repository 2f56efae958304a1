//! Minimal hand-written SVG output with a fixed view of the closed disk.

use std::fmt::Write;

use barbilliards::{Point, TangencyEllipse};

const HEADER: &str = concat!(
    r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.05 -1.05 2.1 2.1" width="600" height="600">"#,
    "\n",
    r#"<g transform="scale(1,-1)" fill="none" stroke-linejoin="round">"#,
    "\n",
);

/// Layers are emitted in insertion order; the unit circle is always first.
pub struct Figure {
    body: String,
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    // avoid "-0.000000"
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000".to_string()
    } else {
        s
    }
}

fn points_attr(pts: &[Point]) -> String {
    pts.iter()
        .map(|p| format!("{},{}", num(p.x), num(p.y)))
        .collect::<Vec<_>>()
        .join(" ")
}

impl Figure {
    pub fn new() -> Self {
        let mut body = String::new();
        body.push_str(r#"<circle cx="0" cy="0" r="1" stroke="black" stroke-width="0.006"/>"#);
        body.push('\n');
        Figure { body }
    }

    pub fn polygon(&mut self, id: &str, pts: &[Point], stroke: &str, width: f64) -> &mut Self {
        let _ = writeln!(
            self.body,
            r#"<polygon id="{id}" points="{}" stroke="{stroke}" stroke-width="{}"/>"#,
            points_attr(pts),
            num(width)
        );
        self
    }

    pub fn polyline(&mut self, id: &str, pts: &[Point], stroke: &str, width: f64) -> &mut Self {
        let _ = writeln!(
            self.body,
            r#"<polyline id="{id}" points="{}" stroke="{stroke}" stroke-width="{}"/>"#,
            points_attr(pts),
            num(width)
        );
        self
    }

    pub fn dots(&mut self, id: &str, pts: &[Point], fill: &str, radius: f64) -> &mut Self {
        let _ = writeln!(self.body, r#"<g id="{id}" fill="{fill}">"#);
        for p in pts {
            let _ = writeln!(
                self.body,
                r#"<circle cx="{}" cy="{}" r="{}"/>"#,
                num(p.x),
                num(p.y),
                num(radius)
            );
        }
        self.body.push_str("</g>\n");
        self
    }

    pub fn ellipse(&mut self, id: &str, e: &TangencyEllipse, stroke: &str, width: f64) -> &mut Self {
        let c = e.center();
        let axis = e.frame.t3.xy();
        let deg = axis.y.atan2(axis.x).to_degrees();
        let _ = writeln!(
            self.body,
            r#"<ellipse id="{id}" cx="{}" cy="{}" rx="{}" ry="{}" transform="rotate({} {} {})" stroke="{stroke}" stroke-width="{}"/>"#,
            num(c.x),
            num(c.y),
            num(e.a),
            num(e.b),
            num(deg),
            num(c.x),
            num(c.y),
            num(width)
        );
        self
    }

    pub fn render(&self) -> String {
        format!("{HEADER}{}</g>\n</svg>\n", self.body)
    }
}

impl Default for Figure {
    fn default() -> Self {
        Figure::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_frame() {
        let s = Figure::new().render();
        assert!(s.starts_with("<svg"));
        assert!(s.contains(r#"viewBox="-1.05 -1.05 2.1 2.1""#));
        assert!(s.ends_with("</svg>\n"));
    }

    #[test]
    fn numbers_are_fixed_width() {
        assert_eq!(num(-0.0), "0.000000");
        assert_eq!(num(-1e-9), "0.000000");
        assert_eq!(num(0.5), "0.500000");
        assert_eq!(num(-0.25), "-0.250000");
    }
}
