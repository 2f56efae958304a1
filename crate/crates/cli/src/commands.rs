use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use barbilliards::congruence::mu_estimate_with;
use barbilliards::{
    construct_inscribed_triangles, count_inscribed, delta, iterate_orbit,
    klein_tangent_gap, omega, rotation_number, tangency_ellipse, BoundaryPoint, CircleAngle,
    DiskPoint, GeometryError, Point, Triangle, TriangleShape,
};
use thiserror::Error;

use crate::report::{ClassifyReport, EllipseReport, MuReport, RotationReport, SideReport};
use crate::spec::{parse_chord, parse_shape, parse_triangle, ParseError, ShapeSpec};
use crate::svg::Figure;
use crate::sweep::{sweep, to_csv};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Geometry(#[from] GeometryError),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Geometry(_) => 3,
            CliError::Io { .. } => 4,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn stdout_err(source: io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source,
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn triangle_from(spec: &str) -> Result<(Triangle, [DiskPoint; 3])> {
    let coords = parse_triangle(spec)?;
    let t = Triangle::from_coords(coords)?;
    let [p, q, r] = coords.map(|[x, y]| DiskPoint::new(x, y));
    Ok((t, [p?, q?, r?]))
}

fn chord_from(spec: &str) -> Result<(DiskPoint, DiskPoint)> {
    let [[px, py], [qx, qy]] = parse_chord(spec)?;
    Ok((DiskPoint::new(px, py)?, DiskPoint::new(qx, qy)?))
}

fn f7(x: f64) -> String {
    let s = format!("{x:.7}");
    if s == "-0.0000000" {
        s[1..].to_string()
    } else {
        s
    }
}

fn pt7(p: Point) -> String {
    format!("({}, {})", f7(p.x), f7(p.y))
}

pub fn classify_report(spec: &str, band: f64) -> Result<ClassifyReport> {
    let (t, [p, q, r]) = triangle_from(spec)?;
    let labelled = [(p, q, r, "PQ"), (q, r, p, "QR"), (r, p, q, "RP")];
    let mut sides = Vec::with_capacity(3);
    for (a, b, apex, name) in labelled {
        let d = delta(a, b, apex)?;
        let gap = klein_tangent_gap(a, b)?;
        sides.push(SideReport {
            side: name.into(),
            delta: d,
            tangent_gap: gap,
            margin: d - gap,
        });
    }
    let margin = sides[0].margin;
    let m = count_inscribed(&t, band)?.m.count();
    let e = tangency_ellipse(p, q)?;
    let axis = e.frame.t3.xy();
    let center = e.center();
    Ok(ClassifyReport {
        triangle: [p, q, r].map(|x| [x.x(), x.y()]),
        m,
        margin,
        band,
        omega: omega(r, p, q)?,
        sides,
        ellipse: EllipseReport {
            a: e.a,
            b: e.b,
            c: e.c,
            u: e.frame.u,
            axis: [axis.x, axis.y],
            center: [center.x, center.y],
            value_at_r: e.quadratic_form(r.point()),
        },
    })
}

pub fn classify(spec: &str, band: f64, json: bool, out: &mut impl Write) -> Result<()> {
    let rep = classify_report(spec, band)?;
    if json {
        let s = serde_json::to_string_pretty(&rep).expect("report serializes");
        writeln!(out, "{s}").map_err(stdout_err)?;
        return Ok(());
    }
    let mut s = String::new();
    let [p, q, r] = rep.triangle.map(|[x, y]| Point::new(x, y));
    s += &format!("triangle  P = {}  Q = {}  R = {}\n", pt7(p), pt7(q), pt7(r));
    s += "side  delta      gap        margin\n";
    for side in &rep.sides {
        s += &format!(
            "{:<4}  {:<9}  {:<9}  {}\n",
            side.side,
            f7(side.delta),
            f7(side.tangent_gap),
            f7(side.margin)
        );
    }
    s += &format!("omega  {}\n", f7(rep.omega));
    s += &format!("m      {}\n", rep.m);
    let e = &rep.ellipse;
    s += &format!(
        "ellipse on PQ  a = {}  b = {}  c = {}  u = {}  axis = {}\n",
        f7(e.a),
        f7(e.b),
        f7(e.c),
        f7(e.u),
        pt7(Point::new(e.axis[0], e.axis[1]))
    );
    out.write_all(s.as_bytes()).map_err(stdout_err)
}

pub fn rotation(spec: &str, iters: usize, json: bool, out: &mut impl Write) -> Result<()> {
    let (t, _) = triangle_from(spec)?;
    let est = rotation_number(&t, iters);
    let rep = RotationReport {
        value: est.value,
        error_bound: est.error_bound,
        exact_one_third: est.exact_one_third,
        iterations: est.iterations,
    };
    let s = if json {
        serde_json::to_string_pretty(&rep).expect("report serializes") + "\n"
    } else {
        format!(
            "rotation number  {}  (± {:.1e} after {} iterations)\nexactly 1/3      {}\n",
            f7(rep.value),
            rep.error_bound,
            rep.iterations,
            rep.exact_one_third
        )
    };
    out.write_all(s.as_bytes()).map_err(stdout_err)
}

fn obstacle(fig: &mut Figure, t: &Triangle) {
    fig.polygon("triangle", &t.points(), "black", 0.008);
}

pub fn orbit(spec: &str, start: f64, steps: usize, svg: Option<&PathBuf>, out: &mut impl Write) -> Result<()> {
    let (t, _) = triangle_from(spec)?;
    let orbit = iterate_orbit(&t, CircleAngle::new(start), steps);
    let pts: Vec<Point> = orbit.iter().map(|&a| BoundaryPoint::from_angle(a).xy()).collect();
    let mut s = String::from("step  turns      x          y\n");
    for (k, (a, p)) in orbit.iter().zip(&pts).enumerate() {
        s += &format!("{k:<4}  {:<9}  {:<9}  {}\n", f7(a.turns()), f7(p.x), f7(p.y));
    }
    out.write_all(s.as_bytes()).map_err(stdout_err)?;
    if let Some(path) = svg {
        let mut fig = Figure::new();
        obstacle(&mut fig, &t);
        fig.polyline("orbit", &pts, "steelblue", 0.005);
        fig.dots("orbit-points", &pts, "steelblue", 0.015);
        write_file(path, &fig.render())?;
    }
    Ok(())
}

pub fn ellipse(chord: &str, svg: Option<&PathBuf>, out: &mut impl Write) -> Result<()> {
    let (p, q) = chord_from(chord)?;
    let e = tangency_ellipse(p, q)?;
    let f = &e.frame;
    let s = format!(
        "chord ends  T1 = {} turns  T2 = {} turns\naxis        {}\nu           {}\na           {}\nb           {}\nc           {}\ncenter      {}\n",
        f7(f.t1.angle().turns()),
        f7(f.t2.angle().turns()),
        pt7(f.t3.xy()),
        f7(f.u),
        f7(e.a),
        f7(e.b),
        f7(e.c),
        pt7(e.center()),
    );
    out.write_all(s.as_bytes()).map_err(stdout_err)?;
    if let Some(path) = svg {
        let mut fig = Figure::new();
        fig.polyline("chord", &[f.t1.xy(), f.t2.xy()], "gray", 0.004);
        fig.ellipse("ellipse", &e, "firebrick", 0.006);
        fig.dots("chord-points", &[p.point(), q.point()], "black", 0.015);
        write_file(path, &fig.render())?;
    }
    Ok(())
}

pub fn inscribed(spec: &str, svg: Option<&PathBuf>, out: &mut impl Write) -> Result<()> {
    let (t, _) = triangle_from(spec)?;
    let found = construct_inscribed_triangles(&t);
    let mut s = format!(
        "inscribed triangles  {}{}\n",
        found.triangles.len(),
        if found.tangential { "  (tangential)" } else { "" }
    );
    for (k, tri) in found.triangles.iter().enumerate() {
        let turns: Vec<String> = tri.iter().map(|b| f7(b.angle().turns())).collect();
        s += &format!("{k}  {}\n", turns.join("  "));
    }
    out.write_all(s.as_bytes()).map_err(stdout_err)?;
    if let Some(path) = svg {
        let mut fig = Figure::new();
        obstacle(&mut fig, &t);
        for (k, tri) in found.triangles.iter().enumerate() {
            fig.polygon(&format!("inscribed-{k}"), &tri.map(|b| b.xy()), "darkorange", 0.005);
        }
        write_file(path, &fig.render())?;
    }
    Ok(())
}

pub fn threads_from_env() -> Option<usize> {
    std::env::var("BARBILLIARDS_THREADS")
        .ok()?
        .trim()
        .parse::<usize>()
        .ok()
        .filter(|&n| n > 0)
}

pub fn sweep_csv(chord: &str, grid: usize, band: f64, iters: usize) -> Result<(String, usize)> {
    let (p, q) = chord_from(chord)?;
    tangency_ellipse(p, q)?;
    if !(band >= 0.0 && band.is_finite()) {
        return Err(GeometryError::Domain { what: "boundary band", value: band }.into());
    }
    let run = || sweep(p, q, grid, band, iters);
    let result = match threads_from_env() {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        },
        None => run(),
    };
    Ok((to_csv(&result.rows), result.skipped))
}

pub fn sweep_cmd(
    chord: &str,
    grid: usize,
    band: f64,
    iters: usize,
    csv: Option<&PathBuf>,
    out: &mut impl Write,
    log: &mut impl Write,
) -> Result<()> {
    let (text, skipped) = sweep_csv(chord, grid, band, iters)?;
    let _ = writeln!(log, "skipped {skipped} of {} cells", grid * grid);
    match csv {
        Some(path) => write_file(path, &text),
        None => out.write_all(text.as_bytes()).map_err(stdout_err),
    }
}

pub fn mu(shape: &str, tol: f64, samples: usize, json: bool, out: &mut impl Write) -> Result<()> {
    let shape = match parse_shape(shape)? {
        ShapeSpec::Equilateral => TriangleShape::equilateral(),
        ShapeSpec::Sides(a, b, c) => TriangleShape::new(a, b, c)?,
    };
    let est = mu_estimate_with(&shape, tol, samples)?;
    let rep = MuReport {
        lower: est.lower,
        upper: est.upper,
        samples: est.samples,
        grid_resolution: est.grid_resolution,
    };
    let s = if json {
        serde_json::to_string_pretty(&rep).expect("report serializes") + "\n"
    } else {
        format!(
            "mu in [{}, {}]\nsampled translations per placement survey  {}\ntranslation grid spacing  {}\n",
            f7(rep.lower),
            f7(rep.upper),
            rep.samples,
            f7(rep.grid_resolution)
        )
    };
    out.write_all(s.as_bytes()).map_err(stdout_err)
}
