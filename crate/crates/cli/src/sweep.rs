//! Grid sweep of third vertices for a fixed chord.

use std::fmt::Write;

use barbilliards::{
    delta, klein_tangent_gap, rotation_number, DiskPoint, InscribedCount, Multiplicity, Triangle,
};
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub rx: f64,
    pub ry: f64,
    /// `δ(P,Q,R) − Δ′(P,Q)`.
    pub margin: f64,
    pub m: usize,
    /// 1/3 when an inscribed triangle exists, otherwise a finite-orbit estimate.
    pub rho: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub rows: Vec<SweepRow>,
    pub skipped: usize,
}

fn coordinate(i: usize, grid: usize) -> f64 {
    if grid == 1 {
        0.0
    } else {
        -1.0 + 2.0 * i as f64 / (grid - 1) as f64
    }
}

fn cell(p: DiskPoint, q: DiskPoint, rx: f64, ry: f64, band: f64, iters: usize) -> Option<SweepRow> {
    let r = DiskPoint::new(rx, ry).ok()?;
    let t = Triangle::new(p, q, r).ok()?;
    let margin = delta(p, q, r).ok()? - klein_tangent_gap(p, q).ok()?;
    let m = InscribedCount::from_margin(margin, band).m;
    let rho = if m == Multiplicity::Zero {
        rotation_number(&t, iters).value
    } else {
        1.0 / 3.0
    };
    Some(SweepRow {
        rx,
        ry,
        margin,
        m: m.count(),
        rho,
    })
}

/// Evaluates every grid cell over `[−1, 1]²` in row-major order (`ry`
/// outer, both ascending). Cells outside the disk or collinear with the
/// chord are skipped.
pub fn sweep(p: DiskPoint, q: DiskPoint, grid: usize, band: f64, iters: usize) -> Sweep {
    let cells: Vec<Option<SweepRow>> = (0..grid * grid)
        .into_par_iter()
        .map(|k| {
            let (j, i) = (k / grid, k % grid);
            cell(p, q, coordinate(i, grid), coordinate(j, grid), band, iters)
        })
        .collect();
    let skipped = cells.iter().filter(|c| c.is_none()).count();
    Sweep {
        rows: cells.into_iter().flatten().collect(),
        skipped,
    }
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("rx,ry,margin,m,rho\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{},{:.16e}",
            r.rx, r.ry, r.margin, r.m, r.rho
        );
    }
    out
}
