//! Bit-exact total colorings of the plane (strips, staircases, hexagonal and
//! square 4-colorings), configuration samplers, randomized monochromatic-copy
//! falsification, exact tiling audits, and an SVG renderer.
//!
//! Boundary conventions are fixed once and for all: strips and squares are
//! half-open with the lower/left boundary included, a staircase owns its lower
//! boundary, and hexagon boundary ties go to the lexicographically least tile.

use crate::error::{Error, Result};
use crate::rng::{mix, Rng64};
use serde::Serialize;

const SQRT2: f64 = std::f64::consts::SQRT_2;
const SQRT3: f64 = 1.732050807568877293527446341505872367_f64;

/// A total coloring scheme of the plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PlaneScheme {
    /// Horizontal strips of width `w`, alternating 2 colors, lower edge included.
    Strips { width: f64 },
    /// Alternating staircases with run `lambda` and width 1; the lower
    /// boundary belongs to its staircase.
    Staircase { run: f64 },
    /// Regular hexagon tiling of side `a` (requires `1/sqrt(3) < a < 1/sqrt(2)`),
    /// 4 colors with period 4 columns by 2 rows.
    Hex4 { side: f64 },
    /// Unit square tiling `[0,1) x [0,1)`, 4 colors with period 2 by 2.
    Square4,
}

impl PlaneScheme {
    pub fn strips(width: f64) -> Result<PlaneScheme> {
        if !width.is_finite() || width <= 0.0 {
            return Err(Error::BadParams("strip width must be positive".into()));
        }
        Ok(PlaneScheme::Strips { width })
    }

    pub fn staircase(run: f64) -> Result<PlaneScheme> {
        if !run.is_finite() || run <= 1.0 {
            return Err(Error::BadParams("staircase run must exceed 1".into()));
        }
        Ok(PlaneScheme::Staircase { run })
    }

    pub fn hex4(side: f64) -> Result<PlaneScheme> {
        if !(side > 1.0 / SQRT3 && side < 1.0 / SQRT2) {
            return Err(Error::BadParams(format!(
                "hexagon side must satisfy 1/sqrt(3) < a < 1/sqrt(2), got {side}"
            )));
        }
        Ok(PlaneScheme::Hex4 { side })
    }

    pub fn square4() -> PlaneScheme {
        PlaneScheme::Square4
    }

    pub fn num_colors(&self) -> u32 {
        match self {
            PlaneScheme::Strips { .. } | PlaneScheme::Staircase { .. } => 2,
            PlaneScheme::Hex4 { .. } | PlaneScheme::Square4 => 4,
        }
    }

    /// The canonical strip width avoiding monochromatic unit triangles.
    pub fn triangle_free_strip_width() -> f64 {
        SQRT3 / 2.0
    }

    /// The canonical staircase run avoiding monochromatic `Q_11` box copies.
    pub fn q11_free_staircase_run() -> f64 {
        1.0 + 3.0 / SQRT2
    }
}

#[inline]
fn floor_mod2(x: f64) -> u32 {
    (x.floor().rem_euclid(2.0)) as u32
}

/// Total deterministic color of a point.
pub fn color_at(scheme: &PlaneScheme, x: f64, y: f64) -> u32 {
    match *scheme {
        PlaneScheme::Strips { width } => floor_mod2(y / width),
        PlaneScheme::Staircase { run } => (staircase_index(run, x, y).rem_euclid(2)) as u32,
        PlaneScheme::Square4 => 2 * floor_mod2(x) + floor_mod2(y),
        PlaneScheme::Hex4 { side } => {
            let (i, j) = hex_tile_of(side, x, y);
            hex_color(i, j)
        }
    }
}

/// Lower boundary of staircase `k`: a step curve with run and drop `lambda`.
/// Consecutive boundaries are offset by (-1, -1).
fn staircase_boundary(run: f64, k: i64, x: f64) -> f64 {
    -(k as f64) - run * ((x + k as f64) / run).floor()
}

/// The unique `k` with `b_k(x) <= y < b_{k-1}(x)`.
fn staircase_index(run: f64, x: f64, y: f64) -> i64 {
    let mut k = ((-x - y + run / 2.0) / 2.0).round() as i64;
    let mut guard = 0;
    while y >= staircase_boundary(run, k - 1, x) {
        k -= 1;
        guard += 1;
        assert!(guard < 1_000_000, "staircase search diverged at ({x},{y})");
    }
    while y < staircase_boundary(run, k, x) {
        k += 1;
        guard += 1;
        assert!(guard < 1_000_000, "staircase search diverged at ({x},{y})");
    }
    k
}

/// Hexagon centers: `(i * 3a/2, j * a*sqrt(3) + (i odd ? a*sqrt(3)/2 : 0))`,
/// flat-top orientation with circumradius `a`.
fn hex_center(side: f64, i: i64, j: i64) -> (f64, f64) {
    let x = i as f64 * 1.5 * side;
    let y = j as f64 * side * SQRT3
        + if i.rem_euclid(2) == 1 {
            side * SQRT3 / 2.0
        } else {
            0.0
        };
    (x, y)
}

/// Closed point-in-hexagon test for a flat-top hexagon of circumradius `a`.
fn in_hexagon_closed(side: f64, dx: f64, dy: f64) -> bool {
    dy.abs() <= side * SQRT3 / 2.0 + 1e-15 && SQRT3 * dx.abs() + dy.abs() <= SQRT3 * side + 1e-12
}

/// Tile owning a point; boundary ties go to the lexicographically least (i, j).
fn hex_tile_of(side: f64, x: f64, y: f64) -> (i64, i64) {
    let i0 = (x / (1.5 * side)).round() as i64;
    let j0 = (y / (side * SQRT3)).round() as i64;
    let mut best: Option<(i64, i64)> = None;
    for i in i0 - 2..=i0 + 2 {
        for j in j0 - 2..=j0 + 2 {
            let (cx, cy) = hex_center(side, i, j);
            if in_hexagon_closed(side, x - cx, y - cy) && best.is_none_or(|b| (i, j) < b) {
                best = Some((i, j));
            }
        }
    }
    best.expect("some hexagon contains the point")
}

/// Color table of the hexagonal 4-coloring, period 4 in columns and 2 in rows.
fn hex_color(i: i64, j: i64) -> u32 {
    let ic = i.rem_euclid(4);
    let jc = j.rem_euclid(2) as u32;
    match ic {
        0 => jc,     // 0 / 1
        1 => 2 + jc, // 2 / 3
        2 => 1 - jc, // 1 / 0
        _ => 3 - jc, // 3 / 2
    }
}

/// Kinds of point configurations the falsifier samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConfigKind {
    /// Unit equilateral triangle.
    Triangle,
    /// Unit rhombus (the vertex set of a unit-copy of C_4).
    Rhombus,
    /// Three points with two designated unit distances.
    Path3,
    /// `{base + sum of chosen unit vectors}` over all subsets: a box copy of Q_d.
    BoxCopy(usize),
}

/// A sampled configuration with its generator data, re-verifiable independently.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigWitness {
    pub kind: ConfigKind,
    pub base: (f64, f64),
    pub unit_vectors: Vec<(f64, f64)>,
    pub points: Vec<(f64, f64)>,
    /// Index pairs that must be at distance exactly 1.
    pub unit_pairs: Vec<(usize, usize)>,
}

impl ConfigWitness {
    /// All designated unit distances hold to 1e-12.
    pub fn distances_ok(&self) -> bool {
        self.unit_pairs.iter().all(|&(i, j)| {
            let (ax, ay) = self.points[i];
            let (bx, by) = self.points[j];
            (((ax - bx).powi(2) + (ay - by).powi(2)).sqrt() - 1.0).abs() <= 1e-12
        })
    }
}

const MIN_ANGLE: f64 = 1e-2;

fn unit_vec(rng: &mut Rng64) -> (f64, f64) {
    let theta = rng.range_f64(0.0, std::f64::consts::TAU);
    (theta.cos(), theta.sin())
}

/// Samples one configuration with its base point uniform in
/// `[-window, window]^2`. Degenerate angle draws are resampled internally.
pub fn sample_config(kind: ConfigKind, rng: &mut Rng64, window: f64) -> ConfigWitness {
    let base = (
        rng.range_f64(-window, window),
        rng.range_f64(-window, window),
    );
    match kind {
        ConfigKind::Triangle => {
            let theta = rng.range_f64(0.0, std::f64::consts::TAU);
            let u = (theta.cos(), theta.sin());
            let v = (
                (theta + std::f64::consts::FRAC_PI_3).cos(),
                (theta + std::f64::consts::FRAC_PI_3).sin(),
            );
            ConfigWitness {
                kind,
                base,
                unit_vectors: vec![u, v],
                points: vec![
                    base,
                    (base.0 + u.0, base.1 + u.1),
                    (base.0 + v.0, base.1 + v.1),
                ],
                unit_pairs: vec![(0, 1), (0, 2), (1, 2)],
            }
        }
        ConfigKind::Rhombus => loop {
            let u = unit_vec(rng);
            let v = unit_vec(rng);
            let angle = (u.0 * v.0 + u.1 * v.1).clamp(-1.0, 1.0).acos();
            if !(MIN_ANGLE..=std::f64::consts::PI - MIN_ANGLE).contains(&angle) {
                continue;
            }
            break ConfigWitness {
                kind,
                base,
                unit_vectors: vec![u, v],
                points: vec![
                    base,
                    (base.0 + u.0, base.1 + u.1),
                    (base.0 + u.0 + v.0, base.1 + u.1 + v.1),
                    (base.0 + v.0, base.1 + v.1),
                ],
                unit_pairs: vec![(0, 1), (1, 2), (2, 3), (3, 0)],
            };
        },
        ConfigKind::Path3 => loop {
            let u = unit_vec(rng);
            let v = unit_vec(rng);
            let angle = (u.0 * v.0 + u.1 * v.1).clamp(-1.0, 1.0).acos();
            if angle < MIN_ANGLE {
                continue;
            }
            // points: leaf, center, leaf
            break ConfigWitness {
                kind,
                base,
                unit_vectors: vec![u, v],
                points: vec![
                    (base.0 + u.0, base.1 + u.1),
                    base,
                    (base.0 + v.0, base.1 + v.1),
                ],
                unit_pairs: vec![(0, 1), (1, 2)],
            };
        },
        ConfigKind::BoxCopy(d) => {
            let us: Vec<(f64, f64)> = (0..d).map(|_| unit_vec(rng)).collect();
            let mut points = Vec::with_capacity(1 << d);
            for mask in 0u64..1 << d {
                let mut p = base;
                for (b, u) in us.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        p = (p.0 + u.0, p.1 + u.1);
                    }
                }
                points.push(p);
            }
            let mut unit_pairs = Vec::new();
            for mask in 0u64..1 << d {
                for b in 0..d {
                    if mask >> b & 1 == 0 {
                        unit_pairs.push((mask as usize, (mask | 1 << b) as usize));
                    }
                }
            }
            ConfigWitness {
                kind,
                base,
                unit_vectors: us,
                points,
                unit_pairs,
            }
        }
    }
}

/// Default sampling window half-width.
pub const DEFAULT_WINDOW: f64 = 50.0;

/// Runs `trials` independent samples and returns the first monochromatic
/// witness, or `None`. Trial `t` uses the generator seeded with
/// `mix(seed, t)`, so the outcome is reproducible and scheduling-independent.
pub fn falsify(
    scheme: &PlaneScheme,
    kind: ConfigKind,
    trials: u64,
    seed: u64,
) -> Option<(u64, ConfigWitness)> {
    falsify_windowed(scheme, kind, trials, seed, DEFAULT_WINDOW, 1)
}

/// As [`falsify`], with an explicit window and worker count. With several
/// workers the returned witness is still the one of smallest trial index.
pub fn falsify_windowed(
    scheme: &PlaneScheme,
    kind: ConfigKind,
    trials: u64,
    seed: u64,
    window: f64,
    jobs: usize,
) -> Option<(u64, ConfigWitness)> {
    let jobs = jobs.max(1);
    let run_range = |lo: u64, hi: u64, stride: u64| -> Option<(u64, ConfigWitness)> {
        let mut t = lo;
        while t < hi {
            let mut rng = Rng64::new(mix(seed, t));
            let witness = sample_config(kind, &mut rng, window);
            let c0 = color_at(scheme, witness.points[0].0, witness.points[0].1);
            if witness
                .points
                .iter()
                .all(|&(x, y)| color_at(scheme, x, y) == c0)
            {
                debug_assert!(witness.distances_ok());
                return Some((t, witness));
            }
            t += stride;
        }
        None
    };
    if jobs == 1 {
        return run_range(0, trials, 1);
    }
    let found = std::sync::Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for w in 0..jobs as u64 {
            let found = &found;
            let run_range = &run_range;
            scope.spawn(move || {
                if let Some(hit) = run_range(w, trials, jobs as u64) {
                    found.lock().expect("lock").push(hit);
                }
            });
        }
    });
    let mut hits = found.into_inner().expect("lock");
    hits.sort_by_key(|&(t, _)| t);
    hits.into_iter().next()
}

/// Exact geometry audit of a tiling scheme.
#[derive(Clone, Debug, Serialize)]
pub struct TilingAudit {
    /// Diameter of one closed tile.
    pub in_tile_diameter: f64,
    /// True when the diameter is only attained on boundary excluded from the
    /// half-open tile.
    pub diameter_attained_only_on_excluded_boundary: bool,
    /// Infimum distance between same-colored points of distinct tiles,
    /// computed by exact polygon distance over a lattice window of radius 5.
    pub min_same_color_cross_tile: f64,
    /// True when that infimum is only approached through excluded boundary.
    pub cross_tile_attained_only_on_excluded_boundary: bool,
}

/// Computes the audit for `hex4` and `square4`.
pub fn tiling_audit(scheme: &PlaneScheme) -> Result<TilingAudit> {
    match *scheme {
        PlaneScheme::Hex4 { side } => {
            let poly = |i: i64, j: i64| -> Vec<(f64, f64)> {
                let (cx, cy) = hex_center(side, i, j);
                (0..6)
                    .map(|v| {
                        let ang = v as f64 * std::f64::consts::FRAC_PI_3;
                        (cx + side * ang.cos(), cy + side * ang.sin())
                    })
                    .collect()
            };
            let mut min_cross = f64::INFINITY;
            for i1 in -2i64..=2 {
                for j1 in -2i64..=2 {
                    for di in -5i64..=5 {
                        for dj in -5i64..=5 {
                            if (di, dj) == (0, 0) {
                                continue;
                            }
                            let (i2, j2) = (i1 + di, j1 + dj);
                            if hex_color(i1, j1) != hex_color(i2, j2) {
                                continue;
                            }
                            min_cross =
                                min_cross.min(polygon_distance(&poly(i1, j1), &poly(i2, j2)));
                        }
                    }
                }
            }
            Ok(TilingAudit {
                in_tile_diameter: 2.0 * side,
                diameter_attained_only_on_excluded_boundary: false,
                min_same_color_cross_tile: min_cross,
                cross_tile_attained_only_on_excluded_boundary: false,
            })
        }
        PlaneScheme::Square4 => {
            let poly = |i: i64, j: i64| -> Vec<(f64, f64)> {
                let (x, y) = (i as f64, j as f64);
                vec![(x, y), (x + 1.0, y), (x + 1.0, y + 1.0), (x, y + 1.0)]
            };
            let color =
                |i: i64, j: i64| -> u32 { 2 * (i.rem_euclid(2) as u32) + j.rem_euclid(2) as u32 };
            let mut min_cross = f64::INFINITY;
            for di in -5i64..=5 {
                for dj in -5i64..=5 {
                    if (di, dj) == (0, 0) || color(0, 0) != color(di, dj) {
                        continue;
                    }
                    min_cross = min_cross.min(polygon_distance(&poly(0, 0), &poly(di, dj)));
                }
            }
            Ok(TilingAudit {
                in_tile_diameter: SQRT2,
                diameter_attained_only_on_excluded_boundary: true,
                min_same_color_cross_tile: min_cross,
                // Closed tiles at offset (±2, 0) and (0, ±2) touch the infimum
                // only through boundary the half-open tiles exclude.
                cross_tile_attained_only_on_excluded_boundary: true,
            })
        }
        _ => Err(Error::UnsupportedScheme(
            "tiling_audit needs hex4 or square4".into(),
        )),
    }
}

fn point_segment_distance(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (abx, aby) = (b.0 - a.0, b.1 - a.1);
    let (apx, apy) = (p.0 - a.0, p.1 - a.1);
    let len2 = abx * abx + aby * aby;
    let t = if len2 == 0.0 {
        0.0
    } else {
        ((apx * abx + apy * aby) / len2).clamp(0.0, 1.0)
    };
    let (qx, qy) = (a.0 + t * abx, a.1 + t * aby);
    ((p.0 - qx).powi(2) + (p.1 - qy).powi(2)).sqrt()
}

/// Minimum distance between two disjoint convex polygons: the closest
/// vertex-to-edge distance in either direction.
fn polygon_distance(p: &[(f64, f64)], q: &[(f64, f64)]) -> f64 {
    let mut best = f64::INFINITY;
    for (poly_a, poly_b) in [(p, q), (q, p)] {
        for &v in poly_a {
            for i in 0..poly_b.len() {
                let a = poly_b[i];
                let b = poly_b[(i + 1) % poly_b.len()];
                best = best.min(point_segment_distance(v, a, b));
            }
        }
    }
    best
}

/// Fixed 7-color palette used by the renderer.
pub const PALETTE: [&str; 7] = [
    "#b2b2ff", "#4747af", "#d25353", "#ffcccc", "#7fbf7f", "#bf7fbf", "#e0c060",
];

/// Renders the scheme over `bbox = (x0, y0, x1, y1)` as an SVG of
/// `cells x cells` sampled rectangles. Deterministic.
pub fn render_svg(
    scheme: &PlaneScheme,
    bbox: (f64, f64, f64, f64),
    cells: usize,
) -> Result<String> {
    let (x0, y0, x1, y1) = bbox;
    if cells == 0 || [x0, y0, x1, y1].iter().any(|v| !v.is_finite()) || x1 <= x0 || y1 <= y0 {
        return Err(Error::BadParams(
            "render needs a positive resolution and box".into(),
        ));
    }
    let (w, h) = (x1 - x0, y1 - y0);
    let mut out = String::with_capacity(cells * cells * 40);
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {cells} {cells}\" width=\"640\" height=\"640\">\n"
    ));
    for row in 0..cells {
        for col in 0..cells {
            let x = x0 + (col as f64 + 0.5) / cells as f64 * w;
            // SVG y axis points down.
            let y = y1 - (row as f64 + 0.5) / cells as f64 * h;
            let color = PALETTE[color_at(scheme, x, y) as usize % PALETTE.len()];
            out.push_str(&format!(
                "<rect x=\"{col}\" y=\"{row}\" width=\"1\" height=\"1\" fill=\"{color}\"/>\n"
            ));
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
