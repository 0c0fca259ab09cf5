//! Closed-form constants and optimizers for the quantitative bounds:
//! odd-cycle ball radii `r_l` with a star-polygon construction and an
//! independent numerical circumradius minimizer, the product bound on
//! induced-C_4-free subsets of `G □ H` with its exponent optimization over
//! generalized Johnson graphs, and orthogonal tree embeddings.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{mix, Rng64};
use serde::Serialize;

/// Base of the best known exponential lower bound on the chromatic number of
/// n-space (printed to three decimals in the literature; treated as exact here).
pub const PSI: f64 = 1.239;

/// `(4/3)^{1/4}`, the two-partite lower-bound base.
pub fn c2() -> f64 {
    (4.0f64 / 3.0).powf(0.25)
}

/// Constants attached to the odd cycle `C_{2l+1}`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct OddCycleConstants {
    pub l: usize,
    /// `r_l = 1 / (2 cos(pi / (4l+2)))`: the critical ball radius.
    pub r_l: f64,
    /// `1 + 2 cos(pi / (4l+2)) = 1 + 1/r_l`: the upper-bound base.
    pub upper_base: f64,
    /// `2 - 2 cos(pi / (4l+2)) = 3 - upper_base`.
    pub eps_l: f64,
}

pub fn odd_cycle_constants(l: usize) -> Result<OddCycleConstants> {
    if l == 0 {
        return Err(Error::BadParams("l must be >= 1".into()));
    }
    let c = (std::f64::consts::PI / (4 * l + 2) as f64).cos();
    Ok(OddCycleConstants {
        l,
        r_l: 1.0 / (2.0 * c),
        upper_base: 1.0 + 2.0 * c,
        eps_l: 2.0 - 2.0 * c,
    })
}

/// The `2l+1` vertices of the regular star polygon `{(2l+1)/l}` on the circle
/// of radius `r_l`, together with the largest deviation of the star chords
/// `x_i x_{i+l}` from unit length.
pub fn star_polygon_embedding(l: usize) -> Result<(Vec<(f64, f64)>, f64)> {
    let consts = odd_cycle_constants(l)?;
    let m = 2 * l + 1;
    let pts: Vec<(f64, f64)> = (0..m)
        .map(|i| {
            let ang = std::f64::consts::TAU * i as f64 / m as f64;
            (consts.r_l * ang.cos(), consts.r_l * ang.sin())
        })
        .collect();
    let mut residual = 0.0f64;
    for i in 0..m {
        let j = (i + l) % m;
        let d = ((pts[i].0 - pts[j].0).powi(2) + (pts[i].1 - pts[j].1).powi(2)).sqrt();
        residual = residual.max((d - 1.0).abs());
    }
    Ok((pts, residual))
}

/// A closed chain of `m` points with unit consecutive (cyclic) distances.
#[derive(Clone, Debug, Serialize)]
pub struct ChainConfig {
    pub m: usize,
    pub dim: usize,
    pub points: Vec<Vec<f64>>,
}

impl ChainConfig {
    /// Largest deviation of a cyclic consecutive distance from 1.
    pub fn residual(&self) -> f64 {
        let m = self.m;
        (0..m)
            .map(|i| (dist(&self.points[i], &self.points[(i + 1) % m]) - 1.0).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_norm(&self) -> f64 {
        self.points.iter().map(|p| norm(p)).fold(0.0, f64::max)
    }
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn norm(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Result of the circumradius minimization.
#[derive(Clone, Debug, Serialize)]
pub struct ChainResult {
    pub radius: f64,
    pub chain: ChainConfig,
    pub residual: f64,
    pub converged: bool,
}

const CHAIN_RESIDUAL_TOL: f64 = 1e-7;
const SHRINK: f64 = 0.999;

/// Minimizes `max_i |y_i|` over closed unit m-chains in `dim` dimensions by
/// alternating projection onto the unit-distance constraints followed by a
/// shrink toward the origin, over several random restarts. The best feasible
/// chain (residual below 1e-7) is returned; the expected optimum for odd `m`
/// is `r_{(m-1)/2}`.
pub fn min_circumradius_chain(
    m: usize,
    dim: usize,
    restarts: usize,
    seed: u64,
) -> Result<ChainResult> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::BadParams("m must be odd and >= 3".into()));
    }
    if dim < 2 {
        return Err(Error::BadParams("dim must be >= 2".into()));
    }
    let mut best: Option<ChainResult> = None;
    for restart in 0..restarts.max(1) {
        let mut rng = Rng64::new(mix(seed, restart as u64));
        let mut pts: Vec<Vec<f64>> = (0..m)
            .map(|_| (0..dim).map(|_| rng.range_f64(-1.0, 1.0)).collect())
            .collect();
        project_chain(&mut pts, 4_000);
        let seeded = ChainConfig {
            m,
            dim,
            points: pts.clone(),
        };
        if seeded.residual() >= CHAIN_RESIDUAL_TOL {
            continue;
        }
        pointwise_descent(&mut pts, 50_000);
        let mut local_best = (max_norm(&pts), pts.clone());

        // Coarse phase: shrink the ball radius by the fixed factor while the
        // projections still reach a feasible chain inside it.
        let mut radius = local_best.0;
        loop {
            let target = radius * SHRINK;
            let save = pts.clone();
            if reach_feasible(&mut pts, target, 6_000) {
                radius = max_norm(&pts);
                if radius < local_best.0 {
                    local_best = (radius, pts.clone());
                }
            } else {
                pts = save;
                break;
            }
        }
        // Refinement: bisect the ball radius between the last feasible value
        // and the failed one.
        let (mut lo, mut hi) = (radius * SHRINK, radius);
        for _ in 0..25 {
            if hi - lo < 1e-9 {
                break;
            }
            let mid = 0.5 * (lo + hi);
            let save = pts.clone();
            if reach_feasible(&mut pts, mid, 40_000) {
                hi = max_norm(&pts).min(mid);
                if hi < local_best.0 {
                    local_best = (hi, pts.clone());
                }
            } else {
                pts = save;
                lo = mid;
            }
        }

        let (_, mut points) = local_best;
        pointwise_descent(&mut points, 50_000);
        let radius = max_norm(&points);
        let chain = ChainConfig { m, dim, points };
        let residual = chain.residual();
        let candidate = ChainResult {
            radius,
            chain,
            residual,
            converged: residual < CHAIN_RESIDUAL_TOL,
        };
        if candidate.converged && best.as_ref().is_none_or(|b| candidate.radius < b.radius) {
            best = Some(candidate);
        }
    }
    best.ok_or(Error::NonConvergence(f64::INFINITY))
}

fn max_norm(pts: &[Vec<f64>]) -> f64 {
    pts.iter().map(|p| norm(p)).fold(0.0, f64::max)
}

/// Cyclic Gauss-Seidel descent: each point moves to the minimum-norm position
/// satisfying both of its unit constraints exactly (the neighbors stay put).
/// Every step keeps the chain feasible and never increases any norm; the
/// sweep repeats until the largest norm stops improving.
fn pointwise_descent(pts: &mut [Vec<f64>], max_sweeps: usize) {
    let m = pts.len();
    let dim = pts[0].len();
    let mut prev = f64::INFINITY;
    for _ in 0..max_sweeps {
        for i in 0..m {
            let a = pts[(i + m - 1) % m].clone();
            let b = pts[(i + 1) % m].clone();
            let gap = dist(&a, &b);
            if !(1e-12..=2.0 - 1e-12).contains(&gap) {
                continue;
            }
            let mid: Vec<f64> = (0..dim).map(|c| 0.5 * (a[c] + b[c])).collect();
            let u: Vec<f64> = (0..dim).map(|c| (b[c] - a[c]) / gap).collect();
            let rho = (1.0 - gap * gap / 4.0).sqrt();
            // Component of mid orthogonal to u; descend against it.
            let mu: f64 = mid.iter().zip(&u).map(|(x, y)| x * y).sum();
            let mut w: Vec<f64> = (0..dim).map(|c| mid[c] - mu * u[c]).collect();
            let wn = norm(&w);
            if wn < 1e-14 {
                // mid is on the axis; any perpendicular direction is optimal.
                let mut fallback = vec![0.0; dim];
                fallback[0] = 1.0;
                let fu: f64 = fallback.iter().zip(&u).map(|(x, y)| x * y).sum();
                for c in 0..dim {
                    fallback[c] -= fu * u[c];
                }
                let fnorm = norm(&fallback);
                if fnorm < 1e-14 {
                    continue;
                }
                w = fallback.iter().map(|x| x / fnorm).collect();
            } else {
                for c in w.iter_mut() {
                    *c /= wn;
                }
            }
            for c in 0..dim {
                pts[i][c] = mid[c] - rho * w[c];
            }
        }
        let current = max_norm(pts);
        if prev - current < 1e-13 {
            break;
        }
        prev = current;
    }
}

/// Alternating projections between the ball of radius `target` and the
/// unit-chain constraints. True when a chain inside the ball (to 1e-9) with
/// residual below 1e-9 was reached within the round budget.
fn reach_feasible(pts: &mut [Vec<f64>], target: f64, max_rounds: usize) -> bool {
    for _ in 0..max_rounds {
        for p in pts.iter_mut() {
            let s = norm(p);
            if s > target {
                let f = target / s;
                for c in p.iter_mut() {
                    *c *= f;
                }
            }
        }
        project_chain(pts, 1);
        let residual = {
            let m = pts.len();
            (0..m)
                .map(|i| (dist(&pts[i], &pts[(i + 1) % m]) - 1.0).abs())
                .fold(0.0, f64::max)
        };
        if residual < 1e-9 && max_norm(pts) <= target + 1e-9 {
            return true;
        }
    }
    false
}

/// Cyclic sweeps of pairwise projections onto the unit-distance constraints.
fn project_chain(pts: &mut [Vec<f64>], sweeps: usize) {
    let m = pts.len();
    for _ in 0..sweeps {
        let mut worst = 0.0f64;
        for i in 0..m {
            let j = (i + 1) % m;
            let d = dist(&pts[i], &pts[j]);
            worst = worst.max((d - 1.0).abs());
            if d < 1e-12 {
                pts[j][0] += 0.5;
                continue;
            }
            // Move both endpoints symmetrically to restore unit length.
            let shift = 0.5 * (d - 1.0) / d;
            for c in 0..pts[i].len() {
                let delta = (pts[j][c] - pts[i][c]) * shift;
                pts[i][c] += delta;
                pts[j][c] -= delta;
            }
        }
        if worst < CHAIN_RESIDUAL_TOL * 0.1 {
            return;
        }
    }
}

/// Inputs and value of the product bound evaluation.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub value: f64,
    /// `|V(G)| alpha(H) + |E(H)| alpha(G)`: the independent-set upper bound.
    pub alpha_ind_upper: u128,
    pub v_g: u64,
    pub alpha_g: u64,
    pub v_h: u64,
    pub e_h: u64,
    pub alpha_h: u64,
    pub formula: &'static str,
}

/// Evaluates the product lower bound
/// `(alpha(H)/|V(H)| + |E(H)|/|V(H)| * alpha(G)/|V(G)|)^{-1}`.
pub fn frankl_rodl_bound(
    v_g: u64,
    alpha_g: u64,
    v_h: u64,
    e_h: u64,
    alpha_h: u64,
) -> Result<BoundReport> {
    if v_g == 0 || v_h == 0 || alpha_g == 0 || alpha_h == 0 {
        return Err(Error::BadParams("all inputs must be positive".into()));
    }
    if alpha_g > v_g || alpha_h > v_h {
        return Err(Error::BadParams(
            "independence numbers cannot exceed vertex counts".into(),
        ));
    }
    let value = 1.0
        / (alpha_h as f64 / v_h as f64 + (e_h as f64 / v_h as f64) * (alpha_g as f64 / v_g as f64));
    Ok(BoundReport {
        value,
        alpha_ind_upper: v_g as u128 * alpha_h as u128 + e_h as u128 * alpha_g as u128,
        v_g,
        alpha_g,
        v_h,
        e_h,
        alpha_h,
        formula: "(aH/vH + (eH/vH)(aG/vG))^-1",
    })
}

/// Statistics of the generalized Johnson graph `J(n,k,t)`.
#[derive(Clone, Debug, Serialize)]
pub struct JohnsonStats {
    pub n: u64,
    pub k: u64,
    pub t: u64,
    /// `C(n,k)`.
    pub vertices: u128,
    /// `C(n,k) C(k,t) C(n-k,k-t) / 2`.
    pub edges: u128,
    /// `C(n, k-t-1)`.
    pub alpha_upper: u128,
    /// Whether `k <= n/2`, `t <= k/2`, and `k - t` prime, so `alpha_upper`
    /// really bounds the independence number.
    pub fw_applicable: bool,
}

fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn johnson_stats(n: u64, k: u64, t: u64) -> Result<JohnsonStats> {
    if !(t < k && k <= n) {
        return Err(Error::BadParams("need t < k <= n".into()));
    }
    if n > 64 {
        return Err(Error::BadParams("n <= 64 supported".into()));
    }
    let vertices = binom(n, k);
    let edges = vertices * binom(k, t) * binom(n - k, k - t) / 2;
    Ok(JohnsonStats {
        n,
        k,
        t,
        vertices,
        edges,
        alpha_upper: binom(n, k - t - 1),
        fw_applicable: 2 * k <= n && 2 * t <= k && is_prime(k - t),
    })
}

/// Outcome of the exponent optimization.
#[derive(Clone, Debug, Serialize)]
pub struct ExponentResult {
    /// Optimal exponential base of the product bound.
    pub base: f64,
    /// Optimal `kappa = k/n` (with `t = k/2`).
    pub kappa: f64,
    pub psi: f64,
}

/// Entropy-rate approximation `ln C(a n, b n) ~ n (a ln a - b ln b - (a-b) ln (a-b))`.
fn binom_rate(a: f64, b: f64) -> f64 {
    if b <= 0.0 || b >= a {
        return 0.0;
    }
    a * a.ln() - b * b.ln() - (a - b) * (a - b).ln()
}

/// Maximizes the exponential rate of the product bound over `kappa = k/n`
/// (with `tau = kappa/2`), approximating all binomials by entropy rates and
/// the host independence ratio by `psi^{-n}`. Golden-section search to 1e-6.
pub fn exponent_optimize() -> ExponentResult {
    exponent_optimize_with_psi(PSI)
}

pub fn exponent_optimize_with_psi(psi: f64) -> ExponentResult {
    let rate = |kappa: f64| -> f64 {
        // alpha(H)/V(H) decays at a; (E(H)/V(H)) * alpha(G)/V(G) grows at b.
        let a = binom_rate(1.0, kappa / 2.0) - binom_rate(1.0, kappa);
        let b = binom_rate(kappa, kappa / 2.0) + binom_rate(1.0 - kappa, kappa / 2.0) - psi.ln();
        -a.max(b)
    };
    let (mut lo, mut hi) = (1e-6, 0.4999);
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let (mut f1, mut f2) = (rate(x1), rate(x2));
    while hi - lo > 1e-6 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = rate(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = rate(x1);
        }
    }
    let kappa = 0.5 * (lo + hi);
    ExponentResult {
        base: rate(kappa).exp(),
        kappa,
        psi,
    }
}

/// Embeds a tree into `R^{|E|}` with every edge on its own coordinate axis,
/// scaled by its length. Returns one point per vertex.
///
/// For the star `K_{1,d}` with all lengths `1/sqrt(2)`, the `d` leaves are
/// pairwise at distance exactly 1 (a unit-copy of `K_d`).
pub fn orthogonal_tree_unit_copy(tree: &Graph, lengths: &[f64]) -> Result<Vec<Vec<f64>>> {
    let n = tree.n();
    let d = tree.edge_count();
    if n == 0 || d != n - 1 || !tree.is_connected() {
        return Err(Error::NotATree(format!("{n} vertices and {d} edges")));
    }
    if lengths.len() != d || lengths.iter().any(|&l| !l.is_finite() || l <= 0.0) {
        return Err(Error::BadParams("need one positive length per edge".into()));
    }
    let axis_of: std::collections::HashMap<(u32, u32), usize> = tree
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let mut points: Vec<Option<Vec<f64>>> = vec![None; n];
    points[0] = Some(vec![0.0; d]);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        let pv = points[v].clone().expect("visited");
        for w in tree.neighbors(v) {
            if points[w].is_some() {
                continue;
            }
            let key = (v.min(w) as u32, v.max(w) as u32);
            let axis = axis_of[&key];
            let mut pw = pv.clone();
            pw[axis] += lengths[axis];
            points[w] = Some(pw);
            queue.push_back(w);
        }
    }
    let points: Vec<Vec<f64>> = points
        .into_iter()
        .map(|p| p.expect("tree is connected"))
        .collect();
    // Verify edge lengths and pairwise orthogonality of edge vectors.
    for (i, &(u, v)) in tree.edges().iter().enumerate() {
        let got = dist(&points[u as usize], &points[v as usize]);
        if (got - lengths[i]).abs() > 1e-12 {
            return Err(Error::NonConvergence(got - lengths[i]));
        }
    }
    for (i, &(u1, v1)) in tree.edges().iter().enumerate() {
        for &(u2, v2) in tree.edges().iter().skip(i + 1) {
            let a: Vec<f64> = (0..d)
                .map(|c| points[v1 as usize][c] - points[u1 as usize][c])
                .collect();
            let b: Vec<f64> = (0..d)
                .map(|c| points[v2 as usize][c] - points[u2 as usize][c])
                .collect();
            let dot: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
            if dot.abs() > 1e-12 {
                return Err(Error::NonConvergence(dot));
            }
        }
    }
    Ok(points)
}
