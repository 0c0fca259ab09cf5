//! Constructors for the graph families used throughout the toolkit: standard
//! families (cliques, cycles, paths, stars, hypercubes, edge layers, generalized
//! Johnson graphs), edge substitutions `Γ_{A,B}(H,u,v)`, H-forests, hypercube
//! layer-vertex systems for even cycles and the pole graph `H(t)`, plus
//! unit-distance ingestion from coordinate files.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Standard families with documented canonical vertex orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `K_d`, vertices `0..d`.
    Complete(usize),
    /// `C_l` with `l >= 3`, edges `i -- i+1 mod l`.
    Cycle(usize),
    /// `P_m` on `m` vertices, edges `i -- i+1`.
    Path(usize),
    /// `K_{1,m}`: center 0, leaves `1..=m`.
    Star(usize),
    /// `Q_n = K_2^{□n}`, vertex ids are the subsets of the ground set as bitmasks.
    Hypercube(usize),
    /// Subgraph of `Q_n` induced by the k-th and (k-1)-th vertex layers.
    /// Vertices are relabeled `0..` in ascending bitmask order.
    EdgeLayer(usize, usize),
    /// `J(n,k,t)`: k-subsets of the ground set, adjacent when the intersection
    /// has exactly `t` elements. Vertices in colexicographic subset order.
    Johnson(usize, usize, usize),
}

pub fn gen_standard(family: Family) -> Result<Graph> {
    match family {
        Family::Complete(d) => {
            if d == 0 {
                return Err(Error::BadParams("K_d needs d >= 1".into()));
            }
            let mut edges = Vec::new();
            for u in 0..d as u32 {
                for v in u + 1..d as u32 {
                    edges.push((u, v));
                }
            }
            Ok(Graph::build(d, &edges)?.with_name(format!("K{d}")))
        }
        Family::Cycle(l) => {
            if l < 3 {
                return Err(Error::BadParams("C_l needs l >= 3".into()));
            }
            let edges: Vec<(u32, u32)> = (0..l as u32).map(|i| (i, (i + 1) % l as u32)).collect();
            Ok(Graph::build(l, &edges)?.with_name(format!("C{l}")))
        }
        Family::Path(m) => {
            if m == 0 {
                return Err(Error::BadParams("P_m needs m >= 1".into()));
            }
            let edges: Vec<(u32, u32)> = (0..m.saturating_sub(1) as u32)
                .map(|i| (i, i + 1))
                .collect();
            Ok(Graph::build(m, &edges)?.with_name(format!("P{m}")))
        }
        Family::Star(m) => {
            if m == 0 {
                return Err(Error::BadParams("star needs at least one leaf".into()));
            }
            let edges: Vec<(u32, u32)> = (1..=m as u32).map(|v| (0, v)).collect();
            Ok(Graph::build(m + 1, &edges)?.with_name(format!("K1_{m}")))
        }
        Family::Hypercube(n) => {
            if n == 0 || n > 20 {
                return Err(Error::BadParams("Q_n needs 1 <= n <= 20".into()));
            }
            let k2 = Graph::build(2, &[(0, 1)])?;
            let budget = 1usize << n;
            Ok(crate::graph::cartesian_power_budgeted(
                &k2,
                n,
                budget.max(crate::graph::DEFAULT_VERTEX_BUDGET),
            )?
            .with_name(format!("Q{n}")))
        }
        Family::EdgeLayer(n, k) => {
            if n == 0 || k == 0 || k > n || n > 24 {
                return Err(Error::BadParams(
                    "edge_layer needs 1 <= k <= n <= 24".into(),
                ));
            }
            let verts: Vec<usize> = (0..1usize << n)
                .filter(|m| {
                    let c = m.count_ones() as usize;
                    c == k || c == k - 1
                })
                .collect();
            let index: BTreeMap<usize, u32> = verts
                .iter()
                .enumerate()
                .map(|(i, &m)| (m, i as u32))
                .collect();
            let mut edges = Vec::new();
            for &m in &verts {
                if m.count_ones() as usize != k {
                    continue;
                }
                for b in 0..n {
                    if m >> b & 1 == 1 {
                        edges.push((index[&m], index[&(m ^ (1 << b))]));
                    }
                }
            }
            Ok(Graph::build(verts.len(), &edges)?.with_name(format!("L{k}(Q{n})")))
        }
        Family::Johnson(n, k, t) => {
            if !(t < k && k <= n) {
                return Err(Error::BadParams("johnson needs t < k <= n".into()));
            }
            let subsets = k_subsets_colex(n, k);
            let mut edges = Vec::new();
            for (i, &a) in subsets.iter().enumerate() {
                for (j, &b) in subsets.iter().enumerate().skip(i + 1) {
                    if (a & b).count_ones() as usize == t {
                        edges.push((i as u32, j as u32));
                    }
                }
            }
            Ok(Graph::build(subsets.len(), &edges)?.with_name(format!("J({n},{k},{t})")))
        }
    }
}

/// All k-subsets of `0..n` as bitmasks in colexicographic order
/// (numeric order of the masks).
pub fn k_subsets_colex(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    fn rec(n: usize, k: usize, start: usize, mask: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(mask);
            return;
        }
        for e in start..=n - k {
            rec(n, k - 1, e + 1, mask | 1 << e, out);
        }
    }
    if k <= n {
        rec(n, k, 0, 0, &mut out);
        out.sort_unstable();
    }
    out
}

/// A system of k-element subsets of a ground set `0..n`, read as vertices of
/// the k-th layer of `Q_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerVertexSet {
    pub n: usize,
    pub k: usize,
    pub sets: Vec<BTreeSet<u32>>,
}

impl LayerVertexSet {
    pub fn new(n: usize, k: usize, sets: Vec<BTreeSet<u32>>) -> Result<LayerVertexSet> {
        let mut seen = BTreeSet::new();
        for s in &sets {
            if s.len() != k {
                return Err(Error::BadLayer(format!("set {s:?} does not have size {k}")));
            }
            if s.iter().any(|&e| e as usize >= n) {
                return Err(Error::BadLayer(format!(
                    "set {s:?} leaves the ground set 0..{n}"
                )));
            }
            if !seen.insert(s.clone()) {
                return Err(Error::BadLayer(format!("duplicate set {s:?}")));
            }
        }
        Ok(LayerVertexSet { n, k, sets })
    }

    pub fn masks(&self) -> Vec<u64> {
        self.sets
            .iter()
            .map(|s| s.iter().fold(0u64, |m, &e| m | 1 << e))
            .collect()
    }
}

/// `Γ_{A,B}(H,u,v)`: every edge `ab` of the bipartite graph `Γ` is replaced by
/// a fresh copy of `H` in which `u` lands on the vertex shared by all copies
/// through `a`, and `v` on the vertex shared by all copies through `b`.
///
/// Vertex order: `A`'s role vertices (in `Γ` order), then `B`'s, then per edge
/// (in `Γ` edge order) the remaining `|V(H)| - 2` fresh vertices in `H` order.
pub fn gamma_substitution(
    gamma: &Graph,
    part_a: &[u32],
    part_b: &[u32],
    h: &Graph,
    u: u32,
    v: u32,
) -> Result<Graph> {
    let in_a: BTreeSet<u32> = part_a.iter().copied().collect();
    let in_b: BTreeSet<u32> = part_b.iter().copied().collect();
    if in_a.len() + in_b.len() != gamma.n()
        || in_a.intersection(&in_b).next().is_some()
        || in_a.iter().chain(&in_b).any(|&x| x as usize >= gamma.n())
    {
        return Err(Error::NotBipartite("parts do not partition V(Γ)".into()));
    }
    for &(x, y) in gamma.edges() {
        let crosses =
            (in_a.contains(&x) && in_b.contains(&y)) || (in_a.contains(&y) && in_b.contains(&x));
        if !crosses {
            return Err(Error::NotBipartite(format!(
                "edge ({x},{y}) does not cross the parts"
            )));
        }
    }
    if u == v || u as usize >= h.n() || v as usize >= h.n() {
        return Err(Error::BadAnchor(format!(
            "u={u}, v={v} must be distinct vertices of H"
        )));
    }

    let role_of: BTreeMap<u32, u32> = part_a
        .iter()
        .chain(part_b.iter())
        .enumerate()
        .map(|(i, &g)| (g, i as u32))
        .collect();
    let mut next = gamma.n() as u32;
    let mut edges = Vec::new();
    for &(x, y) in gamma.edges() {
        let (a, b) = if in_a.contains(&x) { (x, y) } else { (y, x) };
        // Map of this copy's H-vertices into the result.
        let mut copy_map = vec![u32::MAX; h.n()];
        copy_map[u as usize] = role_of[&a];
        copy_map[v as usize] = role_of[&b];
        for w in 0..h.n() as u32 {
            if copy_map[w as usize] == u32::MAX {
                copy_map[w as usize] = next;
                next += 1;
            }
        }
        for &(p, q) in h.edges() {
            edges.push((copy_map[p as usize], copy_map[q as usize]));
        }
    }
    Graph::build(next as usize, &edges)
}

/// Attachment of one H-copy: glue `new_copy_vertex` of the fresh copy onto
/// `prior_vertex` of the union built so far.
pub type Attachment = Option<(u32, u32)>;

/// Union of `attachments.len() + 1` edge-disjoint copies of `h`, each later
/// copy sharing at most one vertex (its attachment) with the prior union.
/// With every attachment present the result is an H-tree.
pub fn h_forest(h: &Graph, attachments: &[Attachment]) -> Result<Graph> {
    if h.n() == 0 {
        return Err(Error::BadParams("H must be nonempty".into()));
    }
    let mut n = h.n() as u32;
    let mut edges: Vec<(u32, u32)> = h.edges().to_vec();
    let mut edge_set: BTreeSet<(u32, u32)> = edges.iter().copied().collect();
    for att in attachments {
        let mut copy_map = vec![u32::MAX; h.n()];
        if let Some((prior, w)) = *att {
            if prior >= n || w as usize >= h.n() {
                return Err(Error::BadParams(format!(
                    "attachment ({prior},{w}) out of range"
                )));
            }
            copy_map[w as usize] = prior;
        }
        for slot in copy_map.iter_mut() {
            if *slot == u32::MAX {
                *slot = n;
                n += 1;
            }
        }
        for &(p, q) in h.edges() {
            let (a, b) = (copy_map[p as usize], copy_map[q as usize]);
            let e = (a.min(b), a.max(b));
            if !edge_set.insert(e) {
                return Err(Error::EdgeOverlap(e.0, e.1));
            }
            edges.push(e);
        }
    }
    Graph::build(n as usize, &edges)
}

/// Layer-vertex systems realizing `C_{2l}` in a hypercube.
///
/// Even `l = 2k` (k >= 2): the second/first layers of `Q_{2k}` with
/// `A = {x_i x_{i+1}}` and `B = {x_i}`, indices mod `2k`. Odd `l = 2k+1`
/// (k >= 3): the third/second layers of `Q_{2k+1}` over ground elements
/// `{a, b} ∪ {x_1..x_{k-1}} ∪ {y_0..y_{k-1}}`, with the `A` list zigzagging
/// through `a x_i y_j` and closing through four `b`-sets. The instantiation is
/// certified by [`crate::slices::verify_partite_representation`], which is the
/// authoritative oracle for these lists.
///
/// `l ∈ {2, 3, 5}` (that is `C_4`, `C_6`, `C_10`) is unsupported.
pub fn cycle_layer_representation(l: usize) -> Result<(usize, LayerVertexSet, LayerVertexSet)> {
    if l == 2 || l == 3 || l == 5 {
        return Err(Error::Unsupported(format!(
            "C_{} has no such representation here",
            2 * l
        )));
    }
    if l < 4 {
        return Err(Error::BadParams("need l = 4 or l >= 6".into()));
    }
    if l.is_multiple_of(2) {
        // l = 2k: C_{4k} between layers 2 and 1 of Q_{2k}.
        let k = l / 2;
        let n = 2 * k;
        let a_sets: Vec<BTreeSet<u32>> = (0..n)
            .map(|i| [i as u32, ((i + 1) % n) as u32].into_iter().collect())
            .collect();
        let b_sets: Vec<BTreeSet<u32>> = (0..n).map(|i| [i as u32].into_iter().collect()).collect();
        Ok((
            n,
            LayerVertexSet::new(n, 2, a_sets)?,
            LayerVertexSet::new(n, 1, b_sets)?,
        ))
    } else {
        // l = 2k+1, k >= 3: C_{4k+2} between layers 3 and 2 of Q_{2k+1}.
        let k = (l - 1) / 2;
        let n = 2 * k + 1;
        let a_el = 0u32;
        let b_el = 1u32;
        let x = |j: usize| -> u32 { 1 + j as u32 }; // x_1..x_{k-1} -> 2..k
        let y = |j: usize| -> u32 { (k + 1 + j) as u32 }; // y_0..y_{k-1} -> k+1..2k
        let mut a_sets: Vec<BTreeSet<u32>> = Vec::with_capacity(2 * k + 1);
        // a-part zigzag: a x_1 y_1, a x_2 y_1, a x_2 y_2, ..., a x_{k-1} y_{k-1}.
        a_sets.push([a_el, x(1), y(1)].into_iter().collect());
        for j in 2..k {
            a_sets.push([a_el, x(j), y(j - 1)].into_iter().collect());
            a_sets.push([a_el, x(j), y(j)].into_iter().collect());
        }
        // b-part closing the cycle.
        a_sets.push([b_el, x(k - 1), y(k - 1)].into_iter().collect());
        a_sets.push([b_el, x(k - 1), y(0)].into_iter().collect());
        a_sets.push([b_el, x(1), y(0)].into_iter().collect());
        a_sets.push([b_el, x(1), y(1)].into_iter().collect());
        // B holds the pairwise intersections of cyclically consecutive A sets.
        let m = a_sets.len();
        let b_sets: Vec<BTreeSet<u32>> = (0..m)
            .map(|i| {
                a_sets[i]
                    .intersection(&a_sets[(i + 1) % m])
                    .copied()
                    .collect()
            })
            .collect();
        Ok((
            n,
            LayerVertexSet::new(n, 3, a_sets)?,
            LayerVertexSet::new(n, 2, b_sets)?,
        ))
    }
}

/// The pole graph `H(t)`: `t-1` internally disjoint paths of length 5 between
/// two poles, plus its explicit embedding into layers `t` and `t+1` of `Q_{2t+1}`.
///
/// Vertex 0 is the lower pole, vertex 1 the upper pole; path `j` (for
/// `j = 2..=t`) contributes internal vertices `2 + 4(j-2) .. 2 + 4(j-2) + 3`
/// in order from the lower pole.
pub fn h_poles_graph(t: usize) -> Result<(Graph, usize, Vec<BTreeSet<u32>>)> {
    if t < 4 {
        return Err(Error::BadParams("h_poles_graph needs t >= 4".into()));
    }
    let ground = 2 * t + 1;
    let full_t: BTreeSet<u32> = (0..t as u32).collect();
    let full_t1: BTreeSet<u32> = (0..=t as u32).collect();
    let mut sets: Vec<BTreeSet<u32>> = vec![full_t.clone(), full_t1.clone()];
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut next = 2u32;
    for j in 2..=t {
        // 1-indexed elements j and t+j of the construction, 0-indexed here.
        let ej = (j - 1) as u32;
        let etj = (t + j - 1) as u32;
        let et1 = t as u32;
        let mut s1 = full_t.clone();
        s1.insert(etj);
        let mut s2 = s1.clone();
        s2.remove(&ej);
        let mut s3 = s2.clone();
        s3.insert(et1);
        let mut s4 = full_t1.clone();
        s4.remove(&ej);
        let ids = [next, next + 1, next + 2, next + 3];
        next += 4;
        sets.extend([s1, s2, s3, s4]);
        edges.extend([
            (0, ids[0]),
            (ids[0], ids[1]),
            (ids[1], ids[2]),
            (ids[2], ids[3]),
            (ids[3], 1),
        ]);
    }
    let g = Graph::build(next as usize, &edges)?.with_name(format!("H({t})"));
    Ok((g, ground, sets))
}

/// Report accompanying the graph produced by [`ingest_unit_distance`].
#[derive(Clone, Debug, Default, Serialize)]
pub struct IngestReport {
    /// Pairs whose distance is within `10*eps` of 1 but not within `eps`.
    pub near_threshold: Vec<(usize, usize, f64)>,
    /// Distinct indices closer than `eps` (flagged, not fatal).
    pub duplicates: Vec<(usize, usize, f64)>,
}

/// Builds the unit-distance graph of a point set: edge iff `|dist - 1| <= eps`.
pub fn ingest_unit_distance(points: &[Vec<f64>], eps: f64) -> Result<(Graph, IngestReport)> {
    if eps < 0.0 {
        return Err(Error::BadParams("eps must be >= 0".into()));
    }
    if points.iter().any(|p| p.iter().any(|x| !x.is_finite())) {
        return Err(Error::BadParams("coordinates must be finite".into()));
    }
    let dim = points.first().map_or(0, |p| p.len());
    if points.iter().any(|p| p.len() != dim) {
        return Err(Error::BadParams("points have mixed dimensions".into()));
    }
    let mut edges = Vec::new();
    let mut report = IngestReport::default();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d2: f64 = points[i]
                .iter()
                .zip(&points[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum();
            let d = d2.sqrt();
            if (d - 1.0).abs() <= eps {
                edges.push((i as u32, j as u32));
            } else if (d - 1.0).abs() <= 10.0 * eps {
                report.near_threshold.push((i, j, d));
            }
            if d < eps {
                report.duplicates.push((i, j, d));
            }
        }
    }
    Ok((Graph::build(points.len(), &edges)?, report))
}

/// Parses a coordinate CSV: one point per line, comma-separated floats,
/// optional `# dim=d` header, other `#` lines ignored.
pub fn parse_coordinate_csv(s: &str) -> Result<Vec<Vec<f64>>> {
    let mut dim: Option<usize> = None;
    let mut points = Vec::new();
    for line in s.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            if let Some(d) = rest.trim().strip_prefix("dim=") {
                dim = Some(
                    d.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad dim header {trimmed:?}")))?,
                );
            }
            continue;
        }
        let coords: Vec<f64> = trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coordinate line {trimmed:?}")))
            })
            .collect::<Result<_>>()?;
        if let Some(d) = dim {
            if coords.len() != d {
                return Err(Error::Parse(format!(
                    "line {trimmed:?} does not have dim={d} coordinates"
                )));
            }
        }
        points.push(coords);
    }
    Ok(points)
}

/// Bundled coordinates of the Moser spindle (7 vertices, 11 unit distances).
pub const MOSER_SPINDLE_CSV: &str = include_str!("../data/moser_spindle.csv");

/// The Moser spindle as ingested from the bundled coordinates.
pub fn moser_spindle() -> Graph {
    let points = parse_coordinate_csv(MOSER_SPINDLE_CSV).expect("bundled csv parses");
    let (g, report) = ingest_unit_distance(&points, 1e-9).expect("bundled csv ingests");
    debug_assert!(report.duplicates.is_empty());
    g.with_name("moser_spindle")
}

/// Default tolerance for published unit-distance coordinate files.
pub const DEFAULT_INGEST_EPS: f64 = 1e-9;
