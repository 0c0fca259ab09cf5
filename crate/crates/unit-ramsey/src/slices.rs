//! G-slice machinery on Cartesian powers: slice counting, the peeling and
//! greedy H-tree embedding procedures, ternary-tuple equivalence, partite
//! representation verification, the mod-3 coloring check on `K_3^{□N}`, and
//! tiny-scale strong Turán numbers on hypercubes.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::generators::LayerVertexSet;
use crate::graph::{cartesian_power, find_copies, is_copy, Embedding, Graph};
use serde::Serialize;
use std::collections::{BTreeSet, HashSet};

/// One G-slice of `G^{□N}`: the `direction` coordinate varies, the other
/// `N-1` digits are fixed (listed in coordinate order, direction skipped).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceId {
    pub direction: usize,
    pub fixed: Vec<u32>,
}

impl SliceId {
    /// Vertex id of the slice position holding base digit `val`.
    pub fn vertex(&self, base: usize, val: u32) -> usize {
        let mut id = 0usize;
        let mut weight = 1usize;
        let mut fi = 0;
        let n = self.fixed.len() + 1;
        for coord in 0..n {
            let digit = if coord == self.direction {
                val
            } else {
                let d = self.fixed[fi];
                fi += 1;
                d
            };
            id += digit as usize * weight;
            weight *= base;
        }
        id
    }

    /// Slice through `vertex_id` along `direction`.
    pub fn through(vertex_id: usize, direction: usize, base: usize, n_power: usize) -> SliceId {
        let idx = crate::graph::PowerIndex::from_id(vertex_id, base, n_power);
        let fixed = idx
            .digits
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != direction)
            .map(|(_, &d)| d)
            .collect();
        SliceId { direction, fixed }
    }
}

/// A subgraph of `base^{□N}` given by the subset of its edges that are present.
#[derive(Clone, Debug)]
pub struct PowerSubgraph {
    base: Graph,
    n_power: usize,
    power: Graph,
    present: HashSet<(u32, u32)>,
}

impl PowerSubgraph {
    /// The full power graph.
    pub fn full(base: &Graph, n_power: usize) -> Result<PowerSubgraph> {
        let power = cartesian_power(base, n_power)?;
        let present = power.edges().iter().copied().collect();
        Ok(PowerSubgraph {
            base: base.clone(),
            n_power,
            power,
            present,
        })
    }

    /// A subgraph with exactly `edges` present; every edge must belong to the power graph.
    pub fn with_edges(base: &Graph, n_power: usize, edges: &[(u32, u32)]) -> Result<PowerSubgraph> {
        let mut s = PowerSubgraph::full(base, n_power)?;
        let mut present = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            let e = (u.min(v), u.max(v));
            if !s.present.contains(&e) {
                return Err(Error::BadParams(format!(
                    "edge ({u},{v}) is not an edge of the power graph"
                )));
            }
            present.insert(e);
        }
        s.present = present;
        Ok(s)
    }

    pub fn remove_edge(&mut self, u: u32, v: u32) {
        self.present.remove(&(u.min(v), u.max(v)));
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn n_power(&self) -> usize {
        self.n_power
    }

    pub fn power_graph(&self) -> &Graph {
        &self.power
    }

    pub fn present_edges(&self) -> usize {
        self.present.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.present
            .contains(&((u.min(v)) as u32, (u.max(v)) as u32))
    }

    /// All slices in canonical order: direction ascending, fixed digits ascending.
    pub fn all_slices(&self) -> Vec<SliceId> {
        let b = self.base.n();
        let n = self.n_power;
        let per_dir = b.pow(n as u32 - 1);
        let mut out = Vec::with_capacity(n * per_dir);
        for direction in 0..n {
            for packed in 0..per_dir {
                let idx = crate::graph::PowerIndex::from_id(packed, b, n - 1);
                out.push(SliceId {
                    direction,
                    fixed: idx.digits,
                });
            }
        }
        out
    }

    /// A slice is contained when all `|E(base)|` of its edges are present.
    pub fn slice_contained(&self, slice: &SliceId) -> bool {
        self.base.edges().iter().all(|&(u, v)| {
            self.has_edge(
                slice.vertex(self.base.n(), u),
                slice.vertex(self.base.n(), v),
            )
        })
    }

    fn slice_contained_within(&self, slice: &SliceId, survivors: &Bits) -> bool {
        (0..self.base.n() as u32).all(|val| survivors.get(slice.vertex(self.base.n(), val)))
            && self.slice_contained(slice)
    }
}

/// `(contained, total, fraction)` of fully-present slices.
pub fn slice_fraction(s: &PowerSubgraph) -> (usize, usize, f64) {
    let slices = s.all_slices();
    let total = slices.len();
    let contained = slices.iter().filter(|sl| s.slice_contained(sl)).count();
    (contained, total, contained as f64 / total as f64)
}

/// Iteratively deletes vertices lying in fewer than `threshold` fully-present
/// slices of `s` restricted to the survivors, until stable. The survivor set
/// does not depend on deletion order.
pub fn peel_by_slice_degree(s: &PowerSubgraph, threshold: usize) -> Bits {
    let nv = s.power_graph().n();
    let mut survivors = Bits::full(nv);
    loop {
        let mut removed = false;
        let snapshot = survivors.clone();
        for v in snapshot.iter() {
            let deg = (0..s.n_power())
                .filter(|&d| {
                    let slice = SliceId::through(v, d, s.base().n(), s.n_power());
                    s.slice_contained_within(&slice, &survivors)
                })
                .count();
            if deg < threshold {
                survivors.clear(v);
                removed = true;
            }
        }
        if !removed {
            return survivors;
        }
    }
}

/// Attachment spec of an H-tree: copy `t+1` glues its vertex `new_copy_vertex`
/// onto union vertex `prior_vertex`.
pub type TreeAttachment = (u32, u32);

/// Embeds an H-tree into `s` by the greedy slice procedure: peel with
/// threshold `ceil(eps * N / |V(H)|)` (eps from [`slice_fraction`]), place the
/// first copy on the first contained slice, then grow each copy through its
/// shared vertex along a direction not used so far. The returned embedding is
/// an induced copy of the H-tree in the power graph using pairwise distinct
/// directions.
pub fn greedy_forest_embed(
    s: &PowerSubgraph,
    attachments: &[TreeAttachment],
) -> Result<(Graph, Embedding)> {
    let h = s.base();
    let b = h.n();
    let n = s.n_power();
    let (_, _, eps) = slice_fraction(s);
    let threshold = (eps * n as f64 / b as f64).ceil() as usize;
    let survivors = peel_by_slice_degree(s, threshold);

    let pattern =
        crate::generators::h_forest(h, &attachments.iter().map(|&a| Some(a)).collect::<Vec<_>>())?;

    let first = s
        .all_slices()
        .into_iter()
        .find(|sl| s.slice_contained_within(sl, &survivors))
        .ok_or(Error::InsufficientSliceDegree {
            blocking: 0,
            used: vec![],
        })?;

    let mut image: Vec<u32> = (0..b as u32)
        .map(|val| first.vertex(b, val) as u32)
        .collect();
    let mut used_dirs = vec![first.direction];

    for &(prior, w) in attachments {
        let v_power = image[prior as usize] as usize;
        let mut placed = false;
        for d in 0..n {
            if used_dirs.contains(&d) {
                continue;
            }
            let slice = SliceId::through(v_power, d, b, n);
            if !s.slice_contained_within(&slice, &survivors) {
                continue;
            }
            let target = crate::graph::PowerIndex::from_id(v_power, b, n).digits[d];
            let Some(auto) = automorphism_sending(h, w as usize, target as usize) else {
                continue;
            };
            // Fresh union vertices follow h_forest's order: h vertices
            // ascending, skipping the glued one.
            for (x, &ax) in auto.iter().enumerate() {
                if x as u32 == w {
                    continue;
                }
                image.push(slice.vertex(b, ax) as u32);
            }
            used_dirs.push(d);
            placed = true;
            break;
        }
        if !placed {
            return Err(Error::InsufficientSliceDegree {
                blocking: v_power,
                used: used_dirs,
            });
        }
    }

    let emb = Embedding::new(image);
    debug_assert!(is_copy(s.power_graph(), &pattern, &emb, true)?);
    Ok((pattern, emb))
}

/// Graph automorphism of `h` mapping `from` to `to`, if one exists.
fn automorphism_sending(h: &Graph, from: usize, to: usize) -> Option<Vec<u32>> {
    let n = h.n();
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    map[from] = to as u32;
    used[to] = true;
    fn rec(h: &Graph, map: &mut Vec<u32>, used: &mut Vec<bool>) -> bool {
        let Some(v) = (0..h.n()).find(|&v| map[v] == u32::MAX) else {
            return true;
        };
        for c in 0..h.n() {
            if used[c] {
                continue;
            }
            let ok = (0..h.n())
                .all(|q| map[q] == u32::MAX || h.has_edge(v, q) == h.has_edge(c, map[q] as usize));
            if ok {
                map[v] = c as u32;
                used[c] = true;
                if rec(h, map, used) {
                    return true;
                }
                map[v] = u32::MAX;
                used[c] = false;
            }
        }
        false
    }
    if rec(h, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// A tuple over `{1,2,3}^N` with its 3-free index set and restrictions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryTuple {
    digits: Vec<u8>,
}

impl TernaryTuple {
    pub fn new(digits: Vec<u8>) -> Result<TernaryTuple> {
        if digits.iter().any(|&d| !(1..=3).contains(&d)) {
            return Err(Error::BadParams("digits must lie in {1,2,3}".into()));
        }
        Ok(TernaryTuple { digits })
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Indices whose digit differs from 3.
    pub fn index_set(&self) -> Vec<usize> {
        (0..self.digits.len())
            .filter(|&i| self.digits[i] != 3)
            .collect()
    }

    /// The tuple restricted to the indices in `s` (ascending).
    pub fn restrict(&self, s: &[usize]) -> Vec<u8> {
        s.iter().map(|&i| self.digits[i]).collect()
    }
}

/// `x ~ y`: the restrictions to the 3-free index sets coincide as ordered tuples.
pub fn equivalent(x: &TernaryTuple, y: &TernaryTuple) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    Ok(x.restrict(&x.index_set()) == y.restrict(&y.index_set()))
}

/// Outcome of [`verify_partite_representation`].
#[derive(Clone, Debug, Serialize)]
pub struct PartiteReport {
    /// Union vertices all lie in vertex layers `k` and `k-1`.
    pub is_subgraph_of_layer: bool,
    /// The union of down k-stars is an induced subgraph of `Q_n`.
    pub is_induced: bool,
    /// The k-uniform hypergraph with edge set `A` admits a partition of the
    /// ground set meeting every hyperedge exactly once.
    pub hypergraph_partite: bool,
    /// Witness partition (part index per ground element) when partite.
    pub partition: Option<Vec<u32>>,
    /// The pattern occurs as an (induced) subgraph of the union.
    pub pattern_found: bool,
}

impl PartiteReport {
    pub fn all_pass(&self) -> bool {
        self.is_subgraph_of_layer
            && self.is_induced
            && self.hypergraph_partite
            && self.pattern_found
    }
}

/// Builds the union of down k-stars centered at the sets of `a` and checks:
/// layer membership, inducedness in `Q_n`, k-partiteness of the center
/// hypergraph (exact search), and occurrence of `pattern`.
pub fn verify_partite_representation(
    n: usize,
    k: usize,
    a: &LayerVertexSet,
    pattern: &Graph,
    induced: bool,
) -> Result<PartiteReport> {
    if a.k != k || a.n != n {
        return Err(Error::BadLayer(format!(
            "layer system is ({},{}), expected ({n},{k})",
            a.n, a.k
        )));
    }
    if k == 0 || n > 63 {
        return Err(Error::BadLayer("need 1 <= k and n <= 63".into()));
    }
    let centers = a.masks();
    // Union vertex set: centers plus all their down-neighbors.
    let mut verts: BTreeSet<u64> = centers.iter().copied().collect();
    for &c in &centers {
        for b in 0..n {
            if c >> b & 1 == 1 {
                verts.insert(c ^ (1 << b));
            }
        }
    }
    let verts: Vec<u64> = verts.into_iter().collect();
    let index = |m: u64| verts.binary_search(&m).expect("member");
    let mut star_edges: BTreeSet<(u32, u32)> = BTreeSet::new();
    for &c in &centers {
        for b in 0..n {
            if c >> b & 1 == 1 {
                let (i, j) = (index(c) as u32, index(c ^ (1 << b)) as u32);
                star_edges.insert((i.min(j), i.max(j)));
            }
        }
    }
    let union = Graph::build(verts.len(), &star_edges.iter().copied().collect::<Vec<_>>())?;

    let is_subgraph_of_layer = verts
        .iter()
        .all(|&m| m.count_ones() as usize == k || m.count_ones() as usize == k - 1);

    // Induced: every Q_n edge inside the union's vertex set is a star edge.
    let mut is_induced = true;
    'outer: for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            if (verts[i] ^ verts[j]).count_ones() == 1 && !union.has_edge(i, j) {
                is_induced = false;
                break 'outer;
            }
        }
    }

    let (hypergraph_partite, partition) = hypergraph_k_partition(n, k, &centers);
    let pattern_found = if pattern.n() <= union.n() {
        !find_copies(&union, pattern, induced, Some(1))?
            .sets
            .is_empty()
    } else {
        false
    };

    Ok(PartiteReport {
        is_subgraph_of_layer,
        is_induced,
        hypergraph_partite,
        partition,
        pattern_found,
    })
}

/// Exact search for a ground-set partition into `k` parts meeting every
/// hyperedge exactly once. Each hyperedge has `k` elements, so this is a
/// proper k-coloring of the co-occurrence graph.
fn hypergraph_k_partition(n: usize, k: usize, hyperedges: &[u64]) -> (bool, Option<Vec<u32>>) {
    let mut co = vec![vec![false; n]; n];
    for &e in hyperedges {
        let elems: Vec<usize> = (0..n).filter(|&b| e >> b & 1 == 1).collect();
        for (i, &x) in elems.iter().enumerate() {
            for &y in &elems[i + 1..] {
                co[x][y] = true;
                co[y][x] = true;
            }
        }
    }
    let mut parts = vec![u32::MAX; n];
    fn rec(v: usize, n: usize, k: usize, co: &[Vec<bool>], parts: &mut Vec<u32>) -> bool {
        if v == n {
            return true;
        }
        let max_used = parts[..v]
            .iter()
            .filter(|&&p| p != u32::MAX)
            .max()
            .map_or(0, |&p| p + 1);
        for p in 0..(k as u32).min(max_used + 1) {
            if (0..v).any(|u| co[v][u] && parts[u] == p) {
                continue;
            }
            parts[v] = p;
            if rec(v + 1, n, k, co, parts) {
                return true;
            }
        }
        parts[v] = u32::MAX;
        false
    }
    if rec(0, n, k, &co, &mut parts) {
        for p in parts.iter_mut() {
            if *p == u32::MAX {
                *p = 0;
            }
        }
        (true, Some(parts))
    } else {
        (false, None)
    }
}

/// Census of the mod-3 coloring check on `K_3^{□N}`.
#[derive(Clone, Debug, Serialize)]
pub struct Mod3Census {
    #[serde(rename = "N")]
    pub n: usize,
    pub copies: usize,
    pub monochromatic: usize,
    pub verdict: bool,
}

/// Enumerates every C_4 vertex set of `K_3^{□N}` (the axis rectangles, of which
/// there are `C(N,2) * 9 * 3^{N-2}`) and checks that none is monochromatic
/// under the coloring "red iff the digit sum is divisible by 3" (digits read
/// as `1..=3`).
pub fn mod3_c4_check(n_power: usize) -> Result<Mod3Census> {
    if !(2..=6).contains(&n_power) {
        return Err(Error::Overflow(n_power, 6));
    }
    let n = n_power;
    let red = |digits: &[u32]| -> bool { (digits.iter().map(|&d| d + 1).sum::<u32>()) % 3 == 0 };
    let mut copies = 0usize;
    let mut monochromatic = 0usize;
    let rest = 3usize.pow(n as u32 - 2);
    for i in 0..n {
        for j in i + 1..n {
            for packed in 0..rest {
                // Digits of the N-2 fixed coordinates.
                let mut digits = vec![0u32; n];
                let mut p = packed;
                for (coord, d) in digits.iter_mut().enumerate() {
                    if coord != i && coord != j {
                        *d = (p % 3) as u32;
                        p /= 3;
                    }
                }
                for (a, b) in [(0u32, 1u32), (0, 2), (1, 2)] {
                    for (c, d) in [(0u32, 1u32), (0, 2), (1, 2)] {
                        copies += 1;
                        let mut colors = [false; 4];
                        for (slot, (vi, vj)) in [(a, c), (b, c), (b, d), (a, d)].iter().enumerate()
                        {
                            digits[i] = *vi;
                            digits[j] = *vj;
                            colors[slot] = red(&digits);
                        }
                        if colors.iter().all(|&x| x) || colors.iter().all(|&x| !x) {
                            monochromatic += 1;
                        }
                    }
                }
            }
        }
    }
    let expected = n * (n - 1) / 2 * 9 * rest;
    Ok(Mod3Census {
        n,
        copies,
        monochromatic,
        verdict: monochromatic == 0 && copies == expected,
    })
}

/// Exact `m(N, Γ, A, B)`: the maximum number of edges of a subgraph of `Q_N`
/// containing no copy of the bipartite `Γ` with the `A` side in some vertex
/// layer `k` and the `B` side in layer `k-1`.
pub fn strong_turan_number(
    n: usize,
    gamma: &Graph,
    part_a: &[u32],
    part_b: &[u32],
) -> Result<usize> {
    if n == 0 || n > 4 {
        return Err(Error::BudgetExceeded(format!(
            "strong_turan_number supports 1 <= N <= 4, got {n}"
        )));
    }
    let q = crate::generators::gen_standard(crate::generators::Family::Hypercube(n))?;
    let edge_id: std::collections::HashMap<(u32, u32), usize> =
        q.edges().iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let forbidden = layer_respecting_copies(n, &q, gamma, part_a, part_b, &edge_id)?;
    let total = q.edge_count();
    Ok(total - min_hitting_set(&forbidden, total))
}

/// Edge sets of all layer-respecting copies of `gamma` in `q`.
fn layer_respecting_copies(
    n: usize,
    q: &Graph,
    gamma: &Graph,
    part_a: &[u32],
    part_b: &[u32],
    edge_id: &std::collections::HashMap<(u32, u32), usize>,
) -> Result<Vec<Vec<usize>>> {
    let in_a: BTreeSet<u32> = part_a.iter().copied().collect();
    let in_b: BTreeSet<u32> = part_b.iter().copied().collect();
    if in_a.len() + in_b.len() != gamma.n() || in_a.intersection(&in_b).next().is_some() {
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
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    // Gamma vertices in an order where each later one touches an earlier one
    // when possible (same order the copy enumerator uses).
    let order: Vec<usize> = {
        let mut order = Vec::new();
        let mut placed = vec![false; gamma.n()];
        for root in 0..gamma.n() {
            if placed[root] {
                continue;
            }
            placed[root] = true;
            order.push(root);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for w in gamma.neighbors(v) {
                    if !placed[w] {
                        placed[w] = true;
                        order.push(w);
                        queue.push_back(w);
                    }
                }
            }
        }
        order
    };
    for k in 1..=n {
        let layer_of = |g_vertex: usize| -> usize {
            if in_a.contains(&(g_vertex as u32)) {
                k
            } else {
                k - 1
            }
        };
        let mut assignment = vec![u32::MAX; gamma.n()];
        let mut used = vec![false; q.n()];
        rec_layer_embed(
            q,
            gamma,
            &order,
            0,
            &layer_of,
            &mut assignment,
            &mut used,
            &mut |asgn| {
                let mut ids: Vec<usize> = gamma
                    .edges()
                    .iter()
                    .map(|&(x, y)| {
                        let (u, v) = (asgn[x as usize], asgn[y as usize]);
                        edge_id[&(u.min(v), u.max(v))]
                    })
                    .collect();
                ids.sort_unstable();
                ids.dedup();
                out.insert(ids);
            },
        );
    }
    Ok(out.into_iter().collect())
}

#[allow(clippy::too_many_arguments)]
fn rec_layer_embed(
    q: &Graph,
    gamma: &Graph,
    order: &[usize],
    depth: usize,
    layer_of: &dyn Fn(usize) -> usize,
    assignment: &mut Vec<u32>,
    used: &mut Vec<bool>,
    emit: &mut dyn FnMut(&[u32]),
) {
    if depth == order.len() {
        emit(assignment);
        return;
    }
    let p = order[depth];
    let want = layer_of(p);
    for cand in 0..q.n() {
        if used[cand] || cand.count_ones() as usize != want {
            continue;
        }
        let ok = order[..depth]
            .iter()
            .all(|&prev| !gamma.has_edge(p, prev) || q.has_edge(cand, assignment[prev] as usize));
        if !ok {
            continue;
        }
        assignment[p] = cand as u32;
        used[cand] = true;
        rec_layer_embed(q, gamma, order, depth + 1, layer_of, assignment, used, emit);
        used[cand] = false;
        assignment[p] = u32::MAX;
    }
}

/// Minimum number of edges hitting every forbidden set, by branch-and-bound
/// with a disjoint-set packing lower bound.
fn min_hitting_set(sets: &[Vec<usize>], num_edges: usize) -> usize {
    if sets.is_empty() {
        return 0;
    }
    fn lower_bound(sets: &[Vec<usize>], deleted: &[bool]) -> usize {
        let mut blocked = vec![false; deleted.len()];
        let mut count = 0;
        for s in sets {
            if s.iter().any(|&e| deleted[e]) {
                continue;
            }
            if s.iter().all(|&e| !blocked[e]) {
                count += 1;
                for &e in s {
                    blocked[e] = true;
                }
            }
        }
        count
    }
    fn rec(sets: &[Vec<usize>], deleted: &mut Vec<bool>, hits: usize, best: &mut usize) {
        if hits + lower_bound(sets, deleted) >= *best {
            return;
        }
        let Some(unhit) = sets.iter().find(|s| s.iter().all(|&e| !deleted[e])) else {
            *best = hits;
            return;
        };
        for &e in unhit {
            deleted[e] = true;
            rec(sets, deleted, hits + 1, best);
            deleted[e] = false;
        }
    }
    let mut best = sets.len().min(num_edges) + 1;
    // A trivial upper bound: hit every set through its first edge.
    {
        let mut deleted = vec![false; num_edges];
        let mut hits = 0;
        for s in sets {
            if s.iter().all(|&e| !deleted[e]) {
                deleted[s[0]] = true;
                hits += 1;
            }
        }
        best = best.min(hits);
        if best == 0 {
            return 0;
        }
    }
    let mut deleted = vec![false; num_edges];
    rec(sets, &mut deleted, 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle_layer_representation, gen_standard, Family};
    use crate::rng::Rng64;

    fn k(d: usize) -> Graph {
        gen_standard(Family::Complete(d)).unwrap()
    }

    #[test]
    fn slice_fraction_examples() {
        let full = PowerSubgraph::full(&k(3), 2).unwrap();
        assert_eq!(slice_fraction(&full), (6, 6, 1.0));

        let mut q3 = PowerSubgraph::full(&k(2), 3).unwrap();
        let &(u, v) = q3.power_graph().edges().first().unwrap();
        q3.remove_edge(u, v);
        let (contained, total, _) = slice_fraction(&q3);
        assert_eq!((contained, total), (11, 12));

        let empty = PowerSubgraph::with_edges(&k(3), 2, &[]).unwrap();
        assert_eq!(slice_fraction(&empty), (0, 6, 0.0));
    }

    #[test]
    fn removing_any_single_edge_drops_exactly_one_slice() {
        for (base, n) in [(k(2), 3usize), (k(3), 2)] {
            let full = PowerSubgraph::full(&base, n).unwrap();
            let (c0, _, _) = slice_fraction(&full);
            for &(u, v) in full.power_graph().edges() {
                let mut s = full.clone();
                s.remove_edge(u, v);
                let (c1, _, _) = slice_fraction(&s);
                assert_eq!(c1, c0 - 1);
            }
        }
    }

    #[test]
    fn peel_examples() {
        let q3 = PowerSubgraph::full(&k(2), 3).unwrap();
        assert_eq!(peel_by_slice_degree(&q3, 3).count(), 8);
        assert_eq!(peel_by_slice_degree(&q3, 4).count(), 0);

        // Breaking one slice of K_3^2 cascades to an empty 2-core.
        let mut s = PowerSubgraph::full(&k(3), 2).unwrap();
        let broken = SliceId {
            direction: 0,
            fixed: vec![0],
        };
        for &(u, v) in k(3).edges() {
            s.remove_edge(broken.vertex(3, u) as u32, broken.vertex(3, v) as u32);
        }
        let survivors = peel_by_slice_degree(&s, 2);
        assert_eq!(survivors.count(), 0);
        // Threshold 1 keeps everything: each vertex still has one full slice.
        let survivors = peel_by_slice_degree(&s, 1);
        assert_eq!(survivors.count(), 9);
    }

    #[test]
    fn peel_is_confluent_against_random_order_oracle() {
        // Oracle: delete one random under-threshold vertex at a time.
        fn oracle(s: &PowerSubgraph, threshold: usize, rng: &mut Rng64) -> Bits {
            let nv = s.power_graph().n();
            let mut survivors = Bits::full(nv);
            loop {
                let low: Vec<usize> = survivors
                    .iter()
                    .filter(|&v| {
                        let deg = (0..s.n_power())
                            .filter(|&d| {
                                let slice = SliceId::through(v, d, s.base().n(), s.n_power());
                                s.slice_contained_within(&slice, &survivors)
                            })
                            .count();
                        deg < threshold
                    })
                    .collect();
                if low.is_empty() {
                    return survivors;
                }
                survivors.clear(low[rng.below(low.len())]);
            }
        }
        let mut rng = Rng64::new(42);
        for trial in 0..30 {
            let base = if trial % 2 == 0 { k(2) } else { k(3) };
            let n = 2 + (trial % 2);
            let full = PowerSubgraph::full(&base, n).unwrap();
            let keep: Vec<(u32, u32)> = full
                .power_graph()
                .edges()
                .iter()
                .copied()
                .filter(|_| rng.next_f64() < 0.8)
                .collect();
            let s = PowerSubgraph::with_edges(&base, n, &keep).unwrap();
            for threshold in 1..=2 {
                let fast = peel_by_slice_degree(&s, threshold);
                for _ in 0..3 {
                    let slow = oracle(&s, threshold, &mut rng);
                    assert_eq!(fast, slow);
                }
            }
        }
    }

    #[test]
    fn greedy_embed_examples() {
        // P_4 as a K_2-tree in the full Q_4.
        let s = PowerSubgraph::full(&k(2), 4).unwrap();
        let (pattern, emb) = greedy_forest_embed(&s, &[(1, 0), (2, 0)]).unwrap();
        assert_eq!(pattern, gen_standard(Family::Path(4)).unwrap());
        assert!(is_copy(s.power_graph(), &pattern, &emb, true).unwrap());

        // Bowtie out of two K_3 slices in K_3^3.
        let s = PowerSubgraph::full(&k(3), 3).unwrap();
        let (pattern, emb) = greedy_forest_embed(&s, &[(2, 0)]).unwrap();
        assert_eq!((pattern.n(), pattern.edge_count()), (5, 6));
        assert!(is_copy(s.power_graph(), &pattern, &emb, true).unwrap());

        // Only direction 0 present: the second copy has nowhere to go.
        let full = PowerSubgraph::full(&k(3), 3).unwrap();
        let dir0: Vec<(u32, u32)> = full
            .power_graph()
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| u % 3 != v % 3 && u / 3 == v / 3)
            .collect();
        let s = PowerSubgraph::with_edges(&k(3), 3, &dir0).unwrap();
        assert!(matches!(
            greedy_forest_embed(&s, &[(2, 0)]),
            Err(Error::InsufficientSliceDegree { .. })
        ));
    }

    #[test]
    fn ternary_equivalence_worked_examples() {
        let x = TernaryTuple::new(vec![2, 1, 3, 1, 3, 1]).unwrap();
        let y = TernaryTuple::new(vec![3, 2, 1, 3, 1, 1]).unwrap();
        let z = TernaryTuple::new(vec![3, 1, 3, 1, 1, 2]).unwrap();
        assert_eq!(x.index_set(), vec![0, 1, 3, 5]);
        assert_eq!(x.restrict(&x.index_set()), vec![2, 1, 1, 1]);
        assert!(equivalent(&x, &y).unwrap());
        assert!(!equivalent(&x, &z).unwrap());
        assert!(equivalent(&x, &x).unwrap());
        let short = TernaryTuple::new(vec![1]).unwrap();
        assert!(matches!(
            equivalent(&x, &short),
            Err(Error::LengthMismatch(6, 1))
        ));
    }

    #[test]
    fn partite_verifier_examples() {
        let (n, a, _) = cycle_layer_representation(4).unwrap();
        let c8 = gen_standard(Family::Cycle(8)).unwrap();
        let report = verify_partite_representation(n, 2, &a, &c8, true).unwrap();
        assert!(report.all_pass(), "{report:?}");
        let parts = report.partition.unwrap();
        assert_eq!(
            parts
                .iter()
                .collect::<std::collections::BTreeSet<_>>()
                .len(),
            2
        );

        // Triangle hypergraph needs 3 parts with k = 2.
        let tri = LayerVertexSet::new(
            3,
            2,
            vec![
                [0, 1].into_iter().collect(),
                [1, 2].into_iter().collect(),
                [2, 0].into_iter().collect(),
            ],
        )
        .unwrap();
        let k13 = gen_standard(Family::Star(3)).unwrap();
        let report = verify_partite_representation(3, 2, &tri, &k13, false).unwrap();
        assert!(!report.hypergraph_partite);

        // Single down 3-star in Q_4 contains K_{1,3}.
        let one = LayerVertexSet::new(4, 3, vec![[0, 1, 2].into_iter().collect()]).unwrap();
        let report = verify_partite_representation(4, 3, &one, &k13, false).unwrap();
        assert!(report.pattern_found && report.hypergraph_partite && report.is_induced);
    }

    /// Every supported cycle system up to l = 10 passes all verifier checks.
    #[test]
    fn all_supported_cycle_systems_verify() {
        for l in [4usize, 6, 7, 8, 9, 10] {
            let (n, a, _) = cycle_layer_representation(l).unwrap();
            let pattern = gen_standard(Family::Cycle(2 * l)).unwrap();
            let report = verify_partite_representation(n, a.k, &a, &pattern, true).unwrap();
            assert!(report.all_pass(), "l={l}: {report:?}");
        }
    }

    #[test]
    fn mod3_census_small() {
        let c = mod3_c4_check(2).unwrap();
        assert_eq!((c.copies, c.monochromatic, c.verdict), (9, 0, true));
        let c = mod3_c4_check(3).unwrap();
        assert_eq!((c.copies, c.monochromatic, c.verdict), (81, 0, true));
        let c = mod3_c4_check(4).unwrap();
        assert_eq!((c.copies, c.monochromatic, c.verdict), (486, 0, true));
        assert!(mod3_c4_check(7).is_err());
    }

    /// Brute-force oracle over all edge subsets, for tiny N.
    fn strong_turan_oracle(n: usize, gamma: &Graph, part_a: &[u32], part_b: &[u32]) -> usize {
        let q = gen_standard(Family::Hypercube(n)).unwrap();
        let edge_id: std::collections::HashMap<(u32, u32), usize> =
            q.edges().iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let forbidden = layer_respecting_copies(n, &q, gamma, part_a, part_b, &edge_id).unwrap();
        let m = q.edge_count();
        let mut best = 0;
        for mask in 0u32..1 << m {
            if forbidden
                .iter()
                .any(|s| s.iter().all(|&e| mask >> e & 1 == 1))
            {
                continue;
            }
            best = best.max(mask.count_ones() as usize);
        }
        best
    }

    #[test]
    fn strong_turan_small_cases() {
        let k2 = k(2);
        assert_eq!(strong_turan_number(2, &k2, &[0], &[1]).unwrap(), 0);
        assert_eq!(strong_turan_oracle(2, &k2, &[0], &[1]), 0);

        // P_3 with both leaves in A: forbids a lower vertex with two up-edges.
        let p3 = gen_standard(Family::Path(3)).unwrap();
        let value = strong_turan_number(2, &p3, &[0, 2], &[1]).unwrap();
        assert_eq!(value, strong_turan_oracle(2, &p3, &[0, 2], &[1]));
        assert_eq!(value, 3);

        // C_4 admits no layer-respecting placement at all.
        let c4 = gen_standard(Family::Cycle(4)).unwrap();
        let value = strong_turan_number(3, &c4, &[0, 2], &[1, 3]).unwrap();
        assert_eq!(value, strong_turan_oracle(3, &c4, &[0, 2], &[1, 3]));
        assert_eq!(value, 12);

        // C_6 lives in the middle edge layer of Q_3 exactly once.
        let c6 = gen_standard(Family::Cycle(6)).unwrap();
        let value = strong_turan_number(3, &c6, &[0, 2, 4], &[1, 3, 5]).unwrap();
        assert_eq!(value, strong_turan_oracle(3, &c6, &[0, 2, 4], &[1, 3, 5]));
        assert_eq!(value, 11);

        assert!(strong_turan_number(5, &k2, &[0], &[1]).is_err());
    }
}
