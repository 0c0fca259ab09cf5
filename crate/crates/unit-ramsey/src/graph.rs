//! Finite simple graphs with bit-row adjacency, Cartesian products and powers,
//! copy enumeration, and exact chromatic / independence solvers.
//!
//! Vertices are `0..n`. Edges are stored normalized (`u < v`, sorted, deduplicated).
//! Product vertex order is fixed as `g * |V(H)| + h`, and power vertices follow
//! [`PowerIndex`] (coordinate `i` contributes `digit[i] * b^i`), so every id is
//! reproducible across runs.

use crate::bits::Bits;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Largest vertex count products and powers may produce by default.
/// `K_3^{□7}` has 2187 vertices and must fit.
pub const DEFAULT_VERTEX_BUDGET: usize = 4096;

/// Default node budget for the exact solvers.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    name: Option<String>,
    adj: Vec<Bits>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}
impl Eq for Graph {}

impl Graph {
    /// Builds a normalized graph. Loops are rejected; duplicate edges collapse.
    pub fn build(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if u as usize >= n || v as usize >= n {
                return Err(Error::VertexOutOfRange(u, v, n));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<(u32, u32)> = set.into_iter().collect();
        let mut adj = vec![Bits::new(n); n];
        for &(u, v) in &edges {
            adj[u as usize].set(v as usize);
            adj[v as usize].set(u as usize);
        }
        Ok(Graph {
            n,
            edges,
            name: None,
            adj,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].get(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn adj_row(&self, v: usize) -> &Bits {
        &self.adj[v]
    }

    /// Two-coloring by BFS; `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        let mut side = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        let a = (0..self.n as u32)
            .filter(|&v| side[v as usize] == 0)
            .collect();
        let b = (0..self.n as u32)
            .filter(|&v| side[v as usize] == 1)
            .collect();
        Some((a, b))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = Bits::new(self.n);
        seen.set(0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen.get(w) {
                    seen.set(w);
                    stack.push(w);
                }
            }
        }
        seen.count() == self.n
    }
}

/// Serialized form: `{"name": ..., "n": ..., "edges": [[u,v],...]}`.
#[derive(Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> GraphJson {
        GraphJson {
            name: g.name.clone(),
            n: g.n,
            edges: g.edges.clone(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(j: GraphJson) -> Result<Graph> {
        let g = Graph::build(j.n, &j.edges)?;
        Ok(match j.name {
            Some(name) => g.with_name(name),
            None => g,
        })
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Graph> {
        let j: GraphJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Graph::try_from(j)
    }

    /// Edge-list text: one `u v` per line, `#` starts a comment.
    /// The vertex count is the largest endpoint plus one.
    pub fn from_edge_list(s: &str) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut max = 0u32;
        for line in s.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let (u, v) = (it.next(), it.next());
            match (u, v) {
                (Some(u), Some(v)) => {
                    let u: u32 = u
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad line {line:?}")))?;
                    let v: u32 = v
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad line {line:?}")))?;
                    max = max.max(u).max(v);
                    edges.push((u, v));
                }
                _ => return Err(Error::Parse(format!("bad line {line:?}"))),
            }
        }
        Graph::build(max as usize + 1, &edges)
    }
}

/// Mixed-radix address of a vertex of `G^{□N}`: `id = Σ digits[i] · b^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerIndex {
    pub base: usize,
    pub digits: Vec<u32>,
}

impl PowerIndex {
    pub fn from_id(mut id: usize, base: usize, len: usize) -> PowerIndex {
        let mut digits = Vec::with_capacity(len);
        for _ in 0..len {
            digits.push((id % base) as u32);
            id /= base;
        }
        PowerIndex { base, digits }
    }

    pub fn id(&self) -> usize {
        self.digits
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.base + d as usize)
    }
}

/// Total color assignment over the vertices of some host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<u32>,
    pub r: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, r: u32) -> Result<Coloring> {
        if let Some(&c) = colors.iter().find(|&&c| c >= r) {
            return Err(Error::SizeMismatch(format!(
                "color {c} out of range 0..{r}"
            )));
        }
        Ok(Coloring { colors, r })
    }

    /// Proper in the classical sense: no edge is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.colors[u as usize] != self.colors[v as usize])
    }
}

/// Injective vertex map from a pattern into a host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub images: Vec<u32>,
}

impl Embedding {
    pub fn new(images: Vec<u32>) -> Embedding {
        Embedding { images }
    }

    pub fn pattern_size(&self) -> usize {
        self.images.len()
    }
}

/// `build_graph` of the public surface; see [`Graph::build`].
pub fn build_graph(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
    Graph::build(n, edges)
}

/// Cartesian product `G □ H`: vertex `(g,h) ↦ g·|V(H)|+h`; edges along one factor at a time.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    cartesian_product_budgeted(g, h, DEFAULT_VERTEX_BUDGET)
}

pub fn cartesian_product_budgeted(g: &Graph, h: &Graph, budget: usize) -> Result<Graph> {
    let n = g
        .n()
        .checked_mul(h.n())
        .filter(|&n| n <= budget)
        .ok_or(Error::Overflow(g.n().saturating_mul(h.n()), budget))?;
    let hn = h.n() as u32;
    let mut edges = Vec::with_capacity(g.n() * h.edge_count() + h.n() * g.edge_count());
    for gi in 0..g.n() as u32 {
        for &(u, v) in h.edges() {
            edges.push((gi * hn + u, gi * hn + v));
        }
    }
    for &(u, v) in g.edges() {
        for hi in 0..hn {
            edges.push((u * hn + hi, v * hn + hi));
        }
    }
    Graph::build(n, &edges)
}

/// `G^{□N}` built directly on [`PowerIndex`] ids: two vertices are adjacent
/// iff their digit strings differ in exactly one coordinate and the differing
/// pair is an edge of `G`.
pub fn cartesian_power(g: &Graph, n_power: usize) -> Result<Graph> {
    cartesian_power_budgeted(g, n_power, DEFAULT_VERTEX_BUDGET)
}

pub fn cartesian_power_budgeted(g: &Graph, n_power: usize, budget: usize) -> Result<Graph> {
    if n_power == 0 {
        return Err(Error::BadParams("power N must be >= 1".into()));
    }
    let b = g.n();
    let mut n = 1usize;
    for _ in 0..n_power {
        n = n
            .checked_mul(b)
            .filter(|&n| n <= budget)
            .ok_or(Error::Overflow(usize::MAX, budget))?;
    }
    let mut edges = Vec::with_capacity(n_power * g.edge_count() * n / b.max(1));
    let mut stride = 1usize;
    for _ in 0..n_power {
        // For coordinate with weight `stride`, enumerate all digit prefixes/suffixes.
        let outer = n / (stride * b);
        for hi in 0..outer {
            for lo in 0..stride {
                let fixed = hi * stride * b + lo;
                for &(u, v) in g.edges() {
                    edges.push((
                        (fixed + stride * u as usize) as u32,
                        (fixed + stride * v as usize) as u32,
                    ));
                }
            }
        }
        stride *= b;
    }
    Graph::build(n, &edges)
}

/// Result of [`find_copies`]: distinct vertex sets (each sorted ascending),
/// listed in lexicographic order, plus a truncation flag when `limit` was hit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CopyList {
    pub sets: Vec<Vec<u32>>,
    pub truncated: bool,
}

/// Enumerates distinct vertex subsets of `host` that carry a copy of `pattern`.
///
/// Deduplication is by vertex-image set, not by labeled embedding: whether a
/// set is monochromatic depends only on the set. Exhaustive unless `limit`
/// distinct sets were collected, in which case `truncated` is set.
pub fn find_copies(
    host: &Graph,
    pattern: &Graph,
    induced: bool,
    limit: Option<usize>,
) -> Result<CopyList> {
    if pattern.n() > host.n() {
        return Err(Error::SizeMismatch(format!(
            "pattern has {} vertices, host only {}",
            pattern.n(),
            host.n()
        )));
    }
    let order = search_order(pattern);
    let mut sets = BTreeSet::new();
    let limit = limit.unwrap_or(usize::MAX);
    let mut assignment = vec![u32::MAX; pattern.n()];
    let mut used = Bits::new(host.n());
    let truncated = extend_copy(
        host,
        pattern,
        &order,
        0,
        &mut assignment,
        &mut used,
        induced,
        limit,
        &mut sets,
    );
    Ok(CopyList {
        sets: sets.into_iter().collect(),
        truncated,
    })
}

/// Pattern vertices ordered so each one (per component, after the first)
/// has an earlier neighbor; keeps the backtracking anchored.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(pattern.n());
    let mut placed = vec![false; pattern.n()];
    for root in 0..pattern.n() {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        order.push(root);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in pattern.neighbors(v) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend_copy(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    assignment: &mut Vec<u32>,
    used: &mut Bits,
    induced: bool,
    limit: usize,
    sets: &mut BTreeSet<Vec<u32>>,
) -> bool {
    if depth == order.len() {
        let mut img: Vec<u32> = assignment.clone();
        img.sort_unstable();
        if sets.len() < limit {
            sets.insert(img);
            return false;
        }
        return !sets.contains(&img);
    }
    let p = order[depth];
    for cand in 0..host.n() {
        if used.get(cand) {
            continue;
        }
        // Check consistency against all previously assigned pattern vertices.
        let mut ok = true;
        for &q in &order[..depth] {
            let hq = assignment[q] as usize;
            let pat_edge = pattern.has_edge(p, q);
            let host_edge = host.has_edge(cand, hq);
            if pat_edge && !host_edge {
                ok = false;
                break;
            }
            if induced && !pat_edge && host_edge {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        assignment[p] = cand as u32;
        used.set(cand);
        let hit = extend_copy(
            host,
            pattern,
            order,
            depth + 1,
            assignment,
            used,
            induced,
            limit,
            sets,
        );
        used.clear(cand);
        assignment[p] = u32::MAX;
        if hit {
            return true;
        }
    }
    false
}

/// True iff `emb` maps every pattern edge to a host edge (and, for `induced`,
/// every pattern non-edge to a host non-edge).
pub fn is_copy(host: &Graph, pattern: &Graph, emb: &Embedding, induced: bool) -> Result<bool> {
    if emb.images.len() != pattern.n() {
        return Err(Error::SizeMismatch(format!(
            "embedding has {} images for a {}-vertex pattern",
            emb.images.len(),
            pattern.n()
        )));
    }
    let mut seen = BTreeSet::new();
    for &v in &emb.images {
        if v as usize >= host.n() || !seen.insert(v) {
            return Err(Error::SizeMismatch(
                "embedding not injective into host".into(),
            ));
        }
    }
    for u in 0..pattern.n() {
        for v in u + 1..pattern.n() {
            let host_edge = host.has_edge(emb.images[u] as usize, emb.images[v] as usize);
            if pattern.has_edge(u, v) {
                if !host_edge {
                    return Ok(false);
                }
            } else if induced && host_edge {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exact chromatic number via branch-and-bound with saturation-degree branching.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    Ok(chromatic_number_with_certificate(g, DEFAULT_NODE_BUDGET)?.0)
}

pub fn chromatic_number_with_certificate(g: &Graph, node_budget: u64) -> Result<(usize, Coloring)> {
    if g.n() == 0 {
        return Err(Error::BadParams(
            "chromatic number of the empty graph".into(),
        ));
    }
    let lower = greedy_clique(g).len();
    let mut nodes = 0u64;
    for k in lower.max(1).. {
        if let Some(colors) = k_colorable(g, k as u32, &mut nodes, node_budget)? {
            return Ok((k, Coloring::new(colors, k as u32)?));
        }
    }
    unreachable!()
}

/// A maximal clique grown greedily by degree; lower bound for chi.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut verts: Vec<usize> = (0..g.n()).collect();
    verts.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut clique: Vec<usize> = Vec::new();
    for v in verts {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique
}

/// DSATUR branch-and-bound for a proper k-coloring. Colors are introduced in
/// order of first use, so color permutations are not explored twice.
fn k_colorable(g: &Graph, k: u32, nodes: &mut u64, budget: u64) -> Result<Option<Vec<u32>>> {
    let n = g.n();
    let mut colors: Vec<u32> = vec![u32::MAX; n];

    fn rec(
        g: &Graph,
        k: u32,
        colors: &mut Vec<u32>,
        assigned: usize,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool> {
        let n = g.n();
        if assigned == n {
            return Ok(true);
        }
        // Saturation degree: most distinct neighbor colors; ties by degree then id.
        let mut pick = usize::MAX;
        let mut best = (0usize, 0usize);
        for v in 0..n {
            if colors[v] != u32::MAX {
                continue;
            }
            let mut seen = 0u64;
            for w in g.neighbors(v) {
                if colors[w] != u32::MAX {
                    seen |= 1 << (colors[w] & 63);
                }
            }
            let sat = seen.count_ones() as usize;
            let key = (sat, g.degree(v));
            if pick == usize::MAX || key > best {
                best = key;
                pick = v;
            }
        }
        let max_used = colors
            .iter()
            .filter(|&&c| c != u32::MAX)
            .max()
            .map_or(0, |&c| c + 1);
        for c in 0..k.min(max_used + 1) {
            if g.neighbors(pick).any(|w| colors[w] == c) {
                continue;
            }
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::NodeBudgetExceeded(budget));
            }
            colors[pick] = c;
            if rec(g, k, colors, assigned + 1, nodes, budget)? {
                return Ok(true);
            }
            colors[pick] = u32::MAX;
        }
        Ok(false)
    }

    if rec(g, k, &mut colors, 0, nodes, budget)? {
        Ok(Some(colors))
    } else {
        Ok(None)
    }
}

/// Exact maximum independent set size.
pub fn independence_number(g: &Graph) -> Result<usize> {
    Ok(independence_number_with_witness(g, DEFAULT_NODE_BUDGET)?.0)
}

pub fn independence_number_with_witness(g: &Graph, node_budget: u64) -> Result<(usize, Vec<u32>)> {
    if g.n() == 0 {
        return Err(Error::BadParams(
            "independence number of the empty graph".into(),
        ));
    }
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut nodes = 0u64;

    fn rec(
        g: &Graph,
        cand: Bits,
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<()> {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::NodeBudgetExceeded(budget));
        }
        if current.len() + cand.count() <= best.len() {
            return Ok(());
        }
        // Branch on the candidate of max degree inside the candidate set.
        let mut pick = usize::MAX;
        let mut deg_best = usize::MAX;
        for v in cand.iter() {
            let mut row = g.adj_row(v).clone();
            row.intersect(&cand);
            let d = row.count();
            if pick == usize::MAX || d > deg_best {
                pick = v;
                deg_best = d;
            }
        }
        if pick == usize::MAX {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return Ok(());
        }
        // Include pick.
        let mut with = cand.clone();
        with.clear(pick);
        with.subtract(g.adj_row(pick));
        current.push(pick);
        rec(g, with, current, best, nodes, budget)?;
        current.pop();
        // Exclude pick.
        let mut without = cand;
        without.clear(pick);
        rec(g, without, current, best, nodes, budget)
    }

    rec(
        g,
        Bits::full(g.n()),
        &mut current,
        &mut best,
        &mut nodes,
        node_budget,
    )?;
    best.sort_unstable();
    Ok((best.len(), best.into_iter().map(|v| v as u32).collect()))
}

/// Least `r` such that some r-coloring of `g` has no monochromatic (induced)
/// copy of `h`. Equals the chromatic number when `h = K_2`; equals 1 when `g`
/// has no copy of `h` at all.
pub fn chi_generalized(g: &Graph, h: &Graph, induced: bool) -> Result<usize> {
    if h.n() == 0 {
        return Err(Error::BadParams("pattern must be nonempty".into()));
    }
    for r in 1.. {
        let verdict = crate::arrow::arrow_check(
            g,
            std::slice::from_ref(h),
            r,
            induced,
            crate::arrow::Engine::Backtrack,
        )?;
        if !verdict.holds {
            return Ok(r as usize);
        }
    }
    unreachable!()
}
