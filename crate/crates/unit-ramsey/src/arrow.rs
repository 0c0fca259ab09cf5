//! Exact decision of arrow relations `G →^r {H_1..H_m}` (plain and induced).
//!
//! Copies of the forbidden graphs are pre-enumerated as vertex sets (the
//! monochromatic constraint depends only on the image set). Two engines decide
//! whether every r-coloring contains a monochromatic copy: a backtracking
//! search over colorings with first-use color symmetry breaking, and a CNF
//! encoding solved by a small DPLL. A failing verdict carries a certificate
//! coloring, re-checkable with [`contains_mono`].

use crate::error::{Error, Result};
use crate::graph::{find_copies, Coloring, Graph};

/// Cap on the number of pre-enumerated copy sets.
pub const DEFAULT_COPY_LIMIT: usize = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Backtrack,
    Cnf,
}

impl Engine {
    pub fn tag(self) -> &'static str {
        match self {
            Engine::Backtrack => "backtrack",
            Engine::Cnf => "cnf",
        }
    }
}

/// Outcome of an arrow check.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub holds: bool,
    /// Present iff `holds == false`; a coloring with no monochromatic copy.
    pub certificate: Option<Coloring>,
    pub copies_considered: usize,
    pub nodes: u64,
    pub engine: &'static str,
}

/// All copy sets of the family members, tagged with the member index.
fn enumerate_family_copies(
    g: &Graph,
    family: &[Graph],
    induced: bool,
    copy_limit: usize,
) -> Result<Vec<(usize, Vec<u32>)>> {
    let mut copies = Vec::new();
    for (i, h) in family.iter().enumerate() {
        if h.n() > g.n() {
            continue;
        }
        let list = find_copies(
            g,
            h,
            induced,
            Some(copy_limit.saturating_sub(copies.len()) + 1),
        )?;
        if list.truncated || copies.len() + list.sets.len() > copy_limit {
            return Err(Error::CopyLimitExceeded(copy_limit));
        }
        copies.extend(list.sets.into_iter().map(|s| (i, s)));
    }
    Ok(copies)
}

/// First monochromatic (induced) copy of a family member under `coloring`,
/// in fixed enumeration order: family members in order, copy sets in
/// lexicographic order. Returns the member index and the vertex set.
pub fn contains_mono(
    g: &Graph,
    family: &[Graph],
    coloring: &Coloring,
    induced: bool,
) -> Result<Option<(usize, Vec<u32>)>> {
    if coloring.colors.len() != g.n() {
        return Err(Error::SizeMismatch(format!(
            "coloring has {} entries for a {}-vertex host",
            coloring.colors.len(),
            g.n()
        )));
    }
    for (i, h) in family.iter().enumerate() {
        if h.n() > g.n() {
            continue;
        }
        let list = find_copies(g, h, induced, None)?;
        for set in list.sets {
            let c0 = coloring.colors[set[0] as usize];
            if set.iter().all(|&v| coloring.colors[v as usize] == c0) {
                return Ok(Some((i, set)));
            }
        }
    }
    Ok(None)
}

/// Decides `G →^r {family}` exactly.
pub fn arrow_check(
    g: &Graph,
    family: &[Graph],
    r: u32,
    induced: bool,
    engine: Engine,
) -> Result<Verdict> {
    arrow_check_budgeted(
        g,
        family,
        r,
        induced,
        engine,
        DEFAULT_COPY_LIMIT,
        crate::graph::DEFAULT_NODE_BUDGET,
    )
}

pub fn arrow_check_budgeted(
    g: &Graph,
    family: &[Graph],
    r: u32,
    induced: bool,
    engine: Engine,
    copy_limit: usize,
    node_budget: u64,
) -> Result<Verdict> {
    if r == 0 {
        return Err(Error::BadParams("r must be >= 1".into()));
    }
    let copies = enumerate_family_copies(g, family, induced, copy_limit)?;
    match engine {
        Engine::Backtrack => backtrack_engine(g, &copies, r, node_budget),
        Engine::Cnf => cnf_engine(g, &copies, r, node_budget),
    }
}

/// Searches for a coloring with no monochromatic copy. Vertex 0 gets color 0
/// and new colors are introduced in order of first use; with colors tried in
/// ascending order the first counterexample found is the lexicographically
/// least one overall.
fn backtrack_engine(
    g: &Graph,
    copies: &[(usize, Vec<u32>)],
    r: u32,
    node_budget: u64,
) -> Result<Verdict> {
    let n = g.n();
    // Copies indexed by their largest vertex: fully decided exactly when that
    // vertex gets assigned, since vertices are colored in id order.
    let mut by_last: Vec<Vec<&Vec<u32>>> = vec![Vec::new(); n];
    for (_, set) in copies {
        by_last[*set.last().expect("nonempty copy") as usize].push(set);
    }
    let mut colors: Vec<u32> = vec![u32::MAX; n];
    let mut nodes = 0u64;

    fn rec(
        v: usize,
        n: usize,
        r: u32,
        colors: &mut Vec<u32>,
        by_last: &[Vec<&Vec<u32>>],
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool> {
        if v == n {
            return Ok(true);
        }
        let max_used = colors[..v].iter().max().map_or(0, |&c| c + 1);
        for c in 0..r.min(max_used + 1) {
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::NodeBudgetExceeded(budget));
            }
            colors[v] = c;
            let mono = by_last[v].iter().any(|set| {
                let c0 = colors[set[0] as usize];
                set.iter().all(|&w| colors[w as usize] == c0)
            });
            if !mono && rec(v + 1, n, r, colors, by_last, nodes, budget)? {
                return Ok(true);
            }
        }
        colors[v] = u32::MAX;
        Ok(false)
    }

    let found = rec(0, n, r, &mut colors, &by_last, &mut nodes, node_budget)?;
    Ok(Verdict {
        holds: !found,
        certificate: if found {
            Some(Coloring::new(colors, r)?)
        } else {
            None
        },
        copies_considered: copies.len(),
        nodes,
        engine: Engine::Backtrack.tag(),
    })
}

fn cnf_engine(
    g: &Graph,
    copies: &[(usize, Vec<u32>)],
    r: u32,
    node_budget: u64,
) -> Result<Verdict> {
    let formula = encode_from_copies(g.n(), copies, r);
    let (outcome, nodes) = dpll_solve_budgeted(&formula, node_budget)?;
    match outcome {
        SatOutcome::Unsat => Ok(Verdict {
            holds: true,
            certificate: None,
            copies_considered: copies.len(),
            nodes,
            engine: Engine::Cnf.tag(),
        }),
        SatOutcome::Sat(model) => {
            let mut colors = vec![0u32; g.n()];
            for v in 0..g.n() {
                for c in 0..r {
                    if model[var_index(v, c, r) - 1] {
                        colors[v] = c;
                    }
                }
            }
            Ok(Verdict {
                holds: false,
                certificate: Some(Coloring::new(colors, r)?),
                copies_considered: copies.len(),
                nodes,
                engine: Engine::Cnf.tag(),
            })
        }
    }
}

/// Least odd `L <= l_max` with `G →^r {C_3, C_5, ..., C_L}`, or `None` with a
/// certificate coloring whose classes carry no odd cycle of length `<= l_max`.
/// For `l_max >= |V(G)|` a `None` certificate partitions `G` into `r` classes
/// inducing bipartite subgraphs.
pub fn mono_odd_cycle_bound(
    g: &Graph,
    r: u32,
    l_max: usize,
) -> Result<(Option<usize>, Option<Coloring>)> {
    if l_max < 3 || l_max.is_multiple_of(2) {
        return Err(Error::BadParams("l_max must be odd and >= 3".into()));
    }
    let mut family = Vec::new();
    let mut last = None;
    let mut l = 3;
    while l <= l_max {
        family.push(crate::generators::gen_standard(
            crate::generators::Family::Cycle(l),
        )?);
        let verdict = arrow_check(g, &family, r, false, Engine::Backtrack)?;
        if verdict.holds {
            return Ok((Some(l), None));
        }
        last = verdict.certificate;
        l += 2;
    }
    Ok((None, last))
}

/// CNF over variables `x_{v,c}`; clauses are nonzero DIMACS-style literals.
#[derive(Clone, Debug)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
    /// `(v, c)` for each variable id `1..=num_vars`, for the DIMACS comment map.
    pub var_map: Vec<(usize, u32)>,
}

#[inline]
fn var_index(v: usize, c: u32, r: u32) -> usize {
    v * r as usize + c as usize + 1
}

fn encode_from_copies(n: usize, copies: &[(usize, Vec<u32>)], r: u32) -> CnfFormula {
    let num_vars = n * r as usize;
    let mut clauses = Vec::new();
    for v in 0..n {
        // Exactly one color: one at-least-one clause, pairwise at-most-one.
        clauses.push((0..r).map(|c| var_index(v, c, r) as i32).collect());
        for c1 in 0..r {
            for c2 in c1 + 1..r {
                clauses.push(vec![
                    -(var_index(v, c1, r) as i32),
                    -(var_index(v, c2, r) as i32),
                ]);
            }
        }
    }
    for (_, set) in copies {
        for c in 0..r {
            clauses.push(
                set.iter()
                    .map(|&v| -(var_index(v as usize, c, r) as i32))
                    .collect(),
            );
        }
    }
    let mut var_map = Vec::with_capacity(num_vars);
    for v in 0..n {
        for c in 0..r {
            var_map.push((v, c));
        }
    }
    CnfFormula {
        num_vars,
        clauses,
        var_map,
    }
}

/// Encodes "some r-coloring of G avoids every monochromatic copy" as CNF.
/// The formula is satisfiable iff the arrow relation fails.
pub fn encode_cnf(g: &Graph, family: &[Graph], r: u32, induced: bool) -> Result<CnfFormula> {
    encode_cnf_budgeted(g, family, r, induced, DEFAULT_COPY_LIMIT)
}

pub fn encode_cnf_budgeted(
    g: &Graph,
    family: &[Graph],
    r: u32,
    induced: bool,
    copy_limit: usize,
) -> Result<CnfFormula> {
    if r == 0 {
        return Err(Error::BadParams("r must be >= 1".into()));
    }
    let copies = enumerate_family_copies(g, family, induced, copy_limit)?;
    Ok(encode_from_copies(g.n(), &copies, r))
}

/// DIMACS text with a comment block recording the variable map.
pub fn to_dimacs(f: &CnfFormula) -> String {
    let mut out = String::new();
    for (id, (v, c)) in f.var_map.iter().enumerate() {
        out.push_str(&format!("c var x_{{{v},{c}}} = {}\n", id + 1));
    }
    out.push_str(&format!("p cnf {} {}\n", f.num_vars, f.clauses.len()));
    for clause in &f.clauses {
        for lit in clause {
            out.push_str(&format!("{lit} "));
        }
        out.push_str("0\n");
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SatOutcome {
    Sat(Vec<bool>),
    Unsat,
}

/// Complete DPLL with unit propagation; branches on the lowest-index
/// unassigned variable, true first.
pub fn dpll_solve(f: &CnfFormula) -> Result<SatOutcome> {
    Ok(dpll_solve_budgeted(f, crate::graph::DEFAULT_NODE_BUDGET)?.0)
}

pub fn dpll_solve_budgeted(f: &CnfFormula, node_budget: u64) -> Result<(SatOutcome, u64)> {
    for clause in &f.clauses {
        if clause.is_empty() {
            return Err(Error::BadParams("empty clause at construction".into()));
        }
        if clause
            .iter()
            .any(|&l| l == 0 || l.unsigned_abs() as usize > f.num_vars)
        {
            return Err(Error::BadParams(
                "literal references an undeclared variable".into(),
            ));
        }
    }
    let mut assign: Vec<Option<bool>> = vec![None; f.num_vars];
    let mut nodes = 0u64;
    let sat = dpll_rec(&f.clauses, &mut assign, &mut nodes, node_budget)?;
    if sat {
        Ok((
            SatOutcome::Sat(assign.into_iter().map(|a| a.unwrap_or(false)).collect()),
            nodes,
        ))
    } else {
        Ok((SatOutcome::Unsat, nodes))
    }
}

fn clause_state(clause: &[i32], assign: &[Option<bool>]) -> (bool, Option<i32>, usize) {
    // (satisfied, sole unassigned literal if exactly one, unassigned count)
    let mut unassigned = 0;
    let mut last = None;
    for &lit in clause {
        match assign[lit.unsigned_abs() as usize - 1] {
            Some(val) => {
                if val == (lit > 0) {
                    return (true, None, 0);
                }
            }
            None => {
                unassigned += 1;
                last = Some(lit);
            }
        }
    }
    (false, if unassigned == 1 { last } else { None }, unassigned)
}

fn dpll_rec(
    clauses: &[Vec<i32>],
    assign: &mut Vec<Option<bool>>,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool> {
    // Unit propagation to fixpoint.
    let mut trail: Vec<usize> = Vec::new();
    loop {
        let mut propagated = false;
        for clause in clauses {
            let (sat, unit, unassigned) = clause_state(clause, assign);
            if sat {
                continue;
            }
            if unassigned == 0 {
                for &v in &trail {
                    assign[v] = None;
                }
                return Ok(false);
            }
            if let Some(lit) = unit {
                let v = lit.unsigned_abs() as usize - 1;
                assign[v] = Some(lit > 0);
                trail.push(v);
                propagated = true;
            }
        }
        if !propagated {
            break;
        }
    }
    let branch = assign.iter().position(|a| a.is_none());
    let result = match branch {
        None => Ok(true),
        Some(v) => {
            let mut out = Ok(false);
            for val in [true, false] {
                *nodes += 1;
                if *nodes > budget {
                    out = Err(Error::NodeBudgetExceeded(budget));
                    break;
                }
                assign[v] = Some(val);
                match dpll_rec(clauses, assign, nodes, budget) {
                    Ok(true) => {
                        out = Ok(true);
                        break;
                    }
                    Ok(false) => assign[v] = None,
                    err => {
                        out = err;
                        break;
                    }
                }
            }
            out
        }
    };
    if !matches!(result, Ok(true)) {
        for &v in &trail {
            assign[v] = None;
        }
    }
    result
}
