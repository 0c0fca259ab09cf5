//! Command-line surface: every operation as a subcommand with a JSON report.
//!
//! Exit codes: 0 when a verdict was computed (whatever its direction), 1 on
//! usage or input errors, 2 on budget exhaustion. Reports embed the resolved
//! configuration, and identical configurations (same seed, deterministic
//! mode) produce byte-identical reports.

use crate::arrow::{self, Engine};
use crate::bounds;
use crate::error::{Error, Result};
use crate::generators::{self, Family};
use crate::graph::{self, Graph};
use crate::plane::{self, ConfigKind, PlaneScheme};
use crate::slices;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "unit-ramsey",
    version,
    about = "Arrow relations, hypercube layers, plane colorings, odd-cycle bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Seed for every randomized routine.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker count; deterministic mode forces 1.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Node budget for the exact solvers.
    #[arg(long, global = true, default_value_t = graph::DEFAULT_NODE_BUDGET)]
    node_budget: u64,
    /// Cap on pre-enumerated copies.
    #[arg(long, global = true, default_value_t = arrow::DEFAULT_COPY_LIMIT)]
    copy_limit: usize,
    /// Reproducible certificates; forces jobs = 1.
    #[arg(long, global = true, default_value_t = false)]
    deterministic: bool,
    /// Write the report (or document) here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Cartesian product of two graphs.
    Product {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Cartesian power of a graph.
    Power {
        #[arg(long)]
        g: String,
        #[arg(long)]
        n: usize,
    },
    /// Enumerate distinct vertex sets carrying a copy of a pattern.
    Copies {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value_t = false)]
        induced: bool,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Exact chromatic number.
    Chi {
        #[arg(long)]
        graph: String,
    },
    /// Exact independence number.
    Alpha {
        #[arg(long)]
        graph: String,
    },
    /// Least r such that some r-coloring avoids a monochromatic pattern copy.
    ChiH {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value_t = false)]
        induced: bool,
    },
    /// Decide G ->^r {family}.
    Arrow {
        #[arg(long)]
        graph: String,
        /// Comma-separated family, e.g. "P3" or "C3,C5,C7".
        #[arg(long)]
        family: String,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = false)]
        induced: bool,
        #[arg(long, default_value = "backtrack")]
        engine: String,
    },
    /// Least odd L <= lmax with G ->^r {C_3,...,C_L}.
    OddCycleBound {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        lmax: usize,
    },
    /// DIMACS CNF export of the arrow encoding (satisfiable iff arrow fails).
    ExportCnf {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        family: String,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = false)]
        induced: bool,
        /// Also run the internal DPLL solver on the formula.
        #[arg(long, default_value_t = false)]
        solve: bool,
    },
    /// Slice census of a power subgraph.
    Slices {
        #[arg(long)]
        base: String,
        #[arg(long)]
        n: usize,
        /// Edge-list file of edges to drop from the full power graph.
        #[arg(long)]
        drop_edges: Option<String>,
    },
    /// Greedy H-tree embedding into a power subgraph.
    EmbedForest {
        #[arg(long)]
        base: String,
        #[arg(long)]
        n: usize,
        /// Attachments "prior:vertex,prior:vertex,..." (one per extra copy).
        #[arg(long, default_value = "")]
        attach: String,
        #[arg(long)]
        drop_edges: Option<String>,
    },
    /// Verify the layer representations (cycle systems or the pole graph).
    VerifyRep {
        /// Cycle parameter: builds and verifies the C_{2l} system.
        #[arg(long)]
        l: Option<usize>,
        /// Pole parameter: builds and verifies the H(t) embedding.
        #[arg(long)]
        poles_t: Option<usize>,
    },
    /// C_4 census of K_3^{square N} under the digit-sum mod-3 coloring.
    Mod3 {
        #[arg(long)]
        n: usize,
    },
    /// Exact strong Turan number m(N, Gamma, A, B).
    StrongTuran {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        gamma: String,
        /// Swap the roles of the two bipartition classes.
        #[arg(long, default_value_t = false)]
        swap_parts: bool,
    },
    /// Randomized monochromatic-configuration search under a plane scheme.
    PlaneFalsify {
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        param: Option<f64>,
        #[arg(long)]
        config_kind: String,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = plane::DEFAULT_WINDOW)]
        window: f64,
    },
    /// Exact tiling audit (hex4 / square4).
    PlaneAudit {
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        param: Option<f64>,
    },
    /// Render a scheme to SVG.
    Render {
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        param: Option<f64>,
        /// "x0,y0,x1,y1"
        #[arg(long, default_value = "0,0,12,12")]
        bbox: String,
        #[arg(long, default_value_t = 240)]
        cells: usize,
    },
    /// Quantitative bounds.
    Bounds {
        #[command(subcommand)]
        which: BoundsCmd,
    },
    /// Build a unit-distance graph from a coordinate CSV.
    Ingest {
        #[arg(long)]
        coords: String,
        #[arg(long, default_value_t = generators::DEFAULT_INGEST_EPS)]
        eps: f64,
    },
}

#[derive(Subcommand, Debug)]
enum BoundsCmd {
    /// Odd-cycle constants r_l, upper base, eps_l.
    Rho {
        #[arg(long)]
        l: usize,
    },
    /// Numerical circumradius minimization over closed unit chains.
    Chain {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 10)]
        restarts: usize,
    },
    /// Product bound evaluation from explicit statistics or a JSON file.
    B3 {
        #[arg(long)]
        stats: Option<String>,
        #[arg(long)]
        vg: Option<u64>,
        #[arg(long)]
        ag: Option<u64>,
        #[arg(long)]
        vh: Option<u64>,
        #[arg(long)]
        eh: Option<u64>,
        #[arg(long)]
        ah: Option<u64>,
    },
    /// Exponent optimization of the product bound.
    Exponent {
        #[arg(long, default_value_t = bounds::PSI)]
        psi: f64,
    },
    /// Generalized Johnson graph statistics.
    Johnson {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        t: u64,
    },
    /// Star polygon embedding residual.
    Star {
        #[arg(long)]
        l: usize,
    },
}

/// Parses a graph spec: a family name (`K3`, `C5`, `P4`, `Q3`, `star5`,
/// `layer(3,2)`, `johnson(4,2,1)`, `moser`), a power of one (`K3^2`), or a
/// path to a `.json` / edge-list file.
pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    if let Some((base, pow)) = spec.rsplit_once('^') {
        if let Ok(n) = pow.parse::<usize>() {
            let g = parse_graph_spec(base)?;
            return graph::cartesian_power(&g, n);
        }
    }
    if let Some(g) = parse_family_name(spec)? {
        return Ok(g);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::Parse(format!("cannot read graph spec {spec:?}: {e}")))?;
    if spec.ends_with(".json") {
        Graph::from_json(&text)
    } else {
        Graph::from_edge_list(&text)
    }
}

fn parse_family_name(spec: &str) -> Result<Option<Graph>> {
    let lower = spec.to_ascii_lowercase();
    if lower == "moser" || lower == "moser_spindle" {
        return Ok(Some(generators::moser_spindle()));
    }
    let args_of = |s: &str| -> Option<Vec<usize>> {
        let inner = s.strip_suffix(')')?;
        inner.split(',').map(|t| t.trim().parse().ok()).collect()
    };
    if let Some(rest) = lower.strip_prefix("layer(") {
        if let Some(v) = args_of(rest) {
            if v.len() == 2 {
                return gen(Family::EdgeLayer(v[0], v[1]));
            }
        }
        return Err(Error::Parse(format!("bad layer spec {spec:?}")));
    }
    if let Some(rest) = lower
        .strip_prefix("johnson(")
        .or_else(|| lower.strip_prefix("j("))
    {
        if let Some(v) = args_of(rest) {
            if v.len() == 3 {
                return gen(Family::Johnson(v[0], v[1], v[2]));
            }
        }
        return Err(Error::Parse(format!("bad johnson spec {spec:?}")));
    }
    if let Some(m) = lower.strip_prefix("star") {
        if let Ok(m) = m.parse() {
            return gen(Family::Star(m));
        }
    }
    let (head, tail) = lower.split_at(1.min(lower.len()));
    if let Ok(num) = tail.parse::<usize>() {
        return match head {
            "k" => gen(Family::Complete(num)),
            "c" => gen(Family::Cycle(num)),
            "p" => gen(Family::Path(num)),
            "q" => gen(Family::Hypercube(num)),
            _ => Ok(None),
        };
    }
    Ok(None)
}

fn gen(f: Family) -> Result<Option<Graph>> {
    generators::gen_standard(f).map(Some)
}

fn parse_family_list(list: &str) -> Result<Vec<Graph>> {
    list.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(parse_graph_spec)
        .collect()
}

fn parse_scheme(name: &str, param: Option<f64>) -> Result<PlaneScheme> {
    match name.to_ascii_lowercase().as_str() {
        "strips" => {
            PlaneScheme::strips(param.unwrap_or_else(PlaneScheme::triangle_free_strip_width))
        }
        "staircase" => {
            PlaneScheme::staircase(param.unwrap_or_else(PlaneScheme::q11_free_staircase_run))
        }
        "hex4" => PlaneScheme::hex4(param.unwrap_or(2.0 / 3.0)),
        "square4" => Ok(PlaneScheme::square4()),
        other => Err(Error::Parse(format!("unknown scheme {other:?}"))),
    }
}

fn parse_config_kind(name: &str) -> Result<ConfigKind> {
    let lower = name.to_ascii_lowercase();
    if let Some(d) = lower.strip_prefix("box") {
        let d: usize = d
            .trim_start_matches('_')
            .trim_start_matches("copy")
            .parse()
            .map_err(|_| Error::Parse(format!("bad box dimension in {name:?}")))?;
        if d == 0 || d > 16 {
            return Err(Error::Parse("box dimension must be 1..=16".into()));
        }
        return Ok(ConfigKind::BoxCopy(d));
    }
    match lower.as_str() {
        "triangle" => Ok(ConfigKind::Triangle),
        "rhombus" => Ok(ConfigKind::Rhombus),
        "path3" => Ok(ConfigKind::Path3),
        other => Err(Error::Parse(format!("unknown config kind {other:?}"))),
    }
}

fn graph_value(g: &Graph) -> Value {
    json!({"n": g.n(), "edges": g.edges(), "name": g.name()})
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::NodeBudgetExceeded(_)
        | Error::CopyLimitExceeded(_)
        | Error::BudgetExceeded(_)
        | Error::Overflow(_, _) => 2,
        _ => 1,
    }
}

/// Runs the CLI and returns the process exit code, printing the report.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match run_capture(args) {
        Ok((report, out)) => {
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &report) {
                        eprintln!("error: cannot write {path}: {e}");
                        return 1;
                    }
                }
                None => println!("{report}"),
            }
            0
        }
        Err(RunError::Usage(msg)) => {
            eprintln!("{msg}");
            1
        }
        Err(RunError::Exec(err)) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

pub enum RunError {
    Usage(String),
    Exec(Error),
}

impl From<Error> for RunError {
    fn from(e: Error) -> RunError {
        RunError::Exec(e)
    }
}

/// Runs the CLI and returns `(report text, out path)` without printing.
pub fn run_capture<I, T>(args: I) -> std::result::Result<(String, Option<String>), RunError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| RunError::Usage(e.to_string()))?;
    let mut common = cli.common.clone();
    if common.deterministic {
        common.jobs = 1;
    }
    let report = execute(&cli.command, &common)?;
    Ok((report, common.out.clone()))
}

fn common_value(c: &Common) -> Value {
    json!({
        "seed": c.seed,
        "jobs": c.jobs,
        "node_budget": c.node_budget,
        "copy_limit": c.copy_limit,
        "deterministic": c.deterministic,
    })
}

fn report(command: &str, config: Value, result: Value) -> String {
    let doc = json!({"command": command, "config": config, "result": result});
    serde_json::to_string_pretty(&doc).expect("report serializes")
}

fn execute(cmd: &Cmd, common: &Common) -> Result<String> {
    let base_cfg = common_value(common);
    let with_common = |mut v: Value| -> Value {
        v.as_object_mut()
            .expect("config object")
            .insert("common".into(), base_cfg.clone());
        v
    };
    match cmd {
        Cmd::Product { g, h } => {
            let (gg, hh) = (parse_graph_spec(g)?, parse_graph_spec(h)?);
            let p = graph::cartesian_product(&gg, &hh)?;
            Ok(report(
                "product",
                with_common(json!({"g": g, "h": h})),
                graph_value(&p),
            ))
        }
        Cmd::Power { g, n } => {
            let gg = parse_graph_spec(g)?;
            let p = graph::cartesian_power(&gg, *n)?;
            Ok(report(
                "power",
                with_common(json!({"g": g, "n": n})),
                graph_value(&p),
            ))
        }
        Cmd::Copies {
            graph: gspec,
            pattern,
            induced,
            limit,
        } => {
            let g = parse_graph_spec(gspec)?;
            let pat = parse_graph_spec(pattern)?;
            let copies = graph::find_copies(&g, &pat, *induced, *limit)?;
            Ok(report(
                "copies",
                with_common(
                    json!({"graph": gspec, "pattern": pattern, "induced": induced, "limit": limit}),
                ),
                json!({"count": copies.sets.len(), "truncated": copies.truncated, "sets": copies.sets}),
            ))
        }
        Cmd::Chi { graph: gspec } => {
            let g = parse_graph_spec(gspec)?;
            let (chi, cert) = graph::chromatic_number_with_certificate(&g, common.node_budget)?;
            Ok(report(
                "chi",
                with_common(json!({"graph": gspec})),
                json!({"chi": chi, "certificate": cert.colors}),
            ))
        }
        Cmd::Alpha { graph: gspec } => {
            let g = parse_graph_spec(gspec)?;
            let (alpha, witness) = graph::independence_number_with_witness(&g, common.node_budget)?;
            Ok(report(
                "alpha",
                with_common(json!({"graph": gspec})),
                json!({"alpha": alpha, "witness": witness}),
            ))
        }
        Cmd::ChiH {
            graph: gspec,
            pattern,
            induced,
        } => {
            let g = parse_graph_spec(gspec)?;
            let pat = parse_graph_spec(pattern)?;
            let value = graph::chi_generalized(&g, &pat, *induced)?;
            Ok(report(
                "chi-h",
                with_common(json!({"graph": gspec, "pattern": pattern, "induced": induced})),
                json!({"chi_h": value}),
            ))
        }
        Cmd::Arrow {
            graph: gspec,
            family,
            r,
            induced,
            engine,
        } => {
            let g = parse_graph_spec(gspec)?;
            let fam = parse_family_list(family)?;
            let eng = match engine.as_str() {
                "backtrack" => Engine::Backtrack,
                "cnf" => Engine::Cnf,
                other => return Err(Error::Parse(format!("unknown engine {other:?}"))),
            };
            let v = arrow::arrow_check_budgeted(
                &g,
                &fam,
                *r,
                *induced,
                eng,
                common.copy_limit,
                common.node_budget,
            )?;
            Ok(report(
                "arrow",
                with_common(json!({
                    "graph": gspec, "family": family, "r": r, "induced": induced, "engine": engine,
                })),
                json!({
                    "holds": v.holds,
                    "certificate": v.certificate.as_ref().map(|c| &c.colors),
                    "copies_considered": v.copies_considered,
                    "nodes": v.nodes,
                    "engine": v.engine,
                }),
            ))
        }
        Cmd::OddCycleBound {
            graph: gspec,
            r,
            lmax,
        } => {
            let g = parse_graph_spec(gspec)?;
            let (bound, cert) = arrow::mono_odd_cycle_bound(&g, *r, *lmax)?;
            Ok(report(
                "odd-cycle-bound",
                with_common(json!({"graph": gspec, "r": r, "lmax": lmax})),
                json!({"least_odd_length": bound, "certificate": cert.as_ref().map(|c| &c.colors)}),
            ))
        }
        Cmd::ExportCnf {
            graph: gspec,
            family,
            r,
            induced,
            solve,
        } => {
            let g = parse_graph_spec(gspec)?;
            let fam = parse_family_list(family)?;
            let f = arrow::encode_cnf_budgeted(&g, &fam, *r, *induced, common.copy_limit)?;
            let dimacs = arrow::to_dimacs(&f);
            let solved = if *solve {
                let (outcome, nodes) = arrow::dpll_solve_budgeted(&f, common.node_budget)?;
                Some(json!({
                    "satisfiable": matches!(outcome, arrow::SatOutcome::Sat(_)),
                    "nodes": nodes,
                }))
            } else {
                None
            };
            // The DIMACS text is the payload; wrap it when printing JSON.
            if common.out.is_some() {
                return Ok(dimacs);
            }
            Ok(report(
                "export-cnf",
                with_common(
                    json!({"graph": gspec, "family": family, "r": r, "induced": induced, "solve": solve}),
                ),
                json!({"vars": f.num_vars, "clauses": f.clauses.len(), "dimacs": dimacs, "solved": solved}),
            ))
        }
        Cmd::Slices {
            base,
            n,
            drop_edges,
        } => {
            let s = build_power_subgraph(base, *n, drop_edges.as_deref())?;
            let (contained, total, fraction) = slices::slice_fraction(&s);
            Ok(report(
                "slices",
                with_common(json!({"base": base, "n": n, "drop_edges": drop_edges})),
                json!({"contained": contained, "total": total, "fraction": fraction}),
            ))
        }
        Cmd::EmbedForest {
            base,
            n,
            attach,
            drop_edges,
        } => {
            let s = build_power_subgraph(base, *n, drop_edges.as_deref())?;
            let attachments = parse_attachments(attach)?;
            let (pattern, emb) = slices::greedy_forest_embed(&s, &attachments)?;
            Ok(report(
                "embed-forest",
                with_common(
                    json!({"base": base, "n": n, "attach": attach, "drop_edges": drop_edges}),
                ),
                json!({
                    "pattern_vertices": pattern.n(),
                    "pattern_edges": pattern.edge_count(),
                    "images": emb.images,
                }),
            ))
        }
        Cmd::VerifyRep { l, poles_t } => match (l, poles_t) {
            (Some(l), None) => {
                let (n, a, _b) = generators::cycle_layer_representation(*l)?;
                let pattern = generators::gen_standard(Family::Cycle(2 * l))?;
                let rep = slices::verify_partite_representation(n, a.k, &a, &pattern, true)?;
                Ok(report(
                    "verify-rep",
                    with_common(json!({"l": l})),
                    serde_json::to_value(&rep).expect("report serializes"),
                ))
            }
            (None, Some(t)) => {
                let (g, ground, sets) = generators::h_poles_graph(*t)?;
                let layer_ok = sets.iter().all(|s| s.len() == *t || s.len() == t + 1);
                let edges_ok = g.edges().iter().all(|&(u, v)| {
                    sets[u as usize]
                        .symmetric_difference(&sets[v as usize])
                        .count()
                        == 1
                });
                let distinct =
                    sets.iter().collect::<std::collections::BTreeSet<_>>().len() == sets.len();
                Ok(report(
                    "verify-rep",
                    with_common(json!({"poles_t": t})),
                    json!({
                        "vertices": g.n(),
                        "edges": g.edge_count(),
                        "ground": ground,
                        "layer_membership": layer_ok,
                        "edges_are_hypercube_edges": edges_ok,
                        "vertices_distinct": distinct,
                        "valid": layer_ok && edges_ok && distinct,
                    }),
                ))
            }
            _ => Err(Error::BadParams(
                "pass exactly one of --l or --poles-t".into(),
            )),
        },
        Cmd::Mod3 { n } => {
            let census = slices::mod3_c4_check(*n)?;
            Ok(report(
                "mod3",
                with_common(json!({"N": n})),
                serde_json::to_value(&census).expect("census serializes"),
            ))
        }
        Cmd::StrongTuran {
            n,
            gamma,
            swap_parts,
        } => {
            let g = parse_graph_spec(gamma)?;
            let (mut a, mut b) = g
                .bipartition()
                .ok_or_else(|| Error::NotBipartite(format!("{gamma:?} is not bipartite")))?;
            if *swap_parts {
                std::mem::swap(&mut a, &mut b);
            }
            let value = slices::strong_turan_number(*n, &g, &a, &b)?;
            Ok(report(
                "strong-turan",
                with_common(
                    json!({"n": n, "gamma": gamma, "swap_parts": swap_parts, "part_a": a, "part_b": b}),
                ),
                json!({"m": value}),
            ))
        }
        Cmd::PlaneFalsify {
            scheme,
            param,
            config_kind,
            trials,
            window,
        } => {
            let sch = parse_scheme(scheme, *param)?;
            let kind = parse_config_kind(config_kind)?;
            let hit =
                plane::falsify_windowed(&sch, kind, *trials, common.seed, *window, common.jobs);
            Ok(report(
                "plane-falsify",
                with_common(json!({
                    "scheme": sch, "config_kind": kind, "trials": trials, "window": window,
                })),
                match hit {
                    None => json!({"monochromatic_found": false, "witness": null}),
                    Some((trial, w)) => json!({
                        "monochromatic_found": true,
                        "trial": trial,
                        "witness": w,
                        "colors": w.points.iter().map(|&(x, y)| plane::color_at(&sch, x, y)).collect::<Vec<_>>(),
                    }),
                },
            ))
        }
        Cmd::PlaneAudit { scheme, param } => {
            let sch = parse_scheme(scheme, *param)?;
            let audit = plane::tiling_audit(&sch)?;
            Ok(report(
                "plane-audit",
                with_common(json!({"scheme": sch})),
                serde_json::to_value(&audit).expect("audit serializes"),
            ))
        }
        Cmd::Render {
            scheme,
            param,
            bbox,
            cells,
        } => {
            let sch = parse_scheme(scheme, *param)?;
            let nums: Vec<f64> = bbox
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad bbox {bbox:?}")))
                })
                .collect::<Result<_>>()?;
            if nums.len() != 4 {
                return Err(Error::Parse(format!("bad bbox {bbox:?}")));
            }
            let svg = plane::render_svg(&sch, (nums[0], nums[1], nums[2], nums[3]), *cells)?;
            if common.out.is_some() {
                return Ok(svg);
            }
            Ok(report(
                "render",
                with_common(json!({"scheme": sch, "bbox": bbox, "cells": cells})),
                json!({"svg_bytes": svg.len()}),
            ))
        }
        Cmd::Bounds { which } => execute_bounds(which, common),
        Cmd::Ingest { coords, eps } => {
            let text = std::fs::read_to_string(coords)?;
            let points = generators::parse_coordinate_csv(&text)?;
            let (g, audit) = generators::ingest_unit_distance(&points, *eps)?;
            Ok(report(
                "ingest",
                with_common(json!({"coords": coords, "eps": eps})),
                json!({
                    "graph": graph_value(&g),
                    "near_threshold": audit.near_threshold,
                    "duplicates": audit.duplicates,
                }),
            ))
        }
    }
}

fn execute_bounds(cmd: &BoundsCmd, common: &Common) -> Result<String> {
    let cfg = common_value(common);
    match cmd {
        BoundsCmd::Rho { l } => {
            let c = bounds::odd_cycle_constants(*l)?;
            Ok(report(
                "bounds rho",
                json!({"l": l, "common": cfg}),
                json!({"r_l": c.r_l, "upper_base": c.upper_base, "eps_l": c.eps_l}),
            ))
        }
        BoundsCmd::Chain { m, dim, restarts } => {
            let r = bounds::min_circumradius_chain(*m, *dim, *restarts, common.seed)?;
            Ok(report(
                "bounds chain",
                json!({"m": m, "dim": dim, "restarts": restarts, "common": cfg}),
                json!({"radius": r.radius, "residual": r.residual, "converged": r.converged,
                       "points": r.chain.points}),
            ))
        }
        BoundsCmd::B3 {
            stats,
            vg,
            ag,
            vh,
            eh,
            ah,
        } => {
            let (vg, ag, vh, eh, ah) = if let Some(path) = stats {
                let text = std::fs::read_to_string(path)?;
                let v: Value =
                    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
                let get = |k: &str| -> Result<u64> {
                    v.get(k)
                        .and_then(Value::as_u64)
                        .ok_or_else(|| Error::Parse(format!("stats file missing integer {k:?}")))
                };
                (get("vg")?, get("ag")?, get("vh")?, get("eh")?, get("ah")?)
            } else {
                match (vg, ag, vh, eh, ah) {
                    (Some(vg), Some(ag), Some(vh), Some(eh), Some(ah)) => (*vg, *ag, *vh, *eh, *ah),
                    _ => {
                        return Err(Error::BadParams(
                            "pass --stats or all of --vg --ag --vh --eh --ah".into(),
                        ))
                    }
                }
            };
            let r = bounds::frankl_rodl_bound(vg, ag, vh, eh, ah)?;
            Ok(report(
                "bounds b3",
                json!({"vg": vg, "ag": ag, "vh": vh, "eh": eh, "ah": ah, "common": cfg}),
                serde_json::to_value(&r).expect("report serializes"),
            ))
        }
        BoundsCmd::Exponent { psi } => {
            let r = bounds::exponent_optimize_with_psi(*psi);
            Ok(report(
                "bounds exponent",
                json!({"psi": psi, "common": cfg}),
                json!({"base": r.base, "kappa": r.kappa}),
            ))
        }
        BoundsCmd::Johnson { n, k, t } => {
            let s = bounds::johnson_stats(*n, *k, *t)?;
            Ok(report(
                "bounds johnson",
                json!({"n": n, "k": k, "t": t, "common": cfg}),
                serde_json::to_value(&s).expect("report serializes"),
            ))
        }
        BoundsCmd::Star { l } => {
            let (points, residual) = bounds::star_polygon_embedding(*l)?;
            Ok(report(
                "bounds star",
                json!({"l": l, "common": cfg}),
                json!({"residual": residual, "points": points}),
            ))
        }
    }
}

fn build_power_subgraph(
    base: &str,
    n: usize,
    drop_edges: Option<&str>,
) -> Result<slices::PowerSubgraph> {
    let b = parse_graph_spec(base)?;
    let mut s = slices::PowerSubgraph::full(&b, n)?;
    if let Some(path) = drop_edges {
        let text = std::fs::read_to_string(path)?;
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            match (
                it.next().and_then(|t| t.parse().ok()),
                it.next().and_then(|t| t.parse().ok()),
            ) {
                (Some(u), Some(v)) => s.remove_edge(u, v),
                _ => return Err(Error::Parse(format!("bad drop-edges line {line:?}"))),
            }
        }
    }
    Ok(s)
}

fn parse_attachments(spec: &str) -> Result<Vec<slices::TreeAttachment>> {
    spec.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (p, w) = t
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("bad attachment {t:?}; want prior:vertex")))?;
            Ok((
                p.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad attachment {t:?}")))?,
                w.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad attachment {t:?}")))?,
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn capture(args: &[&str]) -> String {
        run_capture(args.iter().map(|s| s.to_string()))
            .map_err(|e| match e {
                RunError::Usage(m) => m,
                RunError::Exec(err) => err.to_string(),
            })
            .expect("command runs")
            .0
    }

    #[test]
    fn graph_specs_parse() {
        assert_eq!(parse_graph_spec("K3").unwrap().n(), 3);
        assert_eq!(parse_graph_spec("C5").unwrap().edge_count(), 5);
        assert_eq!(parse_graph_spec("Q3").unwrap().n(), 8);
        assert_eq!(parse_graph_spec("K3^2").unwrap().n(), 9);
        assert_eq!(parse_graph_spec("star4").unwrap().n(), 5);
        assert_eq!(parse_graph_spec("layer(3,2)").unwrap().n(), 6);
        assert_eq!(parse_graph_spec("johnson(4,2,1)").unwrap().edge_count(), 12);
        assert_eq!(parse_graph_spec("moser").unwrap().n(), 7);
        assert!(parse_graph_spec("no_such_file.txt").is_err());
    }

    #[test]
    fn arrow_subcommand_reports() {
        let out = capture(&[
            "unit-ramsey",
            "arrow",
            "--graph",
            "K3^2",
            "--family",
            "P3",
            "--r",
            "2",
        ]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["holds"], serde_json::json!(true));
        assert_eq!(v["command"], serde_json::json!("arrow"));
    }

    #[test]
    fn bounds_rho_reports() {
        let out = capture(&["unit-ramsey", "bounds", "rho", "--l", "2"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let r = v["result"]["r_l"].as_f64().unwrap();
        assert!((r - 0.5257311).abs() < 1e-6);
    }

    #[test]
    fn mod3_reports() {
        let out = capture(&["unit-ramsey", "mod3", "--n", "3"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["copies"], serde_json::json!(81));
        assert_eq!(v["result"]["monochromatic"], serde_json::json!(0));
    }

    #[test]
    fn usage_errors_exit_1() {
        let code = run(["unit-ramsey", "no-such-command"]
            .iter()
            .map(|s| s.to_string()));
        assert_eq!(code, 1);
    }

    #[test]
    fn file_based_flows() {
        let dir = std::env::temp_dir().join(format!("unit-ramsey-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();

        // Graph from a JSON file feeds the arrow check.
        let rook = crate::graph::cartesian_product(
            &generators::gen_standard(Family::Complete(3)).unwrap(),
            &generators::gen_standard(Family::Complete(3)).unwrap(),
        )
        .unwrap();
        let gpath = dir.join("k3_square_k3.json");
        std::fs::write(&gpath, rook.to_json()).unwrap();
        let out = capture(&[
            "unit-ramsey",
            "arrow",
            "--graph",
            gpath.to_str().unwrap(),
            "--family",
            "P3",
            "--r",
            "2",
        ]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["holds"], serde_json::json!(true));

        // DIMACS export writes the raw formula when --out is given.
        let cnf_path = dir.join("spindle.cnf");
        let code = run([
            "unit-ramsey",
            "export-cnf",
            "--graph",
            "moser",
            "--family",
            "C3,C5,C7",
            "--r",
            "2",
            "--out",
            cnf_path.to_str().unwrap(),
        ]
        .iter()
        .map(|s| s.to_string()));
        assert_eq!(code, 0);
        let dimacs = std::fs::read_to_string(&cnf_path).unwrap();
        assert!(dimacs.contains("p cnf 14 "));
        assert!(dimacs.starts_with("c var x_{0,0} = 1"));

        // Coordinate CSV round-trips through the ingest subcommand.
        let csv_path = dir.join("triangle.csv");
        std::fs::write(&csv_path, "# dim=2\n0,0\n1,0\n0.5,0.8660254037844386\n").unwrap();
        let out = capture(&[
            "unit-ramsey",
            "ingest",
            "--coords",
            csv_path.to_str().unwrap(),
        ]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["graph"]["n"], serde_json::json!(3));
        assert_eq!(v["result"]["graph"]["edges"].as_array().unwrap().len(), 3);

        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn budget_errors_exit_2() {
        let code = run(["unit-ramsey", "power", "--g", "K3", "--n", "9"]
            .iter()
            .map(|s| s.to_string()));
        assert_eq!(code, 2);
    }

    #[test]
    fn reports_are_reproducible() {
        let args = [
            "unit-ramsey",
            "plane-falsify",
            "--scheme",
            "strips",
            "--config-kind",
            "path3",
            "--trials",
            "500",
            "--seed",
            "7",
            "--deterministic",
        ];
        let a = capture(&args);
        let b = capture(&args);
        assert_eq!(a, b);
    }
}
