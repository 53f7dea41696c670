use std::path::Path;

use serde::Serialize;

use recon_core::engine::{token_counts, Analysis};
use recon_core::oracle::{Model, Oracle};
use recon_core::witness::{accessible_vertices, build_jump_witness, maximum_independent_set};
use recon_core::{build_maximal_cotree, build_witness, decide as engine_decide, is_cograph, tj_decide, Graph, NodeKind, VertexSet};

use crate::input::{parse_set, read_graph};
use crate::{CliError, Format, ModelArg, Query};

/// A parsed query. For token jumping `k` is `|A| - 1`.
pub struct Instance {
    pub graph: Graph,
    pub a: VertexSet,
    pub b: VertexSet,
    pub k: usize,
    pub model: ModelArg,
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let parsed = read_graph(path)?;
    for w in &parsed.warnings {
        eprintln!("warning: {w}");
    }
    Ok(parsed.graph)
}

pub fn load(q: &Query) -> Result<Instance, CliError> {
    let graph = load_graph(&q.graph)?;
    let a = parse_set(&q.a, &graph, "A")?;
    let b = parse_set(&q.b, &graph, "B")?;
    let k = match q.model {
        ModelArg::Tar => q.k.ok_or_else(|| CliError::Input("-k is required for the tar model".into()))?,
        ModelArg::Tj => {
            if a.len() != b.len() {
                return Err(CliError::Input(format!("token jumping needs |A| = |B|, got {} and {}", a.len(), b.len())));
            }
            if q.k.is_some() {
                eprintln!("warning: -k is ignored for the tj model");
            }
            a.len().saturating_sub(1)
        }
    };
    Ok(Instance { graph, a, b, k, model: q.model })
}

/// Engine answer plus a one-line reason when unreachable.
fn answer(inst: &Instance) -> Result<(bool, Option<String>), CliError> {
    let d = engine_decide(&inst.graph, &inst.a, &inst.b, inst.k)?;
    if inst.model == ModelArg::Tj {
        let tj = tj_decide(&inst.graph, &inst.a, &inst.b)?;
        if tj != d.reachable {
            return Err(CliError::Mismatch("token jumping and addition/removal answers disagree".into()));
        }
    }
    Ok((d.reachable, d.failure.map(|f| f.to_string())))
}

fn verdict(reachable: bool) -> &'static str {
    if reachable {
        "REACHABLE"
    } else {
        "UNREACHABLE"
    }
}

pub fn decide(q: &Query) -> Result<u8, CliError> {
    let inst = load(q)?;
    let (reachable, why) = answer(&inst)?;
    println!("{}", verdict(reachable));
    if let Some(why) = why {
        println!("failure: {why}");
    }
    Ok(if reachable { 0 } else { 1 })
}

#[derive(Serialize)]
struct JsonStep {
    op: &'static str,
    v: usize,
}

#[derive(Serialize)]
struct JsonStats {
    n: usize,
    k: usize,
    alpha_accessible: Option<usize>,
}

#[derive(Serialize)]
struct JsonWitness {
    reachable: bool,
    model: &'static str,
    length: Option<usize>,
    steps: Vec<JsonStep>,
    sets: Vec<Vec<usize>>,
    stats: JsonStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<String>,
}

/// Size of a maximum independent set among the vertices reachable
/// configurations can use; `None` off cographs.
fn alpha_accessible(g: &Graph, a: &VertexSet, k: usize) -> Result<Option<usize>, CliError> {
    if !is_cograph(g) || a.len() < k {
        return Ok(None);
    }
    let keep = accessible_vertices(g, a, k)?;
    if keep.is_empty() {
        return Ok(Some(0));
    }
    let t = build_maximal_cotree(&g.induced_subgraph(&keep)?);
    Ok(Some(maximum_independent_set(&t)?.len()))
}

pub fn witness(q: &Query, format: Format) -> Result<u8, CliError> {
    let inst = load(q)?;
    let (reachable, failure) = answer(&inst)?;
    let (steps, sets): (Vec<(bool, usize)>, Vec<VertexSet>) = if !reachable {
        (Vec::new(), Vec::new())
    } else if inst.model == ModelArg::Tar {
        let w = build_witness(&inst.graph, &inst.a, &inst.b, inst.k)?;
        w.check_endpoints(&inst.graph, &inst.a, &inst.b)?;
        let steps = w.steps().iter().map(|s| (matches!(s, recon_core::Step::Add(_)), s.vertex())).collect();
        (steps, w.sets())
    } else {
        let w = build_jump_witness(&inst.graph, &inst.a, &inst.b)?;
        w.check_endpoints(&inst.graph, &inst.a, &inst.b)?;
        let steps = w.jumps().iter().flat_map(|j| [(false, j.from), (true, j.to)]).collect();
        (steps, w.sets())
    };
    let length = reachable.then(|| sets.len().saturating_sub(1));

    match format {
        Format::Json => {
            let out = JsonWitness {
                reachable,
                model: if inst.model == ModelArg::Tar { "tar" } else { "tj" },
                length,
                steps: steps.iter().map(|&(add, v)| JsonStep { op: if add { "add" } else { "remove" }, v }).collect(),
                sets: sets.iter().map(|s| s.as_slice().to_vec()).collect(),
                stats: JsonStats {
                    n: inst.graph.vertex_count(),
                    k: inst.k,
                    alpha_accessible: alpha_accessible(&inst.graph, &inst.a, inst.k)?,
                },
                failure,
            };
            println!("{}", serde_json::to_string(&out).expect("witness serializes"));
        }
        Format::Plain | Format::Diff => {
            println!("{}", verdict(reachable));
            if let Some(why) = failure {
                println!("failure: {why}");
            }
            if reachable && format == Format::Plain {
                for s in &sets {
                    println!("{s}");
                }
            } else if reachable {
                println!("{}", inst.a);
                let sign = |add: bool| if add { '+' } else { '-' };
                match inst.model {
                    ModelArg::Tar => steps.iter().for_each(|&(add, v)| println!("{}{v}", sign(add))),
                    ModelArg::Tj => steps.chunks(2).for_each(|p| println!("-{} +{}", p[0].1, p[1].1)),
                }
            }
        }
    }
    Ok(if reachable { 0 } else { 1 })
}

pub fn tables(path: &Path, a: &str, k: usize) -> Result<u8, CliError> {
    let g = load_graph(path)?;
    let a = parse_set(a, &g, "A")?;
    println!("n={} m={} k={k} A={a}", g.vertex_count(), g.edge_count());
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    let t = build_maximal_cotree(&g);
    let an = Analysis::new(&t, &a, k)?;
    let tokens = token_counts(&t, &a)?;
    print!("{}", t.dump());
    for u in t.preorder() {
        let ris = &an.ris[u];
        let v = &an.values;
        println!(
            "#{u} {} tokens={} ris={:?} freedom={} cap={} blocked={}",
            t.kind(u).name(),
            tokens[u],
            ris.values(),
            v.freedom(u),
            v.cap(u),
            if v.blocked(u) { "yes" } else { "no" }
        );
        if t.kind(u) == NodeKind::Union {
            let tuples: Vec<String> = (0..=ris.base_size())
                .filter_map(|ell| ris.tuple(ell).map(|(x, y)| format!("{ell}:({x},{y})")))
                .collect();
            println!("  stable {}", tuples.join(" "));
        }
    }
    Ok(0)
}

pub fn oracle(q: &Query) -> Result<u8, CliError> {
    let inst = load(q)?;
    let o = Oracle::from_env();
    let (engine, _) = answer(&inst)?;
    let (model, k) = match inst.model {
        ModelArg::Tar => (Model::Tar, inst.k),
        ModelArg::Tj => (Model::Tj, inst.a.len()),
    };
    let truth = if inst.a.len() < k || inst.b.len() < k {
        None
    } else {
        Some(o.reach(&inst.graph, &inst.a, &inst.b, k, model)?)
    };
    let oracle_says = truth.is_some_and(|r| r.reachable);
    println!("engine: {}", verdict(engine));
    match truth.and_then(|r| r.distance) {
        Some(d) => println!("oracle: REACHABLE in {d} moves"),
        None => println!("oracle: UNREACHABLE"),
    }
    if engine != oracle_says {
        println!("MISMATCH");
        return Err(CliError::Mismatch("engine and brute force disagree".into()));
    }
    if let (true, Some(d)) = (engine && is_cograph(&inst.graph), truth.and_then(|r| r.distance)) {
        let len = match inst.model {
            ModelArg::Tar => build_witness(&inst.graph, &inst.a, &inst.b, inst.k)?.len(),
            ModelArg::Tj => build_jump_witness(&inst.graph, &inst.a, &inst.b)?.len(),
        };
        println!("witness: {len} moves");
        if len < d {
            return Err(CliError::Mismatch(format!("witness of {len} moves beats the shortest path {d}")));
        }
    }
    println!("AGREE");
    Ok(0)
}
