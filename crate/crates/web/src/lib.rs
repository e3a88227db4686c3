//! wasm-bindgen bindings for the browser demo in `www/`.
//!
//! Every export returns a JSON string. The `*_json` functions hold the logic
//! and are plain Rust so they can be tested natively.

use serde_json::{json, Value};
use twisted_cubes::graph::hamiltonian_paths;
use twisted_cubes::pospace::{
    can_embed, corner_embedding, emb, fmt_rational, rank, RankKind, RankedSpace,
};
use twisted_cubes::shapes::{shape_graph, Flavor, ShapeFamily, ShapeKind};
use twisted_cubes::words::{sort_bin, sort_num, unsort_num};
use twisted_cubes::{Budget, Graph, Label};
use wasm_bindgen::prelude::*;

/// Largest dimension the demo will draw or tabulate.
pub const MAX_DEMO_DIM: usize = 8;

fn check_dim(dim: usize) -> Result<(), String> {
    if dim > MAX_DEMO_DIM {
        Err(format!(
            "dimension {dim} is above the demo limit {MAX_DEMO_DIM}"
        ))
    } else {
        Ok(())
    }
}

fn parse_flavor(s: &str) -> Result<Flavor, String> {
    match s {
        "face" => Ok(Flavor::Face),
        "reflexive" => Ok(Flavor::Reflexive),
        _ => Err(format!("unknown flavor `{s}`")),
    }
}

fn parse_rank(s: &str) -> Result<RankKind, String> {
    match s {
        "std" => Ok(RankKind::Std),
        "tw" => Ok(RankKind::Tw),
        _ => Err(format!("unknown space `{s}`")),
    }
}

/// Unit-square position of a node: hypercube projection for words, an arc
/// for simplex vertices.
fn position(label: &Label, dim: usize) -> (f64, f64) {
    match label {
        Label::Word(w) => {
            let (mut x, mut y, mut total) = (0.0, 0.0, 0.0);
            for i in 0..dim {
                let angle = std::f64::consts::PI * (i as f64 + 0.5) / dim as f64;
                let len = 1.0 / (1.0 + 0.35 * i as f64);
                total += len;
                if w.get(i) {
                    x += len * angle.cos();
                    y -= len * angle.sin();
                }
            }
            if total == 0.0 {
                return (0.5, 0.5);
            }
            (0.5 + 0.45 * x / total, 0.95 + 0.9 * y / total)
        }
        Label::Int(k) => {
            let t = if dim == 0 {
                0.5
            } else {
                *k as f64 / dim as f64
            };
            let angle = std::f64::consts::PI * (1.0 - t);
            (0.5 + 0.45 * angle.cos(), 0.9 - 0.8 * angle.sin())
        }
    }
}

fn graph_value(g: &Graph, dim: usize, budget: &Budget) -> Result<Value, String> {
    let nodes: Vec<Value> = g
        .nodes()
        .iter()
        .map(|l| {
            let (x, y) = position(l, dim);
            json!({ "label": l.to_string(), "x": x, "y": y })
        })
        .collect();
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(s, t)| [s, t]).collect();
    let paths = hamiltonian_paths(g, budget).map_err(|e| e.to_string())?;
    let path = match paths.len() {
        0 => Value::Null,
        _ => json!(paths[0].nodes()),
    };
    Ok(json!({
        "nodes": nodes,
        "edges": edges,
        "hamiltonian": path,
        "hamiltonian_count": paths.len(),
    }))
}

/// Nodes with layout, edges as index pairs, and the first Hamiltonian path.
pub fn graph_view_json(family: &str, flavor: &str, dim: usize) -> Result<String, String> {
    check_dim(dim)?;
    let kind: ShapeKind = family
        .parse()
        .map_err(|e: twisted_cubes::Error| e.to_string())?;
    let spec = ShapeFamily::new(kind, parse_flavor(flavor)?, dim).map_err(|e| e.to_string())?;
    let budget = Budget::default();
    let g = shape_graph(spec, &budget).map_err(|e| e.to_string())?;
    Ok(graph_value(&g, dim, &budget)?.to_string())
}

/// Twisted-cube nodes in Hamiltonian order with their sorted labels.
pub fn sort_table_json(dim: usize) -> Result<String, String> {
    check_dim(dim)?;
    let rows = (0..1u64 << dim)
        .map(|i| {
            let label = unsort_num(dim, i).map_err(|e| e.to_string())?;
            Ok(json!({ "index": i, "label": label.to_string(), "sorted": sort_bin(&label).to_string() }))
        })
        .collect::<Result<Vec<Value>, String>>()?;
    Ok(Value::Array(rows).to_string())
}

/// Both ranks of every corner, in canonical word order. Ranks are exact
/// strings.
pub fn rank_profile_json(dim: usize) -> Result<String, String> {
    check_dim(dim)?;
    let rows: Vec<Value> = (0..1u64 << dim)
        .map(|i| {
            let w = twisted_cubes::BinaryWord::from_index(dim, i);
            json!({
                "corner": w.to_string(),
                "sort": sort_num(&w),
                "rank_std": fmt_rational(&rank(RankKind::Std, &emb(RankKind::Std, &w))),
                "rank_tw": fmt_rational(&rank(RankKind::Tw, &emb(RankKind::Tw, &w))),
            })
        })
        .collect();
    Ok(Value::Array(rows).to_string())
}

/// Embedding check of a cube family into the standard or twisted box.
pub fn embed_check_json(family: &str, space: &str, dim: usize) -> Result<String, String> {
    check_dim(dim)?;
    let kind = match family {
        "cube" => ShapeKind::Cube,
        "twisted" => ShapeKind::Twisted,
        _ => return Err(format!("embedding needs cube or twisted, got `{family}`")),
    };
    let rank_kind = parse_rank(space)?;
    let g =
        shape_graph(ShapeFamily::face(kind, dim), &Budget::default()).map_err(|e| e.to_string())?;
    let space = match rank_kind {
        RankKind::Std => RankedSpace::standard_cube(dim),
        RankKind::Tw => RankedSpace::twisted_cube(dim),
    };
    let report = can_embed(&g, &space, corner_embedding(rank_kind)).map_err(|e| e.to_string())?;
    let witness = report
        .order_witness
        .as_ref()
        .map(|(s, t)| json!([s.to_string(), t.to_string()]));
    Ok(json!({
        "pass": report.pass(),
        "injective": report.injective,
        "covers_corners": report.covers_corners,
        "order_preserving": report.order_preserving,
        "witness": witness,
        "detail": report.detail,
    })
    .to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn graph_view(family: &str, flavor: &str, dim: usize) -> Result<String, JsError> {
    js(graph_view_json(family, flavor, dim))
}

#[wasm_bindgen]
pub fn sort_table(dim: usize) -> Result<String, JsError> {
    js(sort_table_json(dim))
}

#[wasm_bindgen]
pub fn rank_profile(dim: usize) -> Result<String, JsError> {
    js(rank_profile_json(dim))
}

#[wasm_bindgen]
pub fn embed_check(family: &str, space: &str, dim: usize) -> Result<String, JsError> {
    js(embed_check_json(family, space, dim))
}
