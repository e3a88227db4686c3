//! JSON and Graphviz DOT renderings of graphs.

use serde::Serialize;

use crate::graph::{Graph, GraphPath};

#[derive(Serialize)]
struct JsonGraph {
    nodes: Vec<String>,
    edges: Vec<[String; 2]>,
}

/// `{"nodes":[...],"edges":[[s,t],...]}` with every label as a string,
/// followed by a newline.
pub fn to_json(g: &Graph) -> String {
    let doc = JsonGraph {
        nodes: g.nodes().iter().map(ToString::to_string).collect(),
        edges: g
            .edge_labels()
            .map(|(s, t)| [s.to_string(), t.to_string()])
            .collect(),
    };
    let mut out = serde_json::to_string(&doc).expect("strings always serialize");
    out.push('\n');
    out
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// Node declarations first, then edges; edges on `highlight` are drawn bold.
pub fn to_dot(g: &Graph, highlight: Option<&GraphPath>) -> String {
    let mut out = String::from("digraph {\n");
    for l in g.nodes() {
        out.push_str(&format!("  {};\n", quote(&l.to_string())));
    }
    for &(s, t) in g.edges() {
        let attrs = match highlight {
            Some(p) if p.contains_edge(s, t) => " [color=red, penwidth=2]",
            _ => "",
        };
        out.push_str(&format!(
            "  {} -> {}{};\n",
            quote(&g.label(s).to_string()),
            quote(&g.label(t).to_string()),
            attrs
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::linear_graph;

    #[test]
    fn json_line() {
        assert_eq!(
            to_json(&linear_graph(2)),
            "{\"nodes\":[\"0\",\"1\",\"2\"],\"edges\":[[\"0\",\"1\"],[\"1\",\"2\"]]}\n"
        );
    }

    #[test]
    fn dot_line() {
        let g = linear_graph(1);
        let p = GraphPath::new(&g, vec![0, 1]).unwrap();
        assert_eq!(
            to_dot(&g, Some(&p)),
            "digraph {\n  \"0\";\n  \"1\";\n  \"0\" -> \"1\" [color=red, penwidth=2];\n}\n"
        );
        assert_eq!(
            to_dot(&g, None),
            "digraph {\n  \"0\";\n  \"1\";\n  \"0\" -> \"1\";\n}\n"
        );
    }
}
