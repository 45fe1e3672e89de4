//! DOT export for visualization.

use crate::graph::Graph;

/// Renders a graph in DOT syntax, vertices and edges in insertion order
/// with their identifiers as labels.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("digraph {\n");
    for v in g.vertices() {
        out.push_str(&format!("  \"{}\";\n", g.vertex_name(v)));
    }
    for e in g.edges() {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            g.vertex_name(g.src(e)),
            g.vertex_name(g.tgt(e)),
            g.edge_name(e)
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_graph_dot() {
        let g = Graph::line(2).unwrap();
        assert_eq!(
            to_dot(&g),
            "digraph {\n  \"v1\";\n  \"v2\";\n  \"v1\" -> \"v2\" [label=\"l1\"];\n}\n"
        );
    }
}
