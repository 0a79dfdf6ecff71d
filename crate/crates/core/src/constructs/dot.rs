//! Graphviz export of Hasse diagrams.

use std::fmt::Write as _;

use crate::ortho::OrthoPoset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// A bottom-up layered digraph: one node per element, annotated with its
/// orthocomplement, one edge per cover, one rank per height.
pub fn export_dot(name: &str, op: &OrthoPoset) -> String {
    let p = op.poset();
    let heights = p.heights();
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for x in p.elements() {
        writeln!(
            out,
            "  n{x} [label={}, xlabel={}];",
            quote(p.label(x)),
            quote(&format!("'={}", p.label(op.prime(x))))
        )
        .unwrap();
    }
    let max_height = heights.iter().copied().max().unwrap_or(0);
    for h in 0..=max_height {
        let nodes: Vec<String> = p.elements().filter(|&x| heights[x] == h).map(|x| format!("n{x};")).collect();
        writeln!(out, "  {{ rank=same; {} }}", nodes.join(" ")).unwrap();
    }
    for (u, v) in p.covers() {
        writeln!(out, "  n{u} -> n{v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructs::fixtures::{boolean_algebra, fig3, fig7_o6};

    fn counts(dot: &str) -> (usize, usize) {
        let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
        let edges = dot.lines().filter(|l| l.contains("->")).count();
        (nodes, edges)
    }

    #[test]
    fn node_and_edge_counts() {
        assert_eq!(counts(&export_dot("o6", &fig7_o6())), (6, 6));
        assert_eq!(counts(&export_dot("chain", &boolean_algebra(1))), (2, 1));
        // 8 bottom-atom, 24 atom-coatom, 8 coatom-top covers
        assert_eq!(counts(&export_dot("fig3", &fig3())), (18, 40));
    }

    #[test]
    fn output_is_deterministic_and_annotated() {
        let a = export_dot("o6", &fig7_o6());
        assert_eq!(a, export_dot("o6", &fig7_o6()));
        assert!(a.contains("n1 [label=\"a\", xlabel=\"'=a'\"];"));
        assert!(a.contains("{ rank=same; n1; n2; }"));
        assert!(a.starts_with("digraph \"o6\" {\n  rankdir=BT;"));
    }
}
