//! Graphviz rendering of a class poset. Edges run from the larger class
//! to the one it covers.

use std::fmt::Write;

use crate::reports::PosetReport;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn render(p: &PosetReport) -> String {
    let mut out = String::from("digraph classes {\n  rankdir=TB;\n  node [shape=box];\n");
    for n in &p.nodes {
        let label = format!("{}: [{}]", n.summand_count, n.representative.join(","));
        writeln!(out, "  c{} [label=\"{}\"];", n.class, escape(&label)).expect("write to string");
    }
    for [lower, upper] in &p.covers {
        writeln!(out, "  c{upper} -> c{lower};").expect("write to string");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reports::PosetNode;

    #[test]
    fn edges_point_down() {
        let p = PosetReport {
            algebra: "A2".into(),
            order: "summand".into(),
            nodes: vec![
                PosetNode { class: 0, summand_count: 4, representative: vec!["1".into(), "2".into()] },
                PosetNode { class: 1, summand_count: 5, representative: vec!["2".into(), "12".into(), "1".into()] },
            ],
            relation: vec![[1, 0]],
            covers: vec![[1, 0]],
        };
        let dot = render(&p);
        assert!(dot.contains("c0 -> c1;"));
        assert!(dot.contains("c1 [label=\"5: [2,12,1]\"];"));
    }
}
