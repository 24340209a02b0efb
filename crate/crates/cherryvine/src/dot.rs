//! Graphviz output: clusters as nodes, separators as edge labels.

use std::fmt::Write;

use cherryvine_core::{JunctionTree, VertexSet};

use crate::format::Structure;

/// Node name for a cluster: `123` when every id is a single digit, `10,11,12`
/// otherwise.
pub fn cluster_name(c: &VertexSet) -> String {
    let ids: Vec<String> = c.iter().map(|v| v.to_string()).collect();
    if c.iter().all(|v| v < 10) {
        ids.concat()
    } else {
        ids.join(",")
    }
}

fn comma_list(s: &VertexSet) -> String {
    let ids: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    ids.join(",")
}

fn write_tree(out: &mut String, jt: &JunctionTree, prefix: &str, indent: &str) {
    let clusters = jt.sorted_clusters();
    for c in &clusters {
        let name = cluster_name(c);
        writeln!(out, "{indent}\"{prefix}{name}\" [label=\"{name}\"];").unwrap();
    }
    let mut edges: Vec<(VertexSet, VertexSet)> = jt
        .edge_contents()
        .into_iter()
        .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
        .collect();
    edges.sort();
    for (a, b) in edges {
        let sep = a.intersection(&b);
        writeln!(
            out,
            "{indent}\"{prefix}{}\" -- \"{prefix}{}\" [label=\"{}\"];",
            cluster_name(&a),
            cluster_name(&b),
            comma_list(&sep)
        )
        .unwrap();
    }
}

/// Deterministic DOT text. Vines get one `cluster_T<l>` subgraph per level
/// with node ids prefixed `T<l>:` so equal vertex sets on different levels
/// stay distinct.
pub fn emit_dot(s: &Structure) -> String {
    let mut out = String::new();
    match s {
        Structure::JunctionTree(jt) => {
            out.push_str("graph junction_tree {\n");
            write_tree(&mut out, jt, "", "  ");
        }
        Structure::CherryTree(ct) => {
            out.push_str("graph cherry_tree {\n");
            writeln!(out, "  label=\"order {}\";", ct.order()).unwrap();
            write_tree(&mut out, ct, "", "  ");
        }
        Structure::Vine(v) => {
            out.push_str("graph vine {\n");
            out.push_str("  subgraph cluster_T1 {\n    label=\"T1\";\n");
            for x in v.base().vertices().iter() {
                writeln!(out, "    \"T1:{x}\" [label=\"{x}\"];").unwrap();
            }
            let mut edges = v.base().edges().to_vec();
            edges.sort_unstable();
            for (a, b) in edges {
                writeln!(out, "    \"T1:{a}\" -- \"T1:{b}\";").unwrap();
            }
            out.push_str("  }\n");
            for level in v.levels() {
                let l = level.order();
                writeln!(out, "  subgraph cluster_T{l} {{\n    label=\"T{l}\";").unwrap();
                write_tree(&mut out, level, &format!("T{l}:"), "    ");
                out.push_str("  }\n");
            }
        }
    }
    out.push_str("}\n");
    out
}
