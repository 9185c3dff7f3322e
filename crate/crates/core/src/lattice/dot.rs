use std::collections::BTreeMap;
use std::fmt::Write;

use super::{CoverEdge, FiniteLattice};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

/// Hasse diagram in DOT syntax. Nodes appear in index order and edges in
/// `(lower, upper)` order, so output is byte-stable.
pub fn to_dot(
    l: &FiniteLattice,
    node_labels: Option<&[String]>,
    edge_labels: Option<&BTreeMap<CoverEdge, String>>,
) -> String {
    let mut out = String::new();
    out.push_str("digraph lattice {\n");
    out.push_str("  rankdir=BT;\n");
    for x in 0..l.len() {
        match node_labels.and_then(|labels| labels.get(x)) {
            Some(label) => writeln!(out, "  n{x} [label={}];", quote(label)).unwrap(),
            None => writeln!(out, "  n{x};").unwrap(),
        }
    }
    for c in l.covers() {
        match edge_labels.and_then(|labels| labels.get(&c)) {
            Some(label) => writeln!(
                out,
                "  n{} -> n{} [label={}];",
                c.lower,
                c.upper,
                quote(label)
            )
            .unwrap(),
            None => writeln!(out, "  n{} -> n{};", c.lower, c.upper).unwrap(),
        }
    }
    out.push_str("}\n");
    out
}
