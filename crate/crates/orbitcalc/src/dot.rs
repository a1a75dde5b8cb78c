//! Graphviz export of orbit posets. Edges point from the smaller orbit to
//! the one covering it; PL orbits get a double outline.

use std::fmt::Write as _;

use orbitcalc_core::exceptional::LabeledPoset;

pub fn to_dot(poset: &LabeledPoset) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(poset.name())).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (i, n) in poset.nodes().iter().enumerate() {
        let mut attrs = format!("label=\"{}\"", escape(&n.name));
        if n.pl {
            attrs.push_str(", peripheries=2");
        }
        if n.special {
            attrs.push_str(", style=bold");
        }
        writeln!(out, "  n{i} [{attrs}];").unwrap();
    }
    for &(a, b) in poset.covers() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
