//! Graphviz export. Each strong component becomes a cluster; clusters of
//! maximal components are drawn bold on a shaded background and highlighted
//! alternatives are filled.

use std::fmt::Write as _;

use crate::contraction::Condensation;
use crate::relation::DecisionProblem;
use crate::solutions::SolutionSet;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export_dot(p: &DecisionProblem, c: &Condensation, highlight: Option<&SolutionSet>) -> String {
    let maximal = c.maximal().indices;
    let highlighted = |x: usize| highlight.is_some_and(|s| s.members.binary_search(&x).is_ok());

    let mut out = String::new();
    out.push_str("digraph decision_problem {\n");
    out.push_str("  // edges point from the dominating alternative to the dominated one\n");
    out.push_str("  compound=true;\n  node [shape=circle];\n");
    if let Some(s) = highlight {
        writeln!(out, "  label={};", quote(&format!("highlighted: {}", s.concept))).unwrap();
    }
    for comp in c.components() {
        let is_max = maximal.binary_search(&comp.index).is_ok();
        writeln!(out, "  subgraph cluster_{} {{", comp.index).unwrap();
        writeln!(out, "    label={};", quote(&format!("X{}", comp.index))).unwrap();
        if is_max {
            out.push_str("    style=\"filled,bold\"; fillcolor=\"#fff4cc\";\n");
        } else {
            out.push_str("    style=dashed;\n");
        }
        for &x in &comp.members {
            let label = quote(&p.alternative(x).to_string());
            if highlighted(x) {
                writeln!(out, "    {x} [label={label}, style=filled, fillcolor=\"#ff9966\", penwidth=2];").unwrap();
            } else {
                writeln!(out, "    {x} [label={label}];").unwrap();
            }
        }
        out.push_str("  }\n");
    }
    for &(u, v) in p.edges() {
        writeln!(out, "  {u} -> {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
