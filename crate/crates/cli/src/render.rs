//! Diagram rendering: ASCII Young diagrams with per-cell hook lengths, and
//! DOT digraphs for the gap poset and its bottom edge.

use std::collections::BTreeSet;
use std::fmt::Write;

use dcores::core_poset::{BottomEdge, GapPoset};
use dcores::partitions::HookGrid;

/// Left-justified boxed Young diagram, each cell showing its hook length.
pub fn young_ascii(grid: &HookGrid) -> String {
    let rows = grid.rows();
    if rows.is_empty() {
        return "(empty partition)\n".to_string();
    }
    let width = rows[0][0].to_string().len();
    let border = |cells: usize| {
        let mut line = String::new();
        for _ in 0..cells {
            line.push('+');
            line.push_str(&"-".repeat(width));
        }
        line.push_str("+\n");
        line
    };
    let mut out = String::new();
    out.push_str(&border(rows[0].len()));
    for row in rows {
        for value in row {
            write!(out, "|{value:>width$}").unwrap();
        }
        out.push_str("|\n");
        // rows shrink left to right, so this border also tops the next row
        out.push_str(&border(row.len()));
    }
    out
}

/// DOT digraph of the gap poset: one node per gap, edges from each gap to
/// the gaps s and t below it, witness-ideal nodes filled.
pub fn hasse_dot(poset: &GapPoset, filled: &BTreeSet<i64>) -> String {
    let (s, t) = (poset.params().s(), poset.params().t());
    let mut out = String::from("digraph gap_poset {\n  rankdir = BT;\n  node [shape = ellipse];\n");
    for &x in poset.gaps() {
        if filled.contains(&x) {
            writeln!(out, "  {x} [label=\"{x}\", style=filled];").unwrap();
        } else {
            writeln!(out, "  {x} [label=\"{x}\"];").unwrap();
        }
    }
    for &x in poset.gaps() {
        for u in [s, t] {
            if x - u >= 1 && poset.contains(x - u) {
                writeln!(out, "  {x} -> {};", x - u).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// DOT path through the bottom edge in its total order, nodes colored by
/// residue class mod k (one hue per ledge).
pub fn edge_dot(edge: &BottomEdge) -> String {
    let k = edge.params().k();
    let mut out = String::from(
        "digraph bottom_edge {\n  rankdir = LR;\n  node [shape = circle, style = filled];\n",
    );
    for &x in edge.ordered() {
        let hue = x.rem_euclid(k) as f64 / k as f64;
        writeln!(
            out,
            "  {x} [label=\"{x}\", fillcolor=\"{hue:.3} 0.300 1.000\"];"
        )
        .unwrap();
    }
    for pair in edge.ordered().windows(2) {
        writeln!(out, "  {} -> {};", pair[0], pair[1]).unwrap();
    }
    out.push_str("}\n");
    out
}
