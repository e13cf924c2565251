//! Graphviz export of layered belief states.
//!
//! One node per block, listed most plausible first. Edges join adjacent
//! blocks only; a connected block gets a self-loop. Pedigree exports label
//! each edge with the distinct ranks of the pairs it summarises.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::aggregate::Rank;
use crate::belief::LayeredForm;
use crate::pedigree::PedigreedBeliefState;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn nodes(out: &mut String, layers: &LayeredForm) {
    for (i, b) in layers.blocks().iter().enumerate() {
        let label = escape(&layers.block_names(b).join(","));
        let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
    }
}

pub fn export_dot(layers: &LayeredForm) -> String {
    let mut out = String::from("digraph belief {\n");
    nodes(&mut out, layers);
    let blocks = layers.blocks();
    for (i, b) in blocks.iter().enumerate() {
        if b.connected {
            let _ = writeln!(out, "  n{i} -> n{i};");
        }
        if i + 1 < blocks.len() {
            let _ = writeln!(out, "  n{i} -> n{};", i + 1);
        }
    }
    out.push_str("}\n");
    out
}

pub fn export_pedigree_dot(p: &PedigreedBeliefState) -> String {
    let layers = p.induced_state().to_layers();
    let blocks = layers.blocks();
    let labels = |from: usize, to: usize| -> String {
        let ranks: BTreeSet<Rank> = p
            .pairs()
            .filter(|((x, y), _)| blocks[from].worlds.contains(x) && blocks[to].worlds.contains(y))
            .map(|(_, r)| r)
            .collect();
        let ranks: Vec<String> = ranks.iter().rev().map(Rank::to_string).collect();
        ranks.join(",")
    };
    let mut out = String::from("digraph pedigree {\n");
    nodes(&mut out, &layers);
    for (i, b) in blocks.iter().enumerate() {
        if b.connected {
            let _ = writeln!(out, "  n{i} -> n{i} [label=\"{}\"];", labels(i, i));
        }
        if i + 1 < blocks.len() {
            let _ = writeln!(out, "  n{i} -> n{} [label=\"{}\"];", i + 1, labels(i, i + 1));
        }
    }
    out.push_str("}\n");
    out
}
