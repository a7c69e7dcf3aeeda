//! Graphviz output with classed edges.
//!
//! Oriented generator edges are red, the self-conjugate generator is blue and
//! undirected, chiral conjugation is dashed. Right chiral generators of the
//! Ocneanu graph are drawn bold to tell them from the left ones.

use std::fmt::Write;

use crate::payload::{Algebra, Oc, Rows};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeClass {
    /// Edge of a generator of nonzero n-ality, drawn from source to target.
    Oriented { generator: &'static str, side: Side },
    /// Edge of a self-conjugate generator, drawn once per unordered pair.
    Unoriented { generator: &'static str, side: Side },
    /// Pair exchanged by chiral conjugation.
    Conjugation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub class: EdgeClass,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DotGraph {
    pub name: String,
    pub nodes: Vec<String>,
    pub edges: Vec<Edge>,
}

fn oriented(m: &Rows, generator: &'static str, side: Side, out: &mut Vec<Edge>) {
    for (i, row) in m.iter().enumerate() {
        for (j, &n) in row.iter().enumerate() {
            for _ in 0..n.max(0) {
                out.push(Edge { from: i, to: j, class: EdgeClass::Oriented { generator, side } });
            }
        }
    }
}

fn unoriented(m: &Rows, generator: &'static str, side: Side, out: &mut Vec<Edge>) {
    for (i, row) in m.iter().enumerate() {
        for (j, &n) in row.iter().enumerate().skip(i) {
            for _ in 0..n.max(0) {
                out.push(Edge { from: i, to: j, class: EdgeClass::Unoriented { generator, side } });
            }
        }
    }
}

impl DotGraph {
    /// The labeled `E4` graph: `F_100` red and oriented, `F_010` blue.
    pub fn from_algebra(a: &Algebra) -> Self {
        let mut edges = Vec::new();
        if let [f100, f010, ..] = a.generators.as_slice() {
            oriented(f100, "100", Side::Left, &mut edges);
            unoriented(f010, "010", Side::Left, &mut edges);
        }
        DotGraph { name: "E4".into(), nodes: a.labels.clone(), edges }
    }

    /// Ocneanu graph: left and right chiral generators plus conjugation pairs.
    pub fn from_oc(oc: &Oc) -> Self {
        let mut edges = Vec::new();
        for (side, gens) in [(Side::Left, &oc.left), (Side::Right, &oc.right)] {
            if let [f100, f010, ..] = gens.as_slice() {
                oriented(f100, "100", side, &mut edges);
                unoriented(f010, "010", side, &mut edges);
            }
        }
        for (i, &j) in oc.conjugation.iter().enumerate() {
            if i < j {
                edges.push(Edge { from: i, to: j, class: EdgeClass::Conjugation });
            }
        }
        let nodes = oc.vertices.iter().map(|&(d, c)| format!("{d}.{c}")).collect();
        DotGraph { name: "Oc".into(), nodes, edges }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let name = if self.name.is_empty() { "G" } else { &self.name };
        writeln!(s, "digraph \"{}\" {{", escape(name)).unwrap();
        if !self.nodes.is_empty() {
            writeln!(s, "  node [shape=circle];").unwrap();
        }
        for (i, label) in self.nodes.iter().enumerate() {
            writeln!(s, "  n{i} [label=\"{}\"];", escape(label)).unwrap();
        }
        for e in &self.edges {
            let attrs = match &e.class {
                EdgeClass::Oriented { generator, side } => {
                    format!("color=red, dir=forward{}, tooltip=\"{generator}\"", weight(*side))
                }
                EdgeClass::Unoriented { generator, side } => {
                    format!("color=blue, dir=none{}, tooltip=\"{generator}\"", weight(*side))
                }
                EdgeClass::Conjugation => "style=dashed, color=gray40, dir=both, tooltip=\"conjugation\"".into(),
            };
            writeln!(s, "  n{} -> n{} [{attrs}];", e.from, e.to).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

fn weight(side: Side) -> &'static str {
    match side {
        Side::Left => "",
        Side::Right => ", style=bold",
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_is_valid() {
        assert_eq!(DotGraph::default().render(), "digraph \"G\" {\n}\n");
    }

    #[test]
    fn symmetric_generator_draws_each_pair_once() {
        let mut e = Vec::new();
        unoriented(&vec![vec![0, 1], vec![1, 1]], "010", Side::Left, &mut e);
        assert_eq!(e.iter().map(|e| (e.from, e.to)).collect::<Vec<_>>(), vec![(0, 1), (1, 1)]);
    }
}
