//! DOT rendering of the graph-like artifacts.

mod common;

use qgraph::artifact::Kind;
use qgraph::dot::{DotGraph, EdgeClass};
use qgraph::payload;

fn nodes(text: &str) -> usize {
    text.lines().filter(|l| l.contains("[label=")).count()
}

fn edges_with(text: &str, attr: &str) -> usize {
    text.lines().filter(|l| l.contains("->") && l.contains(attr)).count()
}

#[test]
fn e4_graph() {
    let a: payload::Algebra = common::chain().algebra.record.decode(Kind::GraphAlgebra).unwrap();
    let g = DotGraph::from_algebra(&a);
    let text = g.render();
    assert!(text.starts_with("digraph \"E4\" {\n") && text.ends_with("}\n"));
    assert_eq!(nodes(&text), 12);
    let f100: i64 = a.generators[0].iter().flatten().sum();
    assert_eq!(edges_with(&text, "color=red, dir=forward") as i64, f100);
    assert!(edges_with(&text, "color=blue, dir=none") > 0);
    assert_eq!(edges_with(&text, "dashed"), 0);
    // The F_010 edges are exactly the upper triangle of a symmetric matrix.
    let f010 = &a.generators[1];
    let upper: i64 = (0..12).flat_map(|i| (i..12).map(move |j| (i, j))).map(|(i, j)| f010[i][j]).sum();
    let blue = g.edges.iter().filter(|e| matches!(e.class, EdgeClass::Unoriented { .. })).count();
    assert_eq!(blue as i64, upper);
}

#[test]
fn ocneanu_graph() {
    let oc: payload::Oc = common::chain().oc_graph.record.decode(Kind::OcGraph).unwrap();
    let text = DotGraph::from_oc(&oc).render();
    assert_eq!(nodes(&text), 48);
    assert!(edges_with(&text, "color=red") > 0);
    assert!(edges_with(&text, "color=blue") > 0);
    let fixed = oc.conjugation.iter().enumerate().filter(|&(i, &j)| i == j).count();
    assert_eq!(edges_with(&text, "style=dashed"), (48 - fixed) / 2);
    assert!(edges_with(&text, "style=dashed") > 0);
    assert!(edges_with(&text, "style=bold") > 0);
}

#[test]
fn rendering_is_deterministic() {
    let oc: payload::Oc = common::chain().oc_graph.record.decode(Kind::OcGraph).unwrap();
    assert_eq!(DotGraph::from_oc(&oc).render(), DotGraph::from_oc(&oc).render());
}

#[test]
fn empty_graph() {
    let text = DotGraph::default().render();
    assert_eq!(nodes(&text), 0);
    assert!(text.starts_with("digraph") && text.trim_end().ends_with('}'));
}
