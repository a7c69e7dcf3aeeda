//! Artifacts shared by the integration tests, computed once per binary.

#![allow(dead_code)]

use std::sync::OnceLock;

use qgraph::stages::{self, Output};

pub struct Chain {
    pub alcove: Output,
    pub fusion: Output,
    pub modular: Output,
    pub scan: Output,
    pub invariant: Output,
    pub toric: Output,
    pub oc_graph: Output,
    pub algebra: Output,
    pub realization: Output,
}

impl Chain {
    pub fn all(&self) -> [&Output; 9] {
        [
            &self.alcove,
            &self.fusion,
            &self.modular,
            &self.scan,
            &self.invariant,
            &self.toric,
            &self.oc_graph,
            &self.algebra,
            &self.realization,
        ]
    }
}

pub fn chain() -> &'static Chain {
    static C: OnceLock<Chain> = OnceLock::new();
    C.get_or_init(|| {
        let invariant = stages::invariant("e4").unwrap();
        let toric = stages::split(&invariant.record).unwrap();
        let oc_graph = stages::ocneanu(&toric.record).unwrap();
        let [algebra, realization] = stages::realize(&oc_graph.record).unwrap();
        Chain {
            alcove: stages::alcove("A3", 4).unwrap(),
            fusion: stages::fusion("A3", 4).unwrap(),
            modular: stages::modular("A3", 4).unwrap(),
            scan: stages::embed_scan("SU(3)", 40, 100_000, None).unwrap(),
            invariant,
            toric,
            oc_graph,
            algebra,
            realization,
        }
    })
}
