//! The complete `E4(SU(4))` chain, from the conformal embedding
//! `SU(4)₄ ⊂ Spin(15)₁` to the realized quantum symmetries.

use alloc::vec::Vec;

use crate::embed::{branching_for, solve_invariant, ModularInvariant};
use crate::fusion::{all_fusion_matrices, FusionRing};
use crate::graph::algebra::{graph_algebra_e4, E4Algebra};
use crate::graph::oc::OcAlgebra;
use crate::graph::QuantumGraph;
use crate::iso::isomorphism;
use crate::lie::AlgebraSpec;
use crate::modular::ModularData;
use crate::split::{build_k_family, chiral_generators, solve_splitting, ChiralGenerators, KFamily, OcGraph, ToricFamily};
use crate::{IntMatrix, Result};

/// Level of the `E4` graph.
pub const E4_LEVEL: u32 = 4;

/// Every intermediate artifact of the `E4` reconstruction.
#[derive(Clone, Debug)]
pub struct E4Pipeline {
    pub modular: ModularData,
    pub ring: FusionRing,
    pub invariant: ModularInvariant,
    pub k_family: KFamily,
    pub toric: ToricFamily,
    pub chiral: ChiralGenerators,
    /// Unit component of the left chiral graph, in lift order.
    pub module_graph: QuantumGraph,
    pub algebra: E4Algebra,
    /// Annular matrices of the labeled graph, in alcove order.
    pub annular: Vec<IntMatrix>,
    pub oc: OcAlgebra,
    /// Ocneanu graph with the chiral conjugation that matches the realization.
    pub oc_graph: OcGraph,
    /// `σ` with `O`-matrix `σ(i), σ(j)` equal to generator entry `i, j`.
    pub realization_map: Option<Vec<usize>>,
}

impl E4Pipeline {
    pub fn run() -> Result<Self> {
        let su4 = AlgebraSpec::a(3);
        let modular = ModularData::new(&su4, E4_LEVEL)?;
        let ring = all_fusion_matrices(E4_LEVEL)?;
        let ansatz = branching_for(&AlgebraSpec::b(7), &su4, E4_LEVEL)?;
        let invariant = solve_invariant(&ansatz, &modular, 3)?;
        let k_family = build_k_family(&invariant.m, &ring);
        let toric = solve_splitting(&k_family, invariant.quantum_symmetries() as usize)?;
        let chiral = chiral_generators(&toric, &ring)?;
        let module_graph = chiral.graph.module_graph()?;
        let algebra = graph_algebra_e4(&module_graph)?;
        let annular = algebra.graph.annular_matrices(E4_LEVEL)?;
        let oc = OcAlgebra::new(&algebra.algebra)?;
        let (oc_graph, realization_map) = match_realization(&chiral, &oc);
        Ok(E4Pipeline {
            modular,
            ring,
            invariant,
            k_family,
            toric,
            chiral,
            module_graph,
            algebra,
            annular,
            oc,
            oc_graph,
            realization_map,
        })
    }
}

/// Picks the first admissible chiral conjugation under which the six chiral
/// generators of the Ocneanu graph are simultaneously isomorphic to the
/// left-multiplication matrices of the realization.
pub fn match_realization(chiral: &ChiralGenerators, oc: &OcAlgebra) -> (OcGraph, Option<Vec<usize>>) {
    let o: Vec<IntMatrix> =
        oc.left_generators().iter().chain(oc.right_generators().iter()).map(|&x| oc.o_matrix(x)).collect();
    let dst: Vec<&IntMatrix> = o.iter().collect();
    let unit = oc.index(0, 0).expect("unit");
    for p in &chiral.conjugations {
        let g = chiral.graph.with_conjugation(p);
        let src: Vec<&IntMatrix> = g.left.iter().chain(g.right.iter()).collect();
        if let Some(sigma) = isomorphism(&src, &dst, &[(0, unit)]) {
            return (g, Some(sigma));
        }
    }
    (chiral.graph.clone(), None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pipeline_runs() {
        let p = E4Pipeline::run().unwrap();
        assert!(p.realization_map.is_some());
        assert_eq!(p.oc_graph.ambichiral.len(), 3);
        assert_eq!(p.toric.total(), 48);
    }
}
