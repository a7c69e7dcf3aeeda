//! Quantum graphs: annular and essential matrices, the `E4` graph algebra,
//! its Ocneanu realization and the block structure of both algebras.

pub mod algebra;
pub mod blocks;
pub mod oc;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::fusion::{recursion, FusionRing, PerronData};
use crate::iso::involutive_isomorphism;
use crate::{Error, IntMatrix, Result};

/// A module graph over `SU(4)` given by its three generator adjacencies.
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumGraph {
    /// `F_100`, `F_010`, `F_001 = F_100ᵀ`.
    pub generators: [IntMatrix; 3],
    pub unit: usize,
    pub labels: Vec<String>,
    /// Vertex conjugation `a ↦ ā`.
    pub conjugation: Vec<usize>,
    /// 4-ality of each vertex, with the unit at 0.
    pub grading: Vec<u8>,
    pub dims: PerronData,
}

impl QuantumGraph {
    /// Builds the graph from `F_100` and `F_010`.
    ///
    /// The grading is propagated from the unit along `F_100` edges. The
    /// conjugation is the first involution fixing the unit that maps `F_100`
    /// to its transpose and preserves `F_010`; callers that resolve a
    /// specific choice replace it with [`QuantumGraph::with_conjugation`].
    pub fn new(a: IntMatrix, b: IntMatrix, unit: usize, dims: PerronData) -> Result<Self> {
        let n = a.rows();
        let mut grading = vec![u8::MAX; n];
        grading[unit] = 0;
        let mut stack = vec![unit];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                for (m, step) in [(&a, 1u8), (&b, 2)] {
                    if m[(x, y)] == 0 {
                        continue;
                    }
                    let g = (grading[x] + step) % 4;
                    if grading[y] == u8::MAX {
                        grading[y] = g;
                        stack.push(y);
                    } else if grading[y] != g {
                        return Err(Error::ModuleLaw(format!("inconsistent 4-ality at vertex {y}")));
                    }
                }
            }
        }
        if grading.contains(&u8::MAX) {
            return Err(Error::NotIrreducible);
        }
        let at = a.transpose();
        let conjugation = involutive_isomorphism(&[&a, &b], &[&at, &b], &[(unit, unit)])
            .ok_or_else(|| Error::ModuleLaw("no conjugation exchanges F_100 and F_001".into()))?;
        let labels = (0..n).map(|i| format!("{}", i + 1)).collect();
        Ok(QuantumGraph { generators: [a, b, at], unit, labels, conjugation, grading, dims })
    }

    pub fn order(&self) -> usize {
        self.generators[0].rows()
    }

    /// The same graph with new vertex `i` equal to old vertex `perm[i]`.
    pub fn relabeled(&self, perm: &[usize], labels: Vec<String>) -> Self {
        let inv = inverse(perm);
        QuantumGraph {
            generators: self.generators.clone().map(|m| m.permuted(perm)),
            unit: inv[self.unit],
            labels,
            conjugation: perm.iter().map(|&old| inv[self.conjugation[old]]).collect(),
            grading: perm.iter().map(|&old| self.grading[old]).collect(),
            dims: PerronData {
                eigenvalue: self.dims.eigenvalue,
                vector: perm.iter().map(|&old| self.dims.vector[old]).collect(),
            },
        }
    }

    pub fn with_conjugation(mut self, conjugation: Vec<usize>) -> Self {
        self.conjugation = conjugation;
        self
    }

    /// Annular matrices `F_λ` in alcove order, by the fusion recursion.
    pub fn annular_matrices(&self, level: u32) -> Result<Vec<IntMatrix>> {
        let [a, b, c] = &self.generators;
        recursion([a, b, c], level)
    }

    /// `F_100` raises 4-ality by one and `F_010` by two.
    pub fn respects_grading(&self) -> bool {
        let n = self.order();
        [(0, 1u8), (1, 2), (2, 3)].iter().all(|&(g, step)| {
            (0..n).all(|x| (0..n).all(|y| self.generators[g][(x, y)] == 0 || self.grading[y] == (self.grading[x] + step) % 4))
        })
    }

    /// `ā` relates `F_100` to `F_001` and fixes `F_010`.
    pub fn conjugation_is_symmetry(&self) -> bool {
        let c = &self.conjugation;
        let n = self.order();
        let [a, b, at] = &self.generators;
        (0..n).all(|i| c[c[i]] == i)
            && (0..n).all(|i| (0..n).all(|j| a[(c[i], c[j])] == at[(i, j)] && b[(c[i], c[j])] == b[(i, j)]))
    }

    /// Quantum mass `Σ μ_a²`.
    pub fn mass(&self) -> f64 {
        self.dims.mass()
    }
}

pub(crate) fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// `F_λ F_μ = Σ_ν (N_λ)_{μν} F_ν` for all pairs; returns the first failure.
pub fn module_law_failure(f: &[IntMatrix], ring: &FusionRing) -> Option<(usize, usize)> {
    let r = ring.order();
    let n = f[0].rows();
    for l in 0..r {
        for m in 0..r {
            let lhs = &f[l] * &f[m];
            let mut rhs = IntMatrix::zeros(n, n);
            for (nu, fnu) in f.iter().enumerate() {
                let c = ring.matrices[l][(m, nu)];
                if c != 0 {
                    rhs.add_scaled(c, fnu);
                }
            }
            if lhs != rhs {
                return Some((l, m));
            }
        }
    }
    None
}

/// `(F_n)_{ab} = (F_n̄)_{ba}` for all `n`.
pub fn is_rigid(f: &[IntMatrix], ring: &FusionRing) -> bool {
    f.iter().enumerate().all(|(i, m)| m.transpose() == f[ring.conjugate_index(i)])
}

/// `d_n = Σ_{ab} (F_n)_{ab}`.
pub fn path_dimensions(f: &[IntMatrix]) -> Vec<i64> {
    f.iter().map(IntMatrix::sum).collect()
}

/// Essential matrix `(E_a)_{nb} = (F_n)_{ab}`, one row per alcove weight.
pub fn essential_matrix(f: &[IntMatrix], a: usize) -> IntMatrix {
    let cols = f[0].cols();
    IntMatrix::from_fn(f.len(), cols, |n, b| f[n][(a, b)])
}

/// Keeps only the columns in `keep`; the others are zeroed.
pub fn reduced(e: &IntMatrix, keep: &[usize]) -> IntMatrix {
    IntMatrix::from_fn(e.rows(), e.cols(), |i, j| if keep.contains(&j) { e[(i, j)] } else { 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::{all_fusion_matrices, quantum_dimensions};

    #[test]
    fn alcove_graph_is_its_own_module() {
        let ring = all_fusion_matrices(3).unwrap();
        let a = ring.generator(0).clone();
        let b = ring.generator(1).clone();
        let dims = quantum_dimensions(&a, 0).unwrap();
        let g = QuantumGraph::new(a, b, 0, dims).unwrap();
        assert!(g.respects_grading());
        assert!(g.conjugation_is_symmetry());
        let f = g.annular_matrices(3).unwrap();
        assert_eq!(f, ring.matrices);
        assert_eq!(f[0], IntMatrix::identity(ring.order()));
        assert_eq!(module_law_failure(&f, &ring), None);
        assert!(is_rigid(&f, &ring));
        // The essential matrix at the unit reads off the rows of the identity.
        let e0 = essential_matrix(&f, 0);
        assert_eq!(e0, IntMatrix::identity(ring.order()));
        let conj: Vec<usize> = (0..ring.order()).map(|i| ring.conjugate_index(i)).collect();
        assert_eq!(g.conjugation, conj);
    }

    #[test]
    fn relabeling_round_trips() {
        let ring = all_fusion_matrices(2).unwrap();
        let a = ring.generator(0).clone();
        let b = ring.generator(1).clone();
        let dims = quantum_dimensions(&a, 0).unwrap();
        let g = QuantumGraph::new(a, b, 0, dims).unwrap();
        let n = g.order();
        let perm: Vec<usize> = (0..n).rev().collect();
        let h = g.relabeled(&perm, g.labels.clone());
        assert_eq!(h.unit, n - 1);
        assert!(h.respects_grading());
        assert!(h.conjugation_is_symmetry());
        let back = h.relabeled(&inverse(&perm), g.labels.clone());
        assert_eq!(back.generators, g.generators);
        assert_eq!(back.conjugation, g.conjugation);
    }
}
