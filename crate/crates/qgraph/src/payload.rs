//! Serializable payloads, one per artifact kind, and their conversions to and
//! from the core types.
//!
//! Integer matrices are row-major nested arrays. Rationals are `[num, den]`.
//! Complex entries are `[re, im]` doubles.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use qgraph_core::embed::{EmbeddingCandidate, ModularInvariant};
use qgraph_core::graph::algebra::{E4Algebra, GraphAlgebra, CONJUGATION, TWIST};
use qgraph_core::graph::oc::OcAlgebra;
use qgraph_core::lie::Weight;
use qgraph_core::modular::{ModularData, RELATION_TOL};
use qgraph_core::split::{OcGraph, StepKind, ToricFamily, TraceStep};
use qgraph_core::IntMatrix;

pub type Rows = Vec<Vec<i64>>;

fn rows(m: &IntMatrix) -> Rows {
    m.to_rows()
}

fn matrix(r: &Rows) -> Result<IntMatrix, String> {
    if r.is_empty() {
        return Ok(IntMatrix::zeros(0, 0));
    }
    IntMatrix::from_rows(r).ok_or_else(|| "ragged matrix".to_string())
}

fn matrices(rs: &[Rows]) -> Result<Vec<IntMatrix>, String> {
    rs.iter().map(matrix).collect()
}

fn three(rs: &[Rows]) -> Result<[IntMatrix; 3], String> {
    let v = matrices(rs)?;
    <[IntMatrix; 3]>::try_from(v).map_err(|v| format!("expected 3 generator matrices, found {}", v.len()))
}

fn ratio(q: Rational64) -> [i64; 2] {
    [*q.numer(), *q.denom()]
}

fn labels(alcove: &[Weight]) -> Vec<Vec<u32>> {
    alcove.iter().map(|w| w.labels.clone()).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Alcove {
    pub algebra: String,
    pub level: u32,
    pub weights: Vec<Vec<u32>>,
    pub conformal_dimensions: Vec<[i64; 2]>,
}

impl Alcove {
    pub fn new(algebra: &str, level: u32, weights: &[Weight], h: &[Rational64]) -> Self {
        Alcove {
            algebra: algebra.into(),
            level,
            weights: labels(weights),
            conformal_dimensions: h.iter().map(|&q| ratio(q)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FusionRing {
    pub algebra: String,
    pub level: u32,
    pub alcove: Vec<Vec<u32>>,
    pub generators: [usize; 3],
    /// `matrices[λ][μ][ν] = N_{λμ}^ν`.
    pub matrices: Vec<Rows>,
}

impl From<&qgraph_core::fusion::FusionRing> for FusionRing {
    fn from(r: &qgraph_core::fusion::FusionRing) -> Self {
        FusionRing {
            algebra: "A3".into(),
            level: r.level,
            alcove: labels(&r.alcove),
            generators: r.generators,
            matrices: r.matrices.iter().map(rows).collect(),
        }
    }
}

impl FusionRing {
    pub fn decode(&self) -> Result<qgraph_core::fusion::FusionRing, String> {
        Ok(qgraph_core::fusion::FusionRing {
            level: self.level,
            alcove: self.alcove.iter().map(|l| Weight::new(l.clone())).collect(),
            matrices: matrices(&self.matrices)?,
            generators: self.generators,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Modular {
    pub algebra: String,
    pub level: u32,
    pub alcove: Vec<Vec<u32>>,
    pub s: Vec<Vec<[f64; 2]>>,
    pub t: Vec<Vec<[f64; 2]>>,
    pub charge_conjugation: Rows,
    /// Absolute tolerance the relations were checked at.
    pub tolerance: f64,
}

impl Modular {
    pub fn new(name: &str, md: &ModularData) -> Self {
        let complex = |m: &qgraph_core::modular::CMatrix| -> Vec<Vec<[f64; 2]>> {
            (0..m.dim()).map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect()).collect()
        };
        Modular {
            algebra: name.into(),
            level: md.level,
            alcove: labels(&md.alcove),
            s: complex(&md.s),
            t: complex(&md.t),
            charge_conjugation: rows(&md.charge_conjugation),
            tolerance: RELATION_TOL,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Embedding {
    pub group: String,
    pub dim: u64,
    pub dual_coxeter: u64,
    pub level: u32,
    pub central_charge: [i64; 2],
    pub known_irreducible: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingScan {
    pub group: String,
    pub k_max: u32,
    pub catalog_size: usize,
    pub solutions: Vec<Embedding>,
}

impl EmbeddingScan {
    pub fn new(group: &str, k_max: u32, catalog_size: usize, found: &[EmbeddingCandidate]) -> Self {
        let solutions = found
            .iter()
            .map(|e| Embedding {
                group: e.k_group.name.clone(),
                dim: e.k_group.dim,
                dual_coxeter: e.k_group.dual_coxeter,
                level: e.level,
                central_charge: ratio(e.central_charge),
                known_irreducible: e.known_irreducible,
            })
            .collect();
        EmbeddingScan { group: group.into(), k_max, catalog_size, solutions }
    }
}

/// Entry of the JSON catalog of simple groups accepted by `embed-scan`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub name: String,
    pub dim: u64,
    pub dual_coxeter: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level_one_h: Option<Vec<[i64; 2]>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Invariant {
    pub name: String,
    pub level: u32,
    pub alcove: Vec<Vec<u32>>,
    pub matrix: Rows,
    /// Per block, `(alcove index, coefficient)` pairs.
    pub blocks: Vec<Vec<(usize, i64)>>,
}

impl Invariant {
    pub fn new(name: &str, level: u32, alcove: &[Weight], inv: &ModularInvariant) -> Self {
        Invariant { name: name.into(), level, alcove: labels(alcove), matrix: rows(&inv.m), blocks: inv.blocks.clone() }
    }

    pub fn decode(&self) -> Result<ModularInvariant, String> {
        Ok(ModularInvariant { m: matrix(&self.matrix)?, blocks: self.blocks.clone() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Step {
    Expanded,
    Old,
    New { split: Vec<i64> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Trace {
    pub norm: i64,
    pub pair: (usize, usize),
    pub step: Step,
    pub coefficients: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Toric {
    pub level: u32,
    pub matrices: Vec<Rows>,
    pub multiplicities: Vec<u32>,
    pub unit: usize,
    pub trace: Vec<Trace>,
}

impl Toric {
    pub fn new(level: u32, t: &ToricFamily) -> Self {
        let trace = t
            .trace
            .iter()
            .map(|s| Trace {
                norm: s.norm,
                pair: s.pair,
                step: match &s.kind {
                    StepKind::Expanded => Step::Expanded,
                    StepKind::Old => Step::Old,
                    StepKind::New { split } => Step::New { split: split.clone() },
                },
                coefficients: s.coefficients.clone(),
            })
            .collect();
        Toric {
            level,
            matrices: t.matrices.iter().map(rows).collect(),
            multiplicities: t.multiplicities.clone(),
            unit: t.unit,
            trace,
        }
    }

    pub fn decode(&self) -> Result<ToricFamily, String> {
        let trace = self
            .trace
            .iter()
            .map(|s| TraceStep {
                norm: s.norm,
                pair: s.pair,
                kind: match &s.step {
                    Step::Expanded => StepKind::Expanded,
                    Step::Old => StepKind::Old,
                    Step::New { split } => StepKind::New { split: split.clone() },
                },
                coefficients: s.coefficients.clone(),
            })
            .collect();
        Ok(ToricFamily {
            matrices: matrices(&self.matrices)?,
            multiplicities: self.multiplicities.clone(),
            unit: self.unit,
            trace,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Oc {
    pub level: u32,
    /// `(distinct toric matrix, copy)` per vertex.
    pub vertices: Vec<(usize, u8)>,
    pub block_size: usize,
    pub left: Vec<Rows>,
    pub right: Vec<Rows>,
    pub conjugation: Vec<usize>,
    pub ambichiral: Vec<usize>,
}

impl Oc {
    pub fn new(level: u32, g: &OcGraph) -> Self {
        Oc {
            level,
            vertices: g.vertices.clone(),
            block_size: g.block_size,
            left: g.left.iter().map(rows).collect(),
            right: g.right.iter().map(rows).collect(),
            conjugation: g.conjugation.clone(),
            ambichiral: g.ambichiral.clone(),
        }
    }

    pub fn decode(&self) -> Result<OcGraph, String> {
        Ok(OcGraph {
            vertices: self.vertices.clone(),
            block_size: self.block_size,
            left: three(&self.left)?,
            right: three(&self.right)?,
            conjugation: self.conjugation.clone(),
            ambichiral: self.ambichiral.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Algebra {
    /// Vertex names, `"1"` through `"12"`.
    pub labels: Vec<String>,
    pub unit: usize,
    /// `F_100`, `F_010`, `F_001` of the labeled graph.
    pub generators: Vec<Rows>,
    pub conjugation: Vec<usize>,
    pub twist: Vec<usize>,
    pub grading: Vec<u8>,
    /// `products[a][b][c]` is the coefficient of `c` in `a·b`.
    pub products: Vec<Rows>,
}

impl Algebra {
    pub fn new(e4: &E4Algebra) -> Self {
        let g = &e4.graph;
        Algebra {
            labels: g.labels.clone(),
            unit: g.unit,
            generators: g.generators.iter().map(rows).collect(),
            conjugation: CONJUGATION.to_vec(),
            twist: TWIST.to_vec(),
            grading: g.grading.clone(),
            products: e4.algebra.g.iter().map(rows).collect(),
        }
    }

    pub fn decode(&self) -> Result<GraphAlgebra, String> {
        Ok(GraphAlgebra { g: matrices(&self.products)? })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Realization {
    /// `(a, b)` of each basis element `a ⊗̇ b`, 0-based labels.
    pub basis: Vec<(usize, usize)>,
    pub ambichiral: Vec<usize>,
    pub left_generators: Vec<usize>,
    pub right_generators: Vec<usize>,
    pub chiral_conjugation: Vec<usize>,
    /// `O_x`: row `y` holds `x·y`.
    pub o: Vec<Rows>,
    /// Dual annular matrices `S_x`.
    pub s: Vec<Rows>,
}

impl Realization {
    pub fn new(oc: &OcAlgebra) -> Result<Self, String> {
        Ok(Realization {
            basis: oc.basis.clone(),
            ambichiral: oc.ambichiral().to_vec(),
            left_generators: oc.left_generators().to_vec(),
            right_generators: oc.right_generators().to_vec(),
            chiral_conjugation: oc.chiral_conjugation().map_err(|e| e.to_string())?,
            o: (0..oc.dim()).map(|x| rows(&oc.o_matrix(x))).collect(),
            s: oc.dual_annular_all().iter().map(rows).collect(),
        })
    }
}
