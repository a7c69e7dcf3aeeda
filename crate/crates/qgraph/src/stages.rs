//! Pipeline stages as functions from parameters and upstream artifacts to
//! new artifacts. Nothing here touches the filesystem.

use std::fmt;

use num_rational::Rational64;
use qgraph_core::embed::{
    branching_for, scan_embeddings, simple_group_catalog, solve_invariant, su4_exceptional_invariant, CartanType,
    SimpleGroup,
};
use qgraph_core::fusion::all_fusion_matrices;
use qgraph_core::graph::algebra::graph_algebra_e4;
use qgraph_core::graph::oc::OcAlgebra;
use qgraph_core::lie::{enumerate_alcove, AlgebraSpec, Family};
use qgraph_core::modular::ModularData;
use qgraph_core::pipeline::match_realization;
use qgraph_core::split::{build_k_family, chiral_generators, solve_splitting};

use crate::artifact::{ArtifactError, ArtifactRecord, Kind, Provenance};
use crate::payload;

#[derive(Debug)]
pub enum StageError {
    /// Parameters the stage cannot handle.
    Usage(String),
    Core(qgraph_core::Error),
    Artifact(ArtifactError),
    /// Upstream payload decodes but is structurally invalid.
    Payload(String),
}

impl fmt::Display for StageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StageError::Usage(why) => write!(f, "{why}"),
            StageError::Core(e) => write!(f, "{e}"),
            StageError::Artifact(e) => write!(f, "{e}"),
            StageError::Payload(why) => write!(f, "invalid upstream payload: {why}"),
        }
    }
}

impl std::error::Error for StageError {}

impl From<qgraph_core::Error> for StageError {
    fn from(e: qgraph_core::Error) -> Self {
        match e {
            qgraph_core::Error::Unsupported(what) => StageError::Usage(format!("unsupported: {what}")),
            e => StageError::Core(e),
        }
    }
}

impl From<ArtifactError> for StageError {
    fn from(e: ArtifactError) -> Self {
        StageError::Artifact(e)
    }
}

pub type StageResult<T> = Result<T, StageError>;

/// A produced artifact and a one-line description for the index.
#[derive(Clone, Debug)]
pub struct Output {
    pub record: ArtifactRecord,
    pub summary: String,
}

fn output<T: serde::Serialize>(kind: Kind, prov: Provenance, payload: &T, summary: String) -> StageResult<Output> {
    Ok(Output { record: ArtifactRecord::new(kind, prov, payload)?, summary })
}

/// `A3`, `B7`, and so on, for the series with weight data.
pub fn parse_algebra(name: &str) -> StageResult<AlgebraSpec> {
    let bad = || StageError::Usage(format!("unknown algebra `{name}`; expected A<n> or B<n>"));
    let (head, rank) = name.split_at(1.min(name.len()));
    let rank: usize = rank.parse().map_err(|_| bad())?;
    match head {
        "A" if rank >= 1 => Ok(AlgebraSpec::a(rank)),
        "B" if rank >= 2 => Ok(AlgebraSpec::b(rank)),
        _ => Err(bad()),
    }
}

/// Cartan label (`A3`, `C4`, `G2`, `E8`) or group name (`SU(4)`, `Spin(15)`, `Sp(8)`).
pub fn parse_group(name: &str) -> StageResult<SimpleGroup> {
    let bad = || StageError::Usage(format!("unknown group `{name}`"));
    let t = match name {
        "G2" => CartanType::G2,
        "F4" => CartanType::F4,
        "E6" => CartanType::E6,
        "E7" => CartanType::E7,
        "E8" => CartanType::E8,
        _ => {
            if let Some(inner) = name.strip_suffix(')') {
                let (family, n) = inner.split_once('(').ok_or_else(bad)?;
                let n: u32 = n.parse().map_err(|_| bad())?;
                match family {
                    "SU" if n >= 2 => CartanType::A(n - 1),
                    "Spin" if n >= 5 && n % 2 == 1 => CartanType::B((n - 1) / 2),
                    "Spin" if n >= 8 && n % 2 == 0 => CartanType::D(n / 2),
                    "Sp" if n >= 6 && n % 2 == 0 => CartanType::C(n / 2),
                    _ => return Err(bad()),
                }
            } else {
                let (head, rank) = name.split_at(1.min(name.len()));
                let r: u32 = rank.parse().map_err(|_| bad())?;
                match head {
                    "A" if r >= 1 => CartanType::A(r),
                    "B" if r >= 2 => CartanType::B(r),
                    "C" if r >= 3 => CartanType::C(r),
                    "D" if r >= 4 => CartanType::D(r),
                    _ => return Err(bad()),
                }
            }
        }
    };
    Ok(t.into())
}

fn algebra_name(alg: &AlgebraSpec) -> String {
    let f = match alg.family {
        Family::A => "A",
        Family::B => "B",
    };
    format!("{f}{}", alg.rank)
}

pub fn alcove(algebra: &str, level: u32) -> StageResult<Output> {
    let alg = parse_algebra(algebra)?;
    let weights = enumerate_alcove(&alg, level);
    let h: Vec<Rational64> = weights.iter().map(|w| alg.conformal_dimension(level, w)).collect::<Result<_, _>>()?;
    let name = algebra_name(&alg);
    let prov = Provenance::new().param("algebra", name.as_str()).param("level", level);
    let summary = format!("{name} level {level}: {} weights", weights.len());
    output(Kind::Alcove, prov, &payload::Alcove::new(&name, level, &weights, &h), summary)
}

pub fn fusion(algebra: &str, level: u32) -> StageResult<Output> {
    let alg = parse_algebra(algebra)?;
    if alg != AlgebraSpec::a(3) {
        return Err(StageError::Usage(format!("fusion recursion is implemented for A3, not {algebra}")));
    }
    let ring = all_fusion_matrices(level)?;
    let prov = Provenance::new().param("algebra", "A3").param("level", level);
    let summary = format!("A3 level {level}: {} fusion matrices", ring.order());
    output(Kind::FusionRing, prov, &payload::FusionRing::from(&ring), summary)
}

pub fn modular(algebra: &str, level: u32) -> StageResult<Output> {
    let alg = parse_algebra(algebra)?;
    let md = ModularData::new(&alg, level)?;
    let name = algebra_name(&alg);
    let residual = md.residuals().max();
    let prov = Provenance::new().param("algebra", name.as_str()).param("level", level);
    let summary = format!("{name} level {level}: s, t of order {}, max relation residual {residual:.1e}", md.order());
    output(Kind::ModularData, prov, &payload::Modular::new(&name, &md), summary)
}

/// Scans the built-in catalog up to `max_rank`, or the given group records.
pub fn embed_scan(
    group: &str,
    max_rank: u32,
    k_max: u32,
    groups: Option<&[payload::GroupRecord]>,
) -> StageResult<Output> {
    let g = parse_group(group)?;
    let catalog: Vec<SimpleGroup> = match groups {
        Some(records) => records
            .iter()
            .map(|r| SimpleGroup {
                name: r.name.clone(),
                cartan: None,
                dim: r.dim,
                dual_coxeter: r.dual_coxeter,
                level_one_h: r.level_one_h.as_ref().map(|h| h.iter().map(|&[n, d]| Rational64::new(n, d)).collect()),
            })
            .collect(),
        None => simple_group_catalog(max_rank),
    };
    let found = scan_embeddings(&g, &catalog, k_max);
    let mut prov = Provenance::new().param("group", g.name.as_str()).param("k_max", k_max);
    prov = match groups {
        Some(_) => prov.param("catalog", "file"),
        None => prov.param("max_rank", max_rank),
    };
    let summary = format!("{}: {} conformal embeddings", g.name, found.len());
    output(Kind::EmbeddingScan, prov, &payload::EmbeddingScan::new(&g.name, k_max, catalog.len(), &found), summary)
}

/// `e4` is solved from the `Spin(15)₁ ⊃ SU(4)₄` branching; `e6` and `e8` are fixtures.
pub fn invariant(fixture: &str) -> StageResult<Output> {
    let su4 = AlgebraSpec::a(3);
    let name = fixture.to_ascii_uppercase();
    let (level, inv, method) = match name.as_str() {
        "E4" => {
            let level = 4;
            let md = ModularData::new(&su4, level)?;
            let ansatz = branching_for(&AlgebraSpec::b(7), &su4, level)?;
            (level, solve_invariant(&ansatz, &md, 3)?, "solved from Spin(15) level 1")
        }
        _ => {
            let (level, inv) = su4_exceptional_invariant(&name)
                .ok_or_else(|| StageError::Usage(format!("unknown fixture `{fixture}`; expected e4, e6 or e8")))?;
            (level, inv, "fixture")
        }
    };
    let alcove = enumerate_alcove(&su4, level);
    let prov = Provenance::new().param("fixture", name.as_str()).param("method", method);
    let summary = format!("Z({name}) at level {level}: Tr M = {}, Tr MᵀM = {}", inv.trace(), inv.quantum_symmetries());
    output(Kind::Invariant, prov, &payload::Invariant::new(&name, level, &alcove, &inv), summary)
}

pub fn split(invariant: &ArtifactRecord) -> StageResult<Output> {
    let p: payload::Invariant = invariant.decode(Kind::Invariant)?;
    let inv = p.decode().map_err(StageError::Payload)?;
    let ring = all_fusion_matrices(p.level)?;
    if inv.m.rows() != ring.order() {
        return Err(StageError::Payload(format!("invariant has order {}, alcove {}", inv.m.rows(), ring.order())));
    }
    let fam = build_k_family(&inv.m, &ring);
    let toric = solve_splitting(&fam, inv.quantum_symmetries() as usize)?;
    let prov = Provenance::new().input(&invariant.hash);
    let summary = format!("{}: {} distinct toric matrices, {} with multiplicity", p.name, toric.distinct(), toric.total());
    output(Kind::ToricFamily, prov, &payload::Toric::new(p.level, &toric), summary)
}

/// Chiral generators; the chiral conjugation is chosen to match the
/// realization when the module graph is `E4`, else the first admissible one.
pub fn ocneanu(toric: &ArtifactRecord) -> StageResult<Output> {
    let p: payload::Toric = toric.decode(Kind::ToricFamily)?;
    let family = p.decode().map_err(StageError::Payload)?;
    let ring = all_fusion_matrices(p.level)?;
    let chiral = chiral_generators(&family, &ring)?;
    let matched = chiral
        .graph
        .module_graph()
        .and_then(|g| graph_algebra_e4(&g))
        .and_then(|e4| OcAlgebra::new(&e4.algebra))
        .ok()
        .map(|oc| match_realization(&chiral, &oc))
        .and_then(|(g, sigma)| sigma.map(|_| g));
    let realized = matched.is_some();
    let graph = matched.unwrap_or_else(|| chiral.graph.clone());
    let prov = Provenance::new().input(&toric.hash).param("conjugation_matches_realization", realized);
    let summary = format!(
        "{} vertices, {} ambichiral, {} admissible chiral conjugations",
        graph.order(),
        graph.ambichiral.len(),
        chiral.conjugations.len()
    );
    output(Kind::OcGraph, prov, &payload::Oc::new(p.level, &graph), summary)
}

/// Graph algebra of the module graph and its Ocneanu realization.
pub fn realize(oc_graph: &ArtifactRecord) -> StageResult<[Output; 2]> {
    let p: payload::Oc = oc_graph.decode(Kind::OcGraph)?;
    let graph = p.decode().map_err(StageError::Payload)?;
    let e4 = graph_algebra_e4(&graph.module_graph()?)?;
    let alg = output(
        Kind::GraphAlgebra,
        Provenance::new().input(&oc_graph.hash),
        &payload::Algebra::new(&e4),
        format!(
            "E4: {} free parameters, {} associative solutions",
            e4.free_parameters, e4.associative_solutions
        ),
    )?;
    let oc = OcAlgebra::new(&e4.algebra)?;
    let real = payload::Realization::new(&oc).map_err(StageError::Payload)?;
    let summary = format!("E4 ⊗_J E4: {} basis elements", oc.dim());
    let oc_out = output(Kind::OcAlgebra, Provenance::new().input(&alg.record.hash), &real, summary)?;
    Ok([alg, oc_out])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_names() {
        assert_eq!(parse_group("SU(4)").unwrap().name, "SU(4)");
        assert_eq!(parse_group("A3").unwrap().name, "SU(4)");
        assert_eq!(parse_group("Spin(15)").unwrap().name, "Spin(15)");
        assert_eq!(parse_group("Sp(8)").unwrap().name, "Sp(8)");
        assert_eq!(parse_group("D5").unwrap().name, "Spin(10)");
        assert!(parse_group("SU(1)").is_err());
        assert!(parse_group("X9").is_err());
    }

    #[test]
    fn algebra_names() {
        assert_eq!(parse_algebra("A3").unwrap(), AlgebraSpec::a(3));
        assert_eq!(parse_algebra("B7").unwrap(), AlgebraSpec::b(7));
        assert!(parse_algebra("C3").is_err());
        assert!(parse_algebra("").is_err());
    }
}
