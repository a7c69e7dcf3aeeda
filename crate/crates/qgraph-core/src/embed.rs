//! Conformal embeddings `G_k ⊂ K_1` and the modular invariants they induce.
//!
//! The scan solves the central-charge equation `d_G k/(k+g_G) = d_K/(1+g_K)`
//! exactly. Branching candidates come from matching conformal dimensions mod 1,
//! and the invariant is the nonnegative integer point of the block ansatz
//! `M = Σ_Λ b_Λ b_Λᵀ` that commutes with `s` and `t`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use alloc::format;
use num_rational::Rational64;
use num_traits::Zero;

use crate::lie::{enumerate_alcove, AlgebraSpec, Weight};
use crate::modular::{CMatrix, ModularData};
use crate::{Error, IntMatrix, Result};

/// Tolerance on `[M,s]` and `[M,t]`.
pub const COMMUTANT_TOL: f64 = 1e-7;

/// Cartan type of a compact simple Lie group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl CartanType {
    pub fn dim(self) -> u64 {
        match self {
            CartanType::A(n) => (n as u64 + 1).pow(2) - 1,
            CartanType::B(n) | CartanType::C(n) => n as u64 * (2 * n as u64 + 1),
            CartanType::D(n) => n as u64 * (2 * n as u64 - 1),
            CartanType::G2 => 14,
            CartanType::F4 => 52,
            CartanType::E6 => 78,
            CartanType::E7 => 133,
            CartanType::E8 => 248,
        }
    }

    pub fn dual_coxeter(self) -> u64 {
        match self {
            CartanType::A(n) => n as u64 + 1,
            CartanType::B(n) => 2 * n as u64 - 1,
            CartanType::C(n) => n as u64 + 1,
            CartanType::D(n) => 2 * n as u64 - 2,
            CartanType::G2 => 4,
            CartanType::F4 => 9,
            CartanType::E6 => 12,
            CartanType::E7 => 18,
            CartanType::E8 => 30,
        }
    }

    /// Group name: `SU(n+1)`, `Spin(2n+1)`, `Sp(2n)`, `Spin(2n)`, or the exceptional label.
    pub fn group_name(self) -> String {
        match self {
            CartanType::A(n) => format!("SU({})", n + 1),
            CartanType::B(n) => format!("Spin({})", 2 * n + 1),
            CartanType::C(n) => format!("Sp({})", 2 * n),
            CartanType::D(n) => format!("Spin({})", 2 * n),
            CartanType::G2 => "G2".into(),
            CartanType::F4 => "F4".into(),
            CartanType::E6 => "E6".into(),
            CartanType::E7 => "E7".into(),
            CartanType::E8 => "E8".into(),
        }
    }

    /// Weight data, where implemented (A and B series).
    pub fn algebra(self) -> Option<AlgebraSpec> {
        match self {
            CartanType::A(n) => Some(AlgebraSpec::a(n as usize)),
            CartanType::B(n) => Some(AlgebraSpec::b(n as usize)),
            _ => None,
        }
    }
}

/// Catalog entry for a candidate `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGroup {
    pub name: String,
    pub cartan: Option<CartanType>,
    pub dim: u64,
    pub dual_coxeter: u64,
    /// Level-1 conformal dimensions, when known as data.
    pub level_one_h: Option<Vec<Rational64>>,
}

impl From<CartanType> for SimpleGroup {
    fn from(t: CartanType) -> Self {
        SimpleGroup {
            name: t.group_name(),
            cartan: Some(t),
            dim: t.dim(),
            dual_coxeter: t.dual_coxeter(),
            level_one_h: t.algebra().map(|a| level_one_data(&a).into_iter().map(|(_, h)| h).collect()),
        }
    }
}

/// Every simple group up to rank `max_rank`, without low-rank coincidences
/// (`B_n` from 2, `C_n` from 3, `D_n` from 4), plus the five exceptionals.
pub fn simple_group_catalog(max_rank: u32) -> Vec<SimpleGroup> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(CartanType::A(n).into());
        if n >= 2 {
            out.push(CartanType::B(n).into());
        }
        if n >= 3 {
            out.push(CartanType::C(n).into());
        }
        if n >= 4 {
            out.push(CartanType::D(n).into());
        }
    }
    for t in [CartanType::G2, CartanType::F4, CartanType::E6, CartanType::E7, CartanType::E8] {
        out.push(t.into());
    }
    out
}

/// Embeddings known to satisfy the irreducibility requirement, as `(G, K, k)`.
///
/// The scan itself does not decide irreducibility; these are annotations.
pub const KNOWN_IRREDUCIBLE: &[(&str, &str, u32)] = &[
    ("SU(2)", "SU(3)", 4),
    ("SU(2)", "Spin(5)", 10),
    ("SU(2)", "G2", 28),
    ("SU(3)", "SU(6)", 5),
    ("SU(3)", "Spin(8)", 3),
    ("SU(3)", "E6", 9),
    ("SU(3)", "E7", 21),
    ("SU(4)", "SU(6)", 2),
    ("SU(4)", "Spin(15)", 4),
    ("SU(4)", "SU(10)", 6),
    ("SU(4)", "Spin(20)", 8),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingCandidate {
    pub g: String,
    pub k_group: SimpleGroup,
    pub level: u32,
    pub central_charge: Rational64,
    pub known_irreducible: bool,
}

/// All `(K, k)` with `k ≤ k_max` solving the central-charge equation for `G`.
///
/// The trivial `K = G` at level 1 is skipped. Since `k/(k+g) < 1`, solutions
/// need `d_K/(1+g_K) < d_G`, which bounds the ranks worth cataloguing.
pub fn scan_embeddings(g: &SimpleGroup, catalog: &[SimpleGroup], k_max: u32) -> Vec<EmbeddingCandidate> {
    let (dg, gg) = (g.dim as i64, g.dual_coxeter as i64);
    let mut out = Vec::new();
    for kg in catalog {
        let ck = Rational64::new(kg.dim as i64, 1 + kg.dual_coxeter as i64);
        let room = Rational64::from_integer(dg) - ck;
        if room <= Rational64::zero() {
            continue;
        }
        let level = ck * Rational64::from_integer(gg) / room;
        if !level.is_integer() || *level.numer() > k_max as i64 {
            continue;
        }
        let level = *level.numer() as u32;
        if level == 1 && kg.name == g.name {
            continue;
        }
        let known_irreducible =
            KNOWN_IRREDUCIBLE.iter().any(|&(gn, kn, l)| gn == g.name && kn == kg.name && l == level);
        out.push(EmbeddingCandidate {
            g: g.name.clone(),
            k_group: kg.clone(),
            level,
            central_charge: ck,
            known_irreducible,
        });
    }
    out.sort_by(|a, b| a.level.cmp(&b.level).then_with(|| a.k_group.name.cmp(&b.k_group.name)));
    out
}

/// Level-1 weights of `alg` with their conformal dimensions.
pub fn level_one_data(alg: &AlgebraSpec) -> Vec<(Weight, Rational64)> {
    enumerate_alcove(alg, 1)
        .into_iter()
        .map(|w| {
            let h = alg.conformal_dimension(1, &w).expect("alcove weight is integrable");
            (w, h)
        })
        .collect()
}

/// Branching candidates for one level-1 weight `Λ` of `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub label: String,
    pub h: Rational64,
    /// Alcove indices of `G`-weights `μ` with `h_μ − h_Λ ∈ Z≥0`.
    pub candidates: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingAnsatz {
    pub alcove: Vec<Weight>,
    pub blocks: Vec<Block>,
}

impl BranchingAnsatz {
    /// One block per weight, each holding only that weight; solves to `M = I`.
    pub fn diagonal(alg: &AlgebraSpec, k: u32) -> Self {
        let alcove = enumerate_alcove(alg, k);
        let blocks = alcove
            .iter()
            .enumerate()
            .map(|(i, w)| Block {
                label: w.compact(),
                h: alg.conformal_dimension(k, w).expect("alcove weight"),
                candidates: vec![i],
            })
            .collect();
        BranchingAnsatz { alcove, blocks }
    }

    pub fn unknowns(&self) -> usize {
        self.blocks.iter().map(|b| b.candidates.len()).sum()
    }
}

/// Candidate `G`-weights for each `K` level-1 weight with conformal dimension `h_Λ`.
///
/// `k_side` lists `(label, h_Λ)` with the `K` vacuum first.
pub fn branching_candidates(k_side: &[(String, Rational64)], g: &AlgebraSpec, k: u32) -> Result<BranchingAnsatz> {
    let alcove = enumerate_alcove(g, k);
    let hs: Vec<Rational64> = alcove.iter().map(|w| g.conformal_dimension(k, w)).collect::<Result<_>>()?;
    let blocks: Vec<Block> = k_side
        .iter()
        .map(|(label, h_big)| {
            let candidates = (0..alcove.len())
                .filter(|&j| {
                    let d = hs[j] - h_big;
                    d.is_integer() && d >= Rational64::zero()
                })
                .collect();
            Block { label: label.clone(), h: *h_big, candidates }
        })
        .collect();
    match blocks.first() {
        Some(b) if !b.candidates.is_empty() => Ok(BranchingAnsatz { alcove, blocks }),
        _ => Err(Error::EmptyVacuumBlock),
    }
}

/// Branching ansatz for `G_k ⊂ K_1` when `K` has implemented weight data.
pub fn branching_for(k_alg: &AlgebraSpec, g: &AlgebraSpec, k: u32) -> Result<BranchingAnsatz> {
    let side: Vec<(String, Rational64)> =
        level_one_data(k_alg).into_iter().map(|(w, h)| (w.compact(), h)).collect();
    branching_candidates(&side, g, k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularInvariant {
    pub m: IntMatrix,
    /// `blocks[Λ]` lists `(alcove index, coefficient)` with nonzero coefficient.
    pub blocks: Vec<Vec<(usize, i64)>>,
}

impl ModularInvariant {
    /// `M = Σ_Λ mult_Λ · b_Λ b_Λᵀ`.
    pub fn from_blocks(r: usize, blocks: &[(i64, Vec<(usize, i64)>)]) -> Self {
        let mut m = IntMatrix::zeros(r, r);
        for (mult, b) in blocks {
            for &(i, ci) in b {
                for &(j, cj) in b {
                    m[(i, j)] += mult * ci * cj;
                }
            }
        }
        ModularInvariant { m, blocks: blocks.iter().map(|(_, b)| b.clone()).collect() }
    }

    /// `Tr(M)` counts the vertices of the associated graph.
    pub fn trace(&self) -> i64 {
        self.m.trace()
    }

    /// `Tr(MᵀM)` counts quantum symmetries.
    pub fn quantum_symmetries(&self) -> i64 {
        (&self.m.transpose() * &self.m).trace()
    }
}

/// `[M,s]` from sparse block vectors: `(Ms)_ij = Σ_Λ b_i (bᵀs)_j`.
fn s_commutator_norm(s: &CMatrix, blocks: &[Vec<(usize, i64)>]) -> f64 {
    let r = s.dim();
    let mut ms = CMatrix::zeros(r);
    for b in blocks {
        let mut bs = vec![num_complex::Complex64::zero(); r];
        for &(i, c) in b {
            for (j, x) in bs.iter_mut().enumerate() {
                *x += s[(i, j)] * c as f64;
            }
        }
        for &(i, c) in b {
            for j in 0..r {
                // s is symmetric, so sM = (Ms)ᵀ.
                let v = bs[j] * c as f64;
                ms[(i, j)] += v;
                ms[(j, i)] -= v;
            }
        }
    }
    ms.max_abs()
}

/// Nonnegative integer point of the ansatz commuting with `s` and `t`.
///
/// Coefficients range over `0..=max_coefficient`, the vacuum `G`-weight is
/// pinned to 1 and every block must be nonzero. Among the solutions the one
/// with the smallest coefficient sum is returned; ties are an error.
pub fn solve_invariant(ansatz: &BranchingAnsatz, md: &ModularData, max_coefficient: i64) -> Result<ModularInvariant> {
    let r = ansatz.alcove.len();
    if md.alcove != ansatz.alcove {
        return Err(Error::RankMismatch { expected: md.order(), found: r });
    }
    let slots: Vec<(usize, usize)> = ansatz
        .blocks
        .iter()
        .enumerate()
        .flat_map(|(bi, b)| b.candidates.iter().map(move |&c| (bi, c)))
        .collect();
    let vacuum_slot = slots.iter().position(|&(bi, c)| bi == 0 && c == 0).ok_or(Error::EmptyVacuumBlock)?;
    let mut coeffs = vec![0i64; slots.len()];
    coeffs[vacuum_slot] = 1;
    let free: Vec<usize> = (0..slots.len()).filter(|&i| i != vacuum_slot).collect();
    let mut best: Option<(i64, Vec<Vec<Vec<(usize, i64)>>>)> = None;
    loop {
        let blocks: Vec<Vec<(usize, i64)>> = (0..ansatz.blocks.len())
            .map(|bi| {
                slots
                    .iter()
                    .zip(&coeffs)
                    .filter(|((b, _), &c)| *b == bi && c != 0)
                    .map(|(&(_, j), &c)| (j, c))
                    .collect()
            })
            .collect();
        let total: i64 = coeffs.iter().sum();
        let worth = best.as_ref().map_or(true, |(t, _)| total <= *t);
        if worth && blocks.iter().all(|b| !b.is_empty()) && s_commutator_norm(&md.s, &blocks) < COMMUTANT_TOL {
            let inv = ModularInvariant::from_blocks(r, &blocks.iter().map(|b| (1, b.clone())).collect::<Vec<_>>());
            if md.commutator_norms(&inv.m).1 < COMMUTANT_TOL {
                match &mut best {
                    Some((t, sols)) if *t == total => sols.push(blocks),
                    _ => best = Some((total, vec![blocks])),
                }
            }
        }
        // Odometer over the free coefficients.
        let mut pos = 0;
        while pos < free.len() {
            let slot = free[pos];
            if coeffs[slot] < max_coefficient {
                coeffs[slot] += 1;
                break;
            }
            coeffs[slot] = 0;
            pos += 1;
        }
        if pos == free.len() {
            break;
        }
    }
    match best {
        None => Err(Error::NoInvariant),
        Some((_, mut sols)) if sols.len() == 1 => {
            let blocks = sols.pop().expect("one solution");
            Ok(ModularInvariant::from_blocks(r, &blocks.into_iter().map(|b| (1, b)).collect::<Vec<_>>()))
        }
        Some((_, sols)) => Err(Error::MultipleInvariants(
            sols.into_iter().map(|bs| bs.into_iter().flatten().map(|(_, c)| c).collect()).collect(),
        )),
    }
}

/// Alcove indices on the diagonal support of `M`.
pub fn exponents(m: &IntMatrix) -> Vec<usize> {
    (0..m.rows()).filter(|&i| m[(i, i)] != 0).collect()
}

/// Partition functions of the three exceptional `SU(4)` graphs with self-fusion,
/// as `(level, [(multiplicity, [labels…])])`.
pub const SU4_EXCEPTIONAL_INVARIANTS: &[(&str, u32, &[(i64, &[[u32; 3]])])] = &[
    (
        "E4",
        4,
        &[
            (1, &[[0, 0, 0], [2, 1, 0], [0, 1, 2], [0, 4, 0]]),
            (1, &[[1, 0, 1], [4, 0, 0], [1, 2, 1], [0, 0, 4]]),
            (4, &[[1, 1, 1]]),
        ],
    ),
    (
        "E6",
        6,
        &[
            (1, &[[0, 0, 6], [0, 2, 2], [2, 2, 0], [6, 0, 0]]),
            (1, &[[0, 1, 2], [2, 3, 0], [3, 0, 3]]),
            (1, &[[0, 0, 2], [2, 1, 2], [2, 4, 0]]),
            (1, &[[0, 3, 0], [1, 0, 3], [3, 2, 1]]),
            (1, &[[0, 3, 2], [2, 1, 0], [3, 0, 3]]),
            (1, &[[0, 3, 0], [1, 2, 3], [3, 0, 1]]),
            (1, &[[0, 4, 2], [2, 0, 0], [2, 1, 2]]),
            (1, &[[0, 0, 0], [0, 6, 0], [2, 0, 2], [2, 2, 2]]),
            (1, &[[0, 0, 4], [1, 2, 1], [4, 2, 0]]),
            (1, &[[0, 2, 4], [1, 2, 1], [4, 0, 0]]),
        ],
    ),
    (
        "E8",
        8,
        &[
            (1, &[[0, 0, 0], [1, 2, 1], [1, 4, 1], [4, 1, 2], [2, 1, 4], [8, 0, 0], [0, 8, 0], [0, 0, 8]]),
            (2, &[[3, 1, 1], [1, 1, 3], [3, 3, 1], [1, 3, 3]]),
            (1, &[[0, 2, 0], [2, 3, 0], [0, 3, 2], [0, 6, 0], [3, 0, 3], [6, 0, 2], [3, 2, 3], [2, 0, 6]]),
        ],
    ),
];

/// Builds one of [`SU4_EXCEPTIONAL_INVARIANTS`] on the canonical alcove.
pub fn su4_exceptional_invariant(name: &str) -> Option<(u32, ModularInvariant)> {
    let &(_, level, blocks) = SU4_EXCEPTIONAL_INVARIANTS.iter().find(|(n, _, _)| *n == name)?;
    let alcove = enumerate_alcove(&AlgebraSpec::a(3), level);
    let idx = |l: &[u32; 3]| alcove.iter().position(|w| w.labels == l).expect("fixture weight in alcove");
    let blocks: Vec<(i64, Vec<(usize, i64)>)> =
        blocks.iter().map(|(m, ws)| (*m, ws.iter().map(|l| (idx(l), 1)).collect())).collect();
    Some((level, ModularInvariant::from_blocks(alcove.len(), &blocks)))
}

/// Human-readable name for a candidate, e.g. `Spin(15)@4`.
pub fn candidate_label(c: &EmbeddingCandidate) -> String {
    let mut s = c.k_group.name.to_string();
    s.push('@');
    s.push_str(&c.level.to_string());
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn su(n: u32) -> SimpleGroup {
        CartanType::A(n - 1).into()
    }

    fn labels(cands: &[EmbeddingCandidate]) -> BTreeSet<String> {
        cands.iter().map(candidate_label).collect()
    }

    #[test]
    fn su2_scan() {
        let c = scan_embeddings(&su(2), &simple_group_catalog(8), 1000);
        let want: BTreeSet<String> = ["SU(3)@4", "Spin(5)@10", "G2@28"].iter().map(|s| s.to_string()).collect();
        assert_eq!(labels(&c), want);
        assert!(c.iter().all(|x| x.known_irreducible));
    }

    #[test]
    fn su3_scan_counts_and_irreducible_subset() {
        let c = scan_embeddings(&su(3), &simple_group_catalog(12), 1000);
        assert_eq!(c.len(), 14);
        let irr: BTreeSet<String> = c.iter().filter(|x| x.known_irreducible).map(candidate_label).collect();
        let want: BTreeSet<String> =
            ["SU(6)@5", "Spin(8)@3", "E6@9", "E7@21"].iter().map(|s| s.to_string()).collect();
        assert_eq!(irr, want);
    }

    #[test]
    fn su4_scan_contains_the_four_irreducible_solutions() {
        let c = scan_embeddings(&su(4), &simple_group_catalog(20), 1000);
        let irr: BTreeSet<String> = c.iter().filter(|x| x.known_irreducible).map(candidate_label).collect();
        let want: BTreeSet<String> =
            ["SU(6)@2", "Spin(15)@4", "SU(10)@6", "Spin(20)@8"].iter().map(|s| s.to_string()).collect();
        assert_eq!(irr, want);
        // A larger catalog finds nothing new: c_K < d_G bounds the rank.
        assert_eq!(c.len(), scan_embeddings(&su(4), &simple_group_catalog(40), 1000).len());
    }

    #[test]
    fn scan_respects_central_charge() {
        for c in scan_embeddings(&su(3), &simple_group_catalog(12), 1000) {
            let lhs = Rational64::new(8 * c.level as i64, c.level as i64 + 3);
            assert_eq!(lhs, c.central_charge);
        }
    }

    #[test]
    fn e4_branching_candidates() {
        let a3 = AlgebraSpec::a(3);
        let ans = branching_for(&AlgebraSpec::b(7), &a3, 4).unwrap();
        let names = |b: &Block| -> BTreeSet<String> { b.candidates.iter().map(|&i| ans.alcove[i].compact()).collect() };
        let set = |xs: &[&str]| -> BTreeSet<String> { xs.iter().map(|s| s.to_string()).collect() };
        assert_eq!(ans.blocks.len(), 3);
        assert_eq!(names(&ans.blocks[0]), set(&["000", "210", "012", "040"]));
        let by_h = |h: Rational64| ans.blocks.iter().find(|b| b.h == h).unwrap();
        assert_eq!(names(by_h(Rational64::new(1, 2))), set(&["101", "400", "121", "004"]));
        assert_eq!(names(by_h(Rational64::new(15, 16))), set(&["111"]));
    }

    #[test]
    fn e4_invariant_is_recovered() {
        let a3 = AlgebraSpec::a(3);
        let md = ModularData::new(&a3, 4).unwrap();
        let ans = branching_for(&AlgebraSpec::b(7), &a3, 4).unwrap();
        let inv = solve_invariant(&ans, &md, 3).unwrap();
        assert_eq!(inv.trace(), 12);
        assert_eq!(inv.quantum_symmetries(), 48);
        let (_, fixture) = su4_exceptional_invariant("E4").unwrap();
        assert_eq!(inv.m, fixture.m);
        let i111 = ans.alcove.iter().position(|w| w.labels == [1, 1, 1]).unwrap();
        assert_eq!(inv.m[(i111, i111)], 4);
        let ex: BTreeSet<String> = exponents(&inv.m).into_iter().map(|i| ans.alcove[i].compact()).collect();
        let want: BTreeSet<String> = ["000", "210", "012", "040", "101", "400", "121", "004", "111"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(ex, want);
    }

    #[test]
    fn su2_level4_in_su3_gives_d4() {
        let a1 = AlgebraSpec::a(1);
        let md = ModularData::new(&a1, 4).unwrap();
        let ans = branching_for(&AlgebraSpec::a(2), &a1, 4).unwrap();
        assert_eq!(ans.blocks[0].candidates, vec![0, 4]);
        let inv = solve_invariant(&ans, &md, 3).unwrap();
        let d4 = ModularInvariant::from_blocks(5, &[(1, vec![(0, 1), (4, 1)]), (2, vec![(2, 1)])]);
        assert_eq!(inv.m, d4.m);
        assert_eq!(exponents(&inv.m), vec![0, 2, 4]);
    }

    #[test]
    fn diagonal_ansatz_gives_identity() {
        let a2 = AlgebraSpec::a(2);
        let md = ModularData::new(&a2, 3).unwrap();
        let inv = solve_invariant(&BranchingAnsatz::diagonal(&a2, 3), &md, 2).unwrap();
        assert_eq!(inv.m, IntMatrix::identity(10));
        assert_eq!(exponents(&inv.m).len(), 10);
    }

    #[test]
    fn exceptional_fixtures_are_modular_invariants() {
        for (name, r, tr) in [("E4", 35, 12), ("E6", 84, 32), ("E8", 165, 24)] {
            let (level, inv) = su4_exceptional_invariant(name).unwrap();
            assert_eq!(inv.m.rows(), r);
            assert_eq!(inv.m[(0, 0)], 1);
            let md = ModularData::new(&AlgebraSpec::a(3), level).unwrap();
            let (cs, ct) = md.commutator_norms(&inv.m);
            assert!(cs < COMMUTANT_TOL && ct < COMMUTANT_TOL, "{name}: {cs} {ct}");
            assert_eq!(inv.trace(), tr, "{name}");
        }
    }

    #[test]
    fn t_commutation_matches_h_congruence() {
        let a3 = AlgebraSpec::a(3);
        let md = ModularData::new(&a3, 4).unwrap();
        let (_, inv) = su4_exceptional_invariant("E4").unwrap();
        for i in 0..35 {
            for j in 0..35 {
                if inv.m[(i, j)] != 0 {
                    let d = a3.conformal_dimension(4, &md.alcove[i]).unwrap()
                        - a3.conformal_dimension(4, &md.alcove[j]).unwrap();
                    assert!(d.is_integer());
                }
            }
        }
    }
}
