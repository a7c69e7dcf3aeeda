//! The modular splitting equation `N_λ M N_μᵀ = Σ_z (W_{0,z})_{λμ} W_{z,0}`.
//!
//! [`solve_splitting`] recovers the toric matrices `W_{z,0}` from the family
//! `K_{λμ}` by processing it in increasing norm. [`chiral_generators`] then
//! lifts the action of the fusion generators on the distinct toric matrices
//! to the Ocneanu graph, whose vertices are the toric matrices counted with
//! multiplicity.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::fusion::{quantum_dimensions, recursion, FusionRing};
use crate::graph::QuantumGraph;
use crate::iso::isomorphism;
use crate::linalg::IntSpan;
use crate::{Error, IntMatrix, Result};

/// `K_{λμ} = N_λ M N_μᵀ` for all pairs, with their norms.
#[derive(Clone, Debug)]
pub struct KFamily {
    pub order: usize,
    /// Row-major over `(λ, μ)`.
    pub matrices: Vec<IntMatrix>,
    pub norms: Vec<i64>,
}

impl KFamily {
    pub fn get(&self, l: usize, m: usize) -> &IntMatrix {
        &self.matrices[l * self.order + m]
    }

    pub fn norm(&self, l: usize, m: usize) -> i64 {
        self.norms[l * self.order + m]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |l| (0..self.order).map(move |m| (l, m)))
    }
}

pub fn build_k_family(m: &IntMatrix, ring: &FusionRing) -> KFamily {
    let r = ring.order();
    let left: Vec<IntMatrix> = ring.matrices.iter().map(|n| n * m).collect();
    let mut matrices = Vec::with_capacity(r * r);
    let mut norms = Vec::with_capacity(r * r);
    for l in 0..r {
        let lb = ring.conjugate_index(l);
        for mu in 0..r {
            let k = &left[l] * &ring.matrices[mu].transpose();
            norms.push(k[(lb, ring.conjugate_index(mu))]);
            matrices.push(k);
        }
    }
    KFamily { order: r, matrices, norms }
}

/// `norm(K_{λμ}) = (K_{λμ})_{λ̄μ̄}`.
pub fn toric_norm(fam: &KFamily, ring: &FusionRing, l: usize, m: usize) -> i64 {
    fam.get(l, m)[(ring.conjugate_index(l), ring.conjugate_index(m))]
}

/// Statistics of the `K` matrices sharing one norm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormClass {
    pub norm: i64,
    pub pairs: usize,
    /// Number of distinct matrices.
    pub distinct: usize,
    /// Rank of their span.
    pub rank: usize,
}

pub fn norm_census(fam: &KFamily) -> Result<Vec<NormClass>> {
    let mut by_norm: BTreeMap<i64, (usize, BTreeSet<&IntMatrix>)> = BTreeMap::new();
    for (i, k) in fam.matrices.iter().enumerate() {
        let e = by_norm.entry(fam.norms[i]).or_default();
        e.0 += 1;
        e.1.insert(k);
    }
    by_norm
        .into_iter()
        .map(|(norm, (pairs, set))| {
            let vecs: Vec<&[i64]> = set.iter().map(|k| k.data()).collect();
            Ok(NormClass { norm, pairs, distinct: set.len(), rank: crate::linalg::rank(&vecs)? })
        })
        .collect()
}

/// Rank of the span of all `K_{λμ}`.
pub fn span_rank(fam: &KFamily) -> Result<usize> {
    let set: BTreeSet<&IntMatrix> = fam.matrices.iter().collect();
    let vecs: Vec<&[i64]> = set.iter().map(|k| k.data()).collect();
    crate::linalg::rank(&vecs)
}

/// How one `K` was written over the toric matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// Unique expansion over the known matrices.
    Expanded,
    /// Combination of known matrices found by search.
    Old,
    /// A new toric matrix with the given coefficients on its copies.
    New { split: Vec<i64> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub norm: i64,
    pub pair: (usize, usize),
    pub kind: StepKind,
    /// Coefficients over the toric matrices known before this step.
    pub coefficients: Vec<i64>,
}

/// Distinct toric matrices `W_{z,0}` with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricFamily {
    pub matrices: Vec<IntMatrix>,
    pub multiplicities: Vec<u32>,
    /// Index of `W_{0,0} = M`.
    pub unit: usize,
    pub trace: Vec<TraceStep>,
}

impl ToricFamily {
    /// `d_O = Σ multiplicities`.
    pub fn total(&self) -> usize {
        self.multiplicities.iter().map(|&m| m as usize).sum()
    }

    pub fn distinct(&self) -> usize {
        self.matrices.len()
    }

    /// Distinct-matrix index of every copy, in order.
    pub fn copies(&self) -> Vec<usize> {
        self.multiplicities.iter().enumerate().flat_map(|(d, &m)| core::iter::repeat(d).take(m as usize)).collect()
    }

    pub fn count_with_multiplicity(&self, m: u32) -> usize {
        self.multiplicities.iter().filter(|&&x| x == m).count()
    }
}

/// Sums of squares `Σ p_i²` over splittings `c = Σ p_i` into `parts` nonnegative parts.
fn split_norms(c: i64, parts: u32) -> BTreeSet<i64> {
    match parts {
        1 => [c * c].into_iter().collect(),
        _ => {
            let mut out = BTreeSet::new();
            for a in 0..=c {
                for rest in split_norms(c - a, parts - 1) {
                    out.insert(a * a + rest);
                }
            }
            out
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Writing {
    Old(Vec<i64>),
    New(Vec<i64>, IntMatrix, Vec<i64>),
}

struct Solver<'a> {
    known: Vec<IntMatrix>,
    mult: Vec<u32>,
    span: IntSpan,
    d_o: usize,
    rank_target: usize,
    _k: &'a KFamily,
}

impl Solver<'_> {
    /// Copies still available beyond one per independent direction.
    fn extra_budget(&self) -> i64 {
        let copies: usize = self.mult.iter().map(|&m| m as usize).sum();
        (self.d_o as i64 - self.rank_target as i64) - (copies as i64 - self.known.len() as i64)
    }

    fn expansion(&self, k: &IntMatrix, n: i64) -> Result<Option<Vec<i64>>> {
        if self.known.is_empty() {
            return Ok(None);
        }
        let Some(c) = self.span.expand_integral(k.data())? else { return Ok(None) };
        if c.iter().any(|&x| x < 0) {
            return Ok(None);
        }
        let mut reach: BTreeSet<i64> = [0].into_iter().collect();
        for (ci, &m) in c.iter().zip(&self.mult) {
            let q = split_norms(*ci, m);
            reach = reach.iter().flat_map(|a| q.iter().map(move |b| a + b)).filter(|&s| s <= n).collect();
        }
        Ok(reach.contains(&n).then_some(c))
    }

    fn writings(&self, k: &IntMatrix, n: i64) -> Result<BTreeSet<Writing>> {
        let mut out = BTreeSet::new();
        let budget = self.extra_budget();
        let mut coefs = Vec::new();
        let start: BTreeSet<i64> = [0].into_iter().collect();
        self.rec(0, k.clone(), &start, &mut coefs, n, budget, &mut out)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        &self,
        i: usize,
        r: IntMatrix,
        reach: &BTreeSet<i64>,
        coefs: &mut Vec<i64>,
        n: i64,
        budget: i64,
        out: &mut BTreeSet<Writing>,
    ) -> Result<()> {
        if i == self.known.len() {
            for &used in reach {
                let rem = n - used;
                if rem < 0 {
                    continue;
                }
                if r.is_zero() {
                    if rem == 0 {
                        out.insert(Writing::Old(coefs.clone()));
                    }
                    continue;
                }
                let g = r.content();
                for d in 1..=g {
                    if g % d != 0 {
                        continue;
                    }
                    let w = r.div_exact(d).expect("divisor of the content");
                    let single = d * d == rem;
                    let doubles: Vec<(i64, i64)> = if budget > 0 {
                        (1..d).map(|e1| (e1, d - e1)).filter(|&(e1, e2)| e1 <= e2 && e1 * e1 + e2 * e2 == rem).collect()
                    } else {
                        Vec::new()
                    };
                    if !single && doubles.is_empty() {
                        continue;
                    }
                    if self.span.contains(w.data())? {
                        continue;
                    }
                    if single {
                        out.insert(Writing::New(coefs.clone(), w.clone(), vec![d]));
                    }
                    for (e1, e2) in doubles {
                        out.insert(Writing::New(coefs.clone(), w.clone(), vec![e1, e2]));
                    }
                }
            }
            return Ok(());
        }
        let wi = &self.known[i];
        let mut c = 0;
        let mut rc = r;
        while c <= n {
            if !rc.is_nonnegative() {
                break;
            }
            let q = split_norms(c, self.mult[i]);
            let next: BTreeSet<i64> =
                reach.iter().flat_map(|a| q.iter().map(move |b| a + b)).filter(|&s| s <= n).collect();
            if !next.is_empty() {
                coefs.push(c);
                self.rec(i + 1, rc.clone(), &next, coefs, n, budget, out)?;
                coefs.pop();
            }
            rc.add_scaled(-1, wi);
            c += 1;
        }
        Ok(())
    }

    fn push(&mut self, w: IntMatrix, mult: u32) -> Result<()> {
        self.span.insert(w.data())?;
        self.known.push(w);
        self.mult.push(mult);
        Ok(())
    }
}

/// Solves for the toric matrices, given `d_O = Tr(MᵀM)`.
///
/// Distinct `K` are processed by increasing `(norm, λ, μ)`. The unique
/// expansion over the known toric matrices is tried first. Otherwise every
/// writing "known part + one new matrix `R/d`" is enumerated, where the new
/// matrix carries one copy with coefficient `d` or two copies `e₁ + e₂ = d`
/// (the latter only while `d_O − rank` leaves room for repeated matrices),
/// and the squared coefficients add up to the norm. A `K` is settled when it
/// has exactly one writing; ambiguous ones are retried after the rest of
/// their norm class.
pub fn solve_splitting(fam: &KFamily, d_o: usize) -> Result<ToricFamily> {
    let rank_target = span_rank(fam)?;
    let mut first: BTreeMap<&IntMatrix, (i64, usize, usize)> = BTreeMap::new();
    for (l, m) in fam.pairs() {
        let key = (fam.norm(l, m), l, m);
        first.entry(fam.get(l, m)).and_modify(|k| *k = (*k).min(key)).or_insert(key);
    }
    let mut order: Vec<(i64, usize, usize)> = first.into_values().collect();
    order.sort();
    let mut solver = Solver {
        known: Vec::new(),
        mult: Vec::new(),
        span: IntSpan::new(fam.order * fam.order),
        d_o,
        rank_target,
        _k: fam,
    };
    let mut trace = Vec::new();
    let norms: BTreeSet<i64> = order.iter().map(|t| t.0).collect();
    for n in norms {
        if n <= 0 {
            continue;
        }
        let mut pending: Vec<(usize, usize)> = order.iter().filter(|t| t.0 == n).map(|t| (t.1, t.2)).collect();
        loop {
            let mut progress = false;
            let mut still = Vec::new();
            for &(l, m) in &pending {
                let k = fam.get(l, m);
                if let Some(c) = solver.expansion(k, n)? {
                    trace.push(TraceStep { norm: n, pair: (l, m), kind: StepKind::Expanded, coefficients: c });
                    progress = true;
                    continue;
                }
                let ws = solver.writings(k, n)?;
                match ws.len() {
                    0 => return Err(Error::Inconsistent { lambda: l, mu: m }),
                    1 => {
                        let w = ws.into_iter().next().expect("one writing");
                        match w {
                            Writing::Old(c) => {
                                trace.push(TraceStep { norm: n, pair: (l, m), kind: StepKind::Old, coefficients: c })
                            }
                            Writing::New(c, wn, split) => {
                                solver.push(wn, split.len() as u32)?;
                                trace.push(TraceStep {
                                    norm: n,
                                    pair: (l, m),
                                    kind: StepKind::New { split },
                                    coefficients: c,
                                });
                            }
                        }
                        progress = true;
                    }
                    _ => still.push((l, m)),
                }
            }
            pending = still;
            if pending.is_empty() {
                break;
            }
            if !progress {
                return Err(Error::Ambiguous { norm: n, pairs: pending });
            }
        }
    }
    let unit = solver.known.iter().position(|w| w == fam.get(0, 0)).ok_or(Error::NoUnitComponent)?;
    Ok(ToricFamily { matrices: solver.known, multiplicities: solver.mult, unit, trace })
}

/// Checks `K_{λμ} = Σ_z (W_{z,0})_{λ̄μ̄} W_{z,0}` over all copies, for every pair.
///
/// Returns the first failing pair, if any.
pub fn verify_splitting(fam: &KFamily, toric: &ToricFamily, ring: &FusionRing) -> Option<(usize, usize)> {
    for (l, m) in fam.pairs() {
        let (lb, mb) = (ring.conjugate_index(l), ring.conjugate_index(m));
        let mut sum = IntMatrix::zeros(fam.order, fam.order);
        for (w, &mult) in toric.matrices.iter().zip(&toric.multiplicities) {
            let c = w[(lb, mb)] * mult as i64;
            if c != 0 {
                sum.add_scaled(c, w);
            }
        }
        if &sum != fam.get(l, m) {
            return Some((l, m));
        }
    }
    None
}

/// Action of the three fusion generators on the distinct toric matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientAction {
    /// Row `d` of `left[g]` expands `N_g W_d`.
    pub left: [IntMatrix; 3],
    /// Row `d` of `right[g]` expands `W_d N_gᵀ`.
    pub right: [IntMatrix; 3],
}

pub fn quotient_action(toric: &ToricFamily, ring: &FusionRing) -> Result<QuotientAction> {
    let d = toric.distinct();
    let mut span = IntSpan::new(ring.order() * ring.order());
    for w in &toric.matrices {
        span.insert(w.data())?;
    }
    let dec = |k: &IntMatrix| -> Result<Vec<i64>> {
        span.expand_integral(k.data())?.ok_or_else(|| Error::LiftFailed("generator image outside the toric span".into()))
    };
    let build = |f: &dyn Fn(&IntMatrix) -> IntMatrix| -> Result<IntMatrix> {
        let rows: Vec<Vec<i64>> = toric.matrices.iter().map(|w| dec(&f(w))).collect::<Result<_>>()?;
        let m = IntMatrix::from_rows(&rows).expect("square");
        if !m.is_nonnegative() {
            return Err(Error::LiftFailed("negative quotient coefficient".into()));
        }
        debug_assert_eq!(m.rows(), d);
        Ok(m)
    };
    let mut left = Vec::new();
    let mut right = Vec::new();
    for g in 0..3 {
        let n = ring.generator(g);
        let nt = n.transpose();
        left.push(build(&|w| n * w)?);
        right.push(build(&|w| w * &nt)?);
    }
    let arr = |v: Vec<IntMatrix>| -> [IntMatrix; 3] { v.try_into().expect("three generators") };
    Ok(QuotientAction { left: arr(left), right: arr(right) })
}

/// Connected components of the undirected union of `mats`, labelled by first vertex.
pub fn components(mats: &[IntMatrix]) -> Vec<usize> {
    let n = mats[0].rows();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if comp[y] == usize::MAX && mats.iter().any(|m| m[(x, y)] != 0 || m[(y, x)] != 0) {
                    comp[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    comp
}

/// A copy of a toric matrix: `(distinct index, copy number)`.
pub type Vertex = (usize, u8);

/// Lift of the left action to the vertices of one component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedComponent {
    pub vertices: Vec<Vertex>,
    /// Lift of `N_100`.
    pub a: IntMatrix,
    /// Lift of `N_010`.
    pub b: IntMatrix,
    /// Number of lifts found before identifying those related by copy swaps.
    pub raw_solutions: usize,
}

/// Candidate rows for vertex class `d`: every split of `R[d][d']` over the copies of `d'`.
fn row_options(r: &IntMatrix, d: usize, members: &[usize], mult: &[u32]) -> Vec<Vec<i64>> {
    let mut opts: Vec<Vec<i64>> = vec![Vec::new()];
    for &dp in members {
        let s = r[(d, dp)];
        let parts: Vec<Vec<i64>> = if mult[dp] == 1 { vec![vec![s]] } else { (0..=s).map(|a| vec![a, s - a]).collect() };
        opts = opts
            .into_iter()
            .flat_map(|o| {
                parts.iter().map(move |p| {
                    let mut o2 = o.clone();
                    o2.extend_from_slice(p);
                    o2
                })
            })
            .collect();
    }
    opts
}

fn annular_nonnegative(a: &IntMatrix, b: &IntMatrix, level: u32) -> bool {
    recursion([a, b, &a.transpose()], level).is_ok()
}

/// All lifts of one component, identified up to swapping copies.
///
/// The lift `A` of `N_100` must project onto `R_100` by rows and onto `R_001`
/// by columns (so the lift of `N_001` is `Aᵀ`) and be normal. The lift `B` of
/// `N_010` must be symmetric and commute with `A`. Finally the annular
/// recursion seeded by `(A, B, Aᵀ)` must stay nonnegative up to `level`.
pub fn lift_component(q: &QuotientAction, mult: &[u32], members: &[usize], level: u32) -> Result<Vec<LiftedComponent>> {
    let vertices: Vec<Vertex> =
        members.iter().flat_map(|&d| (0..mult[d] as u8).map(move |c| (d, c))).collect();
    let n = vertices.len();
    let cls: Vec<usize> = vertices.iter().map(|v| members.iter().position(|&d| d == v.0).expect("member")).collect();
    let a_opts: Vec<Vec<Vec<i64>>> = vertices.iter().map(|&(d, _)| row_options(&q.left[0], d, members, mult)).collect();
    let b_opts: Vec<Vec<Vec<i64>>> = vertices.iter().map(|&(d, _)| row_options(&q.left[1], d, members, mult)).collect();
    let r3 = &q.left[2];
    // Column targets: Σ_{x in class d} A[x][y] = R_001[class(y)][d].
    let target = |y: usize, ci: usize| r3[(vertices[y].0, members[ci])];
    let mut a_sols: Vec<IntMatrix> = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n);
    let mut colsum = vec![vec![0i64; members.len()]; n];
    fn rec_a(
        i: usize,
        n: usize,
        a_opts: &[Vec<Vec<i64>>],
        cls: &[usize],
        target: &dyn Fn(usize, usize) -> i64,
        rows: &mut Vec<Vec<i64>>,
        colsum: &mut [Vec<i64>],
        out: &mut Vec<IntMatrix>,
    ) {
        if i == n {
            let a = IntMatrix::from_rows(rows).expect("square");
            if &a * &a.transpose() == &a.transpose() * &a {
                out.push(a);
            }
            return;
        }
        let ci = cls[i];
        let closes_class = i + 1 == n || cls[i + 1] != ci;
        for opt in &a_opts[i] {
            let ok = (0..n).all(|y| {
                let s = colsum[y][ci] + opt[y];
                let t = target(y, ci);
                if closes_class {
                    s == t
                } else {
                    s <= t
                }
            });
            if !ok {
                continue;
            }
            for y in 0..n {
                colsum[y][ci] += opt[y];
            }
            rows.push(opt.clone());
            rec_a(i + 1, n, a_opts, cls, target, rows, colsum, out);
            rows.pop();
            for y in 0..n {
                colsum[y][ci] -= opt[y];
            }
        }
    }
    rec_a(0, n, &a_opts, &cls, &target, &mut rows, &mut colsum, &mut a_sols);

    let mut sols: Vec<(IntMatrix, IntMatrix)> = Vec::new();
    for a in &a_sols {
        let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n);
        fn rec_b(
            i: usize,
            n: usize,
            b_opts: &[Vec<Vec<i64>>],
            rows: &mut Vec<Vec<i64>>,
            a: &IntMatrix,
            level: u32,
            out: &mut Vec<(IntMatrix, IntMatrix)>,
        ) {
            if i == n {
                let b = IntMatrix::from_rows(rows).expect("square");
                if (a * &b) == (&b * a) && annular_nonnegative(a, &b, level) {
                    out.push((a.clone(), b));
                }
                return;
            }
            for opt in &b_opts[i] {
                if (0..i).any(|j| rows[j][i] != opt[j]) {
                    continue;
                }
                rows.push(opt.clone());
                rec_b(i + 1, n, b_opts, rows, a, level, out);
                rows.pop();
            }
        }
        rec_b(0, n, &b_opts, &mut rows, a, level, &mut sols);
    }

    // Identify lifts related by swapping the two copies of a doubled class.
    let doubled: Vec<usize> = members.iter().copied().filter(|&d| mult[d] == 2).collect();
    let swap_perm = |mask: u64| -> Vec<usize> {
        vertices
            .iter()
            .map(|&(d, c)| {
                let flip = doubled.iter().position(|&x| x == d).is_some_and(|k| mask >> k & 1 == 1);
                let c2 = if flip { 1 - c } else { c };
                vertices.iter().position(|&v| v == (d, c2)).expect("copy exists")
            })
            .collect()
    };
    let perms: Vec<Vec<usize>> = (0..1u64 << doubled.len()).map(swap_perm).collect();
    let raw = sols.len();
    let mut seen: BTreeSet<(IntMatrix, IntMatrix)> = BTreeSet::new();
    let mut out = Vec::new();
    for (a, b) in sols {
        let canon = perms.iter().map(|p| (a.permuted(p), b.permuted(p))).min().expect("identity permutation");
        if seen.insert(canon) {
            out.push(LiftedComponent { vertices: vertices.clone(), a, b, raw_solutions: raw });
        }
    }
    Ok(out)
}

/// Chiral generators on the `d_O` vertices of the Ocneanu graph.
///
/// Vertices are grouped in left-chiral components of equal size; each
/// component is ordered so that its block equals the unit component's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OcGraph {
    pub vertices: Vec<Vertex>,
    pub block_size: usize,
    /// `V_{100,0}`, `V_{010,0}`, `V_{001,0}`.
    pub left: [IntMatrix; 3],
    /// `V_{0,100}`, `V_{0,010}`, `V_{0,001}`, equal to `P V_{f,0} P`.
    pub right: [IntMatrix; 3],
    /// Chiral conjugation as a vertex involution.
    pub conjugation: Vec<usize>,
    /// Vertices in both the left and the right unit components.
    pub ambichiral: Vec<usize>,
}

impl OcGraph {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Same left data with a different chiral conjugation.
    pub fn with_conjugation(&self, p: &[usize]) -> OcGraph {
        let pm = IntMatrix::permutation(p);
        let conj = |m: &IntMatrix| &(&pm * m) * &pm.transpose();
        let right = [conj(&self.left[0]), conj(&self.left[1]), conj(&self.left[2])];
        let left_unit: BTreeSet<usize> = (0..self.block_size).collect();
        let ambichiral = (0..self.order()).filter(|v| left_unit.contains(v) && left_unit.contains(&p[*v])).collect();
        OcGraph { right, conjugation: p.to_vec(), ambichiral, ..self.clone() }
    }

    /// `[V_{f,0}, V_{0,g}] = 0` for all nine pairs.
    pub fn chiral_commute(&self) -> bool {
        self.left.iter().all(|l| self.right.iter().all(|r| l.commutes_with(r)))
    }

    /// Unit block of the left generators as a quantum graph.
    pub fn module_graph(&self) -> Result<QuantumGraph> {
        extract_module_graph(self)
    }
}

/// Result of [`chiral_generators`].
#[derive(Clone, Debug)]
pub struct ChiralGenerators {
    pub graph: OcGraph,
    /// Every admissible chiral conjugation; `graph` uses the first.
    pub conjugations: Vec<Vec<usize>>,
    /// Raw lift counts per component, unit component first.
    pub lift_counts: Vec<usize>,
}

/// Lifts the quotient action to the Ocneanu graph and finds chiral conjugation.
///
/// Chiral conjugation acts on distinct toric matrices as `W ↦ Wᵀ`. On copies
/// it is fixed up to one bit per orbit of doubled matrices; every choice that
/// is an involution intertwining left and right generators is returned.
pub fn chiral_generators(toric: &ToricFamily, ring: &FusionRing) -> Result<ChiralGenerators> {
    let q = quotient_action(toric, ring)?;
    let comp = components(&q.left);
    let unit_comp = comp[toric.unit];
    let mut comp_ids: Vec<usize> = comp.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    comp_ids.sort_by_key(|&c| (c != unit_comp, c));
    let mut lifted = Vec::new();
    let mut lift_counts = Vec::new();
    for &c in &comp_ids {
        let members: Vec<usize> = (0..toric.distinct()).filter(|&d| comp[d] == c).collect();
        let sols = lift_component(&q, &toric.multiplicities, &members, ring.level)?;
        match sols.len() {
            0 => return Err(Error::LiftFailed(format!("no lift for component {c}"))),
            1 => {}
            k => return Err(Error::LiftFailed(format!("{k} inequivalent lifts for component {c}"))),
        }
        let s = sols.into_iter().next().expect("one lift");
        lift_counts.push(s.raw_solutions);
        lifted.push(s);
    }
    let unit = &lifted[0];
    let size = unit.vertices.len();
    if lifted.iter().any(|l| l.vertices.len() != size) {
        return Err(Error::LiftFailed("components of unequal size".into()));
    }
    let unit_pos = unit.vertices.iter().position(|v| v.0 == toric.unit).expect("unit vertex");
    let mut vertices = Vec::new();
    let mut blocks_a = Vec::new();
    let mut blocks_b = Vec::new();
    for (i, l) in lifted.iter().enumerate() {
        // Reorder so the block equals the unit block; the unit keeps its place.
        let sigma = if i == 0 {
            (0..size).collect()
        } else {
            isomorphism(&[&unit.a, &unit.b], &[&l.a, &l.b], &[])
                .ok_or_else(|| Error::LiftFailed("component not isomorphic to the unit component".into()))?
        };
        vertices.extend(sigma.iter().map(|&s| l.vertices[s]));
        blocks_a.push(l.a.permuted(&sigma));
        blocks_b.push(l.b.permuted(&sigma));
    }
    // Put the unit vertex first within every block.
    let mut within: Vec<usize> = (0..size).collect();
    within.swap(0, unit_pos);
    let reorder: Vec<usize> = (0..lifted.len()).flat_map(|b| within.iter().map(move |&w| b * size + w)).collect();
    let vertices: Vec<Vertex> = reorder.iter().map(|&i| vertices[i]).collect();
    let a = IntMatrix::block_diag(&blocks_a).permuted(&reorder);
    let b = IntMatrix::block_diag(&blocks_b).permuted(&reorder);
    let left = [a.clone(), b, a.transpose()];

    let conjugations = chiral_conjugations(toric, &q, &vertices, &left)?;
    let first = conjugations.first().ok_or_else(|| Error::LiftFailed("no chiral conjugation".into()))?.clone();
    let base = OcGraph {
        vertices,
        block_size: size,
        right: left.clone(),
        left,
        conjugation: Vec::new(),
        ambichiral: Vec::new(),
    };
    Ok(ChiralGenerators { graph: base.with_conjugation(&first), conjugations, lift_counts })
}

fn chiral_conjugations(
    toric: &ToricFamily,
    q: &QuotientAction,
    vertices: &[Vertex],
    left: &[IntMatrix; 3],
) -> Result<Vec<Vec<usize>>> {
    let n = vertices.len();
    let d = toric.distinct();
    let tmap: Vec<usize> = toric
        .matrices
        .iter()
        .map(|w| {
            let t = w.transpose();
            toric.matrices.iter().position(|x| *x == t).ok_or_else(|| Error::LiftFailed("Wᵀ not a toric matrix".into()))
        })
        .collect::<Result<_>>()?;
    let mut orbit_of = vec![usize::MAX; d];
    let mut orbits = 0;
    for x in 0..d {
        if toric.multiplicities[x] == 2 && orbit_of[x] == usize::MAX {
            orbit_of[x] = orbits;
            orbit_of[tmap[x]] = orbits;
            orbits += 1;
        }
    }
    let index: BTreeMap<Vertex, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let proj = IntMatrix::from_fn(n, d, |i, j| (vertices[i].0 == j) as i64);
    let mut out = Vec::new();
    for bits in 0..1u64 << orbits {
        let p: Vec<usize> = vertices
            .iter()
            .map(|&(x, c)| {
                let c2 = if toric.multiplicities[x] == 2 { c ^ ((bits >> orbit_of[x]) & 1) as u8 } else { 0 };
                index[&(tmap[x], c2)]
            })
            .collect();
        if (0..n).any(|i| p[p[i]] != i) {
            continue;
        }
        let pm = IntMatrix::permutation(&p);
        let right: Vec<IntMatrix> = left.iter().map(|m| &(&pm * m) * &pm.transpose()).collect();
        let projects = right.iter().zip(&q.right).all(|(r, rq)| &(r * &proj) == &(&proj * rq));
        if projects && left.iter().all(|l| right.iter().all(|r| l.commutes_with(r))) {
            out.push(p);
        }
    }
    Ok(out)
}

/// The unit component of the left chiral graph as a quantum graph.
pub fn extract_module_graph(oc: &OcGraph) -> Result<QuantumGraph> {
    let size = oc.block_size;
    let idx: Vec<usize> = (0..size).collect();
    let a = oc.left[0].submatrix(&idx);
    let b = oc.left[1].submatrix(&idx);
    if (0..size).any(|i| (size..oc.order()).any(|j| oc.left[0][(i, j)] != 0 || oc.left[1][(i, j)] != 0)) {
        return Err(Error::NoUnitComponent);
    }
    let dims = quantum_dimensions(&a, 0)?;
    QuantumGraph::new(a, b, 0, dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::all_fusion_matrices;

    #[test]
    fn split_norm_sets() {
        assert_eq!(split_norms(3, 1), [9].into_iter().collect());
        assert_eq!(split_norms(3, 2), [5, 9].into_iter().collect());
        assert_eq!(split_norms(0, 2), [0].into_iter().collect());
    }

    #[test]
    fn diagonal_invariant_splits_into_fusion_matrices() {
        // E = A_k: W_{λ,0} = N_λ, each once.
        let ring = all_fusion_matrices(2).unwrap();
        let r = ring.order();
        let m = IntMatrix::identity(r);
        let fam = build_k_family(&m, &ring);
        assert_eq!(fam.get(0, 0), &m);
        let toric = solve_splitting(&fam, r).unwrap();
        assert_eq!(toric.total(), r);
        assert!(toric.multiplicities.iter().all(|&x| x == 1));
        let got: BTreeSet<&IntMatrix> = toric.matrices.iter().collect();
        let want: BTreeSet<&IntMatrix> = ring.matrices.iter().collect();
        assert_eq!(got, want);
        assert_eq!(verify_splitting(&fam, &toric, &ring), None);
    }

    #[test]
    fn components_of_disjoint_edges() {
        let m = IntMatrix::from_rows(&[[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0]]).unwrap();
        assert_eq!(components(&[m]), vec![0, 0, 1, 1]);
    }
}

#[cfg(test)]
mod e4 {
    use super::*;
    use crate::embed::su4_exceptional_invariant;
    use crate::fusion::all_fusion_matrices;

    #[test]
    fn e4_splitting_and_lift() {
        let (level, inv) = su4_exceptional_invariant("E4").unwrap();
        let ring = all_fusion_matrices(level).unwrap();
        let fam = build_k_family(&inv.m, &ring);
        let census = norm_census(&fam).unwrap();
        let distinct: Vec<usize> = census.iter().map(|c| c.distinct).collect();
        assert_eq!(distinct[..7], [8, 11, 8, 5, 6, 12, 3]);
        let d_o = (&inv.m.transpose() * &inv.m).trace() as usize;
        let toric = solve_splitting(&fam, d_o).unwrap();
        assert_eq!(toric.distinct(), 33);
        assert_eq!(toric.total(), 48);
        assert_eq!(verify_splitting(&fam, &toric, &ring), None);
        let ch = chiral_generators(&toric, &ring).unwrap();
        assert!(ch.lift_counts.iter().all(|&n| n == 1));
        assert_eq!(ch.conjugations.len(), 512);
        assert!(ch.graph.chiral_commute());
        assert_eq!(ch.graph.ambichiral.len(), 3);
        let g = ch.graph.module_graph().unwrap();
        assert_eq!(g.order(), 12);
    }
}
