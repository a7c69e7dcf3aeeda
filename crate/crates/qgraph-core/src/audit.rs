//! Acceptance checks for the `E4(SU(4))` reconstruction.
//!
//! Each [`Criterion`] bundles named checks with the reference values and
//! tolerances they are held to. [`run_all`] runs the pipeline once and
//! evaluates every criterion against it.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Rational64;

use crate::embed::{scan_embeddings, simple_group_catalog, CartanType, SimpleGroup, COMMUTANT_TOL};
use crate::fusion::{all_fusion_matrices, quantum_dimensions};
use crate::graph::algebra::{DOUBLET_PRODUCTS, TWIST};
use crate::graph::blocks::{block_structure, verify_matrix_units, MassRule, E4_DIMENSIONS};
use crate::graph::oc::{combine, toric_from_essential, TwistedToric};
use crate::graph::{path_dimensions, QuantumGraph};
use crate::lie::{enumerate_alcove, AlgebraSpec, Weight};
use crate::modular::{verlinde_fusion, CMatrix, ModularData, RELATION_TOL, ROUNDING_TOL};
use crate::pipeline::{E4Pipeline, E4_LEVEL};
use crate::split::{norm_census, span_rank, verify_splitting};
use crate::surd::Za;
use crate::{IntMatrix, Result};

/// Tolerance on quantum dimensions, masses and matrix-unit residuals.
pub const SURD_TOL: f64 = 1e-9;

/// Conformal dimensions at `(A3, 4)` in canonical alcove order, as `(num, den)`.
pub const A3_LEVEL4_DIMENSIONS: [(i64, i64); 35] = [
    (0, 1), (15, 64), (5, 16), (15, 64), (9, 16), (39, 64), (1, 2), (3, 4), (39, 64), (9, 16),
    (63, 64), (1, 1), (55, 64), (71, 64), (15, 16), (55, 64), (21, 16), (71, 64), (1, 1), (63, 64),
    (3, 2), (95, 64), (21, 16), (25, 16), (87, 64), (5, 4), (111, 64), (3, 2), (87, 64), (21, 16),
    (2, 1), (111, 64), (25, 16), (95, 64), (3, 2),
];

/// Number of distinct `K_{λμ}` at norms 1 through 8.
pub const NORM_CENSUS: [usize; 8] = [8, 11, 8, 5, 6, 12, 0, 3];

/// Conformal-embedding counts for `SU(2)`, `SU(3)`, `SU(4)`.
pub const EMBEDDING_COUNTS: [(u32, usize); 3] = [(1, 3), (2, 14), (3, 21)];

/// One named check with its outcome.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A numbered acceptance criterion.
#[derive(Clone, Debug, PartialEq)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl Criterion {
    fn new(id: u8, title: &'static str) -> Self {
        Criterion { id, title, checks: Vec::new() }
    }

    fn check(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(Check { name: name.into(), passed, detail });
    }

    /// Records an exact equality.
    fn equal<T: PartialEq + fmt::Debug>(&mut self, name: &str, got: T, want: T) {
        let passed = got == want;
        let detail = if passed { format!("{got:?}") } else { format!("got {got:?}, want {want:?}") };
        self.check(name, passed, detail);
    }

    /// Records `|got − want| < tol`.
    fn close(&mut self, name: &str, got: f64, want: f64, tol: f64) {
        let err = (got - want).abs();
        self.check(name, err < tol, format!("{got:.12} vs {want:.12} (err {err:.1e}, tol {tol:.0e})"));
    }

    /// Records `residual < tol`.
    fn small(&mut self, name: &str, residual: f64, tol: f64) {
        self.check(name, residual < tol, format!("{residual:.1e} < {tol:.0e}"));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let ok = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "{status} {:>2} {} ({ok}/{} checks)", self.id, self.title, self.checks.len())?;
        for c in self.failures() {
            write!(f, "; {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

fn su(n: u32) -> SimpleGroup {
    CartanType::A(n).into()
}

pub fn embedding_scan() -> Criterion {
    let mut c = Criterion::new(1, "conformal-embedding scan counts");
    let catalog = simple_group_catalog(40);
    for (rank, want) in EMBEDDING_COUNTS {
        let found = scan_embeddings(&su(rank), &catalog, 100_000);
        let name = format!("SU({}) count", rank + 1);
        let list: Vec<String> = found.iter().map(|e| format!("{}@{}", e.k_group.name, e.level)).collect();
        let passed = found.len() == want;
        c.check(&name, passed, format!("{} found, want {want}: {}", found.len(), list.join(" ")));
        if rank == 1 {
            let got: Vec<(String, u32)> = found.iter().map(|e| (e.k_group.name.clone(), e.level)).collect();
            let want = vec![("SU(3)".into(), 4), ("Spin(5)".into(), 10), ("G2".into(), 28)];
            c.equal("SU(2) solutions", got, want);
        }
    }
    c
}

pub fn conformal_dimensions() -> Result<Criterion> {
    let mut c = Criterion::new(2, "conformal dimensions");
    let b7 = AlgebraSpec::b(7);
    let mut hs: Vec<Rational64> =
        enumerate_alcove(&b7, 1).iter().map(|w| b7.conformal_dimension(1, w)).collect::<Result<_>>()?;
    hs.sort();
    c.equal("B7 level 1", hs, vec![Rational64::new(0, 1), Rational64::new(1, 2), Rational64::new(15, 16)]);
    let a3 = AlgebraSpec::a(3);
    let got: Vec<Rational64> =
        enumerate_alcove(&a3, 4).iter().map(|w| a3.conformal_dimension(4, w)).collect::<Result<_>>()?;
    let want: Vec<Rational64> = A3_LEVEL4_DIMENSIONS.iter().map(|&(n, d)| Rational64::new(n, d)).collect();
    c.equal("A3 level 4 (35 entries)", got, want);
    Ok(c)
}

pub fn modular_relations(md: &ModularData) -> Criterion {
    let mut c = Criterion::new(3, "modular relations at (A3,4)");
    let r = md.residuals();
    c.small("s unitary", r.s_unitary, RELATION_TOL);
    c.small("t unitary", r.t_unitary, RELATION_TOL);
    c.small("(st)^3 = s^2", r.st_cubed_vs_s_squared, RELATION_TOL);
    c.small("s^2 = C", r.s_squared_vs_c, RELATION_TOL);
    c.small("C^2 = I", r.c_squared_vs_identity, RELATION_TOL);
    c.small("t^64 = I", md.t.pow(64).distance(&CMatrix::identity(md.order())), RELATION_TOL);
    c
}

pub fn fusion_oracle() -> Result<Criterion> {
    let mut c = Criterion::new(4, "recursion and Verlinde fusion agree");
    let a3 = AlgebraSpec::a(3);
    for k in 1..=4 {
        let rec = all_fusion_matrices(k)?;
        let ver = verlinde_fusion(&ModularData::new(&a3, k)?)?;
        let n = rec.order();
        c.check(&format!("k={k}"), rec.matrices == ver, format!("{n} matrices, rounding tol {ROUNDING_TOL:.0e}"));
    }
    Ok(c)
}

fn unit_vectors(alcove: &[Weight], names: &[[u32; 3]]) -> Vec<i64> {
    let mut v = vec![0; alcove.len()];
    for l in names {
        let i = alcove.iter().position(|w| w.labels == l).expect("weight in alcove");
        v[i] += 1;
    }
    v
}

/// `u`, `v`, `w` of the `E4` invariant: the three blocks of `SU(4)₄ ⊂ Spin(15)₁`.
pub fn e4_block_vectors(alcove: &[Weight]) -> [Vec<i64>; 3] {
    [
        unit_vectors(alcove, &[[0, 0, 0], [2, 1, 0], [0, 1, 2], [0, 4, 0]]),
        unit_vectors(alcove, &[[1, 0, 1], [4, 0, 0], [1, 2, 1], [0, 0, 4]]),
        unit_vectors(alcove, &[[1, 1, 1]]),
    ]
}

fn sym(a: &[i64], b: &[i64]) -> IntMatrix {
    &IntMatrix::outer(a, b) + &IntMatrix::outer(b, a)
}

pub fn invariant(p: &E4Pipeline) -> Criterion {
    let mut c = Criterion::new(5, "modular invariant of Spin(15)_1 ⊃ SU(4)_4");
    let m = &p.invariant.m;
    let [u, v, w] = e4_block_vectors(&p.modular.alcove);
    let want = &(&IntMatrix::outer(&u, &u) + &IntMatrix::outer(&v, &v)) + &IntMatrix::outer(&w, &w).scale(4);
    c.check("|u|² + |v|² + 4|111|²", *m == want, String::new());
    c.equal("Tr M", m.trace(), 12);
    c.equal("Tr MᵀM", p.invariant.quantum_symmetries(), 48);
    let (ms, mt) = p.modular.commutator_norms(m);
    c.small("[M,s]", ms, COMMUTANT_TOL);
    c.small("[M,t]", mt, COMMUTANT_TOL);
    c
}

pub fn splitting(p: &E4Pipeline) -> Result<Criterion> {
    let mut c = Criterion::new(6, "modular splitting solution");
    c.equal("span rank", span_rank(&p.k_family)?, 33);
    let census = norm_census(&p.k_family)?;
    let by_norm: BTreeMap<i64, usize> = census.iter().map(|n| (n.norm, n.distinct)).collect();
    let got: Vec<usize> = (1..=8).map(|n| by_norm.get(&n).copied().unwrap_or(0)).collect();
    c.equal("distinct K per norm 1..8", got, NORM_CENSUS.to_vec());
    let t = &p.toric;
    c.equal("multiplicity 1 / 2", (t.count_with_multiplicity(1), t.count_with_multiplicity(2)), (18, 15));
    c.equal("d_O", t.total(), 48);
    let fail = verify_splitting(&p.k_family, t, &p.ring);
    c.check("all 1225 (λ,μ) re-verified", fail.is_none(), format!("first failure {fail:?}"));
    Ok(c)
}

fn block_diagonal_copies(m: &IntMatrix, size: usize) -> bool {
    let nb = m.rows() / size;
    let first = m.block(0, 0, size);
    (0..nb).all(|i| (0..nb).all(|j| if i == j { m.block(i, j, size) == first } else { m.block(i, j, size).is_zero() }))
}

pub fn chiral_generators(p: &E4Pipeline) -> Criterion {
    let mut c = Criterion::new(7, "chiral generators");
    let g = &p.oc_graph;
    c.equal("vertices", g.order(), 48);
    c.check("V_100 = diag(A,A,A,A)", g.block_size == 12 && block_diagonal_copies(&g.left[0], 12), String::new());
    c.check("V_010 = diag(B,B,B,B)", block_diagonal_copies(&g.left[1], 12), String::new());
    c.check("V_001 = V_100ᵀ", g.left[2] == g.left[0].transpose(), String::new());
    c.check("[V_{f,0}, V_{0,g}] = 0", g.chiral_commute(), String::new());
    c.equal("ambichiral vertices", g.ambichiral.len(), 3);
    c.check(
        "isomorphic to the realization's six chiral O's",
        p.realization_map.is_some(),
        format!("{} admissible chiral conjugations", p.chiral.conjugations.len()),
    );
    c
}

pub fn quantum_dimensions_and_masses(p: &E4Pipeline) -> Result<Criterion> {
    let mut c = Criterion::new(8, "quantum dimensions and masses");
    let sqrt2 = core::f64::consts::SQRT_2;
    let a4 = quantum_dimensions(p.ring.generator(0), 0)?;
    let beta = libm::sqrt(2.0 * (2.0 + sqrt2));
    c.close("β", a4.eigenvalue, beta, SURD_TOL);
    let i010 = p.modular.alcove.iter().position(|w| w.labels == [0, 1, 0]).expect("010");
    c.close("μ_010(A4)", a4.vector[i010], 2.0 + sqrt2, SURD_TOL);
    c.close("|A4|", a4.mass(), 128.0 * (3.0 + 2.0 * sqrt2), SURD_TOL);
    let g: &QuantumGraph = &p.algebra.graph;
    let err = g.dims.vector.iter().zip(E4_DIMENSIONS).map(|(x, d)| (x - d.to_f64()).abs()).fold(0.0, f64::max);
    c.small("E4 dimensions", err, SURD_TOL);
    let exact_mass = E4_DIMENSIONS.iter().fold(Za::ZERO, |acc, &d| acc + d * d);
    c.equal("|E4| exact", exact_mass, Za([0, 0, 16, 0]));
    c.close("|E4|", g.mass(), 16.0 * (2.0 + sqrt2), SURD_TOL);
    let rule = MassRule::new(&a4.vector, &g.dims.vector, &crate::graph::algebra::MODULAR);
    c.close("|J|", rule.modular, 4.0, SURD_TOL);
    c.small("|E4|²/|J| − |A4|", rule.residual(), SURD_TOL);
    Ok(c)
}

pub fn graph_algebra(p: &E4Pipeline) -> Result<Criterion> {
    let mut c = Criterion::new(9, "graph algebra of E4");
    let alg = &p.algebra.algebra;
    let mism = alg.doublet_product_mismatches();
    c.check("doublet product table", mism.is_empty(), format!("{} of {} cells differ", mism.len(), DOUBLET_PRODUCTS.len()));
    c.check("t(a·b) = t(b)·t(a), all 144 pairs", alg.twist_is_antihomomorphism(&TWIST), String::new());
    let fails = alg.twist_relation_failures(&TWIST);
    let names: Vec<String> = fails.iter().map(|&(a, b)| format!("{}·{}", a + 1, b + 1)).collect();
    c.check(
        "a·b = t(b)·a, all 24 different-doublet pairs",
        fails.is_empty(),
        format!("fails on {}; the reference table lists 6·11 = 1+4 and 12·6 = 2+4", names.join(" ")),
    );
    let commuting = alg.commuting_doublet_pairs();
    c.check("a·b ≠ b·a across doublets", commuting.is_empty(), format!("{} commuting pairs", commuting.len()));
    let rejected = crate::graph::algebra::rejected_branch(&p.module_graph)?;
    c.check(
        "rejected branch 3̄ = 4 is non-integral",
        rejected.is_excluded(),
        format!("{} entries forced to non-integers", rejected.forced.len()),
    );
    Ok(c)
}

pub fn oc_realization(p: &E4Pipeline) -> Result<Criterion> {
    let mut c = Criterion::new(10, "Oc realization E4 ⊗_J E4");
    let oc = &p.oc;
    c.check("48-element basis closes", oc.dim() == 48 && oc.is_nonnegative(), String::new());
    c.check("associative", oc.is_associative(), String::new());
    let mismatched = (0..oc.dim())
        .filter(|&x| {
            let (a, b) = oc.basis[x];
            oc.block_pattern(a, b).as_ref() != Some(&oc.o_matrix(x))
        })
        .count();
    c.equal("O_x block patterns mismatched", mismatched, 0);
    let conj = oc.chiral_conjugation()?;
    c.check("chiral conjugation is an involution", (0..conj.len()).all(|i| conj[conj[i]] == i), String::new());

    let f = &p.annular;
    let ws: Vec<IntMatrix> = oc.basis.iter().map(|&(a, b)| toric_from_essential(f, a, b)).collect();
    let [u, v, w] = e4_block_vectors(&p.modular.alcove);
    let uv: Vec<i64> = u.iter().zip(&v).map(|(x, y)| x + y).collect();
    let [z1, z2, z9] = oc.ambichiral();
    c.check("Z(1⊗̇1) = M", ws[z1] == p.invariant.m, String::new());
    c.check("Z(2⊗̇1) = uvᵀ + vuᵀ + 4wwᵀ", ws[z2] == &sym(&u, &v) + &IntMatrix::outer(&w, &w).scale(4), String::new());
    c.check("Z(9⊗̇1) = 2(u+v)wᵀ + 2w(u+v)ᵀ", ws[z9] == sym(&uv, &w).scale(2), String::new());

    let mut from_split: Vec<&IntMatrix> = p.toric.copies().into_iter().map(|d| &p.toric.matrices[d]).collect();
    let mut from_e: Vec<&IntMatrix> = ws.iter().collect();
    from_split.sort();
    from_e.sort();
    c.check("{E_a E_bʳᵉᵈᵀ} = split family", from_split == from_e, String::new());

    let tw = TwistedToric::new(oc, E4_LEVEL)?;
    let factorized = (0..oc.dim()).filter(|&x| tw.w(x, 0) == ws[x]).count();
    c.equal("W_{x,0} = E_a E_bʳᵉᵈᵀ", factorized, 48);
    let n = oc.dim();
    let e = |i: usize| -> Vec<i64> { (0..n).map(|j| (i == j) as i64).collect() };
    let (mut conj_form, mut literal) = (0, 0);
    for x in 0..n {
        for y in 0..n {
            let wxy = tw.w(x, y);
            conj_form += (wxy == combine(&oc.multiply(&e(x), &oc.complex_conjugate(y)), &ws)) as usize;
            literal += (wxy == combine(oc.product(x, y), &ws)) as usize;
        }
    }
    c.check(
        "W_{x,y} = W_{x·ȳ,0}, all 2304 pairs",
        conj_form == n * n,
        format!("{conj_form}/{}; literal W_{{xy,0}} holds on {literal}", n * n),
    );
    Ok(c)
}

pub fn dimensions(p: &E4Pipeline) -> Criterion {
    let mut c = Criterion::new(11, "path dimensions");
    let d = path_dimensions(&p.annular);
    c.equal("Σ d_λ", d.iter().sum::<i64>(), 1568);
    c.equal("Σ d_λ²", d.iter().map(|x| x * x).sum::<i64>(), 86816);
    let s = p.oc.dual_annular_all();
    let dx: Vec<i64> = s.iter().map(IntMatrix::sum).collect();
    c.equal("Σ d_x", dx.iter().sum::<i64>(), 1864);
    c.equal("Σ d_x²", dx.iter().map(|x| x * x).sum::<i64>(), 86816);
    let law = p.oc.module_law_failure(&s);
    c.check("Oc module law on E4", law.is_none(), format!("first failure {law:?}"));
    c
}

pub fn block_structures(p: &E4Pipeline) -> Result<Criterion> {
    let mut c = Criterion::new(12, "block structures");
    let mu = verify_matrix_units(&p.algebra.algebra);
    c.check("diagonal idempotents", mu.diagonal_idempotent, String::new());
    c.check("orthogonality", mu.orthogonal, String::new());
    c.check("2×2 matrix units", mu.two_by_two, String::new());
    c.check("completeness", mu.complete, String::new());
    c.small("unit residual", mu.max_residual, SURD_TOL);
    let g = &p.algebra.algebra;
    let e4 = block_structure(g.order(), &|i, j| g.product(i, j).to_vec())?;
    c.equal("E4 blocks (1×1, 2×2)", (e4.count(1), e4.count(2), e4.blocks.len()), (8, 1, 9));
    let oc = block_structure(p.oc.dim(), &|i, j| p.oc.product(i, j).to_vec())?;
    c.equal("Oc blocks (1×1, 4×4)", (oc.count(1), oc.count(4), oc.blocks.len()), (32, 1, 33));
    c.equal("Σ n² over Oc blocks", oc.blocks.iter().map(|n| n * n).sum::<usize>(), 48);
    Ok(c)
}

/// Runs the pipeline and all twelve criteria.
pub fn run_all() -> Result<Vec<Criterion>> {
    let p = E4Pipeline::run()?;
    run_on(&p)
}

pub fn run_on(p: &E4Pipeline) -> Result<Vec<Criterion>> {
    Ok(vec![
        embedding_scan(),
        conformal_dimensions()?,
        modular_relations(&p.modular),
        fusion_oracle()?,
        invariant(p),
        splitting(p)?,
        chiral_generators(p),
        quantum_dimensions_and_masses(p)?,
        graph_algebra(p)?,
        oc_realization(p)?,
        dimensions(p),
        block_structures(p)?,
    ])
}

