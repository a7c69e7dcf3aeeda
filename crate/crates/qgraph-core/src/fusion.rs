//! `SU(4)` fusion rings at level `k` and Perron–Frobenius data.
//!
//! The production path builds the three fundamental fusion matrices from the
//! tensor-product rules of the fundamentals, then every other matrix from the
//! truncated recursion. The same recursion drives annular matrices of any
//! module (see [`recursion`]), since only the three generators enter.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::lie::{enumerate_alcove, AlgebraSpec, Weight};
use crate::{Error, IntMatrix, Result};

/// Shifts of Dynkin labels produced by tensoring with `(100)`, `(010)`, `(001)`.
const RULE_100: [[i32; 3]; 4] = [[1, 0, 0], [-1, 1, 0], [0, -1, 1], [0, 0, -1]];
const RULE_010: [[i32; 3]; 6] = [[0, 1, 0], [1, -1, 1], [1, 0, -1], [-1, 0, 1], [-1, 1, -1], [0, -1, 0]];
const RULE_001: [[i32; 3]; 4] = [[0, 0, 1], [1, -1, 0], [0, 1, -1], [-1, 0, 0]];

/// Fusion ring of `SU(4)` at level `k`, indexed by the canonical alcove.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    pub level: u32,
    pub alcove: Vec<Weight>,
    /// `matrices[λ][(μ, ν)] = N_{λμ}^ν`.
    pub matrices: Vec<IntMatrix>,
    /// Alcove indices of `(100)`, `(010)`, `(001)`.
    pub generators: [usize; 3],
}

fn alcove_index(alcove: &[Weight]) -> BTreeMap<[u32; 3], usize> {
    alcove.iter().enumerate().map(|(i, w)| ([w.labels[0], w.labels[1], w.labels[2]], i)).collect()
}

fn shifted(l: &[u32], d: &[i32; 3], k: u32) -> Option<[u32; 3]> {
    let mut out = [0u32; 3];
    for i in 0..3 {
        let v = l[i] as i32 + d[i];
        if v < 0 {
            return None;
        }
        out[i] = v as u32;
    }
    (out.iter().sum::<u32>() <= k).then_some(out)
}

/// `(N_100, N_010, N_001)` at level `k`: McKay graphs of the fundamentals.
pub fn fundamental_matrices(k: u32) -> Result<[IntMatrix; 3]> {
    if k == 0 {
        return Err(Error::Unsupported("fundamental weights need level ≥ 1"));
    }
    let alcove = enumerate_alcove(&AlgebraSpec::a(3), k);
    let idx = alcove_index(&alcove);
    let r = alcove.len();
    let build = |rule: &[[i32; 3]]| {
        let mut m = IntMatrix::zeros(r, r);
        for (i, w) in alcove.iter().enumerate() {
            for d in rule {
                if let Some(t) = shifted(&w.labels, d, k) {
                    m[(i, idx[&t])] += 1;
                }
            }
        }
        m
    };
    Ok([build(&RULE_100), build(&RULE_010), build(&RULE_001)])
}

/// Truncated `SU(4)` recursion from the three generator matrices.
///
/// Returns one matrix per weight of the level-`k` alcove, in canonical order.
/// With fusion generators this yields `N_λ`; with the generators of a module
/// it yields the annular matrices `F_λ`. For each level `ℓ ≥ 2`, weights with
/// a nonzero first label come from multiplying by `(100)`, those of the form
/// `(0, ℓ−q, q)` are transposes of `(q, ℓ−q, 0)`, and `(0, ℓ, 0)` comes from
/// multiplying by `(010)`.
pub fn recursion(gens: [&IntMatrix; 3], k: u32) -> Result<Vec<IntMatrix>> {
    let n = gens[0].rows();
    let mut table: BTreeMap<[u32; 3], IntMatrix> = BTreeMap::new();
    table.insert([0, 0, 0], IntMatrix::identity(n));
    if k >= 1 {
        table.insert([1, 0, 0], gens[0].clone());
        table.insert([0, 1, 0], gens[1].clone());
        table.insert([0, 0, 1], gens[2].clone());
    }
    let zero = IntMatrix::zeros(n, n);
    fn get<'a>(t: &'a BTreeMap<[u32; 3], IntMatrix>, zero: &'a IntMatrix, l: [i64; 3]) -> &'a IntMatrix {
        if l.iter().any(|&x| x < 0) {
            return zero;
        }
        t.get(&[l[0] as u32, l[1] as u32, l[2] as u32]).unwrap_or(zero)
    }
    let checked = |m: IntMatrix, labels: [u32; 3]| {
        if m.is_nonnegative() {
            Ok(m)
        } else {
            Err(Error::NegativeRecursion { labels })
        }
    };
    for l in 2..=k as i64 {
        for p in 0..l {
            for q in 0..=p {
                let mut m = gens[0] * get(&table, &zero, [l - p - 1, p - q, q]);
                m = &m - get(&table, &zero, [l - p - 2, p - q + 1, q]);
                m = &m - get(&table, &zero, [l - p - 1, p - q - 1, q + 1]);
                m = &m - get(&table, &zero, [l - p - 1, p - q, q - 1]);
                let key = [(l - p) as u32, (p - q) as u32, q as u32];
                table.insert(key, checked(m, key)?);
            }
        }
        for q in 1..=l {
            let src = table[&[q as u32, (l - q) as u32, 0]].transpose();
            table.insert([0, (l - q) as u32, q as u32], src);
        }
        let mut m = gens[1] * get(&table, &zero, [0, l - 1, 0]);
        m = &m - get(&table, &zero, [1, l - 2, 1]);
        m = &m - get(&table, &zero, [0, l - 2, 0]);
        let key = [0, l as u32, 0];
        table.insert(key, checked(m, key)?);
    }
    let alcove = enumerate_alcove(&AlgebraSpec::a(3), k);
    Ok(alcove.iter().map(|w| table[&[w.labels[0], w.labels[1], w.labels[2]]].clone()).collect())
}

/// All fusion matrices of `SU(4)` at level `k ≥ 1`.
pub fn all_fusion_matrices(k: u32) -> Result<FusionRing> {
    let [a, b, c] = fundamental_matrices(k)?;
    let matrices = recursion([&a, &b, &c], k)?;
    let alcove = enumerate_alcove(&AlgebraSpec::a(3), k);
    let idx = alcove_index(&alcove);
    Ok(FusionRing { level: k, generators: [idx[&[1, 0, 0]], idx[&[0, 1, 0]], idx[&[0, 0, 1]]], alcove, matrices })
}

impl FusionRing {
    pub fn order(&self) -> usize {
        self.alcove.len()
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.alcove.iter().position(|x| x == w)
    }

    pub fn matrix(&self, w: &Weight) -> Option<&IntMatrix> {
        self.index_of(w).map(|i| &self.matrices[i])
    }

    /// Index of `λ̄`.
    pub fn conjugate_index(&self, i: usize) -> usize {
        let c = self.alcove[i].conjugate();
        self.index_of(&c).expect("alcove closed under conjugation")
    }

    pub fn generator(&self, g: usize) -> &IntMatrix {
        &self.matrices[self.generators[g]]
    }

    /// `N_λ N_μ = Σ_ν (N_λ)_{μν} N_ν`.
    pub fn is_associative_pair(&self, l: usize, m: usize) -> bool {
        let lhs = &self.matrices[l] * &self.matrices[m];
        let mut rhs = IntMatrix::zeros(self.order(), self.order());
        for (nu, nm) in self.matrices.iter().enumerate() {
            let c = self.matrices[l][(m, nu)];
            if c != 0 {
                rhs.add_scaled(c, nm);
            }
        }
        lhs == rhs
    }
}

/// Perron–Frobenius data of a nonnegative irreducible matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct PerronData {
    pub eigenvalue: f64,
    /// Right eigenvector with `v[unit] = 1`.
    pub vector: Vec<f64>,
}

impl PerronData {
    /// `Σ v_i²`.
    pub fn mass(&self) -> f64 {
        self.vector.iter().map(|x| x * x).sum()
    }
}

/// Strong connectivity of the directed graph with adjacency `a`.
pub fn is_irreducible(a: &IntMatrix) -> bool {
    let n = a.rows();
    let reach = |forward: bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                let e = if forward { a[(i, j)] } else { a[(j, i)] };
                if e != 0 && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.iter().all(|&s| s)
    };
    n > 0 && a.is_square() && a.is_nonnegative() && reach(true) && reach(false)
}

const PERRON_TOL: f64 = 1e-12;
const PERRON_MAX_ITER: usize = 10_000;

/// Perron eigenvalue and eigenvector of `a`, normalized at vertex `unit`.
///
/// Power iteration on `I + a`, which is primitive whenever `a` is irreducible,
/// so periodic graphs such as the 4-graded McKay graphs still converge.
pub fn quantum_dimensions(a: &IntMatrix, unit: usize) -> Result<PerronData> {
    if !is_irreducible(a) {
        return Err(Error::NotIrreducible);
    }
    let n = a.rows();
    let mut v = vec![1.0f64; n];
    for _ in 0..PERRON_MAX_ITER {
        let mut w: Vec<f64> = v.clone();
        for i in 0..n {
            for j in 0..n {
                let e = a[(i, j)];
                if e != 0 {
                    w[i] += e as f64 * v[j];
                }
            }
        }
        let scale = w.iter().cloned().fold(0.0, f64::max);
        w.iter_mut().for_each(|x| *x /= scale);
        let delta = w.iter().zip(&v).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        v = w;
        if delta < PERRON_TOL {
            // A small step does not mean a small error when the spectral gap
            // is narrow; inverse iteration at the estimated eigenvalue fixes that.
            for _ in 0..3 {
                let lambda = eigen_ratio(a, &v);
                match shifted_solve(a, lambda, &v) {
                    Some(mut x) => {
                        let scale = x.iter().cloned().fold(0.0, |m: f64, y| m.max(y.abs()));
                        let sign = if x[unit] < 0.0 { -1.0 } else { 1.0 };
                        x.iter_mut().for_each(|y| *y *= sign / scale);
                        v = x;
                    }
                    None => break,
                }
            }
            let u = v[unit];
            let vector: Vec<f64> = v.iter().map(|x| x / u).collect();
            let eigenvalue = eigen_ratio(a, &vector);
            return Ok(PerronData { eigenvalue, vector });
        }
    }
    Err(Error::NoConvergence)
}

/// `Σ(Av) / Σv`, exact for a positive eigenvector whether or not `A` is normal.
fn eigen_ratio(a: &IntMatrix, v: &[f64]) -> f64 {
    let n = v.len();
    let av: f64 = (0..n).map(|i| (0..n).map(|j| a[(i, j)] as f64 * v[j]).sum::<f64>()).sum();
    av / v.iter().sum::<f64>()
}

/// Solves `(A − λI) x = b` by Gaussian elimination with partial pivoting.
fn shifted_solve(a: &IntMatrix, lambda: f64, b: &[f64]) -> Option<Vec<f64>> {
    let n = b.len();
    let mut m: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut row: Vec<f64> = (0..n).map(|j| a[(i, j)] as f64 - if i == j { lambda } else { 0.0 }).collect();
            row.push(b[i]);
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| m[i][c].abs().total_cmp(&m[j][c].abs()))?;
        if m[p][c] == 0.0 {
            return None;
        }
        m.swap(c, p);
        for r in c + 1..n {
            let f = m[r][c] / m[c][c];
            if f != 0.0 {
                for k in c..=n {
                    m[r][k] -= f * m[c][k];
                }
            }
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|j| m[i][j] * x[j]).sum();
        x[i] = (m[i][n] - s) / m[i][i];
    }
    x.iter().all(|y| y.is_finite()).then_some(x)
}

/// `[n]_q = sin(nπ/κ)/sin(π/κ)` for `q = exp(iπ/κ)`.
pub fn q_number(n: i64, kappa: u32) -> f64 {
    let x = core::f64::consts::PI / kappa as f64;
    libm::sin(n as f64 * x) / libm::sin(x)
}

/// Quantum Weyl dimension `Π_{α>0} [⟨λ+ρ,α⟩]/[⟨ρ,α⟩]` of an `su(N)` weight.
pub fn quantum_weyl_dimension(w: &Weight, kappa: u32) -> f64 {
    let l: Vec<i64> = w.labels.iter().map(|&x| x as i64 + 1).collect();
    let mut d = 1.0;
    for i in 0..l.len() {
        let mut num = 0;
        for j in i..l.len() {
            num += l[j];
            let height = (j - i + 1) as i64;
            d *= q_number(num, kappa) / q_number(height, kappa);
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::{verlinde_fusion, ModularData};
    use proptest::prelude::*;
    use std::sync::OnceLock;

    fn ring4() -> &'static FusionRing {
        static R: OnceLock<FusionRing> = OnceLock::new();
        R.get_or_init(|| all_fusion_matrices(4).unwrap())
    }

    fn w(l: [u32; 3]) -> Weight {
        Weight::new(l)
    }

    fn row_support(r: &FusionRing, m: &IntMatrix, of: [u32; 3]) -> Vec<(Weight, i64)> {
        let i = r.index_of(&w(of)).unwrap();
        (0..r.order()).filter(|&j| m[(i, j)] != 0).map(|j| (r.alcove[j].clone(), m[(i, j)])).collect()
    }

    #[test]
    fn fundamental_rule_examples() {
        let r = ring4();
        let n100 = r.generator(0);
        let mut got = row_support(r, n100, [1, 1, 1]);
        got.sort();
        let mut want = vec![(w([2, 1, 1]), 1), (w([0, 2, 1]), 1), (w([1, 0, 2]), 1), (w([1, 1, 0]), 1)];
        want.sort();
        assert_eq!(got, want);
        // (104) exceeds the level; (0,0,−1) is the only other admissible shift.
        assert_eq!(row_support(r, n100, [0, 0, 4]), vec![(w([0, 0, 3]), 1)]);
        assert_eq!(row_support(r, n100, [0, 0, 0]), vec![(w([1, 0, 0]), 1)]);
        assert_eq!(r.generator(2), &n100.transpose());
    }

    #[test]
    fn recursion_matches_verlinde() {
        for k in 1..=4 {
            let ring = all_fusion_matrices(k).unwrap();
            let md = ModularData::new(&AlgebraSpec::a(3), k).unwrap();
            assert_eq!(ring.alcove, md.alcove);
            assert_eq!(ring.matrices, verlinde_fusion(&md).unwrap(), "level {k}");
        }
    }

    #[test]
    fn structural_invariants() {
        let r = ring4();
        assert_eq!(r.order(), 35);
        assert_eq!(r.matrices[0], IntMatrix::identity(35));
        for l in 0..r.order() {
            assert!(r.matrices[l].is_nonnegative());
            assert_eq!(r.matrices[r.conjugate_index(l)], r.matrices[l].transpose());
            let lab = &r.alcove[l].labels;
            if lab[0] == 0 && lab[2] == 0 {
                assert!(r.matrices[l].is_symmetric());
            }
        }
    }

    #[test]
    fn four_ality_selection_rule() {
        let r = ring4();
        for (g, step) in [(0, 1), (1, 2), (2, 3)] {
            let m = r.generator(g);
            for a in 0..35 {
                for b in 0..35 {
                    if m[(a, b)] != 0 {
                        assert_eq!(r.alcove[b].n_ality(), (r.alcove[a].n_ality() + step) % 4);
                    }
                }
            }
        }
    }

    #[test]
    fn perron_data_of_a4() {
        let r = ring4();
        let p = quantum_dimensions(r.generator(0), 0).unwrap();
        let s2 = libm::sqrt(2.0);
        let beta = libm::sqrt(2.0 * (2.0 + s2));
        assert!((p.eigenvalue - beta).abs() < 1e-9);
        assert!((p.vector[r.generators[0]] - beta).abs() < 1e-9);
        assert!((p.vector[r.generators[1]] - (2.0 + s2)).abs() < 1e-9);
        assert!((p.mass() - 128.0 * (3.0 + 2.0 * s2)).abs() < 1e-7);
        for (i, wt) in r.alcove.iter().enumerate() {
            assert!((quantum_weyl_dimension(wt, 8) - p.vector[i]).abs() < 1e-9, "{wt}");
        }
        assert_eq!(quantum_weyl_dimension(&w([0, 0, 0]), 8), 1.0);
    }

    #[test]
    fn reducible_matrix_rejected() {
        assert_eq!(quantum_dimensions(&IntMatrix::identity(2), 0), Err(Error::NotIrreducible));
        assert!(fundamental_matrices(0).is_err());
    }

    proptest! {
        #[test]
        fn fusion_commutes_and_associates(l in 0usize..35, m in 0usize..35) {
            let r = ring4();
            prop_assert_eq!(&r.matrices[l] * &r.matrices[m], &r.matrices[m] * &r.matrices[l]);
            prop_assert!(r.is_associative_pair(l, m));
        }

        #[test]
        fn dimensions_form_a_character(l in 0usize..35, m in 0usize..35) {
            let r = ring4();
            let d = quantum_dimensions(r.generator(0), 0).unwrap().vector;
            let rhs: f64 = (0..35).map(|nu| r.matrices[l][(m, nu)] as f64 * d[nu]).sum();
            prop_assert!((d[l] * d[m] - rhs).abs() < 1e-8);
        }
    }
}
