//! Block structure of the `E4` graph algebra and of `Oc(E4)`.
//!
//! For `E4` an explicit system of matrix units is checked exactly in
//! `Z[a, i]`. For both algebras the block sizes are then inferred from three
//! exact integers: the dimension, the dimension of the center (number of
//! blocks) and the centralizer dimension of a generic element (sum of block
//! sizes).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::algebra::GraphAlgebra;
use crate::linalg::IntSpan;
use crate::surd::{SurdMatrix, Za, Zai};
use crate::{Error, IntMatrix, Result};

const fn re(c: [i64; 4]) -> Zai {
    Zai { re: Za(c), im: Za([0; 4]) }
}

const fn im(c: [i64; 4]) -> Zai {
    Zai { re: Za([0; 4]), im: Za(c) }
}

const fn neg(c: [i64; 4]) -> [i64; 4] {
    [-c[0], -c[1], -c[2], -c[3]]
}

// Entries in the basis 1, a, a², a³ of Z[a].
const SW: [i64; 4] = [0, 1, 0, 0]; // a = √(2+√2)
const W: [i64; 4] = [0, 0, 1, 0]; // a² = 2 + √2
const W32: [i64; 4] = [0, 0, 0, 1]; // a³
const VSW: [i64; 4] = [0, -1, 0, 1]; // (1+√2)a
const USW: [i64; 4] = [0, -2, 0, 1]; // √2·a
const V2: [i64; 4] = [-2, 0, 2, 0]; // 2(1+√2)
const SW2: [i64; 4] = [0, 2, 0, 0]; // 2a
const U: [i64; 4] = [-2, 0, 1, 0]; // √2
const TWO: [i64; 4] = [2, 0, 0, 0];

/// Coefficients of the eight one-dimensional matrix units on `G'_1 … G'_12`.
pub const UNIT_TABLE: [[Zai; 12]; 8] = [
    [re(SW), re(SW), re(VSW), re(VSW), re(V2), re(W), re(W), re(W32), re(USW), re(V2), re(W), re(W)],
    [re(W), re(W), re(neg(U)), re(neg(U)), re(SW2), re(neg(USW)), re(neg(USW)), re(TWO), re(neg(V2)), re(SW2), re(neg(USW)), re(neg(USW))],
    [re(SW), re(SW), re(VSW), re(VSW), im(V2), im(W), im(W), re(neg(W32)), re(neg(USW)), im(neg(V2)), im(neg(W)), im(neg(W))],
    [re(W), re(W), re(neg(U)), re(neg(U)), im(SW2), im(neg(USW)), im(neg(USW)), re(neg(TWO)), re(V2), im(neg(SW2)), im(USW), im(USW)],
    [re(W), re(W), re(neg(U)), re(neg(U)), im(neg(SW2)), im(USW), im(USW), re(neg(TWO)), re(V2), im(SW2), im(neg(USW)), im(neg(USW))],
    [re(SW), re(SW), re(VSW), re(VSW), im(neg(V2)), im(neg(W)), im(neg(W)), re(neg(W32)), re(neg(USW)), im(V2), im(W), im(W)],
    [re(W), re(W), re(neg(U)), re(neg(U)), re(neg(SW2)), re(USW), re(USW), re(TWO), re(neg(V2)), re(neg(SW2)), re(USW), re(USW)],
    [re(SW), re(SW), re(VSW), re(VSW), re(neg(V2)), re(neg(W)), re(neg(W)), re(W32), re(USW), re(neg(V2)), re(neg(W)), re(neg(W))],
];

/// Normalizers: `μ_s = Σ_q X[s][q] G'_q / n_s`, with `16a³` or `32`.
pub const UNIT_NORMALIZERS: [Za; 8] =
    [Za([0, 0, 0, 16]), Za([32, 0, 0, 0]), Za([0, 0, 0, 16]), Za([32, 0, 0, 0]), Za([32, 0, 0, 0]), Za([0, 0, 0, 16]), Za([32, 0, 0, 0]), Za([0, 0, 0, 16])];

/// Quantum dimensions of the twelve `E4` vertices in `Z[a]`.
pub const E4_DIMENSIONS: [Za; 12] = [
    Za([1, 0, 0, 0]),
    Za([1, 0, 0, 0]),
    Za([-1, 0, 1, 0]),
    Za([-1, 0, 1, 0]),
    Za([0, -2, 0, 1]),
    Za([0, 1, 0, 0]),
    Za([0, 1, 0, 0]),
    Za([0, 0, 1, 0]),
    Za([-2, 0, 1, 0]),
    Za([0, -2, 0, 1]),
    Za([0, 1, 0, 0]),
    Za([0, 1, 0, 0]),
];

/// Outcome of the matrix-unit verification.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixUnitReport {
    /// `μ_s μ_s = μ_s` for the eight one-dimensional units.
    pub diagonal_idempotent: bool,
    /// `μ_s μ_t = 0` for `s ≠ t`, including against the 2×2 block.
    pub orthogonal: bool,
    /// `μ[i,j] μ[j,k] = μ[i,k]` and `μ[i,j] μ[k,l] = 0` for `j ≠ k` in the 2×2 block.
    pub two_by_two: bool,
    /// The diagonal units add up to the identity.
    pub complete: bool,
    /// Largest float residual over all identities.
    pub max_residual: f64,
}

impl MatrixUnitReport {
    pub fn passed(&self) -> bool {
        self.diagonal_idempotent && self.orthogonal && self.two_by_two && self.complete
    }
}

/// Verifies the matrix units built from the right multiplications `G'_q`.
///
/// Denominators are cleared so every identity is an exact equation over
/// `Z[a, i]`: `Y_s = Σ X[s][q] G'_q` satisfies `Y_s² = n_s Y_s`; the 2×2 block
/// uses `U_99 = G'_1 − G'_2 + G'_3 − G'_4`, `U_{10,10} = G'_1 − G'_2 − G'_3 + G'_4`,
/// `U_{9,10} = G'_11 − G'_12`, `U_{10,9} = G'_6 − G'_7`, with `μ_99 = U_99/4` and
/// `μ_{9,10} = U_{9,10}/(2√2)`.
pub fn verify_matrix_units(g: &GraphAlgebra) -> MatrixUnitReport {
    let gp: Vec<IntMatrix> = (0..g.order()).map(|b| g.right(b)).collect();
    let n = g.order();
    let y: Vec<SurdMatrix> = UNIT_TABLE
        .iter()
        .map(|row| SurdMatrix::combination(&row.iter().zip(&gp).map(|(c, m)| (*c, m)).collect::<Vec<_>>()))
        .collect();
    let one = |k: i64| Zai::real(Za::int(k));
    let int = |terms: &[(i64, usize)]| {
        SurdMatrix::combination(&terms.iter().map(|&(c, q)| (one(c), &gp[q])).collect::<Vec<_>>())
    };
    let u99 = int(&[(1, 0), (-1, 1), (1, 2), (-1, 3)]);
    let u1010 = int(&[(1, 0), (-1, 1), (-1, 2), (1, 3)]);
    let u910 = int(&[(1, 10), (-1, 11)]);
    let u109 = int(&[(1, 5), (-1, 6)]);

    let mut residual: f64 = 0.0;
    let mut zero = |m: SurdMatrix| {
        residual = residual.max(m.max_abs());
        m.is_zero()
    };
    let nz = |s: usize| Zai::real(UNIT_NORMALIZERS[s]);

    let diagonal_idempotent = (0..8).all(|s| zero(&(&y[s] * &y[s]) - &y[s].scale(nz(s))));
    let block = [&u99, &u1010, &u910, &u109];
    let orthogonal = (0..8).all(|s| (0..8).all(|t| s == t || zero(&y[s] * &y[t])))
        && (0..8).all(|s| block.iter().all(|b| zero(&y[s] * b) && zero(*b * &y[s])));

    // Units indexed by (row, col) ∈ {9,10}²; μ_ij = U_ij/d_ij with d = 4 on
    // the diagonal and 2√2 off it.
    let units = [((0, 0), &u99), ((1, 1), &u1010), ((0, 1), &u910), ((1, 0), &u109)];
    let mut two_by_two = true;
    for &(ij, a) in &units {
        for &(kl, b) in &units {
            // μ_ij μ_kl = δ_jk μ_il  ⇔  U_ij U_kl = δ_jk d_ij d_kl / d_il U_il.
            let lhs = a * b;
            let rhs = if ij.1 == kl.0 {
                let il = (ij.0, kl.1);
                let u_il = units.iter().find(|u| u.0 == il).expect("unit").1;
                // d_ij d_kl / d_il: 2√2·2√2/4 = 2 for two off-diagonal units, else 4.
                let ratio = if ij.0 != ij.1 && kl.0 != kl.1 { one(2) } else { one(4) };
                u_il.scale(ratio)
            } else {
                SurdMatrix::zeros(n)
            };
            two_by_two &= zero(&lhs - &rhs);
        }
    }

    // 32a³ (Σ μ_s + μ_99 + μ_{10,10}) = 32a³ I.
    let a3 = Zai::real(Za([0, 0, 0, 1]));
    let mut total = SurdMatrix::zeros(n);
    for s in 0..8 {
        let factor = if UNIT_NORMALIZERS[s] == Za::int(32) { a3 } else { one(2) };
        total = &total + &y[s].scale(factor);
    }
    total = &total + &(&u99 + &u1010).scale(a3 * one(8));
    let complete = zero(&total - &SurdMatrix::identity(n).scale(a3 * one(32)));

    MatrixUnitReport { diagonal_idempotent, orthogonal, two_by_two, complete, max_residual: residual }
}

/// Dimension of the center of an algebra given by `product(i, j)` coefficients.
pub fn center_dimension(n: usize, product: &dyn Fn(usize, usize) -> Vec<i64>) -> Result<usize> {
    let mut span = IntSpan::new(n * n);
    for i in 0..n {
        let mut v = Vec::with_capacity(n * n);
        for j in 0..n {
            let ij = product(i, j);
            let ji = product(j, i);
            v.extend(ij.iter().zip(&ji).map(|(x, y)| x - y));
        }
        span.insert(&v)?;
    }
    Ok(n - span.rank())
}

/// Smallest centralizer dimension over a few generic elements.
pub fn generic_centralizer_dimension(n: usize, product: &dyn Fn(usize, usize) -> Vec<i64>) -> Result<usize> {
    let mut best = n;
    for seed in [1u64, 7, 31] {
        // Deterministic, pairwise distinct-looking coefficients.
        let z: Vec<i64> = (0..n as u64).map(|i| ((i * i * 131 + i * 17 * seed + seed * 7) % 97) as i64 + 1).collect();
        let mut span = IntSpan::new(n);
        for i in 0..n {
            let mut v = vec![0i64; n];
            for (j, &zj) in z.iter().enumerate() {
                for (k, (a, b)) in product(i, j).iter().zip(product(j, i)).enumerate() {
                    v[k] += zj * (a - b);
                }
            }
            span.insert(&v)?;
        }
        best = best.min(n - span.rank());
    }
    Ok(best)
}

/// Block sizes `n_1 ≥ n_2 ≥ …` with `#blocks = center`, `Σ n = centralizer` and `Σ n² = dim`.
///
/// Returns every solution; a semisimple algebra has exactly one.
pub fn block_partitions(dim: usize, center: usize, centralizer: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, parts: usize, squares: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 && squares == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for p in (1..=max.min(left)).rev() {
            if p * p > squares || left - p < parts - 1 {
                continue;
            }
            cur.push(p);
            rec(left - p, parts - 1, squares - p * p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(centralizer, center, dim, centralizer, &mut Vec::new(), &mut out);
    out
}

/// Block structure `⊕ M(n_i, C)` of a semisimple algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    pub dim: usize,
    pub center: usize,
    pub centralizer: usize,
    /// Sizes in decreasing order.
    pub blocks: Vec<usize>,
}

impl BlockStructure {
    /// Number of blocks of size `n`.
    pub fn count(&self, n: usize) -> usize {
        self.blocks.iter().filter(|&&b| b == n).count()
    }
}

pub fn block_structure(n: usize, product: &dyn Fn(usize, usize) -> Vec<i64>) -> Result<BlockStructure> {
    let center = center_dimension(n, product)?;
    let centralizer = generic_centralizer_dimension(n, product)?;
    let mut parts = block_partitions(n, center, centralizer);
    match parts.len() {
        1 => Ok(BlockStructure { dim: n, center, centralizer, blocks: parts.remove(0) }),
        k => Err(Error::Idempotency(format!("{k} block partitions fit dim {n}, center {center}, centralizer {centralizer}"))),
    }
}

/// Quantum masses and the rule `|Oc| = |E|²/|J| = |A|`.
#[derive(Clone, Debug, PartialEq)]
pub struct MassRule {
    pub ambient: f64,
    pub module: f64,
    pub modular: f64,
}

impl MassRule {
    pub fn new(ambient_dims: &[f64], module_dims: &[f64], modular: &[usize]) -> Self {
        let sq = |v: &mut dyn Iterator<Item = f64>| v.map(|x| x * x).sum::<f64>();
        MassRule {
            ambient: sq(&mut ambient_dims.iter().copied()),
            module: sq(&mut module_dims.iter().copied()),
            modular: sq(&mut modular.iter().map(|&j| module_dims[j])),
        }
    }

    /// `|E|²/|J|`.
    pub fn oc_mass(&self) -> f64 {
        self.module * self.module / self.modular
    }

    pub fn residual(&self) -> f64 {
        (self.oc_mass() - self.ambient).abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        assert_eq!(block_partitions(12, 9, 10), vec![vec![2, 1, 1, 1, 1, 1, 1, 1, 1]]);
        let oc = block_partitions(48, 33, 36);
        assert_eq!(oc.len(), 1);
        assert_eq!(oc[0][0], 4);
        assert_eq!(oc[0].iter().filter(|&&x| x == 1).count(), 32);
        // A commutative algebra is all 1×1 blocks.
        assert_eq!(block_partitions(5, 5, 5), vec![vec![1; 5]]);
    }

    #[test]
    fn matrix_algebra_structure() {
        // M(2) ⊕ C with basis e11, e12, e21, e22, f.
        let idx = |i: usize, j: usize| i * 2 + j;
        let product = |x: usize, y: usize| -> Vec<i64> {
            let mut v = vec![0; 5];
            if x == 4 && y == 4 {
                v[4] = 1;
            } else if x < 4 && y < 4 {
                let (i, j) = (x / 2, x % 2);
                let (k, l) = (y / 2, y % 2);
                if j == k {
                    v[idx(i, l)] = 1;
                }
            }
            v
        };
        let s = block_structure(5, &product).unwrap();
        assert_eq!(s.blocks, vec![2, 1]);
    }

    #[test]
    fn e4_dimensions_are_exact_surds() {
        let beta = libm::sqrt(2.0 * (2.0 + libm::sqrt(2.0)));
        assert!((E4_DIMENSIONS[4].to_f64() - beta).abs() < 1e-12);
        let mass = E4_DIMENSIONS.iter().fold(Za::ZERO, |acc, &d| acc + d * d);
        assert_eq!(mass, Za([0, 0, 16, 0]));
    }

    #[test]
    fn diagonal_mass_rule() {
        let dims = [1.0, 2.0, 2.0, 1.0];
        let r = MassRule::new(&dims, &dims, &[0, 1, 2, 3]);
        assert!(r.residual() < 1e-12);
    }
}
