//! Realization of the quantum symmetries as `E4 ⊗_J E4`.
//!
//! The basis is `a ⊗̇ c` with `c ∈ {1, 3, 6, 11}`. Any other right factor is
//! moved across the tensor sign through `J`: `a ⊗̇ d = (j·a) ⊗̇ c` whenever
//! `d = j·c` with `j ∈ J`.

use alloc::vec;
use alloc::vec::Vec;

use super::algebra::{GraphAlgebra, CONJUGATION, MODULAR, ORDER, TWIST};
use super::{essential_matrix, reduced};
use crate::fusion::recursion;
use crate::{Error, IntMatrix, Result};

/// Right factors of the basis, 0-based labels of `1, 3, 6, 11`.
pub const CHIRAL_RIGHT: [usize; 4] = [0, 2, 5, 10];

/// `(d, j, c)`: `a ⊗̇ d = (j·a) ⊗̇ c`, 0-based.
pub const IDENTIFICATIONS: [(usize, usize, usize); 8] =
    [(1, 1, 0), (3, 1, 2), (6, 1, 5), (11, 1, 10), (8, 8, 0), (7, 8, 2), (9, 8, 5), (4, 8, 10)];

/// Basis elements `(a, c)` of the ambichiral part `{1⊗̇1, 2⊗̇1, 9⊗̇1}`.
pub const AMBICHIRAL: [(usize, usize); 3] = [(0, 0), (1, 0), (8, 0)];

/// Left chiral generators `5⊗̇1`, `8⊗̇1`, `10⊗̇1`.
pub const LEFT_GENERATORS: [(usize, usize); 3] = [(4, 0), (7, 0), (9, 0)];

/// Right chiral generators `1⊗̇5 = 9⊗̇11`, `1⊗̇8 = 9⊗̇3`, `1⊗̇10 = 9⊗̇6`.
pub const RIGHT_GENERATORS: [(usize, usize); 3] = [(8, 10), (8, 2), (8, 5)];

/// The algebra `Oc(E4)` with its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OcAlgebra {
    pub graph_algebra: GraphAlgebra,
    pub basis: Vec<(usize, usize)>,
    /// `table[x·48 + y]` holds the coefficients of `x·y`.
    table: Vec<Vec<i64>>,
}

impl OcAlgebra {
    pub fn new(g: &GraphAlgebra) -> Result<Self> {
        for &(d, j, c) in &IDENTIFICATIONS {
            let jc = g.product(j, c);
            if (0..ORDER).any(|e| jc[e] != (e == d) as i64) {
                return Err(Error::IdentificationOutOfBasis { a: j, b: c });
            }
        }
        let basis: Vec<(usize, usize)> =
            CHIRAL_RIGHT.iter().flat_map(|&c| (0..ORDER).map(move |a| (a, c))).collect();
        let mut oc = OcAlgebra { graph_algebra: g.clone(), basis, table: Vec::new() };
        let n = oc.dim();
        let mut table = Vec::with_capacity(n * n);
        for &(a, b) in &oc.basis {
            for &(a2, b2) in &oc.basis {
                let left = g.product(a, a2);
                let right = g.product(b, b2);
                let mut v = vec![0; n];
                for (e, &ce) in left.iter().enumerate() {
                    for (f, &cf) in right.iter().enumerate() {
                        if ce != 0 && cf != 0 {
                            for (o, r) in v.iter_mut().zip(oc.reduce(e, f)) {
                                *o += ce * cf * r;
                            }
                        }
                    }
                }
                table.push(v);
            }
        }
        oc.table = table;
        Ok(oc)
    }

    /// `d_O = 48`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index(&self, a: usize, c: usize) -> Option<usize> {
        let ci = CHIRAL_RIGHT.iter().position(|&x| x == c)?;
        (a < ORDER).then_some(ci * ORDER + a)
    }

    fn at(&self, a: usize, c: usize) -> usize {
        self.index(a, c).expect("basis element")
    }

    /// `a ⊗̇ d` in the basis.
    pub fn reduce(&self, a: usize, d: usize) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        if CHIRAL_RIGHT.contains(&d) {
            v[self.at(a, d)] = 1;
            return v;
        }
        let &(_, j, c) = IDENTIFICATIONS.iter().find(|t| t.0 == d).expect("every label is identified");
        for (e, &m) in self.graph_algebra.product(j, a).iter().enumerate() {
            if m != 0 {
                v[self.at(e, c)] += m;
            }
        }
        v
    }

    /// Coefficients of `x·y`.
    pub fn product(&self, x: usize, y: usize) -> &[i64] {
        &self.table[x * self.dim() + y]
    }

    pub fn multiply(&self, u: &[i64], v: &[i64]) -> Vec<i64> {
        let n = self.dim();
        let mut out = vec![0; n];
        for (x, &ux) in u.iter().enumerate() {
            if ux == 0 {
                continue;
            }
            for (y, &vy) in v.iter().enumerate() {
                if vy == 0 {
                    continue;
                }
                for (o, &c) in out.iter_mut().zip(self.product(x, y)) {
                    *o += ux * vy * c;
                }
            }
        }
        out
    }

    /// `(O_x)_{yz}`: coefficient of `z` in `x·y`.
    pub fn o_matrix(&self, x: usize) -> IntMatrix {
        let n = self.dim();
        IntMatrix::from_fn(n, n, |y, z| self.product(x, y)[z])
    }

    /// Row `y` holds `y·x`.
    pub fn right_matrix(&self, x: usize) -> IntMatrix {
        let n = self.dim();
        IntMatrix::from_fn(n, n, |y, z| self.product(y, x)[z])
    }

    /// `O_{a⊗̇c}` from the four block patterns in terms of `G_a`, `G_2`, `G_9`.
    pub fn block_pattern(&self, a: usize, c: usize) -> Option<IntMatrix> {
        let g = &self.graph_algebra.g;
        let ga = &g[a];
        let z = IntMatrix::zeros(ORDER, ORDER);
        let g2a = &g[1] * ga;
        let g9a = &g[8] * ga;
        let ga12 = ga * &(&g[0] + &g[1]);
        let k = |m: &IntMatrix| m.clone();
        let grid: Vec<Vec<IntMatrix>> = match c_index(c) {
            Some(0) => vec![
                vec![k(ga), k(&z), k(&z), k(&z)],
                vec![k(&z), k(ga), k(&z), k(&z)],
                vec![k(&z), k(&z), k(ga), k(&z)],
                vec![k(&z), k(&z), k(&z), k(ga)],
            ],
            Some(1) => vec![
                vec![k(&z), k(ga), k(&z), k(&z)],
                vec![k(ga), ga12, k(&z), k(&z)],
                vec![k(&z), k(&z), k(&g2a), k(&g9a)],
                vec![k(&z), k(&z), k(&g9a), k(ga)],
            ],
            Some(2) => vec![
                vec![k(&z), k(&z), k(ga), k(&z)],
                vec![k(&z), k(&z), k(ga), k(&g9a)],
                vec![k(&z), k(&g9a), k(&z), k(&z)],
                vec![k(ga), k(&g2a), k(&z), k(&z)],
            ],
            Some(3) => vec![
                vec![k(&z), k(&z), k(&z), k(ga)],
                vec![k(&z), k(&z), k(&g9a), k(&g2a)],
                vec![k(ga), k(ga), k(&z), k(&z)],
                vec![k(&z), k(&g9a), k(&z), k(&z)],
            ],
            _ => return None,
        };
        Some(IntMatrix::from_blocks(&grid))
    }

    /// Chiral conjugation `(a ⊗̇ c)^C = c ⊗̇ a`, as a permutation of the basis.
    pub fn chiral_conjugation(&self) -> Result<Vec<usize>> {
        self.basis
            .iter()
            .map(|&(a, c)| {
                let v = self.reduce(c, a);
                match unit_vector(&v) {
                    Some(i) => Ok(i),
                    None => Err(Error::IdentificationOutOfBasis { a: c, b: a }),
                }
            })
            .collect()
    }

    /// Complex conjugation `(a ⊗̇ b)* = ā ⊗̇ b̄`.
    pub fn complex_conjugate(&self, x: usize) -> Vec<i64> {
        let (a, b) = self.basis[x];
        self.reduce(CONJUGATION[a], CONJUGATION[b])
    }

    pub fn is_nonnegative(&self) -> bool {
        self.table.iter().all(|v| v.iter().all(|&c| c >= 0))
    }

    /// `(x·y)·z = x·(y·z)` for all basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        let e = |i: usize| -> Vec<i64> { (0..n).map(|j| (i == j) as i64).collect() };
        (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| self.multiply(self.product(x, y), &e(z)) == self.multiply(&e(x), self.product(y, z))))
        })
    }

    pub fn left_generators(&self) -> [usize; 3] {
        LEFT_GENERATORS.map(|(a, c)| self.at(a, c))
    }

    pub fn right_generators(&self) -> [usize; 3] {
        RIGHT_GENERATORS.map(|(a, c)| self.at(a, c))
    }

    pub fn ambichiral(&self) -> [usize; 3] {
        AMBICHIRAL.map(|(a, c)| self.at(a, c))
    }

    /// Dual annular matrix `S_{a⊗̇b} = G_a G'_{t(b)}`: row `c` holds `(a⊗̇b)·c = a·c·t(b)`.
    pub fn dual_annular(&self, x: usize) -> IntMatrix {
        let (a, b) = self.basis[x];
        let g = &self.graph_algebra;
        &g.g[a] * &g.right(TWIST[b])
    }

    pub fn dual_annular_all(&self) -> Vec<IntMatrix> {
        (0..self.dim()).map(|x| self.dual_annular(x)).collect()
    }

    /// `[x·y]·c = x·[y·c]`, i.e. `Σ_w (x·y)_w S_w = S_y S_x`; first failing pair.
    pub fn module_law_failure(&self, s: &[IntMatrix]) -> Option<(usize, usize)> {
        let n = self.dim();
        for x in 0..n {
            for y in 0..n {
                let mut lhs = IntMatrix::zeros(ORDER, ORDER);
                for (w, &c) in self.product(x, y).iter().enumerate() {
                    if c != 0 {
                        lhs.add_scaled(c, &s[w]);
                    }
                }
                if lhs != &s[y] * &s[x] {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

fn c_index(c: usize) -> Option<usize> {
    CHIRAL_RIGHT.iter().position(|&x| x == c)
}

fn unit_vector(v: &[i64]) -> Option<usize> {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
    match nz[..] {
        [i] if v[i] == 1 => Some(i),
        _ => None,
    }
}

/// `W_{a⊗̇b, 0} = E_a (E_b^red)ᵀ` from the annular matrices of `E4`.
pub fn toric_from_essential(f: &[IntMatrix], a: usize, b: usize) -> IntMatrix {
    let ea = essential_matrix(f, a);
    let eb = reduced(&essential_matrix(f, b), &MODULAR);
    &ea * &eb.transpose()
}

/// Toric matrices with two twists, from the annular action of both chiralities.
///
/// `(W_{x,y})_{mn} = (FL_m FR_n)_{xy}` where `FL` and `FR` are grown by the
/// fusion recursion from left and right multiplication by the chiral
/// generators.
#[derive(Clone, Debug)]
pub struct TwistedToric {
    pub left: Vec<IntMatrix>,
    pub right: Vec<IntMatrix>,
}

impl TwistedToric {
    pub fn new(oc: &OcAlgebra, level: u32) -> Result<Self> {
        let l = oc.left_generators().map(|x| oc.o_matrix(x));
        let r = oc.right_generators().map(|x| oc.right_matrix(x));
        Ok(TwistedToric { left: recursion([&l[0], &l[1], &l[2]], level)?, right: recursion([&r[0], &r[1], &r[2]], level)? })
    }

    pub fn w(&self, x: usize, y: usize) -> IntMatrix {
        let r = self.left.len();
        let dim = self.left[0].rows();
        IntMatrix::from_fn(r, r, |m, n| (0..dim).map(|z| self.left[m][(x, z)] * self.right[n][(z, y)]).sum())
    }
}

/// `Σ_z v_z W_z`.
pub fn combine(v: &[i64], w: &[IntMatrix]) -> IntMatrix {
    let r = w[0].rows();
    let mut out = IntMatrix::zeros(r, r);
    for (c, m) in v.iter().zip(w) {
        if *c != 0 {
            out.add_scaled(*c, m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::algebra::graph_algebra_e4;
    use crate::graph::blocks::{block_structure, verify_matrix_units};
    use crate::embed::su4_exceptional_invariant;
    use crate::fusion::all_fusion_matrices;
    use crate::split::{build_k_family, chiral_generators, solve_splitting};

    #[test]
    fn e4_oc() {
        let (level, inv) = su4_exceptional_invariant("E4").unwrap();
        let ring = all_fusion_matrices(level).unwrap();
        let fam = build_k_family(&inv.m, &ring);
        let toric = solve_splitting(&fam, 48).unwrap();
        let ch = chiral_generators(&toric, &ring).unwrap();
        let g = ch.graph.module_graph().unwrap();
        let e4 = graph_algebra_e4(&g).unwrap();
        let oc = OcAlgebra::new(&e4.algebra).unwrap();
        assert!(oc.is_nonnegative());
        assert!(oc.is_associative());
        let mut ok = 0;
        for x in 0..48 {
            let (a, c) = oc.basis[x];
            ok += (oc.o_matrix(x) == oc.block_pattern(a, c).unwrap()) as usize;
        }
        assert_eq!(ok, 48);
        let p = oc.chiral_conjugation().unwrap();
        assert!((0..48).all(|i| p[p[i]] == i));
        let s = oc.dual_annular_all();
        assert_eq!(oc.module_law_failure(&s), None);
        let dx: i64 = s.iter().map(IntMatrix::sum).sum();
        let dx2: i64 = s.iter().map(|m| m.sum() * m.sum()).sum();
        assert_eq!((dx, dx2), (1864, 86816));
        let mu = verify_matrix_units(&e4.algebra);
        assert!(mu.passed());
        let ga = &e4.algebra;
        let bs = block_structure(12, &|i, j| ga.product(i, j).to_vec()).unwrap();
        assert_eq!((bs.count(1), bs.count(2)), (8, 1));
        let bo = block_structure(48, &|i, j| oc.product(i, j).to_vec()).unwrap();
        assert_eq!((bo.count(1), bo.count(4), bo.blocks.len()), (32, 1, 33));
        let f = e4.graph.annular_matrices(level).unwrap();
        let tw = TwistedToric::new(&oc, level).unwrap();
        let ws: Vec<IntMatrix> = oc.basis.iter().map(|&(a, b)| toric_from_essential(&f, a, b)).collect();
        for x in 0..48 {
            assert_eq!(tw.w(x, 0), ws[x]);
        }
        let mut lit = 0;
        for x in 0..48 {
            for y in 0..48 {
                let w = tw.w(x, y);
                let e = |i: usize| -> Vec<i64> { (0..48).map(|j| (i == j) as i64).collect() };
                assert_eq!(w, combine(&oc.multiply(&e(x), &oc.complex_conjugate(y)), &ws));
                lit += (w == combine(oc.product(x, y), &ws)) as usize;
            }
        }
        assert_eq!(lit, 576);
    }
}
