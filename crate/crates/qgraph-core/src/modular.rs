//! Kac–Peterson modular matrices for `su(N)` at level `k` and the Verlinde formula.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::{Index, IndexMut, Mul, Sub};
use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::Zero;

use crate::lie::{barycentric_scaled, enumerate_alcove, weyl_elements, AlgebraSpec, Family, Weight};
use crate::{Error, IntMatrix, Result};

/// Tolerance on the modular relations.
pub const RELATION_TOL: f64 = 1e-9;
/// Distance from an integer accepted when rounding Verlinde coefficients.
pub const ROUNDING_TOL: f64 = 1e-6;

/// Dense row-major complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix { n, data: vec![Complex64::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        CMatrix { n, data }
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        Self::from_fn(m.rows(), |i, j| Complex64::new(m[(i, j)] as f64, 0.0))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn pow(&self, mut p: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while p > 0 {
            if p & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            p >>= 1;
        }
        acc
    }

    /// `max |a_ij|`.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `max |a_ij − b_ij|`.
    pub fn distance(&self, other: &CMatrix) -> f64 {
        (self - other).max_abs()
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.n, rhs.n);
        CMatrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

/// `exp(2πi·q)` for an exact rational `q`, reduced mod 1 before exponentiating.
pub fn phase(q: Rational64) -> Complex64 {
    let frac = q - q.floor();
    let theta = 2.0 * PI * (*frac.numer() as f64) / (*frac.denom() as f64);
    Complex64::new(libm::cos(theta), libm::sin(theta))
}

/// `s`, `t` and charge conjugation on the level-`k` alcove.
#[derive(Clone, Debug)]
pub struct ModularData {
    pub algebra: AlgebraSpec,
    pub level: u32,
    pub alcove: Vec<Weight>,
    pub s: CMatrix,
    pub t: CMatrix,
    /// `C[λ][μ] = 1` iff `μ = λ̄`.
    pub charge_conjugation: IntMatrix,
}

/// Residuals of the defining relations, each as a max-entry norm.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RelationResiduals {
    pub s_unitary: f64,
    pub t_unitary: f64,
    pub s_symmetric: f64,
    pub st_cubed_vs_s_squared: f64,
    pub s_squared_vs_c: f64,
    pub c_squared_vs_identity: f64,
    /// `t^e − I` with `e` the exact order from [`ModularData::t_exponent`].
    pub t_order: f64,
}

impl RelationResiduals {
    pub fn max(&self) -> f64 {
        [
            self.s_unitary,
            self.t_unitary,
            self.s_symmetric,
            self.st_cubed_vs_s_squared,
            self.s_squared_vs_c,
            self.c_squared_vs_identity,
            self.t_order,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

fn require_small_a(alg: &AlgebraSpec) -> Result<()> {
    if alg.family != Family::A {
        return Err(Error::Unsupported("modular data only for the A series"));
    }
    if alg.rank > 3 {
        return Err(Error::Unsupported("s-matrix Weyl sum limited to rank ≤ 3"));
    }
    Ok(())
}

/// Diagonal `t` with entries `exp(2πi(h_λ − c/24))`.
pub fn t_matrix(alg: &AlgebraSpec, k: u32) -> Result<CMatrix> {
    if alg.family != Family::A {
        return Err(Error::Unsupported("modular data only for the A series"));
    }
    let alcove = enumerate_alcove(alg, k);
    let c24 = alg.central_charge(k) / Rational64::from_integer(24);
    let mut t = CMatrix::zeros(alcove.len());
    for (i, w) in alcove.iter().enumerate() {
        t[(i, i)] = phase(alg.conformal_dimension(k, w)? - c24);
    }
    Ok(t)
}

/// Kac–Peterson `s` via the Weyl-group sum.
///
/// `s_λμ = i^{|Δ+|} N^{-1/2} κ^{-r/2} Σ_w ε(w) exp(−2πi⟨w(λ+ρ), μ+ρ⟩/κ)`. The
/// prefactor makes `s_00 > 0`; it is `σ` specialised to the A series, where
/// the coroot lattice has index `N` in the weight lattice.
pub fn s_matrix(alg: &AlgebraSpec, k: u32) -> Result<CMatrix> {
    require_small_a(alg)?;
    let n = alg.rank + 1;
    let kappa = (k + alg.dual_coxeter) as i64;
    let alcove = enumerate_alcove(alg, k);
    let weyl = weyl_elements(alg)?;
    let shifted: Vec<Vec<i64>> = alcove
        .iter()
        .map(|w| barycentric_scaled(&w.labels.iter().map(|&x| x as i64 + 1).collect::<Vec<_>>()))
        .collect();
    // ⟨a,b⟩ = Σ_j X_a[j] X_b[j] / N² in scaled barycentric coordinates.
    let modulus = (n * n) as i64 * kappa;
    let positive_roots = (n * (n - 1) / 2) as u32;
    let i_pow = match positive_roots % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let prefactor = i_pow / (libm::sqrt(n as f64) * libm::pow(kappa as f64, alg.rank as f64 / 2.0));
    let r = alcove.len();
    let mut s = CMatrix::zeros(r);
    for a in 0..r {
        for b in a..r {
            let mut acc = Complex64::zero();
            for w in &weyl {
                let img = w.act_scaled(&shifted[a]);
                let dot: i64 = img.iter().zip(&shifted[b]).map(|(x, y)| x * y).sum();
                let z = phase(Rational64::new(-dot.rem_euclid(modulus), modulus));
                acc += z * w.sign as f64;
            }
            let v = acc * prefactor;
            s[(a, b)] = v;
            s[(b, a)] = v;
        }
    }
    Ok(s)
}

/// Charge conjugation `λ ↦ λ̄` on the alcove.
pub fn charge_conjugation(alcove: &[Weight]) -> IntMatrix {
    let r = alcove.len();
    IntMatrix::from_fn(r, r, |i, j| (alcove[j] == alcove[i].conjugate()) as i64)
}

/// Index of `λ̄` for each alcove position.
pub fn conjugation_map(alcove: &[Weight]) -> Vec<usize> {
    alcove
        .iter()
        .map(|w| {
            let c = w.conjugate();
            alcove.iter().position(|x| *x == c).expect("alcove closed under conjugation")
        })
        .collect()
}

impl ModularData {
    pub fn new(alg: &AlgebraSpec, k: u32) -> Result<Self> {
        require_small_a(alg)?;
        let alcove = enumerate_alcove(alg, k);
        Ok(ModularData {
            algebra: alg.clone(),
            level: k,
            charge_conjugation: charge_conjugation(&alcove),
            s: s_matrix(alg, k)?,
            t: t_matrix(alg, k)?,
            alcove,
        })
    }

    pub fn order(&self) -> usize {
        self.alcove.len()
    }

    pub fn kappa(&self) -> u32 {
        self.level + self.algebra.dual_coxeter
    }

    /// Exact order of `t`: the lcm of the denominators of `h_λ − c/24`.
    pub fn t_exponent(&self) -> u64 {
        let alg = &self.algebra;
        let c24 = alg.central_charge(self.level) / Rational64::from_integer(24);
        self.alcove.iter().fold(1u64, |acc, w| {
            let m = alg.conformal_dimension(self.level, w).expect("alcove weight") - c24;
            num_integer::lcm(acc, *m.denom() as u64)
        })
    }

    pub fn residuals(&self) -> RelationResiduals {
        let r = self.order();
        let id = CMatrix::identity(r);
        let c = CMatrix::from_int(&self.charge_conjugation);
        let s2 = &self.s * &self.s;
        let st = &self.s * &self.t;
        let st3 = &(&st * &st) * &st;
        RelationResiduals {
            s_unitary: (&self.s * &self.s.adjoint()).distance(&id),
            t_unitary: (&self.t * &self.t.adjoint()).distance(&id),
            s_symmetric: self.s.distance(&self.s.transpose()),
            st_cubed_vs_s_squared: st3.distance(&s2),
            s_squared_vs_c: s2.distance(&c),
            c_squared_vs_identity: (&c * &c).distance(&id),
            t_order: self.t.pow(self.t_exponent()).distance(&id),
        }
    }

    /// Largest `|[M,s]|` and `|[M,t]|` entries for an integer matrix `M`.
    pub fn commutator_norms(&self, m: &IntMatrix) -> (f64, f64) {
        let mc = CMatrix::from_int(m);
        let ms = (&mc * &self.s).distance(&(&self.s * &mc));
        let mt = (&mc * &self.t).distance(&(&self.t * &mc));
        (ms, mt)
    }

    /// `s_{0λ}/s_{00}`.
    pub fn quantum_dimensions(&self) -> Vec<f64> {
        let s00 = self.s[(0, 0)].re;
        (0..self.order()).map(|j| self.s[(0, j)].re / s00).collect()
    }
}

/// Fusion matrices `(N_λ)_{μν} = Σ_β s_λβ s_μβ s̄_νβ / s_0β`, rounded.
pub fn verlinde_fusion(md: &ModularData) -> Result<Vec<IntMatrix>> {
    let r = md.order();
    let s = &md.s;
    let mut out = Vec::with_capacity(r);
    for l in 0..r {
        let mut n = IntMatrix::zeros(r, r);
        for m in 0..r {
            let lm: Vec<Complex64> = (0..r).map(|b| s[(l, b)] * s[(m, b)] / s[(0, b)]).collect();
            for nu in 0..r {
                let v: Complex64 = (0..r).map(|b| lm[b] * s[(nu, b)].conj()).sum();
                let rounded = libm::round(v.re);
                if (v - Complex64::new(rounded, 0.0)).norm() > ROUNDING_TOL || rounded < 0.0 {
                    return Err(Error::NonIntegralFusion { lambda: l, mu: m, nu, value: v.re });
                }
                n[(m, nu)] = rounded as i64;
            }
        }
        out.push(n);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su(n: usize) -> AlgebraSpec {
        AlgebraSpec::a(n - 1)
    }

    #[test]
    fn su2_level1_s() {
        let s = s_matrix(&su(2), 1).unwrap();
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let expected = CMatrix::from_fn(2, |i, j| Complex64::new(if i * j == 1 { -h } else { h }, 0.0));
        assert!(s.distance(&expected) < 1e-12);
    }

    #[test]
    fn su4_level4_relations() {
        let md = ModularData::new(&su(4), 4).unwrap();
        let r = md.residuals();
        assert!(r.max() < RELATION_TOL, "{r:?}");
        assert_eq!(md.kappa(), 8);
        assert_eq!(64 % md.t_exponent(), 0);
        assert!(md.t.pow(64).distance(&CMatrix::identity(35)) < RELATION_TOL);
    }

    #[test]
    fn vacuum_t_entry_uses_central_charge() {
        let a3 = su(4);
        assert_eq!(a3.central_charge(4), Rational64::new(15, 2));
        let t = t_matrix(&a3, 4).unwrap();
        let expected = phase(Rational64::new(-15, 48));
        assert!((t[(0, 0)] - expected).norm() < 1e-12);
        for i in 0..35 {
            assert!((t[(i, i)].norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn quantum_dimension_of_middle_weight() {
        let md = ModularData::new(&su(4), 4).unwrap();
        let j = md.alcove.iter().position(|w| w.labels == [0, 1, 0]).unwrap();
        let d = md.quantum_dimensions();
        assert!((d[j] - (2.0 + libm::sqrt(2.0))).abs() < 1e-9);
        assert!(md.s.row(0).iter().all(|z| z.re > 0.0));
    }

    #[test]
    fn verlinde_small_cases() {
        for n in 2..=4 {
            for k in 0..=6u32 {
                if n == 4 && k > 4 {
                    continue;
                }
                let md = ModularData::new(&su(n), k).unwrap();
                assert!(md.residuals().max() < RELATION_TOL, "SU({n}) level {k}: {:?}", md.residuals());
                let fus = verlinde_fusion(&md).unwrap();
                let r = md.order();
                assert_eq!(fus[0], IntMatrix::identity(r));
                let bar = conjugation_map(&md.alcove);
                for l in 0..r {
                    assert_eq!(fus[bar[l]], fus[l].transpose());
                }
            }
        }
    }

    #[test]
    fn su2_fusion_is_clebsch_gordan() {
        let md = ModularData::new(&su(2), 3).unwrap();
        let fus = verlinde_fusion(&md).unwrap();
        // spin 1/2 ⊗ spin 1/2 = 0 ⊕ 1 ; 1/2 ⊗ 3/2 = 1 (level cut)
        assert_eq!(fus[1].row(1), &[1, 0, 1, 0]);
        assert_eq!(fus[1].row(3), &[0, 0, 1, 0]);
    }

    #[test]
    fn b_series_unsupported() {
        assert!(ModularData::new(&AlgebraSpec::b(7), 1).is_err());
        assert!(s_matrix(&su(5), 1).is_err());
    }
}
