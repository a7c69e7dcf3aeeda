//! Weight-lattice data for the A and B series.
//!
//! Weights are Dynkin-label vectors without the affine label. The quadratic
//! form `Q` gives `⟨λ,μ⟩ = λᵀ Q μ` in the basis of fundamental weights.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
}

/// Rank, dual Coxeter number, quadratic form and highest-root marks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub family: Family,
    pub rank: usize,
    pub dual_coxeter: u32,
    /// `rank × rank` symmetric positive definite form.
    pub quadratic_form: Vec<Vec<Rational64>>,
    /// Coefficients of `⟨λ,θ⟩` as a linear form in the Dynkin labels.
    pub theta_marks: Vec<u32>,
}

/// Dynkin labels `(λ_1, …, λ_r)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub labels: Vec<u32>,
}

impl Weight {
    pub fn new(labels: impl Into<Vec<u32>>) -> Self {
        Weight { labels: labels.into() }
    }

    pub fn zero(rank: usize) -> Self {
        Weight { labels: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn is_zero(&self) -> bool {
        self.labels.iter().all(|&x| x == 0)
    }

    /// `Σ λ_i`, the level for the A series.
    pub fn label_sum(&self) -> u32 {
        self.labels.iter().sum()
    }

    /// `N`-ality `Σ i·λ_i mod N` of an `A_{N-1}` weight (4-ality for `A3`).
    pub fn n_ality(&self) -> u32 {
        let n = self.labels.len() as u32 + 1;
        self.labels.iter().enumerate().map(|(i, &l)| (i as u32 + 1) * l).sum::<u32>() % n
    }

    /// Conjugate A-series weight: labels reversed.
    pub fn conjugate(&self) -> Weight {
        let mut l = self.labels.clone();
        l.reverse();
        Weight { labels: l }
    }

    /// Compact label string, e.g. `"210"`; comma-separated if a label exceeds 9.
    pub fn compact(&self) -> alloc::string::String {
        use alloc::string::ToString;
        if self.labels.iter().all(|&x| x < 10) {
            self.labels.iter().map(|x| x.to_string()).collect()
        } else {
            let parts: Vec<_> = self.labels.iter().map(|x| x.to_string()).collect();
            parts.join(",")
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.compact())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.compact())
    }
}

fn rat(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

/// Inverse of a small nonsingular rational matrix (Gauss–Jordan).
fn invert(m: &[Vec<Rational64>]) -> Vec<Vec<Rational64>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular Cartan matrix");
        a.swap(col, piv);
        let lead = a[col][col];
        a[col].iter_mut().for_each(|x| *x /= lead);
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= f * *y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Cartan matrix `2·Id − G` of the linear Dynkin diagram, with `G[r-2][r-1] = 2` for B.
fn cartan(family: Family, rank: usize) -> Vec<Vec<Rational64>> {
    let mut c = vec![vec![Rational64::zero(); rank]; rank];
    for i in 0..rank {
        c[i][i] = rat(2);
        if i + 1 < rank {
            c[i][i + 1] = rat(-1);
            c[i + 1][i] = rat(-1);
        }
    }
    if family == Family::B && rank >= 2 {
        c[rank - 2][rank - 1] = rat(-2);
    }
    c
}

impl AlgebraSpec {
    /// `A_n = su(n+1)`.
    pub fn a(n: usize) -> Self {
        assert!(n >= 1);
        AlgebraSpec {
            family: Family::A,
            rank: n,
            dual_coxeter: n as u32 + 1,
            quadratic_form: invert(&cartan(Family::A, n)),
            theta_marks: vec![1; n],
        }
    }

    /// `B_n = so(2n+1)`: `Q` is the inverse of the Cartan matrix with its last row doubled.
    pub fn b(n: usize) -> Self {
        assert!(n >= 2);
        let mut c = cartan(Family::B, n);
        for x in c[n - 1].iter_mut() {
            *x *= rat(2);
        }
        let mut marks = vec![2; n];
        marks[0] = 1;
        marks[n - 1] = 1;
        AlgebraSpec {
            family: Family::B,
            rank: n,
            dual_coxeter: 2 * n as u32 - 1,
            quadratic_form: invert(&c),
            theta_marks: marks,
        }
    }

    pub fn dim(&self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            Family::A => (n + 1) * (n + 1) - 1,
            Family::B => n * (2 * n + 1),
        }
    }

    pub fn name(&self) -> alloc::string::String {
        match self.family {
            Family::A => alloc::format!("SU({})", self.rank + 1),
            Family::B => alloc::format!("Spin({})", 2 * self.rank + 1),
        }
    }

    pub fn weyl_vector(&self) -> Weight {
        Weight { labels: vec![1; self.rank] }
    }

    /// `⟨λ, θ⟩`.
    pub fn theta_pairing(&self, w: &Weight) -> u32 {
        w.labels.iter().zip(&self.theta_marks).map(|(l, m)| l * m).sum()
    }

    pub fn is_integrable(&self, w: &Weight, k: u32) -> bool {
        w.rank() == self.rank && self.theta_pairing(w) <= k
    }

    fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: w.rank() });
        }
        Ok(())
    }

    fn pairing(&self, l: &[i64], m: &[i64]) -> Rational64 {
        let q = &self.quadratic_form;
        let mut acc = Rational64::zero();
        for (i, &li) in l.iter().enumerate() {
            if li == 0 {
                continue;
            }
            for (j, &mj) in m.iter().enumerate() {
                if mj != 0 {
                    acc += q[i][j] * rat(li * mj);
                }
            }
        }
        acc
    }

    /// `⟨λ, μ⟩ = λᵀ Q μ`.
    pub fn inner_product(&self, l: &Weight, m: &Weight) -> Result<Rational64> {
        self.check_rank(l)?;
        self.check_rank(m)?;
        let li: Vec<i64> = l.labels.iter().map(|&x| x as i64).collect();
        let mi: Vec<i64> = m.labels.iter().map(|&x| x as i64).collect();
        Ok(self.pairing(&li, &mi))
    }

    /// `h_λ = ⟨λ, λ + 2ρ⟩ / (2(k+g))`.
    pub fn conformal_dimension(&self, k: u32, w: &Weight) -> Result<Rational64> {
        self.check_rank(w)?;
        if !self.is_integrable(w, k) {
            return Err(Error::NotIntegrable { labels: w.labels.clone(), level: k });
        }
        let l: Vec<i64> = w.labels.iter().map(|&x| x as i64).collect();
        let shifted: Vec<i64> = l.iter().map(|x| x + 2).collect();
        Ok(self.pairing(&l, &shifted) / rat(2 * (k as i64 + self.dual_coxeter as i64)))
    }

    /// Central charge `k·dim/(k+g)` of the level-`k` WZW model.
    pub fn central_charge(&self, k: u32) -> Rational64 {
        Rational64::new(k as i64 * self.dim() as i64, k as i64 + self.dual_coxeter as i64)
    }
}

/// Integrable weights at level `k`, in canonical order.
///
/// Weights are sorted by `⟨λ,θ⟩`, then in descending lexicographic order of
/// the labels: `(000), (100), (010), (001), (200), (110), …` for `A3`.
pub fn enumerate_alcove(alg: &AlgebraSpec, k: u32) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; alg.rank];
    fn rec(alg: &AlgebraSpec, k: u32, i: usize, used: u32, cur: &mut Vec<u32>, out: &mut Vec<Weight>) {
        if i == alg.rank {
            out.push(Weight { labels: cur.clone() });
            return;
        }
        let m = alg.theta_marks[i];
        let mut x = 0;
        while used + m * x <= k {
            cur[i] = x;
            rec(alg, k, i + 1, used + m * x, cur, out);
            x += 1;
        }
        cur[i] = 0;
    }
    rec(alg, k, 0, 0, &mut cur, &mut out);
    out.sort_by(|a, b| canonical_cmp(alg, a, b));
    out
}

fn canonical_cmp(alg: &AlgebraSpec, a: &Weight, b: &Weight) -> Ordering {
    alg.theta_pairing(a).cmp(&alg.theta_pairing(b)).then_with(|| b.labels.cmp(&a.labels))
}

/// Weyl group element of `A_{N-1}` acting on the `N` barycentric coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    /// `w(x)_j = x_{perm[j]}`.
    pub perm: Vec<usize>,
    pub sign: i8,
}

/// Barycentric coordinates of a weight, scaled by `N` so they are integers.
///
/// `x_j = N·Σ_{i≥j} λ_i − Σ_i i·λ_i`; they sum to zero.
pub fn barycentric_scaled(labels: &[i64]) -> Vec<i64> {
    let n = labels.len() + 1;
    let weighted: i64 = labels.iter().enumerate().map(|(i, &l)| (i as i64 + 1) * l).sum();
    let mut x = vec![0i64; n];
    let mut tail = 0;
    for j in (0..n).rev() {
        x[j] = n as i64 * tail - weighted;
        if j > 0 {
            tail += labels[j - 1];
        }
    }
    x
}

/// Dynkin labels from barycentric coordinates: `λ_i = x_i − x_{i+1}` (unscaled).
fn labels_from_scaled(x: &[i64]) -> Vec<i64> {
    let n = x.len() as i64;
    x.windows(2).map(|w| (w[0] - w[1]) / n).collect()
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement { perm: (0..n).collect(), sign: 1 }
    }

    /// Simple reflection `s_i` (1-based), swapping coordinates `i` and `i+1`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i - 1, i);
        WeylElement { perm, sign: -1 }
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let perm = self.perm.iter().map(|&j| other.perm[j]).collect();
        WeylElement { perm, sign: self.sign * other.sign }
    }

    pub fn act_scaled(&self, x: &[i64]) -> Vec<i64> {
        self.perm.iter().map(|&j| x[j]).collect()
    }

    /// Action on Dynkin labels (integer weights, possibly negative).
    pub fn act(&self, labels: &[i64]) -> Vec<i64> {
        labels_from_scaled(&self.act_scaled(&barycentric_scaled(labels)))
    }
}

/// All `N!` elements of the Weyl group of `A_{N-1}`, with signatures.
pub fn weyl_elements(alg: &AlgebraSpec) -> Result<Vec<WeylElement>> {
    if alg.family != Family::A {
        return Err(Error::Unsupported("Weyl group only for the A series"));
    }
    let n = alg.rank + 1;
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut out);
    Ok(out)
}

fn permutations(p: &mut Vec<usize>, i: usize, out: &mut Vec<WeylElement>) {
    if i == p.len() {
        out.push(WeylElement { perm: p.clone(), sign: permutation_sign(p) });
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permutations(p, i + 1, out);
        p.swap(i, j);
    }
}

fn permutation_sign(p: &[usize]) -> i8 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn a3_quadratic_form() {
        let a3 = AlgebraSpec::a(3);
        let expected = [[q(3, 4), q(1, 2), q(1, 4)], [q(1, 2), q(1, 1), q(1, 2)], [q(1, 4), q(1, 2), q(3, 4)]];
        for i in 0..3 {
            assert_eq!(a3.quadratic_form[i], expected[i].to_vec());
        }
    }

    #[test]
    fn b7_quadratic_form() {
        let b7 = AlgebraSpec::b(7);
        let qf = &b7.quadratic_form;
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(qf[i][j], rat(i.min(j) as i64 + 1));
            }
            assert_eq!(qf[i][6], q(i as i64 + 1, 2));
            assert_eq!(qf[6][i], q(i as i64 + 1, 2));
        }
        assert_eq!(qf[6][6], q(7, 4));
        assert_eq!(b7.dual_coxeter, 13);
        assert_eq!(b7.dim(), 105);
    }

    #[test]
    fn inner_products() {
        let a3 = AlgebraSpec::a(3);
        let e1 = Weight::new([1, 0, 0]);
        assert_eq!(a3.inner_product(&e1, &e1).unwrap(), q(3, 4));
        assert_eq!(a3.inner_product(&Weight::zero(3), &Weight::new([2, 3, 1])).unwrap(), rat(0));
        // ⟨(1,1,1),(3,3,3)⟩ = 3·Σ_ij Q_ij = 3·5
        assert_eq!(a3.inner_product(&Weight::new([1, 1, 1]), &Weight::new([3, 3, 3])).unwrap(), rat(15));
        assert!(a3.inner_product(&e1, &Weight::new([1, 0])).is_err());
    }

    #[test]
    fn b7_level_one() {
        let b7 = AlgebraSpec::b(7);
        let alc = enumerate_alcove(&b7, 1);
        assert_eq!(alc.len(), 3);
        let hs: BTreeSet<_> = alc.iter().map(|w| b7.conformal_dimension(1, w).unwrap()).collect();
        assert_eq!(hs, [rat(0), q(1, 2), q(15, 16)].into_iter().collect());
        assert!(alc.contains(&Weight::new([1, 0, 0, 0, 0, 0, 0])));
        assert!(alc.contains(&Weight::new([0, 0, 0, 0, 0, 0, 1])));
    }

    #[test]
    fn a3_conformal_dimensions() {
        let a3 = AlgebraSpec::a(3);
        let h = |l: [u32; 3]| a3.conformal_dimension(4, &Weight::new(l)).unwrap();
        assert_eq!(h([1, 1, 1]), q(15, 16));
        assert_eq!(h([2, 1, 0]), rat(1));
        assert_eq!(h([0, 4, 0]), rat(2));
        assert_eq!(h([0, 0, 0]), rat(0));
        assert!(a3.conformal_dimension(4, &Weight::new([3, 2, 0])).is_err());
    }

    #[test]
    fn a3_level4_order_reproduces_listed_dimensions() {
        // The 35 conformal dimensions at (A3, 4), in the canonical order.
        let listed = [
            (0, 1), (15, 64), (5, 16), (15, 64), (9, 16), (39, 64), (1, 2), (3, 4), (39, 64), (9, 16),
            (63, 64), (1, 1), (55, 64), (71, 64), (15, 16), (55, 64), (21, 16), (71, 64), (1, 1), (63, 64),
            (3, 2), (95, 64), (21, 16), (25, 16), (87, 64), (5, 4), (111, 64), (3, 2), (87, 64), (21, 16),
            (2, 1), (111, 64), (25, 16), (95, 64), (3, 2),
        ];
        let a3 = AlgebraSpec::a(3);
        let alc = enumerate_alcove(&a3, 4);
        assert_eq!(alc.len(), 35);
        for (w, &(n, d)) in alc.iter().zip(&listed) {
            assert_eq!(a3.conformal_dimension(4, w).unwrap(), q(n, d), "at {w}");
        }
        assert_eq!(&alc[..5], &[
            Weight::new([0, 0, 0]),
            Weight::new([1, 0, 0]),
            Weight::new([0, 1, 0]),
            Weight::new([0, 0, 1]),
            Weight::new([2, 0, 0])
        ]);
    }

    #[test]
    fn small_alcoves() {
        assert_eq!(enumerate_alcove(&AlgebraSpec::a(1), 0), vec![Weight::new([0])]);
    }

    #[test]
    fn weyl_group_a3() {
        let a3 = AlgebraSpec::a(3);
        let w = weyl_elements(&a3).unwrap();
        assert_eq!(w.len(), 24);
        assert_eq!(w.iter().filter(|e| e.sign == 1).count(), 12);
        assert_eq!(weyl_elements(&AlgebraSpec::a(1)).unwrap().len(), 2);
        assert!(weyl_elements(&AlgebraSpec::b(3)).is_err());
        // s1(λ1,λ2,λ3) = (−λ1, λ1+λ2, λ3)
        let s1 = WeylElement::simple(4, 1);
        assert_eq!(s1.act(&[1, 0, 0]), vec![-1, 1, 0]);
        assert_eq!(s1.act(&[2, 3, 5]), vec![-2, 5, 5]);
    }

    #[test]
    fn simple_reflections_generate_the_group() {
        let a3 = AlgebraSpec::a(3);
        let all: BTreeSet<_> = weyl_elements(&a3).unwrap().into_iter().collect();
        let gens: Vec<_> = (1..=3).map(|i| WeylElement::simple(4, i)).collect();
        let mut seen = BTreeSet::new();
        let mut frontier = vec![WeylElement::identity(4)];
        while let Some(x) = frontier.pop() {
            if seen.insert(x.clone()) {
                frontier.extend(gens.iter().map(|g| g.compose(&x)));
            }
        }
        assert_eq!(seen, all);
    }

    proptest! {
        #[test]
        fn alcove_cardinalities(k in 0u32..=10) {
            let k64 = k as usize;
            prop_assert_eq!(enumerate_alcove(&AlgebraSpec::a(1), k).len(), k64 + 1);
            prop_assert_eq!(enumerate_alcove(&AlgebraSpec::a(2), k).len(), (k64 + 1) * (k64 + 2) / 2);
            prop_assert_eq!(enumerate_alcove(&AlgebraSpec::a(3), k).len(), (k64 + 1) * (k64 + 2) * (k64 + 3) / 6);
        }

        #[test]
        fn conjugation_preserves_alcove_and_h(k in 0u32..=6) {
            let a3 = AlgebraSpec::a(3);
            let alc = enumerate_alcove(&a3, k);
            for w in &alc {
                let c = w.conjugate();
                prop_assert!(alc.contains(&c));
                prop_assert_eq!(c.conjugate(), w.clone());
                prop_assert_eq!(a3.conformal_dimension(k, &c).unwrap(), a3.conformal_dimension(k, w).unwrap());
                prop_assert_eq!((c.n_ality() + w.n_ality()) % 4, 0);
            }
        }

        #[test]
        fn weyl_composition_closed(i in 0usize..24, j in 0usize..24) {
            let a3 = AlgebraSpec::a(3);
            let w = weyl_elements(&a3).unwrap();
            let c = w[i].compose(&w[j]);
            prop_assert!(w.contains(&c));
            prop_assert_eq!(c.sign, w[i].sign * w[j].sign);
        }

        #[test]
        fn weyl_action_preserves_norm(l in proptest::collection::vec(-5i64..6, 3), i in 0usize..24) {
            let a3 = AlgebraSpec::a(3);
            let w = &weyl_elements(&a3).unwrap()[i];
            let img = w.act(&l);
            prop_assert_eq!(a3.pairing(&img, &img), a3.pairing(&l, &l));
        }
    }
}
