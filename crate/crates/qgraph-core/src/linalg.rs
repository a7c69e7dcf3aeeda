//! Exact linear algebra over the integers and rationals.
//!
//! Elimination is fraction-free on `i128` rows with content normalization
//! after every step, and all arithmetic is checked. The vectors met here
//! (flattened 35×35 toric matrices, equations of the doublet split) have tiny
//! entries, so overflow is an error rather than a fallback path.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

fn gcd_i128(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

fn checked_comb(a: i128, x: i128, b: i128, y: i128) -> Result<i128> {
    // a*x - b*y
    let p = a.checked_mul(x).ok_or(Error::Overflow)?;
    let q = b.checked_mul(y).ok_or(Error::Overflow)?;
    p.checked_sub(q).ok_or(Error::Overflow)
}

#[derive(Clone, Debug)]
struct Row {
    pivot: usize,
    vec: Vec<i128>,
    /// `vec = Σ combo[j] g_j / scale` in terms of the inserted generators.
    combo: Vec<i128>,
    scale: i128,
}

/// Incremental span of integer vectors with coefficient tracking.
///
/// Every accepted generator is linearly independent of the previous ones,
/// so expansions over the generators are unique.
#[derive(Clone, Debug, Default)]
pub struct IntSpan {
    dim: usize,
    rows: Vec<Row>,
}

/// Result of reducing a vector: `scale · v = residual + Σ combo_j g_j`.
struct Reduction {
    scale: i128,
    residual: Vec<i128>,
    combo: Vec<i128>,
}

fn normalize(scale: &mut i128, residual: &mut [i128], combo: &mut [i128]) {
    let mut g = *scale;
    for &x in residual.iter().chain(combo.iter()) {
        if g == 1 {
            break;
        }
        g = gcd_i128(g, x);
    }
    if g > 1 {
        *scale /= g;
        residual.iter_mut().for_each(|x| *x /= g);
        combo.iter_mut().for_each(|x| *x /= g);
    }
}

impl IntSpan {
    pub fn new(dim: usize) -> Self {
        IntSpan { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[i64]) -> Result<Reduction> {
        assert_eq!(v.len(), self.dim, "vector length does not match span dimension");
        let n = self.rows.len();
        let mut residual: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        let mut combo = vec![0i128; n];
        let mut scale: i128 = 1;
        for row in &self.rows {
            let b = residual[row.pivot];
            if b == 0 {
                continue;
            }
            let a = row.vec[row.pivot];
            let g = gcd_i128(a, b);
            let (a, b) = (a / g, b / g);
            // new residual = a·residual − b·row.vec
            for (r, &w) in residual.iter_mut().zip(&row.vec) {
                *r = checked_comb(a, *r, b, w)?;
            }
            // s·v = res + Σ c g  ⇒  a·s·v = a·res + a Σ c g
            //                      = new_res + b·row.vec + a Σ c g
            // and row.vec = Σ row.combo g / row.scale.
            // Keep integrality by multiplying everything by row.scale.
            let rs = row.scale;
            if rs != 1 {
                for r in residual.iter_mut() {
                    *r = r.checked_mul(rs).ok_or(Error::Overflow)?;
                }
            }
            for (j, c) in combo.iter_mut().enumerate() {
                let term = b.checked_mul(row.combo.get(j).copied().unwrap_or(0)).ok_or(Error::Overflow)?;
                *c = a
                    .checked_mul(*c)
                    .and_then(|x| x.checked_mul(rs))
                    .and_then(|x| x.checked_add(term))
                    .ok_or(Error::Overflow)?;
            }
            scale = scale.checked_mul(a).and_then(|x| x.checked_mul(rs)).ok_or(Error::Overflow)?;
            normalize(&mut scale, &mut residual, &mut combo);
        }
        if scale < 0 {
            scale = -scale;
            residual.iter_mut().for_each(|x| *x = -*x);
            combo.iter_mut().for_each(|x| *x = -*x);
        }
        Ok(Reduction { scale, residual, combo })
    }

    /// Adds `v` if it is independent; returns its generator index.
    pub fn insert(&mut self, v: &[i64]) -> Result<Option<usize>> {
        let red = self.reduce(v)?;
        let Some(pivot) = red.residual.iter().position(|&x| x != 0) else {
            return Ok(None);
        };
        // residual = scale·g_new − Σ combo g, as a combination with denominator 1.
        let n = self.rows.len();
        let mut combo: Vec<i128> = red.combo.iter().map(|c| -c).collect();
        combo.push(red.scale);
        let h = red.residual.iter().fold(0i128, |g, &x| gcd_i128(g, x));
        let vec: Vec<i128> = red.residual.iter().map(|x| x / h).collect();
        // vec = Σ combo g / h
        let g = combo.iter().fold(h, |g, &x| gcd_i128(g, x));
        let scale = h / g;
        combo.iter_mut().for_each(|x| *x /= g);
        for row in &mut self.rows {
            row.combo.push(0);
        }
        self.rows.push(Row { pivot, vec, combo, scale });
        Ok(Some(n))
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        Ok(self.reduce(v)?.residual.iter().all(|&x| x == 0))
    }

    /// Unique rational expansion over the generators, if `v` lies in the span.
    pub fn expand(&self, v: &[i64]) -> Result<Option<Vec<BigRational>>> {
        let red = self.reduce(v)?;
        if red.residual.iter().any(|&x| x != 0) {
            return Ok(None);
        }
        let s = BigInt::from(red.scale);
        Ok(Some(red.combo.iter().map(|&c| BigRational::new(BigInt::from(c), s.clone())).collect()))
    }

    /// Integer expansion over the generators, when it exists.
    pub fn expand_integral(&self, v: &[i64]) -> Result<Option<Vec<i64>>> {
        let red = self.reduce(v)?;
        if red.residual.iter().any(|&x| x != 0) || red.combo.iter().any(|c| c % red.scale != 0) {
            return Ok(None);
        }
        red.combo
            .iter()
            .map(|c| i64::try_from(c / red.scale).map_err(|_| Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }
}

/// Rank of a list of integer vectors.
pub fn rank<V: AsRef<[i64]>>(vectors: &[V]) -> Result<usize> {
    let Some(first) = vectors.first() else { return Ok(0) };
    let mut span = IntSpan::new(first.as_ref().len());
    for v in vectors {
        span.insert(v.as_ref())?;
    }
    Ok(span.rank())
}

/// Solution set `{ particular + Σ t_f kernel_f }` of a linear system.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSolution {
    pub particular: Vec<BigRational>,
    /// Indices of the free unknowns, one per kernel vector.
    pub free: Vec<usize>,
    pub kernel: Vec<Vec<BigRational>>,
}

impl AffineSolution {
    /// Point of the solution set where free unknown `free[i]` equals `values[i]`.
    pub fn evaluate(&self, values: &[i64]) -> Vec<BigRational> {
        let mut x = self.particular.clone();
        for (k, &t) in self.kernel.iter().zip(values) {
            if t == 0 {
                continue;
            }
            let t = BigRational::from_integer(BigInt::from(t));
            for (xi, ki) in x.iter_mut().zip(k) {
                *xi += &t * ki;
            }
        }
        x
    }

    /// Indices of unknowns that are fixed (not affected by any free unknown).
    pub fn fixed_unknowns(&self) -> Vec<usize> {
        (0..self.particular.len()).filter(|&i| self.kernel.iter().all(|k| k[i].is_zero())).collect()
    }
}

/// Integer linear system `A x = b`, accumulated one equation at a time.
///
/// Equations are reduced on arrival, so a system with thousands of redundant
/// equations costs about as much as its rank.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    unknowns: usize,
    rows: Vec<(usize, Vec<i128>)>,
    inconsistent: bool,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem { unknowns, rows: Vec::new(), inconsistent: false }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    /// Adds `Σ coeffs[j] x_j = rhs` with sparse coefficients.
    pub fn add_equation(&mut self, coeffs: &[(usize, i64)], rhs: i64) -> Result<()> {
        let n = self.unknowns;
        let mut v = vec![0i128; n + 1];
        for &(j, c) in coeffs {
            v[j] += c as i128;
        }
        v[n] = rhs as i128;
        for (pivot, row) in &self.rows {
            let b = v[*pivot];
            if b == 0 {
                continue;
            }
            let a = row[*pivot];
            let g = gcd_i128(a, b);
            let (a, b) = (a / g, b / g);
            for (x, &w) in v.iter_mut().zip(row) {
                *x = checked_comb(a, *x, b, w)?;
            }
            let c = v.iter().fold(0i128, |g, &x| gcd_i128(g, x));
            if c > 1 {
                v.iter_mut().for_each(|x| *x /= c);
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => {}
            Some(p) if p == n => self.inconsistent = true,
            Some(p) => self.rows.push((p, v)),
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Full solution set, or `None` when the system is inconsistent.
    pub fn solve(&self) -> Option<AffineSolution> {
        if self.inconsistent {
            return None;
        }
        let n = self.unknowns;
        // Back-substitute into reduced row echelon form over Q.
        let mut rows: Vec<(usize, Vec<BigRational>)> = self
            .rows
            .iter()
            .map(|(p, r)| {
                let lead = BigRational::from_integer(BigInt::from(r[*p]));
                (*p, r.iter().map(|&x| BigRational::from_integer(BigInt::from(x)) / &lead).collect())
            })
            .collect();
        rows.sort_by_key(|(p, _)| *p);
        for i in (0..rows.len()).rev() {
            let (p, ri) = rows[i].clone();
            for (_, rj) in rows.iter_mut().take(i) {
                let f = rj[p].clone();
                if !f.is_zero() {
                    for (x, y) in rj.iter_mut().zip(&ri) {
                        *x -= &f * y;
                    }
                }
            }
        }
        let pivots: Vec<usize> = rows.iter().map(|(p, _)| *p).collect();
        let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
        let mut particular = vec![BigRational::zero(); n];
        for (p, r) in &rows {
            particular[*p] = r[n].clone();
        }
        let kernel = free
            .iter()
            .map(|&f| {
                let mut k = vec![BigRational::zero(); n];
                k[f] = BigRational::one();
                for (p, r) in &rows {
                    k[*p] = -r[f].clone();
                }
                k
            })
            .collect();
        Some(AffineSolution { particular, free, kernel })
    }
}

/// Converts an exact rational to `i64` when it is an integer in range.
pub fn as_integer(q: &BigRational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

/// True when the rational is a nonnegative integer.
pub fn is_nonneg_integer(q: &BigRational) -> bool {
    q.is_integer() && !q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dependent_vector_is_expanded() {
        let mut s = IntSpan::new(3);
        assert_eq!(s.insert(&[1, 2, 0]).unwrap(), Some(0));
        assert_eq!(s.insert(&[0, 1, 1]).unwrap(), Some(1));
        assert_eq!(s.insert(&[2, 5, 1]).unwrap(), None);
        assert_eq!(s.expand_integral(&[2, 5, 1]).unwrap(), Some(vec![2, 1]));
        assert!(!s.contains(&[0, 0, 1]).unwrap());
    }

    #[test]
    fn half_integer_expansion_is_not_integral() {
        let mut s = IntSpan::new(2);
        s.insert(&[2, 0]).unwrap();
        s.insert(&[0, 2]).unwrap();
        assert_eq!(s.expand_integral(&[1, 1]).unwrap(), None);
        let q = s.expand(&[1, 1]).unwrap().unwrap();
        assert_eq!(q[0], BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn system_with_free_unknown() {
        // x + y = 3, 2x + 2y = 6
        let mut sys = LinearSystem::new(2);
        sys.add_equation(&[(0, 1), (1, 1)], 3).unwrap();
        sys.add_equation(&[(0, 2), (1, 2)], 6).unwrap();
        let sol = sys.solve().unwrap();
        assert_eq!(sol.free, vec![1]);
        let p = sol.evaluate(&[1]);
        assert_eq!(as_integer(&p[0]), Some(2));
        assert_eq!(as_integer(&p[1]), Some(1));
    }

    #[test]
    fn inconsistent_system() {
        let mut sys = LinearSystem::new(1);
        sys.add_equation(&[(0, 2)], 1).unwrap();
        sys.add_equation(&[(0, 4)], 3).unwrap();
        assert!(sys.solve().is_none());
    }

    proptest! {
        // Any integer combination of inserted generators expands back to its coefficients.
        #[test]
        fn expansion_recovers_coefficients(
            gens in proptest::collection::vec(proptest::collection::vec(-4i64..5, 6), 1..5),
            coeffs in proptest::collection::vec(-3i64..4, 5),
        ) {
            let mut span = IntSpan::new(6);
            let mut kept = Vec::new();
            for g in &gens {
                if span.insert(g).unwrap().is_some() {
                    kept.push(g.clone());
                }
            }
            let mut v = vec![0i64; 6];
            for (g, c) in kept.iter().zip(&coeffs) {
                for (x, y) in v.iter_mut().zip(g) {
                    *x += c * y;
                }
            }
            let got = span.expand_integral(&v).unwrap().unwrap();
            prop_assert_eq!(&got[..], &coeffs[..kept.len()]);
        }
    }
}
