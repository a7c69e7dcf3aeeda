//! Exact arithmetic in `Z[a, i]` with `a = √(2+√2)`, so `a⁴ = 4a² − 2`.
//!
//! `√2 = a² − 2` and `√(2(2+√2)) = a·√2 = a³ − 2a`. Every quantum dimension
//! of `E4` and every entry of the matrix-unit table lives here, which makes
//! the idempotency checks exact.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::IntMatrix;

/// `c₀ + c₁a + c₂a² + c₃a³`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Za(pub [i64; 4]);

impl Za {
    pub const ZERO: Za = Za([0; 4]);
    pub const ONE: Za = Za([1, 0, 0, 0]);
    /// `a = √(2+√2)`.
    pub const A: Za = Za([0, 1, 0, 0]);
    /// `√2 = a² − 2`.
    pub const SQRT2: Za = Za([-2, 0, 1, 0]);

    pub fn int(n: i64) -> Za {
        Za([n, 0, 0, 0])
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn scale(self, k: i64) -> Za {
        Za(self.0.map(|c| c * k))
    }

    pub fn to_f64(self) -> f64 {
        let a = libm::sqrt(2.0 + core::f64::consts::SQRT_2);
        self.0.iter().rev().fold(0.0, |acc, &c| acc * a + c as f64)
    }
}

impl Add for Za {
    type Output = Za;
    fn add(self, o: Za) -> Za {
        Za([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2], self.0[3] + o.0[3]])
    }
}

impl Sub for Za {
    type Output = Za;
    fn sub(self, o: Za) -> Za {
        self + (-o)
    }
}

impl Neg for Za {
    type Output = Za;
    fn neg(self) -> Za {
        Za(self.0.map(|c| -c))
    }
}

impl Mul for Za {
    type Output = Za;
    fn mul(self, o: Za) -> Za {
        let mut p = [0i64; 7];
        for (i, &x) in self.0.iter().enumerate() {
            for (j, &y) in o.0.iter().enumerate() {
                p[i + j] += x * y;
            }
        }
        for d in (4..7).rev() {
            let c = p[d];
            p[d] = 0;
            p[d - 2] += 4 * c;
            p[d - 4] -= 2 * c;
        }
        Za([p[0], p[1], p[2], p[3]])
    }
}

impl fmt::Display for Za {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "a", "a²", "a³"];
        let mut first = true;
        for (c, n) in self.0.iter().zip(names) {
            if *c == 0 {
                continue;
            }
            if !first {
                f.write_str(if *c < 0 { " − " } else { " + " })?;
            } else if *c < 0 {
                f.write_str("−")?;
            }
            first = false;
            let m = c.abs();
            match (m, n) {
                (1, "") => write!(f, "1")?,
                (1, _) => write!(f, "{n}")?,
                _ => write!(f, "{m}{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `re + i·im` with `re, im ∈ Z[a]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Zai {
    pub re: Za,
    pub im: Za,
}

impl Zai {
    pub const ZERO: Zai = Zai { re: Za::ZERO, im: Za::ZERO };
    pub const ONE: Zai = Zai { re: Za::ONE, im: Za::ZERO };
    pub const I: Zai = Zai { re: Za::ZERO, im: Za::ONE };

    pub fn real(re: Za) -> Zai {
        Zai { re, im: Za::ZERO }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl From<Za> for Zai {
    fn from(re: Za) -> Zai {
        Zai::real(re)
    }
}

impl Add for Zai {
    type Output = Zai;
    fn add(self, o: Zai) -> Zai {
        Zai { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for Zai {
    type Output = Zai;
    fn sub(self, o: Zai) -> Zai {
        Zai { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Neg for Zai {
    type Output = Zai;
    fn neg(self) -> Zai {
        Zai { re: -self.re, im: -self.im }
    }
}

impl Mul for Zai {
    type Output = Zai;
    fn mul(self, o: Zai) -> Zai {
        Zai { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
}

/// Dense square matrix over `Z[a, i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdMatrix {
    n: usize,
    data: Vec<Zai>,
}

impl SurdMatrix {
    pub fn zeros(n: usize) -> Self {
        SurdMatrix { n, data: vec![Zai::ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Zai::ONE;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Zai {
        self.data[i * self.n + j]
    }

    /// `Σ c_q M_q`.
    pub fn combination(terms: &[(Zai, &IntMatrix)]) -> Self {
        let n = terms.first().map_or(0, |t| t.1.rows());
        let mut out = Self::zeros(n);
        for (c, m) in terms {
            for i in 0..n {
                for j in 0..n {
                    let e = m[(i, j)];
                    if e != 0 {
                        let s = Zai { re: c.re.scale(e), im: c.im.scale(e) };
                        out.data[i * n + j] = out.data[i * n + j] + s;
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: Zai) -> Self {
        SurdMatrix { n: self.n, data: self.data.iter().map(|&x| c * x).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zai::is_zero)
    }

    /// Largest entry modulus as a float.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.to_complex().norm()).fold(0.0, f64::max)
    }
}

impl Add for &SurdMatrix {
    type Output = SurdMatrix;
    fn add(self, o: &SurdMatrix) -> SurdMatrix {
        SurdMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(&x, &y)| x + y).collect() }
    }
}

impl Sub for &SurdMatrix {
    type Output = SurdMatrix;
    fn sub(self, o: &SurdMatrix) -> SurdMatrix {
        SurdMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(&x, &y)| x - y).collect() }
    }
}

impl Mul for &SurdMatrix {
    type Output = SurdMatrix;
    fn mul(self, o: &SurdMatrix) -> SurdMatrix {
        let n = self.n;
        let mut out = SurdMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.data[i * n + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = o.data[k * n + j];
                    if !y.is_zero() {
                        out.data[i * n + j] = out.data[i * n + j] + x * y;
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn defining_relation() {
        let a = Za::A;
        let a4 = a * a * a * a;
        assert_eq!(a4, Za::int(4) * a * a - Za::int(2));
        assert_eq!(Za::SQRT2 * Za::SQRT2, Za::int(2));
        assert!((Za::A.to_f64() - libm::sqrt(2.0 + libm::sqrt(2.0))).abs() < 1e-15);
        assert_eq!(Zai::I * Zai::I, -Zai::ONE);
        assert_eq!(Za([1, -2, 0, 3]).to_string(), "1 − 2a + 3a³");
    }

    fn za() -> impl Strategy<Value = Za> {
        proptest::array::uniform4(-20i64..20).prop_map(Za)
    }

    proptest! {
        #[test]
        fn multiplication_matches_floats(x in za(), y in za()) {
            let exact = (x * y).to_f64();
            let approx = x.to_f64() * y.to_f64();
            prop_assert!((exact - approx).abs() < 1e-9 * (1.0 + approx.abs()));
        }

        #[test]
        fn ring_axioms(x in za(), y in za(), z in za()) {
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * (y + z), x * y + x * z);
            prop_assert_eq!(x * y, y * x);
        }
    }
}
