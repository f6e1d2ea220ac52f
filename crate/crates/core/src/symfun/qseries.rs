//! Truncated formal power series in `q` with exact rational coefficients.
//!
//! A series carries its truncation order `N` and coefficients `c_0..c_N`.
//! Binary operations are closed at `min` of the two truncations; the only
//! partial operation is division, which needs a unit constant term.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::{Error, Rat, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    trunc: usize,
    coeffs: Vec<Rat>,
}

impl QSeries {
    /// The zero series truncated at `q^N`.
    pub fn zero(trunc: usize) -> Self {
        QSeries {
            trunc,
            coeffs: vec![Rat::zero(); trunc + 1],
        }
    }

    /// The constant series 1.
    pub fn one(trunc: usize) -> Self {
        Self::monomial(0, trunc)
    }

    /// `q^a`, or the zero series when `a > N`.
    pub fn monomial(a: usize, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if a <= trunc {
            s.coeffs[a] = Rat::one();
        }
        s
    }

    /// Builds a series from explicit coefficients `c_0..c_N`.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least c_0");
        QSeries {
            trunc: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the truncation is *not* implied;
    /// reading past `N` is a caller bug).
    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    /// Index of the first nonzero coefficient, or `None` when the series
    /// vanishes up to the truncation.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.ord().is_none()
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Sum of the stored coefficients (the value at `q = 1` for polynomials).
    pub fn eval_at_one(&self) -> Rat {
        self.coeffs.iter().fold(Rat::zero(), |acc, c| acc + c)
    }

    pub fn scale(&self, by: &Rat) -> QSeries {
        QSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }

    /// Multiplies by `q^a`; the truncation grows to `N + a`, which is exact.
    pub fn shift_up(&self, a: usize) -> QSeries {
        let mut coeffs = vec![Rat::zero(); self.trunc + a + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k + a] = c.clone();
        }
        QSeries {
            trunc: self.trunc + a,
            coeffs,
        }
    }

    /// Restricts to a smaller truncation (or keeps the series as is).
    pub fn truncated(&self, trunc: usize) -> QSeries {
        if trunc >= self.trunc {
            return self.clone();
        }
        QSeries {
            trunc,
            coeffs: self.coeffs[..=trunc].to_vec(),
        }
    }

    /// Division; the divisor must have a nonzero constant term.
    pub fn div(&self, rhs: &QSeries) -> Result<QSeries> {
        if rhs.coeffs[0].is_zero() {
            return Err(Error::DivisorNotUnit);
        }
        let trunc = self.trunc.min(rhs.trunc);
        let mut out = vec![Rat::zero(); trunc + 1];
        let inv0 = Rat::one() / rhs.coeffs[0].clone();
        for k in 0..=trunc {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                if !rhs.coeffs[j].is_zero() {
                    acc -= &rhs.coeffs[j] * &out[k - j];
                }
            }
            out[k] = acc * &inv0;
        }
        Ok(QSeries { trunc, coeffs: out })
    }

    /// Multiplies by `1/(1 − q^a)` in place-friendly form (`a ≥ 1`).
    pub fn div_one_minus_q_pow(&self, a: usize) -> QSeries {
        assert!(a >= 1);
        let mut coeffs = self.coeffs.clone();
        for k in a..=self.trunc {
            let prev = coeffs[k - a].clone();
            coeffs[k] += prev;
        }
        QSeries {
            trunc: self.trunc,
            coeffs,
        }
    }

    /// Multiplies by `(1 − q^a)` (`a ≥ 1`).
    pub fn mul_one_minus_q_pow(&self, a: usize) -> QSeries {
        assert!(a >= 1);
        let mut coeffs = self.coeffs.clone();
        for k in (a..=self.trunc).rev() {
            let prev = coeffs[k - a].clone();
            coeffs[k] -= prev;
        }
        QSeries {
            trunc: self.trunc,
            coeffs,
        }
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let coeffs = (0..=trunc)
            .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
            .collect();
        QSeries { trunc, coeffs }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let coeffs = (0..=trunc)
            .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
            .collect();
        QSeries { trunc, coeffs }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let mut coeffs = vec![Rat::zero(); trunc + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(trunc + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(trunc + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QSeries { trunc, coeffs }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] + O(q^{})", self.trunc + 1)
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `Π_{j=1..N} (1 − q^j)`, which agrees with the full Euler product up to `q^N`.
pub fn euler_product(trunc: usize) -> QSeries {
    let mut s = QSeries::one(trunc);
    for j in 1..=trunc {
        s = s.mul_one_minus_q_pow(j);
    }
    s
}

/// The partition generating function `Π_{j≥1} (1 − q^j)^{-1}`.
pub fn partition_gf(trunc: usize) -> QSeries {
    let mut s = QSeries::one(trunc);
    for j in 1..=trunc {
        s = s.div_one_minus_q_pow(j);
    }
    s
}
