use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Polynomial with arbitrary-precision integer coefficients, stored
/// highest degree first. The zero polynomial is the empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Leading zeros are stripped.
    pub fn from_descending(coeffs: Vec<BigInt>) -> Self {
        let skip = coeffs.iter().take_while(|c| c.is_zero()).count();
        IntPolynomial {
            coeffs: coeffs[skip..].to_vec(),
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_descending(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `x - r`
    pub fn linear(root: i64) -> Self {
        Self::from_i64(&[1, -root])
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree; 0 for constants and for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.first().is_some_and(|c| c.is_one())
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        let d = self.coeffs.len();
        if k >= d {
            BigInt::zero()
        } else {
            self.coeffs[d - 1 - k].clone()
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPolynomial { coeffs: Vec::new() };
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_descending(out)
    }

    pub fn pow(&self, k: usize) -> IntPolynomial {
        (0..k).fold(IntPolynomial::one(), |acc, _| acc.mul(self))
    }

    /// Synthetic division by `x - r`, returning the quotient when the
    /// remainder vanishes.
    pub fn deflate(&self, r: &BigInt) -> Option<IntPolynomial> {
        if self.coeffs.len() < 2 {
            return None;
        }
        let mut quotient = Vec::with_capacity(self.coeffs.len() - 1);
        let mut acc = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            acc = acc * r + c;
            quotient.push(acc.clone());
        }
        let rem = acc * r + self.coeffs.last().unwrap();
        rem.is_zero().then(|| IntPolynomial::from_descending(quotient))
    }

    /// Exact division by a monic divisor; `None` when the remainder is non-zero.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd + 1;
        let mut quotient = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let q = rem[i].clone();
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * d;
                }
            }
            quotient.push(q);
        }
        rem[qlen..]
            .iter()
            .all(Zero::is_zero)
            .then(|| IntPolynomial::from_descending(quotient))
    }
}

impl fmt::Display for IntPolynomial {
    /// Plain expanded form, e.g. `x^4-6x^2-8x-3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let d = self.degree();
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = d - i;
            let sign = if c.is_negative() { "-" } else if out.is_empty() { "" } else { "+" };
            let mag = c.abs();
            out.push_str(sign);
            if power == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match power {
                0 => {}
                1 => out.push('x'),
                p => out.push_str(&format!("x^{p}")),
            }
        }
        write!(f, "{out}")
    }
}
