use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

/// Element of `Z[ζ_e]`, coordinates over `1, ζ, …, ζ^{φ(e)-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CyclotomicInt {
    modulus: u32,
    coeffs: Vec<i64>,
}

/// Ascending coefficients of the `e`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(e: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&e) {
        return p.clone();
    }
    assert!(e >= 1);
    // x^e - 1 divided by Φ_d for every proper divisor d
    let mut p = vec![0i64; e as usize + 1];
    p[0] = -1;
    p[e as usize] = 1;
    for d in (1..e).filter(|d| e.is_multiple_of(*d)) {
        p = div_monic(&p, &cyclotomic_polynomial(d));
    }
    cache.lock().unwrap().insert(e, p.clone());
    p
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

/// Reduce an ascending polynomial modulo `Φ_e`.
fn reduce(mut p: Vec<i64>, phi: &[i64]) -> Vec<i64> {
    let deg = phi.len() - 1;
    for i in (deg..p.len()).rev() {
        let c = p[i];
        if c != 0 {
            for (j, &d) in phi.iter().enumerate() {
                p[i - deg + j] -= c * d;
            }
        }
    }
    p.resize(deg, 0);
    p
}

impl CyclotomicInt {
    pub fn from_integer(e: u32, n: i64) -> Self {
        let phi = cyclotomic_polynomial(e);
        let mut coeffs = vec![0; phi.len() - 1];
        coeffs[0] = n;
        CyclotomicInt { modulus: e, coeffs }
    }

    pub fn zero(e: u32) -> Self {
        Self::from_integer(e, 0)
    }

    /// `ζ_e^k`
    pub fn root_of_unity(e: u32, k: i64) -> Self {
        let k = k.rem_euclid(e as i64) as usize;
        let mut p = vec![0i64; k + 1];
        p[k] = 1;
        Self::from_power_sum(e, p)
    }

    fn from_power_sum(e: u32, p: Vec<i64>) -> Self {
        let phi = cyclotomic_polynomial(e);
        let mut p = p;
        if p.len() < phi.len() - 1 {
            p.resize(phi.len() - 1, 0);
        }
        CyclotomicInt {
            modulus: e,
            coeffs: reduce(p, &phi),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.modulus, other.modulus);
        CyclotomicInt {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CyclotomicInt {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.modulus, other.modulus);
        let mut p = vec![0i64; self.coeffs.len() * 2];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a != 0 {
                for (j, &b) in other.coeffs.iter().enumerate() {
                    p[i + j] += a * b;
                }
            }
        }
        Self::from_power_sum(self.modulus, p)
    }

    /// Complex conjugate: `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let e = self.modulus as usize;
        let mut p = vec![0i64; e];
        for (k, &c) in self.coeffs.iter().enumerate() {
            p[(e - k) % e] += c;
        }
        Self::from_power_sum(self.modulus, p)
    }

    /// `self / d`, when every coordinate is divisible.
    pub fn div_exact(&self, d: i64) -> Option<Self> {
        self.coeffs.iter().all(|c| c % d == 0).then(|| CyclotomicInt {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| c / d).collect(),
        })
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_rational().then(|| self.coeffs[0])
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if out.is_empty() { "" } else { "+" };
            out.push_str(sign);
            let mag = c.unsigned_abs();
            match (k, mag) {
                (0, m) => out.push_str(&m.to_string()),
                (_, 1) => {}
                (_, m) => out.push_str(&m.to_string()),
            }
            match k {
                0 => {}
                1 => out.push_str(&format!("z{}", self.modulus)),
                k => out.push_str(&format!("z{}^{k}", self.modulus)),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for e in [2u32, 3, 4, 5, 6, 8, 9, 12] {
            let total = (0..e as i64)
                .map(|k| CyclotomicInt::root_of_unity(e, k))
                .fold(CyclotomicInt::zero(e), |a, b| a.add(&b));
            assert_eq!(total, CyclotomicInt::zero(e), "e = {e}");
        }
    }

    #[test]
    fn arithmetic() {
        let i = CyclotomicInt::root_of_unity(4, 1);
        assert_eq!(i.mul(&i), CyclotomicInt::from_integer(4, -1));
        assert_eq!(i.add(&i.conj()), CyclotomicInt::zero(4));
        let z = CyclotomicInt::root_of_unity(12, 5);
        assert_eq!(z.mul(&z.conj()), CyclotomicInt::from_integer(12, 1));
        // ζ_3 + ζ_3^{-1} = -1
        let w = CyclotomicInt::root_of_unity(3, 1);
        assert_eq!(w.add(&w.conj()).as_integer(), Some(-1));
        // ζ_5 + ζ_5^{-1} is real but irrational
        let z5 = CyclotomicInt::root_of_unity(5, 1);
        let t = z5.add(&z5.conj());
        assert!(t.is_real() && !t.is_rational());
        assert!(!i.is_real());
        assert_eq!(CyclotomicInt::from_integer(4, 6).div_exact(2).unwrap().as_integer(), Some(3));
        assert!(i.div_exact(2).is_none());
    }
}
