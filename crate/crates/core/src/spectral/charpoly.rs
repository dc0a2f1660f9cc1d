//! Exact characteristic polynomials of integer matrices.
//!
//! Two independent routes: Berkowitz's division-free algorithm over big
//! integers, and Hessenberg reduction modulo several word-size primes with
//! Chinese remaindering against a rigorous coefficient bound.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use super::IntPolynomial;

/// `det(xI - A)` by the Berkowitz algorithm. `rows` must be square.
pub fn berkowitz(rows: &[Vec<i64>]) -> IntPolynomial {
    let n = rows.len();
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
        let mut t: Vec<BigInt> = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(BigInt::from(-rows[r][r]));
        let mut v: Vec<BigInt> = (0..r).map(|i| BigInt::from(rows[i][r])).collect();
        for k in 0..r {
            let mut dot = BigInt::zero();
            for (j, vj) in v.iter().enumerate() {
                add_scaled(&mut dot, vj, rows[r][j]);
            }
            t.push(-dot);
            if k + 1 < r {
                v = (0..r)
                    .map(|i| {
                        let mut acc = BigInt::zero();
                        for (j, vj) in v.iter().enumerate() {
                            add_scaled(&mut acc, vj, rows[i][j]);
                        }
                        acc
                    })
                    .collect();
            }
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate().take(i + 1) {
                let ti = &t[i - j];
                if !ti.is_zero() && !pj.is_zero() {
                    *slot += ti * pj;
                }
            }
        }
        p = next;
    }
    IntPolynomial::from_descending(p)
}

#[inline]
fn add_scaled(acc: &mut BigInt, v: &BigInt, scale: i64) {
    match scale {
        0 => {}
        1 => *acc += v,
        -1 => *acc -= v,
        s => *acc += v * s,
    }
}

/// `det(xI - A)` by modular Hessenberg reduction and CRT reconstruction.
///
/// The coefficient of `x^{n-k}` is bounded by `C(n,k) ρ^k` with `ρ` the
/// largest absolute row sum (a bound on every eigenvalue), so enough primes are
/// used for the product to exceed twice that bound.
pub fn multimodular(rows: &[Vec<i64>]) -> IntPolynomial {
    let n = rows.len();
    if n == 0 {
        return IntPolynomial::one();
    }
    let rho: u64 = rows
        .iter()
        .map(|r| r.iter().map(|x| x.unsigned_abs()).sum::<u64>())
        .max()
        .unwrap_or(0)
        .max(1);
    let bound = (0..=n)
        .map(|k| binomial(BigInt::from(n), BigInt::from(k)) * BigInt::from(rho).pow(k as u32))
        .max()
        .unwrap();
    let needed = bound * 2 + 1;

    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    for p in primes() {
        if modulus >= needed {
            break;
        }
        let residues = charpoly_mod(rows, *p);
        let pb = BigInt::from(*p);
        let inv_m = mod_inverse(&(&modulus % &pb), *p);
        for (a, &r) in acc.iter_mut().zip(&residues) {
            // a + M·((r - a)·M^{-1} mod p)
            let a_mod = ((&*a % &pb) + &pb) % &pb;
            let diff = (BigInt::from(r) - a_mod + &pb) % &pb;
            let k = (diff * inv_m) % &pb;
            *a += &modulus * k;
        }
        modulus *= pb;
    }
    assert!(modulus >= needed, "prime table exhausted");
    let half = &modulus >> 1;
    let coeffs = acc
        .into_iter()
        .map(|a| if a > half { a - &modulus } else { a })
        .collect();
    IntPolynomial::from_descending(coeffs)
}

fn mod_inverse(a: &BigInt, p: u64) -> u64 {
    let a = a.to_string().parse::<u64>().unwrap() % p;
    if a == 0 {
        // modulus is 1 at the first prime
        return 1;
    }
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Primes just below 2^31, so products of residues fit in a `u64`.
fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let is_prime = |n: u64| (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        (1u64 << 20..1u64 << 31)
            .rev()
            .filter(|&n| n % 2 == 1 && is_prime(n))
            .take(64)
            .collect()
    })
}

/// Characteristic polynomial modulo `p`, highest degree first.
fn charpoly_mod(rows: &[Vec<i64>], p: u64) -> Vec<u64> {
    let n = rows.len();
    let reduce = |x: i64| -> u64 { x.rem_euclid(p as i64) as u64 };
    let mut h: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| reduce(x)).collect()).collect();
    let sub = |a: u64, b: u64| if a >= b { a - b } else { a + p - b };

    // similarity transform to upper Hessenberg form
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = pow_mod(h[j + 1][j], p - 2, p);
        for k in j + 2..n {
            if h[k][j] == 0 {
                continue;
            }
            let u = h[k][j] * inv % p;
            for c in 0..n {
                let t = u * h[j + 1][c] % p;
                h[k][c] = sub(h[k][c], t);
            }
            for row in h.iter_mut() {
                let t = u * row[k] % p;
                row[j + 1] = (row[j + 1] + t) % p;
            }
        }
    }

    // recurrence on leading principal minors, polynomials stored ascending
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &polys[m];
        let mut cur = vec![0u64; m + 2];
        for (k, &c) in prev.iter().enumerate() {
            cur[k + 1] = (cur[k + 1] + c) % p;
            cur[k] = sub(cur[k], h[m][m] * c % p);
        }
        let mut t = 1u64;
        for i in 1..=m {
            t = t * h[m - i + 1][m - i] % p;
            let coef = h[m - i][m] * t % p;
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[m - i].iter().enumerate() {
                cur[k] = sub(cur[k], coef * c % p);
            }
        }
        polys.push(cur);
    }
    let mut out = polys.pop().unwrap();
    out.reverse();
    out
}
