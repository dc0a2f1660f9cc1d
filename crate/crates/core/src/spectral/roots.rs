use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{IntPolynomial, SpectrumError};

/// Integer part of a characteristic polynomial's factorisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSplit {
    /// `(root, multiplicity)`, roots descending.
    pub roots: Vec<(i64, usize)>,
    /// What is left once every integer root is divided out.
    pub residual: IntPolynomial,
    /// Irreducible quadratics pulled out of the residual, then at most one
    /// unfactored remainder of degree three or more.
    pub residual_factors: Vec<(IntPolynomial, usize)>,
}

impl RootSplit {
    pub fn is_integral(&self) -> bool {
        self.residual.degree() == 0
    }

    /// Canonical factored form, e.g. `(x-5)(x+1)^5(x^2-5)^3`.
    pub fn display(&self) -> String {
        let mut out = String::new();
        for &(r, m) in &self.roots {
            let base = match r {
                0 => "x".to_string(),
                r if r > 0 => format!("(x-{r})"),
                r => format!("(x+{})", -r),
            };
            push_power(&mut out, &base, m);
        }
        for (f, m) in &self.residual_factors {
            push_power(&mut out, &format!("({f})"), *m);
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

fn push_power(out: &mut String, base: &str, m: usize) {
    out.push_str(base);
    if m > 1 {
        out.push_str(&format!("^{m}"));
    }
}

/// Divide out every integer root `r` with `|r| <= bound`, largest first.
pub fn split_integer_roots(p: &IntPolynomial, bound: u64) -> Result<RootSplit, SpectrumError> {
    if !p.is_monic() {
        return Err(SpectrumError::NotMonic);
    }
    let bound = bound as i64;
    let mut rest = p.clone();
    let mut roots = Vec::new();
    for r in (-bound..=bound).rev() {
        let rb = BigInt::from(r);
        let mut mult = 0;
        while let Some(q) = rest.deflate(&rb) {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }
    let residual_factors = quadratic_factors(&rest, bound.max(1) as u64);
    let split = RootSplit {
        roots,
        residual: rest,
        residual_factors,
    };
    debug_assert_eq!(&reconstruct(&split), p, "factorisation does not reconstruct input");
    Ok(split)
}

/// Multiply the split back together.
pub fn reconstruct(split: &RootSplit) -> IntPolynomial {
    let mut acc = split.residual.clone();
    for &(r, m) in &split.roots {
        acc = acc.mul(&IntPolynomial::linear(r).pow(m));
    }
    acc
}

/// Trial division by monic quadratics `x^2 + bx + c` whose roots could be
/// eigenvalues bounded by `bound`, so `|b| <= 2 bound` and `|c| <= bound^2`.
/// The residual has no integer roots, so
/// every quadratic found is irreducible and its constant divides the
/// residual's (non-zero) constant term.
fn quadratic_factors(residual: &IntPolynomial, bound: u64) -> Vec<(IntPolynomial, usize)> {
    if residual.degree() == 0 {
        return Vec::new();
    }
    let mut rest = residual.clone();
    let mut found: Vec<(IntPolynomial, usize)> = Vec::new();
    let b_max = (2 * bound) as i64;
    let c_max = (bound * bound) as i64;
    let constant = rest.coeff(0);
    let cs: Vec<i64> = (-c_max..=c_max)
        .filter(|&c| c != 0 && (constant.is_zero() || constant.is_multiple_of(&BigInt::from(c))))
        .collect();
    'outer: for b in -b_max..=b_max {
        for &c in &cs {
            if rest.degree() < 2 {
                break 'outer;
            }
            if b * b - 4 * c >= 0 && is_square(b * b - 4 * c) {
                // rational roots, already excluded
                continue;
            }
            let q = IntPolynomial::from_i64(&[1, b, c]);
            let mut mult = 0;
            while let Some(next) = rest.div_exact(&q) {
                rest = next;
                mult += 1;
            }
            if mult > 0 {
                found.push((q, mult));
            }
        }
    }
    found.sort_by(|a, b| a.0.coefficients().cmp(b.0.coefficients()));
    if rest.degree() > 0 {
        found.push((rest, 1));
    }
    found
}

fn is_square(n: i64) -> bool {
    let r = (n as f64).sqrt().round() as i64;
    (r - 1..=r + 1).any(|s| s >= 0 && s * s == n)
}

/// Residual coefficients as decimal strings (they may exceed 64 bits).
pub(crate) fn coeff_strings(p: &IntPolynomial) -> Vec<String> {
    p.coefficients().iter().map(|c| c.to_string()).collect()
}
