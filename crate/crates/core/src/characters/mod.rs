//! Exact character tables for abelian groups and `Q8 × C2^n`, and the Cayley
//! graph spectrum they give for connection sets that are unions of classes.
//!
//! For such a set `S` the eigenvalues are `θ_χ = (1/χ(1)) Σ_{s∈S} χ(s)`, one
//! per irreducible character `χ`, with multiplicity `χ(1)^2`.

mod cyclotomic;
mod table;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicInt};
pub use table::{
    character_table, cyclic_decomposition, is_rational_table, quaternion_rank, table_supported, CharacterTable,
    CharacterTableJson, TableKind,
};

use thiserror::Error;

use crate::group::GroupTable;
use crate::spectral::ConnectionSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharacterError {
    #[error("no character table construction for `{0}` (needs abelian or Q8 x C2^n)")]
    Unsupported(String),
    #[error("connection set is not a union of conjugacy classes")]
    NotConjugationClosed,
    #[error("character sum not divisible by the degree {0}")]
    InexactDivision(i64),
    #[error("eigenvalue {0} is not real")]
    NonReal(String),
    #[error("invalid character table: {0}")]
    InvalidTable(String),
}

/// One eigenvalue with its multiplicity `χ(1)^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueEntry {
    pub value: CyclotomicInt,
    pub multiplicity: usize,
}

/// Full spectrum of `Cay(G, S)` from the character table, one entry per character.
pub fn bh1_spectrum(
    g: &GroupTable,
    s: &ConnectionSet,
    t: &CharacterTable,
) -> Result<Vec<EigenvalueEntry>, CharacterError> {
    if !s.is_conjugation_closed(g) {
        return Err(CharacterError::NotConjugationClosed);
    }
    let e = t.exponent();
    (0..t.len())
        .map(|chi| {
            let sum = s
                .members()
                .iter()
                .fold(CyclotomicInt::zero(e), |acc, &x| acc.add(t.value(chi, x)));
            let d = t.degrees()[chi];
            let value = sum.div_exact(d).ok_or(CharacterError::InexactDivision(d))?;
            if !value.is_real() {
                return Err(CharacterError::NonReal(value.to_string()));
            }
            Ok(EigenvalueEntry {
                value,
                multiplicity: (d * d) as usize,
            })
        })
        .collect()
}

/// Merge entries into `(root, multiplicity)`, roots descending, when every
/// eigenvalue is a rational integer.
pub fn integer_spectrum(entries: &[EigenvalueEntry]) -> Option<Vec<(i64, usize)>> {
    let mut out: Vec<(i64, usize)> = Vec::new();
    for e in entries {
        out.push((e.value.as_integer()?, e.multiplicity));
    }
    Some(merge_roots(out))
}

fn merge_roots(mut roots: Vec<(i64, usize)>) -> Vec<(i64, usize)> {
    roots.sort_by_key(|r| std::cmp::Reverse(r.0));
    let mut merged: Vec<(i64, usize)> = Vec::new();
    for (r, m) in roots {
        match merged.last_mut() {
            Some(last) if last.0 == r => last.1 += m,
            _ => merged.push((r, m)),
        }
    }
    merged
}

/// Integer-only evaluation for rational tables: the merged spectrum, or
/// `None` if some `θ` is not an integer. Skips the conjugation check.
pub(crate) fn rational_spectrum(values: &[Vec<i64>], degrees: &[i64], members: &[usize]) -> Option<Vec<(i64, usize)>> {
    let mut roots = Vec::with_capacity(values.len());
    for (row, &d) in values.iter().zip(degrees) {
        let sum: i64 = members.iter().map(|&x| row[x]).sum();
        if sum % d != 0 {
            return None;
        }
        roots.push((sum / d, (d * d) as usize));
    }
    Some(merge_roots(roots))
}
