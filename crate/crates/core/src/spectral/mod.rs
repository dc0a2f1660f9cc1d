//! Cayley graph adjacency matrices and exact integrality decisions.

mod charpoly;
mod poly;
mod roots;

pub use charpoly::{berkowitz, multimodular};
pub use poly::IntPolynomial;
pub use roots::{reconstruct, split_integer_roots, RootSplit};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{ElementIndex, GroupTable};
use crate::presentation::evaluate_in_group;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("connection set contains the identity")]
    ContainsIdentity,
    #[error("connection set is not closed under inverses: {0} present, its inverse absent")]
    NotInverseClosed(ElementIndex),
    #[error("element {0} is outside the group")]
    OutOfRange(ElementIndex),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("cannot resolve `{word}`: {reason}")]
    BadWord { word: String, reason: String },
}

/// Inverse-closed subset of `G \ {1}`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConnectionSet {
    parent_order: usize,
    members: Vec<ElementIndex>,
}

impl ConnectionSet {
    pub fn new(group: &GroupTable, members: impl IntoIterator<Item = ElementIndex>) -> Result<Self, SpectrumError> {
        let mut members: Vec<ElementIndex> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        for &s in &members {
            if s >= group.order() {
                return Err(SpectrumError::OutOfRange(s));
            }
            if s == 0 {
                return Err(SpectrumError::ContainsIdentity);
            }
        }
        for &s in &members {
            if members.binary_search(&group.inv(s)).is_err() {
                return Err(SpectrumError::NotInverseClosed(s));
            }
        }
        Ok(ConnectionSet {
            parent_order: group.order(),
            members,
        })
    }

    pub fn empty(group: &GroupTable) -> Self {
        ConnectionSet {
            parent_order: group.order(),
            members: Vec::new(),
        }
    }

    /// `G \ {1}`.
    pub fn complete(group: &GroupTable) -> Self {
        ConnectionSet {
            parent_order: group.order(),
            members: (1..group.order()).collect(),
        }
    }

    /// Resolve words in the group's generator labels, e.g. `["x", "x^-1", "xy"]`.
    pub fn from_words<S: AsRef<str>>(group: &GroupTable, words: &[S]) -> Result<Self, SpectrumError> {
        let mut members = Vec::with_capacity(words.len());
        for w in words {
            let w = w.as_ref();
            let g = evaluate_in_group(group, w).map_err(|e| SpectrumError::BadWord {
                word: w.to_string(),
                reason: e.to_string(),
            })?;
            members.push(g);
        }
        Self::new(group, members)
    }

    /// Add the inverse of every listed element.
    pub fn symmetrized(group: &GroupTable, elements: &[ElementIndex]) -> Result<Self, SpectrumError> {
        let all = elements.iter().flat_map(|&g| [g, group.inv(g)]);
        Self::new(group, all.collect::<Vec<_>>())
    }

    pub fn members(&self) -> &[ElementIndex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, g: ElementIndex) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    /// A union of conjugacy classes.
    pub fn is_conjugation_closed(&self, group: &GroupTable) -> bool {
        self.members
            .iter()
            .all(|&s| (0..group.order()).all(|x| self.contains(group.conjugate(s, x))))
    }

    /// Member names as shortest words in the group's labels.
    pub fn words(&self, group: &GroupTable) -> Vec<String> {
        let words = group.element_words();
        self.members.iter().map(|&s| words[s].clone()).collect()
    }
}

/// Symmetric 0/1 matrix of a Cayley graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    rows: Vec<Vec<i64>>,
}

impl AdjacencyMatrix {
    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        self.rows[a][b] != 0
    }
}

/// `a ~ b` iff `a b^-1 ∈ S`.
pub fn cayley_adjacency(group: &GroupTable, set: &ConnectionSet) -> AdjacencyMatrix {
    assert_eq!(set.parent_order, group.order(), "connection set belongs to another group");
    let n = group.order();
    let mut rows = vec![vec![0i64; n]; n];
    for b in 0..n {
        for &s in set.members() {
            // a b^-1 = s  <=>  a = s b
            rows[group.mul(s, b)][b] = 1;
        }
    }
    AdjacencyMatrix { rows }
}

/// Exact `det(xI - A)`.
pub fn char_poly(a: &AdjacencyMatrix) -> IntPolynomial {
    berkowitz(&a.rows)
}

/// Integrality verdict for one Cayley graph, with its factored spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub group: String,
    pub set: Vec<String>,
    pub split: RootSplit,
}

impl SpectrumReport {
    pub fn is_integral(&self) -> bool {
        self.split.is_integral()
    }

    pub fn roots(&self) -> &[(i64, usize)] {
        &self.split.roots
    }

    pub fn residual(&self) -> &IntPolynomial {
        &self.split.residual
    }

    pub fn display(&self) -> String {
        self.split.display()
    }

    pub fn to_json(&self) -> SpectrumJson {
        SpectrumJson {
            group: self.group.clone(),
            set: self.set.clone(),
            verdict: if self.is_integral() { "integral" } else { "non-integral" }.to_string(),
            roots: self.split.roots.clone(),
            residual_coeffs: roots::coeff_strings(&self.split.residual),
            display: self.display(),
        }
    }
}

/// Serialized report. Residual coefficients are decimal strings because they
/// can exceed 64 bits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub group: String,
    pub set: Vec<String>,
    pub verdict: String,
    pub roots: Vec<(i64, usize)>,
    pub residual_coeffs: Vec<String>,
    pub display: String,
}

/// Adjacency, characteristic polynomial, then integer-root splitting with
/// bound `|S|`.
pub fn is_integral_graph(group: &GroupTable, set: &ConnectionSet) -> SpectrumReport {
    let p = char_poly(&cayley_adjacency(group, set));
    let split = split_integer_roots(&p, set.len() as u64).expect("characteristic polynomials are monic");
    SpectrumReport {
        group: group.name().to_string(),
        set: set.words(group),
        split,
    }
}

/// Verdict only: divide out integer roots in `[-|S|, |S|]` and check that
/// nothing is left. Skips the display pass.
pub fn spectrum_is_integral(group: &GroupTable, set: &ConnectionSet) -> bool {
    integer_roots_exhaust(&char_poly(&cayley_adjacency(group, set)), set.len() as i64)
}

pub(crate) fn integer_roots_exhaust(p: &IntPolynomial, bound: i64) -> bool {
    let mut rest = p.clone();
    for r in (-bound..=bound).rev() {
        let rb = num_bigint::BigInt::from(r);
        while let Some(q) = rest.deflate(&rb) {
            rest = q;
        }
        if rest.degree() == 0 {
            return true;
        }
    }
    rest.degree() == 0
}
