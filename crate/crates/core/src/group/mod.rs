//! Finite groups as explicit multiplication tables.
//!
//! Every [`GroupTable`] keeps the identity at index 0 and is validated on
//! construction (Latin square, associativity, inverses). Tables are immutable
//! afterwards, so they can be shared freely across worker threads.

mod construct;
mod iso;
mod structure;

pub use construct::ActionTable;
pub use iso::{
    find_isomorphism, fingerprint, isomorphic, isomorphic_bounded, small_generating_set, Fingerprint,
    DEFAULT_ISOMORPHISM_BOUND,
};
pub use structure::{SubgroupDescriptor, DEFAULT_NORMAL_SUBGROUP_BOUND};

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of an element inside its owning [`GroupTable`]. Index 0 is the identity.
pub type ElementIndex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order must be positive")]
    EmptyGroup,
    #[error("multiplication table has {got} entries, expected {expected}")]
    TableSize { expected: usize, got: usize },
    #[error("table entry {entry} out of range for order {order}")]
    EntryOutOfRange { entry: usize, order: usize },
    #[error("index 0 is not a two-sided identity (fails at element {0})")]
    IdentityNotAtZero(usize),
    #[error("row or column {0} is not a permutation")]
    NotLatin(usize),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} out of range for group of order {1}")]
    ElementOutOfRange(usize, usize),
    #[error("action table is not a homomorphism into the automorphism group: {0}")]
    BadAction(String),
    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group order {order} exceeds the configured bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("unknown generator label `{0}`")]
    UnknownLabel(String),
}

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<(String, ElementIndex)>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl GroupTable {
    /// Build a group from a row-major multiplication table, validating every
    /// group axiom. `generators` are named elements; they need not generate.
    pub fn from_table(
        name: impl Into<String>,
        order: usize,
        mul: Vec<u32>,
        generators: Vec<(String, ElementIndex)>,
    ) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::EmptyGroup);
        }
        if mul.len() != order * order {
            return Err(GroupError::TableSize {
                expected: order * order,
                got: mul.len(),
            });
        }
        if let Some(&e) = mul.iter().find(|&&e| e as usize >= order) {
            return Err(GroupError::EntryOutOfRange {
                entry: e as usize,
                order,
            });
        }
        for &(_, g) in &generators {
            if g >= order {
                return Err(GroupError::ElementOutOfRange(g, order));
            }
        }
        for g in 0..order {
            if mul[g] as usize != g || mul[g * order] as usize != g {
                return Err(GroupError::IdentityNotAtZero(g));
            }
        }
        check_latin(order, &mul)?;

        let mut inv = vec![0u32; order];
        for g in 0..order {
            let row = &mul[g * order..(g + 1) * order];
            let h = row.iter().position(|&e| e == 0).expect("latin row");
            inv[g] = h as u32;
        }
        let group = GroupTable {
            name: name.into(),
            order,
            mul,
            inv,
            generators,
        };
        group.check_associative()?;
        for g in 0..order {
            let h = group.inv(g);
            if group.mul(h, g) != 0 {
                return Err(GroupError::NotAssociative(h, g, h));
            }
        }
        Ok(group)
    }

    /// Light's associativity test over a multiplicative generating set.
    ///
    /// Elements `c` with `(ab)c = a(bc)` for all `a, b` form a set closed under
    /// products that contains the identity, so it suffices to test the members
    /// of any set whose product-closure from the identity is the whole table.
    fn check_associative(&self) -> Result<(), GroupError> {
        let n = self.order;
        let gens = self.magma_generators();
        for &c in &gens {
            for a in 0..n {
                for b in 0..n {
                    let left = self.mul(self.mul(a, b), c);
                    let right = self.mul(a, self.mul(b, c));
                    if left != right {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// Greedy set whose right-multiplication closure from the identity reaches
    /// every element. Starts from the labelled generators.
    fn magma_generators(&self) -> Vec<ElementIndex> {
        let n = self.order;
        let mut gens: Vec<ElementIndex> = Vec::new();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut reached = vec![0usize];
        let extend = |gens: &[ElementIndex], seen: &mut Vec<bool>, reached: &mut Vec<usize>| {
            let mut i = 0;
            while i < reached.len() {
                let a = reached[i];
                for &g in gens {
                    let p = self.mul(a, g);
                    if !seen[p] {
                        seen[p] = true;
                        reached.push(p);
                    }
                }
                i += 1;
            }
        };
        for &(_, g) in &self.generators {
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        extend(&gens, &mut seen, &mut reached);
        while reached.len() < n {
            let next = (0..n).find(|&g| !seen[g]).expect("unreached element");
            gens.push(next);
            // Closure must be recomputed from scratch since products by the new
            // generator can appear anywhere in the existing word tree.
            seen.iter_mut().for_each(|s| *s = false);
            seen[0] = true;
            reached.clear();
            reached.push(0);
            extend(&gens, &mut seen, &mut reached);
        }
        gens
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Replace the labelled generators. Labels must refer to valid elements.
    pub fn with_generators(
        mut self,
        generators: Vec<(String, ElementIndex)>,
    ) -> Result<Self, GroupError> {
        for &(_, g) in &generators {
            if g >= self.order {
                return Err(GroupError::ElementOutOfRange(g, self.order));
            }
        }
        self.generators = generators;
        Ok(self)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: ElementIndex) -> ElementIndex {
        self.inv[a] as usize
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    pub fn generators(&self) -> &[(String, ElementIndex)] {
        &self.generators
    }

    pub fn generator(&self, label: &str) -> Option<ElementIndex> {
        self.generators
            .iter()
            .find(|(l, _)| l == label)
            .map(|&(_, g)| g)
    }

    /// `x^{-1} g x`.
    pub fn conjugate(&self, g: ElementIndex, x: ElementIndex) -> ElementIndex {
        self.mul(self.mul(self.inv(x), g), x)
    }

    /// `g^k` for any signed exponent.
    pub fn pow(&self, g: ElementIndex, k: i64) -> ElementIndex {
        let base = if k < 0 { self.inv(g) } else { g };
        let mut e = k.unsigned_abs();
        let mut acc = 0;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Shortest word in the labelled generators reaching each element, found by
    /// breadth-first search in generator order (inverses after each generator).
    /// Elements unreachable from the labels fall back to `#index`.
    pub fn element_words(&self) -> Vec<String> {
        let n = self.order;
        let mut words: Vec<Option<String>> = vec![None; n];
        words[0] = Some("1".to_string());
        let mut moves: Vec<(String, ElementIndex)> = Vec::new();
        for (label, g) in &self.generators {
            moves.push((label.clone(), *g));
            if self.inv(*g) != *g {
                moves.push((format!("{label}^-1"), self.inv(*g)));
            }
        }
        let mut queue = VecDeque::from([0usize]);
        let mut letters: Vec<Vec<usize>> = vec![Vec::new(); n];
        while let Some(a) = queue.pop_front() {
            for (m, (_, g)) in moves.iter().enumerate() {
                let b = self.mul(a, *g);
                if words[b].is_none() {
                    let mut path = letters[a].clone();
                    path.push(m);
                    words[b] = Some(render_word(&path, &moves));
                    letters[b] = path;
                    queue.push_back(b);
                }
            }
        }
        words
            .into_iter()
            .enumerate()
            .map(|(i, w)| w.unwrap_or_else(|| format!("#{i}")))
            .collect()
    }

    /// Relabel elements by a permutation `perm` (old index to new index) that
    /// fixes 0. Used to check label-independence of derived quantities.
    pub fn relabel(&self, perm: &[ElementIndex]) -> Result<GroupTable, GroupError> {
        let n = self.order;
        if perm.len() != n || perm[0] != 0 {
            return Err(GroupError::IdentityNotAtZero(0));
        }
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[perm[a] * n + perm[b]] = perm[self.mul(a, b)] as u32;
            }
        }
        let gens = self
            .generators
            .iter()
            .map(|(l, g)| (l.clone(), perm[*g]))
            .collect();
        GroupTable::from_table(self.name.clone(), n, mul, gens)
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            name: self.name.clone(),
            order: self.order,
            mul: self.mul.clone(),
            generators: self
                .generators
                .iter()
                .map(|(l, g)| (l.clone(), *g))
                .collect(),
        }
    }

    pub fn from_json(json: &GroupJson) -> Result<Self, GroupError> {
        GroupTable::from_table(
            json.name.clone(),
            json.order,
            json.mul.clone(),
            json.generators
                .iter()
                .map(|(l, g)| (l.clone(), *g))
                .collect(),
        )
    }
}

fn render_word(path: &[usize], moves: &[(String, ElementIndex)]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < path.len() {
        let m = path[i];
        let mut run = 1;
        while i + run < path.len() && path[i + run] == m {
            run += 1;
        }
        let label = &moves[m].0;
        if run == 1 {
            out.push_str(label);
        } else if let Some(base) = label.strip_suffix("^-1") {
            out.push_str(&format!("{base}^-{run}"));
        } else {
            out.push_str(&format!("{label}^{run}"));
        }
        i += run;
    }
    out
}

fn check_latin(order: usize, mul: &[u32]) -> Result<(), GroupError> {
    let mut seen = vec![0usize; order];
    let mut stamp = 0usize;
    for r in 0..order {
        stamp += 1;
        for c in 0..order {
            let e = mul[r * order + c] as usize;
            if seen[e] == stamp {
                return Err(GroupError::NotLatin(r));
            }
            seen[e] = stamp;
        }
    }
    for c in 0..order {
        stamp += 1;
        for r in 0..order {
            let e = mul[r * order + c] as usize;
            if seen[e] == stamp {
                return Err(GroupError::NotLatin(c));
            }
            seen[e] = stamp;
        }
    }
    Ok(())
}

/// JSON table format: `{name, order, mul (row-major), generators: {label: index}}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupJson {
    pub name: String,
    pub order: usize,
    pub mul: Vec<u32>,
    pub generators: BTreeMap<String, ElementIndex>,
}
