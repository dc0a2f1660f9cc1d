use crate::group::{ElementIndex, GroupTable};
use crate::spectral::ConnectionSet;

/// Inverse-closed subsets of `G \ {1}` as bit masks: one bit per involution
/// (low bits), then one bit per pair `{g, g^-1}` (high bits), each list in
/// increasing element order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSpace {
    involutions: Vec<ElementIndex>,
    pairs: Vec<(ElementIndex, ElementIndex)>,
}

/// Partition of the non-identity elements into involutions and inverse pairs.
pub fn subset_space(g: &GroupTable) -> SubsetSpace {
    let mut involutions = Vec::new();
    let mut pairs = Vec::new();
    for x in 1..g.order() {
        let y = g.inv(x);
        if y == x {
            involutions.push(x);
        } else if x < y {
            pairs.push((x, y));
        }
    }
    SubsetSpace { involutions, pairs }
}

impl SubsetSpace {
    pub fn involutions(&self) -> &[ElementIndex] {
        &self.involutions
    }

    pub fn pairs(&self) -> &[(ElementIndex, ElementIndex)] {
        &self.pairs
    }

    pub fn bits(&self) -> u32 {
        (self.involutions.len() + self.pairs.len()) as u32
    }

    /// `2^bits`, saturating at `u64::MAX`.
    pub fn total_count(&self) -> u64 {
        1u64.checked_shl(self.bits()).filter(|_| self.bits() < 64).unwrap_or(u64::MAX)
    }

    /// Members of the set encoded by `mask`, sorted.
    pub fn members(&self, mask: u64) -> Vec<ElementIndex> {
        let mut out = Vec::with_capacity(mask.count_ones() as usize * 2);
        self.members_into(mask, &mut out);
        out
    }

    pub(crate) fn members_into(&self, mask: u64, out: &mut Vec<ElementIndex>) {
        out.clear();
        let k = self.involutions.len();
        for (i, &x) in self.involutions.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out.push(x);
            }
        }
        for (i, &(x, y)) in self.pairs.iter().enumerate() {
            if mask >> (k + i) & 1 == 1 {
                out.push(x);
                out.push(y);
            }
        }
        out.sort_unstable();
    }

    pub fn connection_set(&self, g: &GroupTable, mask: u64) -> ConnectionSet {
        ConnectionSet::new(g, self.members(mask)).expect("masks encode inverse-closed sets")
    }

    /// Inverse of [`members`](Self::members); `None` if `set` is not from this space.
    pub fn mask_of(&self, set: &ConnectionSet) -> Option<u64> {
        let mut mask = 0u64;
        let k = self.involutions.len();
        for &s in set.members() {
            if let Ok(i) = self.involutions.binary_search(&s) {
                mask |= 1 << i;
            } else if let Some(i) = self.pairs.iter().position(|&(x, _)| x == s) {
                mask |= 1 << (k + i);
            } else if !self.pairs.iter().any(|&(_, y)| y == s) {
                return None;
            }
        }
        Some(mask)
    }
}
