//! Isomorphism testing by invariant fingerprint, then a backtracking search
//! for images of a small generating set.

use super::{ElementIndex, GroupError, GroupTable};

pub const DEFAULT_ISOMORPHISM_BOUND: usize = 256;

/// Isomorphism invariants compared before any search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: usize,
    pub order_spectrum: Vec<usize>,
    pub center_size: usize,
    pub class_sizes: Vec<usize>,
    pub derived_size: usize,
    /// Order spectrum of the abelianization, which determines it up to isomorphism.
    pub abelianization: Vec<usize>,
}

pub fn fingerprint(g: &GroupTable) -> Fingerprint {
    let mut class_sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
    class_sizes.sort_unstable();
    let derived = g.derived_subgroup();
    let abelianization = g
        .quotient_group(&derived)
        .expect("derived subgroup is normal")
        .order_spectrum();
    Fingerprint {
        order: g.order(),
        order_spectrum: g.order_spectrum(),
        center_size: g.center().len(),
        class_sizes,
        derived_size: derived.len(),
        abelianization,
    }
}

pub fn isomorphic(g: &GroupTable, h: &GroupTable) -> Result<bool, GroupError> {
    isomorphic_bounded(g, h, DEFAULT_ISOMORPHISM_BOUND)
}

pub fn isomorphic_bounded(g: &GroupTable, h: &GroupTable, bound: usize) -> Result<bool, GroupError> {
    for order in [g.order(), h.order()] {
        if order > bound {
            return Err(GroupError::BoundExceeded { order, bound });
        }
    }
    if g.order() != h.order() {
        return Ok(false);
    }
    if fingerprint(g) != fingerprint(h) {
        return Ok(false);
    }
    Ok(find_isomorphism(g, h).is_some())
}

/// An explicit isomorphism `g → h` as an image table, if one exists.
pub fn find_isomorphism(g: &GroupTable, h: &GroupTable) -> Option<Vec<ElementIndex>> {
    if g.order() != h.order() {
        return None;
    }
    let gens = small_generating_set(g);
    let g_orders: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    let h_orders: Vec<usize> = (0..h.order()).map(|x| h.element_order(x)).collect();
    let candidates: Vec<Vec<ElementIndex>> = gens
        .iter()
        .map(|&x| (0..h.order()).filter(|&y| h_orders[y] == g_orders[x]).collect())
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search(g, h, &gens, &candidates, &mut images)
}

fn search(
    g: &GroupTable,
    h: &GroupTable,
    gens: &[ElementIndex],
    candidates: &[Vec<ElementIndex>],
    images: &mut Vec<ElementIndex>,
) -> Option<Vec<ElementIndex>> {
    let depth = images.len();
    if depth == gens.len() {
        let map = extend(g, h, gens, images)?;
        return (map.len() == g.order() && map.iter().all(|&m| m != usize::MAX)).then_some(map);
    }
    for &y in &candidates[depth] {
        images.push(y);
        // Prune when the partial assignment is already inconsistent on the
        // subgroup generated so far.
        if extend(g, h, &gens[..=depth], images).is_some() {
            if let Some(found) = search(g, h, gens, candidates, images) {
                return Some(found);
            }
        }
        images.pop();
    }
    None
}

/// Extend `gens[i] ↦ images[i]` along right multiplication. Returns the partial
/// map (unassigned entries `usize::MAX`) when it is a consistent injection.
fn extend(
    g: &GroupTable,
    h: &GroupTable,
    gens: &[ElementIndex],
    images: &[ElementIndex],
) -> Option<Vec<ElementIndex>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let a = queue[i];
        i += 1;
        for (&x, &y) in gens.iter().zip(images) {
            let b = g.mul(a, x);
            let target = h.mul(map[a], y);
            if map[b] == usize::MAX {
                if used[target] {
                    return None;
                }
                map[b] = target;
                used[target] = true;
                queue.push(b);
            } else if map[b] != target {
                return None;
            }
        }
    }
    Some(map)
}

/// Greedy generating set: repeatedly add an element of largest order outside
/// the current subgroup.
pub fn small_generating_set(g: &GroupTable) -> Vec<ElementIndex> {
    let n = g.order();
    let orders: Vec<usize> = (0..n).map(|x| g.element_order(x)).collect();
    let mut by_order: Vec<ElementIndex> = (1..n).collect();
    by_order.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
    let mut gens = Vec::new();
    let mut sub = g.trivial_subgroup();
    while sub.len() < n {
        let next = *by_order.iter().find(|&&x| !sub.contains(x)).unwrap();
        gens.push(next);
        sub = g.subgroup_generated(&gens).unwrap();
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_copy_is_isomorphic() {
        let g = GroupTable::symmetric(4);
        let n = g.order();
        // reverse all non-identity labels
        let perm: Vec<usize> = (0..n).map(|i| if i == 0 { 0 } else { n - i }).collect();
        let h = g.relabel(&perm).unwrap();
        let map = find_isomorphism(&g, &h).unwrap();
        for a in 0..n {
            for b in 0..n {
                assert_eq!(map[g.mul(a, b)], h.mul(map[a], map[b]));
            }
        }
        assert!(isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn distinguishes_small_groups() {
        let c4 = GroupTable::cyclic(4).unwrap();
        let c2 = GroupTable::cyclic(2).unwrap();
        let v4 = GroupTable::direct_product(&c2, &c2);
        assert!(!isomorphic(&c4, &v4).unwrap());
        let q8 = GroupTable::quaternion();
        let d8 = GroupTable::dihedral(4).unwrap();
        assert_eq!(d8.order_spectrum(), vec![1, 2, 2, 2, 2, 2, 4, 4]);
        assert!(!isomorphic(&q8, &d8).unwrap());
        assert!(!isomorphic(&GroupTable::symmetric(4), &GroupTable::sl23_matrices()).unwrap());
    }

    #[test]
    fn coprime_product_is_cyclic() {
        let c2 = GroupTable::cyclic(2).unwrap();
        let c3 = GroupTable::cyclic(3).unwrap();
        assert!(isomorphic(&GroupTable::direct_product(&c2, &c3), &GroupTable::cyclic(6).unwrap()).unwrap());
    }

    #[test]
    fn same_fingerprint_different_groups() {
        // C4 x C4 and C4 ⋊ C4 share order 16 but differ in center size.
        let c4 = GroupTable::cyclic(4).unwrap();
        let abelian = GroupTable::direct_product(&c4, &c4);
        let inv: Vec<usize> = (0..4).map(|x| c4.inv(x)).collect();
        let act = crate::group::ActionTable::cyclic(&c4, &c4, 1, inv).unwrap();
        let semi = GroupTable::semidirect_product(&c4, &c4, &act).unwrap();
        assert!(!isomorphic(&abelian, &semi).unwrap());
    }

    #[test]
    fn order_bound() {
        let g = GroupTable::cyclic(300).unwrap();
        assert!(matches!(
            isomorphic(&g, &g),
            Err(GroupError::BoundExceeded { .. })
        ));
    }
}
