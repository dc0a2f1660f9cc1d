use std::collections::{BTreeSet, HashSet};

use super::{ElementIndex, GroupError, GroupTable};

/// Default largest order accepted by [`GroupTable::normal_subgroups`].
pub const DEFAULT_NORMAL_SUBGROUP_BOUND: usize = 1024;

/// A subgroup, as the sorted list of its members.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupDescriptor {
    members: Vec<ElementIndex>,
    parent_order: usize,
}

impl SubgroupDescriptor {
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

    pub fn index(&self) -> usize {
        self.parent_order / self.members.len()
    }

    pub fn contains(&self, g: ElementIndex) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.parent_order];
        for &g in &self.members {
            m[g] = true;
        }
        m
    }
}

impl GroupTable {
    pub fn element_order(&self, g: ElementIndex) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders.
    pub fn order_spectrum(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order()).map(|g| self.element_order(g)).collect();
        v.sort_unstable();
        v
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, g| num_integer::lcm(acc, self.element_order(g)))
    }

    /// Conjugacy classes, each sorted, listed by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<ElementIndex>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let mut class: BTreeSet<ElementIndex> = BTreeSet::new();
            for x in 0..n {
                class.insert(self.conjugate(g, x));
            }
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Class index of every element, parallel to [`GroupTable::conjugacy_classes`].
    pub fn class_map(&self, classes: &[Vec<ElementIndex>]) -> Vec<usize> {
        let mut map = vec![0; self.order()];
        for (i, c) in classes.iter().enumerate() {
            for &g in c {
                map[g] = i;
            }
        }
        map
    }

    pub fn center(&self) -> SubgroupDescriptor {
        let n = self.order();
        let members = (0..n)
            .filter(|&g| (0..n).all(|x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        SubgroupDescriptor {
            members,
            parent_order: n,
        }
    }

    /// Closure of `gens ∪ {1}` under multiplication (breadth-first).
    pub fn subgroup_generated(
        &self,
        gens: &[ElementIndex],
    ) -> Result<SubgroupDescriptor, GroupError> {
        let n = self.order();
        if let Some(&g) = gens.iter().find(|&&g| g >= n) {
            return Err(GroupError::ElementOutOfRange(g, n));
        }
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut members = vec![0];
        let mut gens: Vec<ElementIndex> = gens.iter().copied().filter(|&g| g != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for &g in &gens {
                let b = self.mul(a, g);
                if !inside[b] {
                    inside[b] = true;
                    members.push(b);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        Ok(SubgroupDescriptor {
            members,
            parent_order: n,
        })
    }

    /// Wrap a member list as a subgroup after checking the subgroup axioms and
    /// Lagrange's theorem.
    pub fn subgroup_from_members(
        &self,
        mut members: Vec<ElementIndex>,
    ) -> Result<SubgroupDescriptor, GroupError> {
        let n = self.order();
        members.sort_unstable();
        members.dedup();
        if let Some(&g) = members.iter().find(|&&g| g >= n) {
            return Err(GroupError::ElementOutOfRange(g, n));
        }
        if members.first() != Some(&0) {
            return Err(GroupError::NotSubgroup("missing identity".into()));
        }
        if !n.is_multiple_of(members.len()) {
            return Err(GroupError::NotSubgroup("size does not divide group order".into()));
        }
        let mut inside = vec![false; n];
        for &g in &members {
            inside[g] = true;
        }
        for &a in &members {
            if !inside[self.inv(a)] {
                return Err(GroupError::NotSubgroup("not closed under inverses".into()));
            }
            for &b in &members {
                if !inside[self.mul(a, b)] {
                    return Err(GroupError::NotSubgroup("not closed under products".into()));
                }
            }
        }
        Ok(SubgroupDescriptor {
            members,
            parent_order: n,
        })
    }

    pub fn trivial_subgroup(&self) -> SubgroupDescriptor {
        SubgroupDescriptor {
            members: vec![0],
            parent_order: self.order(),
        }
    }

    pub fn whole_group(&self) -> SubgroupDescriptor {
        SubgroupDescriptor {
            members: (0..self.order()).collect(),
            parent_order: self.order(),
        }
    }

    pub fn is_normal(&self, h: &SubgroupDescriptor) -> bool {
        let mask = h.mask();
        h.members()
            .iter()
            .all(|&m| (0..self.order()).all(|x| mask[self.conjugate(m, x)]))
    }

    pub fn derived_subgroup(&self) -> SubgroupDescriptor {
        let n = self.order();
        let mut comms: Vec<ElementIndex> = Vec::new();
        let mut seen = vec![false; n];
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        self.subgroup_generated(&comms).expect("valid elements")
    }

    /// All normal subgroups, sorted by size then members.
    ///
    /// Every normal subgroup is the join of the normal closures of the classes
    /// it contains, so the lattice is grown from the trivial subgroup by joining
    /// one class closure at a time.
    pub fn normal_subgroups(&self) -> Result<Vec<SubgroupDescriptor>, GroupError> {
        self.normal_subgroups_bounded(DEFAULT_NORMAL_SUBGROUP_BOUND)
    }

    pub fn normal_subgroups_bounded(
        &self,
        bound: usize,
    ) -> Result<Vec<SubgroupDescriptor>, GroupError> {
        let n = self.order();
        if n > bound {
            return Err(GroupError::BoundExceeded { order: n, bound });
        }
        let classes = self.conjugacy_classes();
        let closures: Vec<SubgroupDescriptor> = classes
            .iter()
            .map(|c| self.subgroup_generated(c).expect("valid elements"))
            .collect();
        let mut found: HashSet<Vec<ElementIndex>> = HashSet::new();
        let trivial = self.trivial_subgroup();
        found.insert(trivial.members.clone());
        let mut queue = vec![trivial];
        let mut out = Vec::new();
        while let Some(sub) = queue.pop() {
            for (class, closure) in classes.iter().zip(&closures) {
                if sub.contains(class[0]) {
                    continue;
                }
                let mut gens = sub.members.clone();
                gens.extend_from_slice(&closure.members);
                let joined = self.subgroup_generated(&gens).expect("valid elements");
                if found.insert(joined.members.clone()) {
                    queue.push(joined);
                }
            }
            out.push(sub);
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.cmp(&b.members)));
        Ok(out)
    }

    /// Quotient by a normal subgroup. Cosets are numbered by their smallest
    /// member, so the identity coset is 0; generator labels map to their images.
    pub fn quotient_group(&self, normal: &SubgroupDescriptor) -> Result<GroupTable, GroupError> {
        if normal.parent_order() != self.order() || !self.is_normal(normal) {
            return Err(GroupError::NotNormal);
        }
        let (coset_of, reps) = self.coset_labels(normal);
        let m = reps.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                mul.push(coset_of[self.mul(a, b)] as u32);
            }
        }
        let gens = self
            .generators()
            .iter()
            .map(|(l, g)| (l.clone(), coset_of[*g]))
            .collect();
        let q = GroupTable::from_table(format!("{}/N{}", self.name(), normal.len()), m, mul, gens)?;
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                if coset_of[self.mul(a, b)] != q.mul(coset_of[a], coset_of[b]) {
                    return Err(GroupError::NotNormal);
                }
            }
        }
        Ok(q)
    }

    /// Left-coset labelling `g ↦ coset index` and one representative per coset.
    pub fn coset_labels(&self, sub: &SubgroupDescriptor) -> (Vec<usize>, Vec<ElementIndex>) {
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &h in sub.members() {
                coset_of[self.mul(g, h)] = id;
            }
        }
        (coset_of, reps)
    }

    /// Restrict to a subgroup, relabelling members `0..|H|` in sorted order.
    pub fn subgroup_table(&self, sub: &SubgroupDescriptor) -> GroupTable {
        let members = sub.members();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &g) in members.iter().enumerate() {
            pos[g] = i;
        }
        let m = members.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in members {
            for &b in members {
                mul.push(pos[self.mul(a, b)] as u32);
            }
        }
        let gens = self
            .generators()
            .iter()
            .filter(|(_, g)| pos[*g] != usize::MAX)
            .map(|(l, g)| (l.clone(), pos[*g]))
            .collect();
        GroupTable::from_table(format!("{}<{m}>", self.name()), m, mul, gens)
            .expect("subgroup of a group")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::isomorphic;

    fn s3() -> GroupTable {
        GroupTable::symmetric(3)
    }

    /// Brute-force oracle: unions of classes containing the identity whose size
    /// divides the order, kept when closed under products.
    fn normal_by_class_unions(g: &GroupTable) -> Vec<Vec<usize>> {
        let classes = g.conjugacy_classes();
        let rest = &classes[1..];
        let mut out = Vec::new();
        for mask in 0u64..(1 << rest.len()) {
            let mut members = vec![0usize];
            for (i, c) in rest.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    members.extend_from_slice(c);
                }
            }
            if !g.order().is_multiple_of(members.len()) {
                continue;
            }
            members.sort_unstable();
            if g.subgroup_from_members(members.clone()).is_ok() {
                out.push(members);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn element_orders() {
        let c6 = GroupTable::cyclic(6).unwrap();
        assert_eq!(c6.element_order(0), 1);
        assert_eq!(c6.element_order(1), 6);
        assert_eq!(c6.order_spectrum(), vec![1, 2, 3, 3, 6, 6]);
        assert_eq!(s3().order_spectrum(), vec![1, 2, 2, 2, 3, 3]);
        let q8 = GroupTable::quaternion();
        let center = q8.center();
        for g in 0..8 {
            if !center.contains(g) {
                assert_eq!(q8.element_order(g), 4);
            }
        }
    }

    #[test]
    fn classes_and_center() {
        let c5 = GroupTable::cyclic(5).unwrap();
        assert_eq!(c5.conjugacy_classes().len(), 5);
        let mut sizes: Vec<usize> = s3().conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        let mut sizes: Vec<usize> = GroupTable::quaternion()
            .conjugacy_classes()
            .iter()
            .map(Vec::len)
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        assert_eq!(s3().center().members(), &[0]);
        assert_eq!(GroupTable::quaternion().center().len(), 2);
        assert_eq!(c5.center().len(), 5);
    }

    #[test]
    fn generated_subgroups() {
        let q8 = GroupTable::quaternion();
        assert_eq!(q8.subgroup_generated(&[]).unwrap().members(), &[0]);
        assert_eq!(q8.subgroup_generated(&[q8.generator("i").unwrap()]).unwrap().len(), 4);
        let g = s3();
        let inv = (0..6).find(|&e| g.element_order(e) == 2).unwrap();
        let three = (0..6).find(|&e| g.element_order(e) == 3).unwrap();
        assert_eq!(g.subgroup_generated(&[inv, three]).unwrap().len(), 6);
        assert!(g.subgroup_generated(&[7]).is_err());
    }

    #[test]
    fn normal_subgroup_counts() {
        let c2 = GroupTable::cyclic(2).unwrap();
        assert_eq!(c2.normal_subgroups().unwrap().len(), 2);
        let sizes: Vec<usize> = s3().normal_subgroups().unwrap().iter().map(|s| s.len()).collect();
        assert_eq!(sizes, vec![1, 3, 6]);
        assert_eq!(GroupTable::quaternion().normal_subgroups().unwrap().len(), 6);
    }

    #[test]
    fn join_closure_matches_class_union_oracle() {
        let groups = [
            s3(),
            GroupTable::quaternion(),
            GroupTable::dihedral(4).unwrap(),
            GroupTable::dihedral(6).unwrap(),
            GroupTable::symmetric(4),
            GroupTable::sl23_matrices(),
            GroupTable::direct_product(&GroupTable::quaternion(), &GroupTable::cyclic(2).unwrap()),
        ];
        for g in &groups {
            let fast: Vec<Vec<usize>> = g
                .normal_subgroups()
                .unwrap()
                .into_iter()
                .map(|s| s.members().to_vec())
                .collect();
            assert_eq!(fast, normal_by_class_unions(g), "{}", g.name());
        }
    }

    #[test]
    fn normal_subgroup_bound() {
        let g = GroupTable::cyclic(10).unwrap();
        assert!(matches!(
            g.normal_subgroups_bounded(8),
            Err(GroupError::BoundExceeded { order: 10, bound: 8 })
        ));
    }

    #[test]
    fn quotients() {
        let q8 = GroupTable::quaternion();
        let q = q8.quotient_group(&q8.center()).unwrap();
        let c2 = GroupTable::cyclic(2).unwrap();
        assert!(isomorphic(&q, &GroupTable::direct_product(&c2, &c2)).unwrap());

        let c6 = GroupTable::cyclic(6).unwrap();
        let two = c6.subgroup_generated(&[3]).unwrap();
        let q = c6.quotient_group(&two).unwrap();
        assert!(isomorphic(&q, &GroupTable::cyclic(3).unwrap()).unwrap());

        let g = s3();
        assert!(isomorphic(&g.quotient_group(&g.trivial_subgroup()).unwrap(), &g).unwrap());
        assert_eq!(g.quotient_group(&g.whole_group()).unwrap().order(), 1);

        let inv = (0..6).find(|&e| g.element_order(e) == 2).unwrap();
        let h = g.subgroup_generated(&[inv]).unwrap();
        assert!(matches!(g.quotient_group(&h), Err(GroupError::NotNormal)));
    }

    #[test]
    fn subgroup_checks() {
        let g = s3();
        assert!(g.subgroup_from_members(vec![0, 1, 2, 3]).is_err());
        assert!(g.subgroup_from_members(vec![1]).is_err());
        assert_eq!(g.derived_subgroup().len(), 3);
        assert_eq!(GroupTable::quaternion().exponent(), 4);
    }
}
