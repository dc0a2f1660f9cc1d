use std::collections::HashMap;

use super::{ElementIndex, GroupError, GroupTable};

/// Action of a group `K` on a group `N` by automorphisms, as explicit
/// permutation tables: `map[k][n]` is the image of `n` under `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionTable {
    domain_order: usize,
    actor_order: usize,
    map: Vec<Vec<ElementIndex>>,
}

impl ActionTable {
    /// Validate that every row is an automorphism of `domain` and that the rows
    /// compose like `actor` acting on the left (`act[k1 k2] = act[k1] ∘ act[k2]`).
    pub fn new(
        domain: &GroupTable,
        actor: &GroupTable,
        map: Vec<Vec<ElementIndex>>,
    ) -> Result<Self, GroupError> {
        let n = domain.order();
        let k = actor.order();
        if map.len() != k {
            return Err(GroupError::BadAction(format!(
                "expected {k} rows, got {}",
                map.len()
            )));
        }
        for (a, row) in map.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::BadAction(format!("row {a} has wrong length")));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || seen[x] {
                    return Err(GroupError::BadAction(format!("row {a} is not a permutation")));
                }
                seen[x] = true;
            }
            for x in 0..n {
                for y in 0..n {
                    if row[domain.mul(x, y)] != domain.mul(row[x], row[y]) {
                        return Err(GroupError::BadAction(format!(
                            "row {a} does not preserve multiplication"
                        )));
                    }
                }
            }
        }
        for a in 0..k {
            for b in 0..k {
                let ab = actor.mul(a, b);
                for x in 0..n {
                    if map[ab][x] != map[a][map[b][x]] {
                        return Err(GroupError::BadAction(format!(
                            "action of {ab} differs from composite of {a} and {b}"
                        )));
                    }
                }
            }
        }
        Ok(ActionTable {
            domain_order: n,
            actor_order: k,
            map,
        })
    }

    /// Trivial action.
    pub fn trivial(domain: &GroupTable, actor: &GroupTable) -> Self {
        ActionTable {
            domain_order: domain.order(),
            actor_order: actor.order(),
            map: vec![(0..domain.order()).collect(); actor.order()],
        }
    }

    /// Action determined by the image of one generator `gen` of a cyclic actor
    /// under a given automorphism `auto` of the domain: `gen^k` acts as `auto^k`.
    pub fn cyclic(
        domain: &GroupTable,
        actor: &GroupTable,
        gen: ElementIndex,
        auto: Vec<ElementIndex>,
    ) -> Result<Self, GroupError> {
        let n = domain.order();
        let k = actor.order();
        let mut map: Vec<Option<Vec<ElementIndex>>> = vec![None; k];
        let mut cur: Vec<ElementIndex> = (0..n).collect();
        let mut g = 0;
        for _ in 0..k {
            if map[g].is_some() {
                break;
            }
            map[g] = Some(cur.clone());
            cur = cur.iter().map(|&x| auto[x]).collect();
            g = actor.mul(g, gen);
        }
        let map = map
            .into_iter()
            .map(|r| r.ok_or_else(|| GroupError::BadAction("actor is not cyclic on gen".into())))
            .collect::<Result<Vec<_>, _>>()?;
        ActionTable::new(domain, actor, map)
    }

    pub fn domain_order(&self) -> usize {
        self.domain_order
    }

    pub fn actor_order(&self) -> usize {
        self.actor_order
    }

    pub fn image(&self, actor: ElementIndex, x: ElementIndex) -> ElementIndex {
        self.map[actor][x]
    }
}

impl GroupTable {
    /// Cyclic group of order `n` with generator label `x` (element 1).
    pub fn cyclic(n: usize) -> Result<GroupTable, GroupError> {
        if n == 0 {
            return Err(GroupError::EmptyGroup);
        }
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push(((a + b) % n) as u32);
            }
        }
        let gens = if n > 1 { vec![("x".to_string(), 1)] } else { vec![] };
        GroupTable::from_table(format!("C{n}"), n, mul, gens)
    }

    /// Direct product with pairing `(g, h) ↦ g·|H| + h`.
    ///
    /// Generator labels of `h` that clash with labels of `g` get the smallest
    /// free numeric suffix (`x`, `x2`, `x3`, ...).
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> GroupTable {
        let (n, m) = (g.order(), h.order());
        let size = n * m;
        let mut mul = Vec::with_capacity(size * size);
        for a in 0..size {
            let (a1, a2) = (a / m, a % m);
            for b in 0..size {
                let (b1, b2) = (b / m, b % m);
                mul.push((g.mul(a1, b1) * m + h.mul(a2, b2)) as u32);
            }
        }
        let mut gens: Vec<(String, ElementIndex)> = g
            .generators()
            .iter()
            .map(|(l, x)| (l.clone(), x * m))
            .collect();
        for (label, y) in h.generators() {
            let label = fresh_label(label, &gens);
            gens.push((label, *y));
        }
        GroupTable::from_table(format!("{}x{}", g.name(), h.name()), size, mul, gens)
            .expect("direct product of groups is a group")
    }

    /// Semidirect product `N ⋊ K` with `(n1,k1)(n2,k2) = (n1·act[k1](n2), k1k2)`
    /// on the pairing `(n, k) ↦ n + k·|N|`.
    pub fn semidirect_product(
        n_group: &GroupTable,
        k_group: &GroupTable,
        act: &ActionTable,
    ) -> Result<GroupTable, GroupError> {
        let (n, k) = (n_group.order(), k_group.order());
        if act.domain_order() != n || act.actor_order() != k {
            return Err(GroupError::BadAction("action dimensions do not match".into()));
        }
        let size = n * k;
        let mut mul = Vec::with_capacity(size * size);
        for a in 0..size {
            let (n1, k1) = (a % n, a / n);
            for b in 0..size {
                let (n2, k2) = (b % n, b / n);
                let nn = n_group.mul(n1, act.image(k1, n2));
                let kk = k_group.mul(k1, k2);
                mul.push((nn + kk * n) as u32);
            }
        }
        let mut gens: Vec<(String, ElementIndex)> = n_group.generators().to_vec();
        for (label, y) in k_group.generators() {
            let label = fresh_label(label, &gens);
            gens.push((label, y * n));
        }
        let g = GroupTable::from_table(
            format!("{}:{}", n_group.name(), k_group.name()),
            size,
            mul,
            gens,
        )?;
        // The copy of N is normal and meets the copy of K trivially.
        let n_copy: Vec<ElementIndex> = (0..n).collect();
        let k_copy: Vec<ElementIndex> = (0..k).map(|y| y * n).collect();
        let nsub = g.subgroup_from_members(n_copy)?;
        if !g.is_normal(&nsub) {
            return Err(GroupError::BadAction("copy of N is not normal".into()));
        }
        g.subgroup_from_members(k_copy)?;
        Ok(g)
    }

    /// Dihedral group of order `2n` (`n ≥ 2`): `a` rotation, `b` reflection.
    pub fn dihedral(n: usize) -> Result<GroupTable, GroupError> {
        if n < 2 {
            return Err(GroupError::EmptyGroup);
        }
        let rot = GroupTable::cyclic(n)?;
        let flip = GroupTable::cyclic(2)?;
        let inversion: Vec<ElementIndex> = (0..n).map(|x| rot.inv(x)).collect();
        let act = ActionTable::cyclic(&rot, &flip, 1, inversion)?;
        let g = GroupTable::semidirect_product(&rot, &flip, &act)?;
        let gens = vec![("a".to_string(), 1), ("b".to_string(), n)];
        g.with_name(format!("D{}", 2 * n)).with_generators(gens)
    }

    /// Full symmetric group on `degree` points, elements as permutations in
    /// lexicographic order (identity first). Product `pq` applies `p` first.
    ///
    /// Labels: `a` the cycle `(0 1 ... d-1)`, `b` the transposition `(0 1)`.
    pub fn symmetric(degree: usize) -> GroupTable {
        let perms = permutations(degree);
        permutation_group(&format!("S{degree}"), &perms, |p| {
            let cycle: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
            let mut swap: Vec<usize> = (0..degree).collect();
            if degree >= 2 {
                swap.swap(0, 1);
            }
            let mut gens = Vec::new();
            if degree >= 2 {
                gens.push(("a".to_string(), p[&cycle]));
                gens.push(("b".to_string(), p[&swap]));
            }
            gens
        })
    }

    /// The quaternion group on `1, -1, i, -i, j, -j, k, -k` (in that index order)
    /// with labels `i`, `j`, `k`.
    pub fn quaternion() -> GroupTable {
        // Unit quaternions as (sign, unit) with unit in {1, i, j, k} = 0..4.
        let decode = |e: usize| -> (i32, usize) { (if e.is_multiple_of(2) { 1 } else { -1 }, e / 2) };
        let encode = |s: i32, u: usize| -> u32 { (u * 2 + if s > 0 { 0 } else { 1 }) as u32 };
        // unit products: table[u][v] = (sign, unit)
        let units: [[(i32, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        let mut mul = Vec::with_capacity(64);
        for a in 0..8 {
            let (sa, ua) = decode(a);
            for b in 0..8 {
                let (sb, ub) = decode(b);
                let (s, u) = units[ua][ub];
                mul.push(encode(sa * sb * s, u));
            }
        }
        let gens = vec![
            ("i".to_string(), 2),
            ("j".to_string(), 4),
            ("k".to_string(), 6),
        ];
        GroupTable::from_table("Q8", 8, mul, gens).expect("quaternion table")
    }

    /// `SL(2,3)` realized by 2×2 matrices over GF(3), identity first.
    pub fn sl23_matrices() -> GroupTable {
        let mut mats: Vec<[u8; 4]> = Vec::new();
        for a in 0..3u8 {
            for b in 0..3u8 {
                for c in 0..3u8 {
                    for d in 0..3u8 {
                        if (a * d + 3 * 3 - (b * c) % 3) % 3 == 1 {
                            mats.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        let id_pos = mats.iter().position(|m| *m == [1, 0, 0, 1]).unwrap();
        mats.swap(0, id_pos);
        let index: HashMap<[u8; 4], usize> = mats.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let n = mats.len();
        let mut mul = Vec::with_capacity(n * n);
        for x in &mats {
            for y in &mats {
                let p = [
                    (x[0] * y[0] + x[1] * y[2]) % 3,
                    (x[0] * y[1] + x[1] * y[3]) % 3,
                    (x[2] * y[0] + x[3] * y[2]) % 3,
                    (x[2] * y[1] + x[3] * y[3]) % 3,
                ];
                mul.push(index[&p] as u32);
            }
        }
        let gens = vec![
            ("s".to_string(), index[&[0, 2, 1, 0]]),
            ("t".to_string(), index[&[1, 1, 0, 1]]),
        ];
        GroupTable::from_table("SL(2,3)", n, mul, gens).expect("SL(2,3) table")
    }
}

fn fresh_label(label: &str, taken: &[(String, ElementIndex)]) -> String {
    if !taken.iter().any(|(l, _)| l == label) {
        return label.to_string();
    }
    (2..)
        .map(|k| format!("{label}{k}"))
        .find(|cand| !taken.iter().any(|(l, _)| l == cand))
        .unwrap()
}

fn permutations(degree: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; degree], &mut out);
    out
}

/// Group table over an explicit, closed list of permutations whose first entry
/// is the identity. `pq` means apply `p`, then `q`.
pub(crate) fn permutation_group(
    name: &str,
    perms: &[Vec<usize>],
    labels: impl FnOnce(&HashMap<Vec<usize>, usize>) -> Vec<(String, ElementIndex)>,
) -> GroupTable {
    let index: HashMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let n = perms.len();
    let mut mul = Vec::with_capacity(n * n);
    for p in perms {
        for q in perms {
            let r: Vec<usize> = p.iter().map(|&i| q[i]).collect();
            mul.push(index[&r] as u32);
        }
    }
    let gens = labels(&index);
    GroupTable::from_table(name, n, mul, gens).expect("closed permutation list")
}
