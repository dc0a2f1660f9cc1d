//! HLT coset enumeration over the trivial subgroup, with a lookahead pass and
//! compaction when the table fills up.

use super::{Presentation, PresentationError};
use crate::group::GroupTable;

pub const DEFAULT_MAX_COSETS: usize = 100_000;

const UNDEF: u32 = u32::MAX;

/// Enumerate the cosets of the trivial subgroup and return the regular
/// representation as a multiplication table. Generator labels map to the
/// elements they act as.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> Result<GroupTable, PresentationError> {
    let table = enumerate(p, max_cosets)?;
    let group = table.to_group(p)?;
    let images: Vec<usize> = (0..p.generators().len())
        .map(|g| group.generators()[g].1)
        .collect();
    for (i, r) in p.relators().iter().enumerate() {
        if r.evaluate(&group, &images) != 0 {
            return Err(PresentationError::RelatorCheckFailed(i));
        }
    }
    Ok(group)
}

/// Number of cosets of the trivial subgroup (the group order), without
/// building the multiplication table.
pub fn todd_coxeter_with_order(p: &Presentation, max_cosets: usize) -> Result<usize, PresentationError> {
    Ok(enumerate(p, max_cosets)?.rows)
}

/// A complete, compacted coset table.
struct CosetTable {
    cols: usize,
    rows: usize,
    entries: Vec<u32>,
}

impl CosetTable {
    /// Renumber cosets in breadth-first order from coset 0 and derive the
    /// multiplication table: element `b` is the word labelling the BFS path to
    /// coset `b`, and `a·b` follows that path from coset `a`.
    fn to_group(&self, p: &Presentation) -> Result<GroupTable, PresentationError> {
        let n = self.rows;
        let cols = self.cols;
        let mut pos = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut via: Vec<(usize, usize)> = Vec::with_capacity(n);
        pos[0] = 0;
        order.push(0usize);
        via.push((0, 0));
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            for col in 0..cols {
                let d = self.entries[c * cols + col] as usize;
                if pos[d] == usize::MAX {
                    pos[d] = order.len();
                    order.push(d);
                    via.push((i, col));
                }
            }
            i += 1;
        }
        debug_assert_eq!(order.len(), n);
        let mut act = vec![0usize; n * cols];
        for (new, &old) in order.iter().enumerate() {
            for col in 0..cols {
                act[new * cols + col] = pos[self.entries[old * cols + col] as usize];
            }
        }
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            mul[a * n] = a as u32;
            for b in 1..n {
                let (parent, col) = via[b];
                let left = mul[a * n + parent] as usize;
                mul[a * n + b] = act[left * cols + col] as u32;
            }
        }
        let gens = p
            .generators()
            .iter()
            .enumerate()
            .map(|(g, name)| (name.clone(), act[2 * g]))
            .collect();
        let name = p.to_string();
        GroupTable::from_table(name, n, mul, gens)
            .map_err(|_| PresentationError::RelatorCheckFailed(usize::MAX))
    }
}

fn enumerate(p: &Presentation, max_cosets: usize) -> Result<CosetTable, PresentationError> {
    if p.is_free() {
        return Err(PresentationError::FreeGroup);
    }
    let mut e = Enumerator::new(p, max_cosets.max(1));
    if e.cols == 0 {
        return Ok(CosetTable {
            cols: 0,
            rows: 1,
            entries: Vec::new(),
        });
    }
    let mut a = 0usize;
    loop {
        while a < e.defined() && !e.alive(a) {
            a += 1;
        }
        if a >= e.defined() {
            break;
        }
        match e.process(a) {
            Ok(()) => a += 1,
            Err(Full) => {
                let before = e.defined();
                e.lookahead();
                let map = e.compact();
                if e.defined() >= before {
                    return Err(PresentationError::CosetLimit(max_cosets));
                }
                // resume at the first surviving coset at or after `a`
                a = (a..map.len())
                    .find(|&c| map[c] != UNDEF)
                    .map_or(e.defined(), |c| map[c] as usize);
            }
        }
    }
    e.compact();
    Ok(CosetTable {
        cols: e.cols,
        rows: e.defined(),
        entries: e.table,
    })
}

struct Full;

struct Enumerator {
    cols: usize,
    max: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    relators: Vec<Vec<usize>>,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(p: &Presentation, max: usize) -> Self {
        let cols = 2 * p.generators().len();
        let relators = p
            .relators()
            .iter()
            .map(|w| {
                w.letters()
                    .iter()
                    .map(|l| 2 * l.generator + l.inverse as usize)
                    .collect()
            })
            .collect();
        Enumerator {
            cols,
            max,
            table: vec![UNDEF; cols],
            parent: vec![0],
            relators,
            queue: Vec::new(),
        }
    }

    fn defined(&self) -> usize {
        self.parent.len()
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    #[inline]
    fn get(&self, c: usize, col: usize) -> u32 {
        self.table[c * self.cols + col]
    }

    #[inline]
    fn set(&mut self, c: usize, col: usize, v: u32) {
        self.table[c * self.cols + col] = v;
    }

    fn define(&mut self, c: usize, col: usize) -> Result<(), Full> {
        if self.defined() >= self.max {
            return Err(Full);
        }
        let new = self.defined();
        self.parent.push(new as u32);
        self.table.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.set(c, col, new as u32);
        self.set(new, col ^ 1, c as u32);
        Ok(())
    }

    /// Scan every relator at `a`, then fill the remaining holes in its row.
    fn process(&mut self, a: usize) -> Result<(), Full> {
        for r in 0..self.relators.len() {
            if !self.alive(a) {
                return Ok(());
            }
            self.scan(a, r, true)?;
        }
        for col in 0..self.cols {
            if !self.alive(a) {
                return Ok(());
            }
            if self.get(a, col) == UNDEF {
                self.define(a, col)?;
            }
        }
        Ok(())
    }

    /// Scan relator `r` at coset `alpha`, defining cosets when `fill` is set.
    /// Without `fill` only deductions and coincidences are recorded.
    fn scan(&mut self, alpha: usize, r: usize, fill: bool) -> Result<(), Full> {
        let len = self.relators[r].len();
        let mut f = alpha;
        let mut b = alpha;
        let mut i = 0isize;
        let mut j = len as isize - 1;
        loop {
            while i <= j {
                let next = self.get(f, self.relators[r][i as usize]);
                if next == UNDEF {
                    break;
                }
                f = next as usize;
                i += 1;
            }
            if i > j {
                if f != alpha {
                    self.coincidence(f, alpha);
                }
                return Ok(());
            }
            while j >= i {
                let next = self.get(b, self.relators[r][j as usize] ^ 1);
                if next == UNDEF {
                    break;
                }
                b = next as usize;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let col = self.relators[r][i as usize];
                self.set(f, col, b as u32);
                self.set(b, col ^ 1, f as u32);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, self.relators[r][i as usize])?;
        }
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut cur = c;
        while self.parent[cur] as usize != root {
            let next = self.parent[cur] as usize;
            self.parent[cur] = root as u32;
            cur = next;
        }
        root
    }

    fn merge(&mut self, k: usize, l: usize) {
        let (a, b) = (self.rep(k), self.rep(l));
        if a != b {
            let (keep, kill) = if a < b { (a, b) } else { (b, a) };
            self.parent[kill] = keep as u32;
            self.queue.push(kill as u32);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i] as usize;
            i += 1;
            for col in 0..self.cols {
                let d = self.get(dead, col);
                if d == UNDEF {
                    continue;
                }
                let d = d as usize;
                self.set(d, col ^ 1, UNDEF);
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, col);
                let nu_xi = self.get(nu, col ^ 1);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x as usize);
                } else if nu_xi != UNDEF {
                    self.merge(mu, nu_xi as usize);
                } else {
                    self.set(mu, col, nu as u32);
                    self.set(nu, col ^ 1, mu as u32);
                }
            }
        }
        self.queue.clear();
    }

    fn lookahead(&mut self) {
        let mut c = 0;
        while c < self.defined() {
            for r in 0..self.relators.len() {
                if !self.alive(c) {
                    break;
                }
                let _ = self.scan(c, r, false);
            }
            c += 1;
        }
    }

    /// Drop dead cosets, keeping the relative order of the live ones.
    /// Returns the old-to-new map (`UNDEF` for dead cosets).
    fn compact(&mut self) -> Vec<u32> {
        let n = self.defined();
        let mut map = vec![UNDEF; n];
        let mut next = 0u32;
        for (c, slot) in map.iter_mut().enumerate() {
            if self.parent[c] as usize == c {
                *slot = next;
                next += 1;
            }
        }
        let live = next as usize;
        let mut table = Vec::with_capacity(live * self.cols);
        for c in 0..n {
            if map[c] == UNDEF {
                continue;
            }
            for col in 0..self.cols {
                let v = self.get(c, col);
                table.push(if v == UNDEF { UNDEF } else { map[v as usize] });
            }
        }
        self.table = table;
        self.parent = (0..live as u32).collect();
        map
    }
}
