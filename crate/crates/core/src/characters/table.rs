use std::sync::OnceLock;

use serde::Serialize;

use super::{CharacterError, CyclotomicInt};
use crate::group::{ElementIndex, GroupTable};

/// Which construction produced a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TableKind {
    Abelian,
    /// `Q8 × C2^n`, with `n` recorded.
    QuaternionTimesElementary(u32),
}

/// Irreducible characters, stored per element (constant on classes).
#[derive(Debug, Clone)]
pub struct CharacterTable {
    kind: TableKind,
    group_order: usize,
    exponent: u32,
    degrees: Vec<i64>,
    classes: Vec<Vec<ElementIndex>>,
    /// `values[chi][g]`
    values: Vec<Vec<CyclotomicInt>>,
    /// Same data as integers, when the whole table is rational.
    rational: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterTableJson {
    pub group: String,
    pub kind: TableKind,
    pub exponent: u32,
    pub degrees: Vec<i64>,
    pub class_representatives: Vec<ElementIndex>,
    pub class_sizes: Vec<usize>,
    /// `values[chi][class]`, coordinates over powers of a primitive root.
    pub values: Vec<Vec<Vec<i64>>>,
}

impl CharacterTable {
    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn classes(&self) -> &[Vec<ElementIndex>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn value(&self, chi: usize, g: ElementIndex) -> &CyclotomicInt {
        &self.values[chi][g]
    }

    /// Integer values `[chi][g]` when the table is rational.
    pub fn rational_values(&self) -> Option<&[Vec<i64>]> {
        self.rational.as_deref()
    }

    pub fn to_json(&self, group: &GroupTable) -> CharacterTableJson {
        CharacterTableJson {
            group: group.name().to_string(),
            kind: self.kind,
            exponent: self.exponent,
            degrees: self.degrees.clone(),
            class_representatives: self.classes.iter().map(|c| c[0]).collect(),
            class_sizes: self.classes.iter().map(Vec::len).collect(),
            values: self
                .values
                .iter()
                .map(|row| self.classes.iter().map(|c| row[c[0]].coeffs().to_vec()).collect())
                .collect(),
        }
    }

    /// `Σ χ(1)^2 = |G|` and `Σ_g χ_i(g) conj(χ_j(g)) = |G| δ_ij`.
    pub fn validate(&self) -> Result<(), CharacterError> {
        let n = self.group_order as i64;
        let square_sum: i64 = self.degrees.iter().map(|d| d * d).sum();
        if square_sum != n {
            return Err(CharacterError::InvalidTable(format!("degree squares sum to {square_sum}, not {n}")));
        }
        let e = self.exponent;
        // class sums avoid a factor |class| of work
        let reps: Vec<ElementIndex> = self.classes.iter().map(|c| c[0]).collect();
        let conj: Vec<Vec<CyclotomicInt>> = self
            .values
            .iter()
            .map(|row| reps.iter().map(|&g| row[g].conj()).collect())
            .collect();
        for i in 0..self.len() {
            if self.values[i][0].as_integer() != Some(self.degrees[i]) {
                return Err(CharacterError::InvalidTable(format!("character {i} has wrong degree")));
            }
            for j in i..self.len() {
                let mut acc = CyclotomicInt::zero(e);
                for (c, &g) in reps.iter().enumerate() {
                    let term = self.values[i][g].mul(&conj[j][c]);
                    let weight = CyclotomicInt::from_integer(e, self.classes[c].len() as i64);
                    acc = acc.add(&term.mul(&weight));
                }
                let expected = if i == j { n } else { 0 };
                if acc.as_integer() != Some(expected) {
                    return Err(CharacterError::InvalidTable(format!(
                        "inner product of characters {i} and {j} is {acc}, expected {expected}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `true` iff every entry is a rational integer.
pub fn is_rational_table(t: &CharacterTable) -> bool {
    t.rational.is_some()
}

/// Exact character table of an abelian group or of `Q8 × C2^n`.
pub fn character_table(g: &GroupTable) -> Result<CharacterTable, CharacterError> {
    let table = if g.is_abelian() {
        abelian_table(g)
    } else if let Some(n) = quaternion_rank(g) {
        quaternion_table(g, n)?
    } else {
        return Err(CharacterError::Unsupported(g.name().to_string()));
    };
    table.validate()?;
    Ok(table)
}

/// Whether the group is supported by [`character_table`].
pub fn table_supported(g: &GroupTable) -> bool {
    g.is_abelian() || quaternion_rank(g).is_some()
}

fn finish(
    kind: TableKind,
    g: &GroupTable,
    exponent: u32,
    degrees: Vec<i64>,
    values: Vec<Vec<CyclotomicInt>>,
) -> CharacterTable {
    let rational = values
        .iter()
        .map(|row| row.iter().map(CyclotomicInt::as_integer).collect::<Option<Vec<i64>>>())
        .collect::<Option<Vec<_>>>();
    CharacterTable {
        kind,
        group_order: g.order(),
        exponent,
        degrees,
        classes: g.conjugacy_classes(),
        values,
        rational,
    }
}

/// Cyclic decomposition `G = <g_1> × … × <g_k>` as `(generator, order)`.
///
/// Take an element of maximal order, decompose the quotient by the cyclic
/// subgroup it generates, and lift every quotient generator to a preimage of
/// the same order; such preimages generate a complement.
pub fn cyclic_decomposition(g: &GroupTable) -> Vec<(ElementIndex, usize)> {
    if g.order() == 1 {
        return Vec::new();
    }
    let top = (0..g.order()).max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x))).unwrap();
    let h = g.subgroup_generated(&[top]).expect("element in range");
    let quotient = g.quotient_group(&h).expect("abelian subgroups are normal");
    let (coset_of, _) = g.coset_labels(&h);
    let mut out = vec![(top, g.element_order(top))];
    for (q, order) in cyclic_decomposition(&quotient) {
        let lift = (0..g.order())
            .find(|&x| coset_of[x] == q && g.element_order(x) == order)
            .expect("a direct summand admits lifts of equal order");
        out.push((lift, order));
    }
    out
}

fn abelian_table(g: &GroupTable) -> CharacterTable {
    let exponent = g.exponent() as u32;
    let factors = cyclic_decomposition(g);
    // coordinates of every element
    let mut coords: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    let mut seen = vec![false; g.order()];
    let mut frontier: Vec<(ElementIndex, Vec<usize>)> = vec![(0, Vec::new())];
    for &(gen, m) in &factors {
        let mut next = Vec::with_capacity(frontier.len() * m);
        for (x, c) in &frontier {
            let mut y = *x;
            for a in 0..m {
                let mut cc = c.clone();
                cc.push(a);
                next.push((y, cc));
                y = g.mul(y, gen);
            }
        }
        frontier = next;
    }
    for (x, c) in frontier {
        assert!(!seen[x], "cyclic factors are not independent");
        seen[x] = true;
        coords[x] = c;
    }
    assert!(seen.iter().all(|&s| s), "cyclic factors do not generate");

    // characters indexed by exponent vectors, lexicographically
    let orders: Vec<usize> = factors.iter().map(|f| f.1).collect();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new()];
    for &m in &orders {
        labels = labels
            .into_iter()
            .flat_map(|l| {
                (0..m).map(move |k| {
                    let mut l = l.clone();
                    l.push(k);
                    l
                })
            })
            .collect();
    }
    let values = labels
        .iter()
        .map(|ks| {
            (0..g.order())
                .map(|x| {
                    let power: usize = ks
                        .iter()
                        .zip(&coords[x])
                        .zip(&orders)
                        .map(|((k, a), m)| k * a * (exponent as usize / m))
                        .sum();
                    CyclotomicInt::root_of_unity(exponent, power as i64)
                })
                .collect()
        })
        .collect();
    finish(TableKind::Abelian, g, exponent, vec![1; labels.len()], values)
}

/// `Some(n)` when `g ≅ Q8 × C2^n`: a non-abelian 2-group of exponent 4
/// in which every conjugacy class lies inside `{a, a^-1}`.
pub fn quaternion_rank(g: &GroupTable) -> Option<u32> {
    let n = g.order();
    if g.is_abelian() || !n.is_power_of_two() || n < 8 || g.exponent() != 4 {
        return None;
    }
    let hamiltonian = g
        .conjugacy_classes()
        .iter()
        .all(|c| c.iter().all(|&x| x == c[0] || x == g.inv(c[0])));
    hamiltonian.then(|| n.trailing_zeros() - 3)
}

/// Q8 classes in the order 1, -1, ±i, ±j, ±k.
const Q8_TABLE: [[i64; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [1, 1, 1, -1, -1],
    [1, 1, -1, 1, -1],
    [1, 1, -1, -1, 1],
    [2, -2, 0, 0, 0],
];

fn quaternion_table(g: &GroupTable, rank: u32) -> Result<CharacterTable, CharacterError> {
    verify_q8_table()?;
    let n = g.order();
    let (i, j) = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| g.element_order(a) == 4 && g.element_order(b) == 4 && g.mul(a, b) != g.mul(b, a))
        .expect("non-abelian");
    let k = g.mul(i, j);
    let minus_one = g.mul(i, i);
    let q = g.subgroup_generated(&[i, j]).expect("in range");
    debug_assert_eq!(q.len(), 8);
    let q8_class = |x: ElementIndex| -> usize {
        match x {
            0 => 0,
            x if x == minus_one => 1,
            x if x == i || x == g.inv(i) => 2,
            x if x == j || x == g.inv(j) => 3,
            x if x == k || x == g.inv(k) => 4,
            _ => unreachable!("not in the quaternion factor"),
        }
    };
    // central involutions completing a direct complement
    let center = g.center();
    let mut basis: Vec<ElementIndex> = Vec::new();
    let mut span = q.clone();
    for &z in center.members() {
        if !span.contains(z) {
            basis.push(z);
            let mut gens: Vec<ElementIndex> = vec![i, j];
            gens.extend(&basis);
            span = g.subgroup_generated(&gens).expect("in range");
        }
    }
    assert_eq!(basis.len() as u32, rank);
    // g = q · e with q ∈ Q8 and e = Π basis^bits
    let mut decomposition: Vec<(usize, u32)> = vec![(0, 0); n];
    let mut complement: Vec<(ElementIndex, u32)> = vec![(0, 0)];
    for (t, &z) in basis.iter().enumerate() {
        let more: Vec<_> = complement.iter().map(|&(e, bits)| (g.mul(e, z), bits | 1 << t)).collect();
        complement.extend(more);
    }
    for &x in q.members() {
        for &(e, bits) in &complement {
            decomposition[g.mul(x, e)] = (q8_class(x), bits);
        }
    }
    let mut degrees = Vec::new();
    let mut values = Vec::new();
    for row in &Q8_TABLE {
        for signs in 0u32..1 << rank {
            degrees.push(row[0]);
            values.push(
                (0..n)
                    .map(|x| {
                        let (c, bits) = decomposition[x];
                        let sign = if (bits & signs).count_ones() % 2 == 0 { 1 } else { -1 };
                        CyclotomicInt::from_integer(4, sign * row[c])
                    })
                    .collect(),
            );
        }
    }
    Ok(finish(TableKind::QuaternionTimesElementary(rank), g, 4, degrees, values))
}

/// The hand-entered Q8 table is checked once by orthogonality and against
/// the characteristic polynomial on three connection sets.
fn verify_q8_table() -> Result<(), CharacterError> {
    static CHECK: OnceLock<Result<(), CharacterError>> = OnceLock::new();
    CHECK
        .get_or_init(|| {
            use crate::spectral::{is_integral_graph, ConnectionSet};
            let q8 = GroupTable::quaternion();
            // quaternion(): 1, -1, i, -i, j, -j, k, -k
            let class = [0usize, 1, 2, 2, 3, 3, 4, 4];
            let values = Q8_TABLE
                .iter()
                .map(|row| (0..8).map(|x| CyclotomicInt::from_integer(4, row[class[x]])).collect())
                .collect();
            let t = finish(TableKind::QuaternionTimesElementary(0), &q8, 4, vec![1, 1, 1, 1, 2], values);
            t.validate()?;
            for members in [vec![1], vec![2, 3], (1..8).collect()] {
                let s = ConnectionSet::new(&q8, members).expect("valid set");
                let via_chars = super::integer_spectrum(&super::bh1_spectrum(&q8, &s, &t)?);
                let via_matrix = is_integral_graph(&q8, &s);
                if via_chars.as_deref() != Some(via_matrix.roots()) {
                    return Err(CharacterError::InvalidTable("Q8 table disagrees with char poly".into()));
                }
            }
            Ok(())
        })
        .clone()
}
