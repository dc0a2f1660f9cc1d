//! Whole-group integrality decisions over every inverse-closed connection set.

mod normal_algebra;
mod space;

pub use normal_algebra::{boolean_algebra_atoms, boolean_algebra_sets, boolean_algebra_sets_bounded, DEFAULT_ATOM_LIMIT};
pub use space::{subset_space, SubsetSpace};

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::catalog::{catalog, CatalogError};
use crate::characters::{bh1_spectrum, character_table, integer_spectrum, rational_spectrum, CharacterTable};
use crate::group::{ElementIndex, GroupTable};
use crate::spectral::{berkowitz, integer_roots_exhaust, is_integral_graph, ConnectionSet, SpectrumJson, SpectrumReport};

/// Largest group the matrix path accepts by default.
pub const DEFAULT_MATRIX_ORDER_BOUND: usize = 64;
/// Largest subset space enumerated without an explicit override.
pub const DEFAULT_MAX_SUBSETS: u64 = 1 << 24;
/// Masks per unit of parallel work; independent of the worker count.
const CHUNK: u64 = 1 << 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("group of order {order} exceeds the matrix-path bound {bound}")]
    OrderBound { order: usize, bound: usize },
    #[error("{count} subsets exceed the enumeration bound {bound}")]
    TooManySubsets { count: u64, bound: u64 },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{0}")]
    Group(String),
    #[error("character and matrix paths disagree on mask {0}")]
    PathMismatch(u64),
}

/// How each connection set is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Characteristic polynomial of every Cayley graph.
    Matrix,
    /// Character spectrum when the set is a union of classes and the table
    /// is available, else the matrix path.
    CharactersWhenValid,
    /// Element-order rejection first, then as `CharactersWhenValid`.
    Auto,
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub strategy: Strategy,
    pub jobs: usize,
    /// Keep going after the first witness and count every failing set.
    pub audit: bool,
    pub max_subsets: u64,
    pub matrix_order_bound: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            strategy: Strategy::Auto,
            jobs: 1,
            audit: false,
            max_subsets: DEFAULT_MAX_SUBSETS,
            matrix_order_bound: DEFAULT_MATRIX_ORDER_BOUND,
        }
    }
}

impl SearchOptions {
    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn with_audit(mut self, audit: bool) -> Self {
        self.audit = audit;
        self
    }

    pub fn with_max_subsets(mut self, max: u64) -> Self {
        self.max_subsets = max;
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct MethodBreakdown {
    pub character: u64,
    pub matrix: u64,
    pub fast_reject: u64,
}

impl MethodBreakdown {
    fn add(&mut self, other: &MethodBreakdown) {
        self.character += other.character;
        self.matrix += other.matrix;
        self.fast_reject += other.fast_reject;
    }
}

/// A non-integral connection set with its computed spectrum.
#[derive(Debug, Clone)]
pub struct Witness {
    /// Position in the enumeration order, when the set came from it.
    pub mask: Option<u64>,
    pub set: ConnectionSet,
    pub report: SpectrumReport,
}

#[derive(Debug, Clone)]
pub struct IntegralityVerdict {
    pub group: String,
    pub order: usize,
    pub cayley_integral: bool,
    pub sets_checked: u64,
    pub total_sets: u64,
    pub method_breakdown: MethodBreakdown,
    pub witness: Option<Witness>,
    /// Number of failing sets, in audit mode.
    pub failures: Option<u64>,
    pub elapsed: Duration,
}

/// JSON form. Wall-clock time is left out so reports are reproducible.
#[derive(Debug, Clone, Serialize)]
pub struct VerdictJson {
    pub group: String,
    pub order: usize,
    pub cayley_integral: bool,
    pub sets_checked: u64,
    pub total_sets: u64,
    pub method_breakdown: MethodBreakdown,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failures: Option<u64>,
    pub witness: Option<WitnessJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub mask: Option<u64>,
    pub elements: Vec<ElementIndex>,
    pub spectrum: SpectrumJson,
}

impl IntegralityVerdict {
    pub fn to_json(&self) -> VerdictJson {
        VerdictJson {
            group: self.group.clone(),
            order: self.order,
            cayley_integral: self.cayley_integral,
            sets_checked: self.sets_checked,
            total_sets: self.total_sets,
            method_breakdown: self.method_breakdown,
            failures: self.failures,
            witness: self.witness.as_ref().map(|w| WitnessJson {
                mask: w.mask,
                elements: w.set.members().to_vec(),
                spectrum: w.report.to_json(),
            }),
        }
    }
}

/// Witness from an element whose order is outside `{1, 2, 3, 4, 6}`: the set
/// `{x, x^-1}` of the smallest such element. Its spectrum is computed.
pub fn fast_reject_order(g: &GroupTable) -> Option<(ConnectionSet, SpectrumReport)> {
    let x = (1..g.order()).find(|&x| ![2, 3, 4, 6].contains(&g.element_order(x)))?;
    let set = ConnectionSet::symmetrized(g, &[x]).expect("valid element");
    let report = is_integral_graph(g, &set);
    (!report.is_integral()).then_some((set, report))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Method {
    Character,
    Matrix,
}

/// Shared per-group state for deciding single sets.
pub struct SetEvaluator<'a> {
    group: &'a GroupTable,
    table: Option<CharacterTable>,
    class_of: Vec<usize>,
    class_size: Vec<usize>,
}

impl<'a> SetEvaluator<'a> {
    pub fn new(group: &'a GroupTable, strategy: Strategy) -> Self {
        let classes = group.conjugacy_classes();
        let class_of = group.class_map(&classes);
        let class_size = classes.iter().map(Vec::len).collect();
        let table = match strategy {
            Strategy::Matrix => None,
            _ => character_table(group).ok(),
        };
        SetEvaluator {
            group,
            table,
            class_of,
            class_size,
        }
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    fn conjugation_closed(&self, members: &[ElementIndex], counts: &mut Vec<usize>) -> bool {
        counts.clear();
        counts.resize(self.class_size.len(), 0);
        for &s in members {
            counts[self.class_of[s]] += 1;
        }
        counts.iter().zip(&self.class_size).all(|(&c, &n)| c == 0 || c == n)
    }

    /// Verdict for one sorted inverse-closed identity-free member list.
    pub fn is_integral(&self, members: &[ElementIndex]) -> bool {
        self.decide(members, &mut Vec::new()).0
    }

    fn decide(&self, members: &[ElementIndex], scratch: &mut Vec<usize>) -> (bool, Method) {
        if let Some(t) = &self.table {
            if self.conjugation_closed(members, scratch) {
                let ok = match t.rational_values() {
                    // every θ is then a rational algebraic integer
                    Some(values) => rational_spectrum(values, t.degrees(), members).is_some(),
                    None => {
                        let s = ConnectionSet::new(self.group, members.iter().copied()).expect("valid set");
                        let entries = bh1_spectrum(self.group, &s, t).expect("class union");
                        integer_spectrum(&entries).is_some()
                    }
                };
                return (ok, Method::Character);
            }
        }
        (subgroup_matrix_integral(self.group, members), Method::Matrix)
    }
}

/// Integrality of `Cay(<S>, S)`, which decides `Cay(G, S)`: the latter is a
/// disjoint union of copies of the former.
pub fn subgroup_matrix_integral(g: &GroupTable, members: &[ElementIndex]) -> bool {
    let sub = g.subgroup_generated(members).expect("members in range");
    let h = sub.members();
    let mut pos = vec![usize::MAX; g.order()];
    for (i, &x) in h.iter().enumerate() {
        pos[x] = i;
    }
    let mut rows = vec![vec![0i64; h.len()]; h.len()];
    for (bi, &b) in h.iter().enumerate() {
        for &s in members {
            rows[pos[g.mul(s, b)]][bi] = 1;
        }
    }
    integer_roots_exhaust(&berkowitz(&rows), members.len() as i64)
}

/// Decide whether every undirected Cayley graph on `g` is integral.
pub fn is_cayley_integral(g: &GroupTable, opts: &SearchOptions) -> Result<IntegralityVerdict, SearchError> {
    let start = Instant::now();
    let space = subset_space(g);
    let total = space.total_count();
    let base = |sets_checked, breakdown, witness: Option<Witness>, failures| IntegralityVerdict {
        group: g.name().to_string(),
        order: g.order(),
        cayley_integral: witness.is_none(),
        sets_checked,
        total_sets: total,
        method_breakdown: breakdown,
        witness,
        failures,
        elapsed: start.elapsed(),
    };

    if opts.strategy == Strategy::Auto && !opts.audit {
        if let Some((set, report)) = fast_reject_order(g) {
            let breakdown = MethodBreakdown {
                fast_reject: 1,
                ..Default::default()
            };
            let mask = space.mask_of(&set);
            return Ok(base(1, breakdown, Some(Witness { mask, set, report }), None));
        }
    }
    if total > opts.max_subsets || space.bits() >= 63 {
        return Err(SearchError::TooManySubsets {
            count: total,
            bound: opts.max_subsets,
        });
    }
    let evaluator = SetEvaluator::new(g, opts.strategy);
    let needs_matrix = !(evaluator.has_table() && all_sets_class_unions(g));
    if needs_matrix && g.order() > opts.matrix_order_bound {
        return Err(SearchError::OrderBound {
            order: g.order(),
            bound: opts.matrix_order_bound,
        });
    }

    let chunks = total.div_ceil(CHUNK);
    let first_failure = AtomicU64::new(u64::MAX);
    let run_chunk = |c: u64| -> ChunkResult {
        let lo = c * CHUNK;
        let hi = (lo + CHUNK).min(total);
        let mut r = ChunkResult::default();
        if !opts.audit && lo > first_failure.load(Ordering::Relaxed) {
            r.skipped = true;
            return r;
        }
        let mut members = Vec::new();
        let mut scratch = Vec::new();
        for mask in lo..hi {
            space.members_into(mask, &mut members);
            let (ok, method) = evaluator.decide(&members, &mut scratch);
            match method {
                Method::Character => r.breakdown.character += 1,
                Method::Matrix => r.breakdown.matrix += 1,
            }
            if !ok {
                r.failures += 1;
                r.first_failure.get_or_insert(mask);
                first_failure.fetch_min(mask, Ordering::Relaxed);
                if !opts.audit {
                    break;
                }
            }
        }
        r
    };
    let results: Vec<ChunkResult> = if opts.jobs <= 1 {
        (0..chunks).map(run_chunk).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| SearchError::Group(e.to_string()))?;
        pool.install(|| (0..chunks).into_par_iter().map(run_chunk).collect())
    };

    // Assemble from chunks up to the minimal failing mask only.
    let witness_mask = results.iter().filter_map(|r| r.first_failure).min();
    let last_chunk = witness_mask.map_or(chunks, |m| m / CHUNK + 1);
    let mut breakdown = MethodBreakdown::default();
    for r in &results[..last_chunk as usize] {
        debug_assert!(!r.skipped);
        breakdown.add(&r.breakdown);
    }
    let failures = opts.audit.then(|| results.iter().map(|r| r.failures).sum());
    if opts.audit {
        breakdown = MethodBreakdown::default();
        for r in &results {
            breakdown.add(&r.breakdown);
        }
    }
    let witness = witness_mask.map(|mask| {
        let set = space.connection_set(g, mask);
        let report = is_integral_graph(g, &set);
        assert!(!report.is_integral(), "witness must be non-integral on the full group");
        Witness {
            mask: Some(mask),
            set,
            report,
        }
    });
    let checked = match (opts.audit, witness_mask) {
        (false, Some(m)) => m + 1,
        _ => total,
    };
    Ok(base(checked, breakdown, witness, failures))
}

/// Every inverse-closed set is a union of classes exactly when every class
/// lies in `{g, g^-1}`.
fn all_sets_class_unions(g: &GroupTable) -> bool {
    g.conjugacy_classes()
        .iter()
        .all(|c| c.iter().all(|&x| x == c[0] || x == g.inv(c[0])))
}

#[derive(Default)]
struct ChunkResult {
    breakdown: MethodBreakdown,
    first_failure: Option<u64>,
    failures: u64,
    skipped: bool,
}

/// Compare the character and matrix paths on every mask divisible by
/// `every`. Returns the number of masks compared.
pub fn cross_check_sample(g: &GroupTable, every: u64) -> Result<u64, SearchError> {
    let space = subset_space(g);
    let table = character_table(g).map_err(|e| SearchError::Group(e.to_string()))?;
    let mut compared = 0;
    let mut mask = 0;
    while mask < space.total_count() {
        let set = space.connection_set(g, mask);
        if set.is_conjugation_closed(g) {
            let via_chars = integer_spectrum(&bh1_spectrum(g, &set, &table).expect("class union"));
            let via_matrix = is_integral_graph(g, &set);
            let agree = match &via_chars {
                Some(spec) => via_matrix.is_integral() && spec.as_slice() == via_matrix.roots(),
                None => !via_matrix.is_integral(),
            };
            if !agree {
                return Err(SearchError::PathMismatch(mask));
            }
            compared += 1;
        }
        mask += every;
    }
    Ok(compared)
}

/// Verdicts for several catalog groups, in the given order.
pub fn classify_catalog(names: &[&str], opts: &SearchOptions) -> Result<Vec<IntegralityVerdict>, SearchError> {
    let groups: Vec<Arc<GroupTable>> = names.iter().map(|n| catalog(n)).collect::<Result<_, _>>()?;
    groups.iter().map(|g| is_cayley_integral(g, opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(strategy: Strategy) -> SearchOptions {
        SearchOptions::default().with_strategy(strategy)
    }

    #[test]
    fn symmetric_three_is_integral() {
        let g = catalog("S3").unwrap();
        for s in [Strategy::Matrix, Strategy::CharactersWhenValid, Strategy::Auto] {
            let v = is_cayley_integral(&g, &opts(s)).unwrap();
            assert!(v.cayley_integral);
            assert_eq!(v.sets_checked, 16);
        }
    }

    #[test]
    fn dihedral_eight_fails() {
        let g = catalog("D8").unwrap();
        let v = is_cayley_integral(&g, &opts(Strategy::Matrix)).unwrap();
        assert!(!v.cayley_integral);
        let w = v.witness.unwrap();
        assert!(!w.report.is_integral());
        assert_eq!(v.sets_checked, w.mask.unwrap() + 1);
    }

    #[test]
    fn fast_reject_examples() {
        let c5 = GroupTable::cyclic(5).unwrap();
        let (s, r) = fast_reject_order(&c5).unwrap();
        assert_eq!(s.members(), &[1, 4]);
        assert!(r.display().contains("(x^2+x-1)"));
        assert!(fast_reject_order(&GroupTable::cyclic(6).unwrap()).is_none());
        let (s, r) = fast_reject_order(&GroupTable::cyclic(8).unwrap()).unwrap();
        assert_eq!(s.members(), &[1, 7]);
        assert!(r.display().contains("(x^2-2)"));
    }

    #[test]
    fn parallel_matches_serial() {
        for name in ["D12", "Q8xC2", "C3_rtimes_C4xC2"] {
            let g = catalog(name).unwrap();
            let a = is_cayley_integral(&g, &opts(Strategy::Matrix)).unwrap();
            let b = is_cayley_integral(&g, &opts(Strategy::Matrix).with_jobs(4)).unwrap();
            assert_eq!(
                serde_json::to_string(&a.to_json()).unwrap(),
                serde_json::to_string(&b.to_json()).unwrap()
            );
        }
    }

    #[test]
    fn audit_counts_every_failure() {
        let g = catalog("D8").unwrap();
        let v = is_cayley_integral(&g, &opts(Strategy::Matrix).with_audit(true)).unwrap();
        let space = subset_space(&g);
        let brute = (0..space.total_count())
            .filter(|&m| !is_integral_graph(&g, &space.connection_set(&g, m)).is_integral())
            .count() as u64;
        assert_eq!(v.failures, Some(brute));
        assert_eq!(v.sets_checked, space.total_count());
    }

    #[test]
    fn bounds() {
        let g = catalog("Q8xC2^3").unwrap();
        assert!(matches!(
            is_cayley_integral(&g, &opts(Strategy::Matrix)),
            Err(SearchError::TooManySubsets { .. })
        ));
        let g = GroupTable::cyclic(70).unwrap();
        assert!(matches!(
            is_cayley_integral(&g, &opts(Strategy::Matrix)),
            Err(SearchError::TooManySubsets { .. }) | Err(SearchError::OrderBound { .. })
        ));
    }

    #[test]
    fn trivial_group() {
        let v = is_cayley_integral(&catalog("C1").unwrap(), &SearchOptions::default()).unwrap();
        assert!(v.cayley_integral);
        assert_eq!(v.total_sets, 1);
    }
}
