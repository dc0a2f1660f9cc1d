//! Named reproduction targets. Each target recomputes a text record and
//! compares it line by line with a golden fixture stored in the repository.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::catalog::{catalog, identify, quotients, CatalogError, QuotientFilter};
use crate::presentation::GIJ_EXPONENTS;
use crate::search::{cross_check_sample, is_cayley_integral, subset_space, SearchError, SearchOptions, Strategy};
use crate::spectral::{is_integral_graph, ConnectionSet, SpectrumError};
use crate::GroupTable;

#[derive(Debug, Error)]
pub enum ReproError {
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error("{0}")]
    Group(String),
}

/// A reproducible computation and its stored expected output.
#[derive(Debug, Clone, Copy)]
pub struct ReproTarget {
    pub id: &'static str,
    pub summary: &'static str,
    pub golden: &'static str,
}

macro_rules! golden {
    ($file:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/golden/", $file))
    };
}

pub const TARGETS: &[ReproTarget] = &[
    ReproTarget { id: "lemma-a4-1", summary: "A4 spectrum on a 5-element set", golden: golden!("lemma-a4-1.txt") },
    ReproTarget { id: "lemma-a4-2", summary: "C4_rtimes_C4 spectrum on an 8-element set", golden: golden!("lemma-a4-2.txt") },
    ReproTarget { id: "lemma-a4-3", summary: "S3xC3 spectrum on a 7-element set", golden: golden!("lemma-a4-3.txt") },
    ReproTarget { id: "lemma-a4-4", summary: "SL23 spectrum on its generators", golden: golden!("lemma-a4-4.txt") },
    ReproTarget { id: "lemma-a4-5", summary: "C3_rtimes_C4xC2 spectrum on a 9-element set", golden: golden!("lemma-a4-5.txt") },
    ReproTarget { id: "lemma-a4-6", summary: "C4xC2_rtimes_C4 spectrum on its generators", golden: golden!("lemma-a4-6.txt") },
    ReproTarget { id: "lemma-a4-7", summary: "E27 spectrum on its generators", golden: golden!("lemma-a4-7.txt") },
    ReproTarget { id: "lemma-a4-8", summary: "C3xC3_rtimes_C4 spectrum on a 13-element set", golden: golden!("lemma-a4-8.txt") },
    ReproTarget { id: "lemma-d8", summary: "dihedral cycle witnesses {b, ba}", golden: golden!("lemma-d8.txt") },
    ReproTarget { id: "thm-q8-n0", summary: "Q8 exhaustive check", golden: golden!("thm-q8-n0.txt") },
    ReproTarget { id: "thm-q8-n1", summary: "Q8xC2 exhaustive check", golden: golden!("thm-q8-n1.txt") },
    ReproTarget { id: "thm-q8-n2", summary: "Q8xC2^2 exhaustive character check", golden: golden!("thm-q8-n2.txt") },
    ReproTarget { id: "abelian-ks", summary: "abelian groups by exponent", golden: golden!("abelian-ks.txt") },
    ReproTarget { id: "g46-quotients", summary: "non-abelian exponent-12 quotients of the Gij", golden: golden!("g46-quotients.txt") },
    ReproTarget { id: "cubic-av-spotcheck", summary: "cubic Cayley graphs on small groups", golden: golden!("cubic-av-spotcheck.txt") },
];

/// Group and connection-set words for the `lemma-a4-*` targets, in order.
pub const SPECTRUM_CASES: [(&str, &[&str]); 8] = [
    ("A4", &["x", "x^-1", "y", "xy", "y^-1x^-1"]),
    ("C4_rtimes_C4", &["x", "x^-1", "y", "y^-1", "xy", "y^-1x^-1", "xy^2", "y^-2x^-1"]),
    ("S3xC3", &["x", "y", "y^-1", "z", "z^-1", "zy^2", "y^-2z^-1"]),
    ("SL23", &["x", "x^-1", "y", "y^-1"]),
    ("C3_rtimes_C4xC2", &["x", "x^-1", "y", "y^-1", "z", "xy", "y^-1x^-1", "xz", "z^-1x^-1"]),
    ("C4xC2_rtimes_C4", &["x", "x^-1", "y", "y^-1"]),
    ("E27", &["x", "x^-1", "y", "y^-1"]),
    (
        "C3xC3_rtimes_C4",
        &["x", "x^-1", "y", "y^-1", "z", "z^-1", "z^2", "xy", "(xy)^-1", "xz", "(xz)^-1", "yz", "(yz)^-1"],
    ),
];

/// Groups named in the cubic classification, and catalog groups outside it.
pub const CUBIC_LISTED: &[&str] = &[
    "C2^2", "C4", "C6", "S3", "C2^3", "C4xC2", "D8", "C6xC2", "D12", "A4", "S4", "D8xC3", "S3xC4", "A4xC2",
];
pub const CUBIC_UNLISTED: &[&str] = &["C8", "D10", "D14", "D16", "C3_rtimes_C4", "C4xC4", "Q8xC2", "C4_rtimes_C4", "S3xC3"];

pub fn target(id: &str) -> Option<&'static ReproTarget> {
    TARGETS.iter().find(|t| t.id == id)
}

/// One differing line; `None` means the line is absent on that side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffLine {
    pub line: usize,
    pub expected: Option<String>,
    pub computed: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReproOutcome {
    pub id: String,
    pub expected: String,
    pub computed: String,
}

impl ReproOutcome {
    pub fn matches(&self) -> bool {
        self.diff().is_empty()
    }

    pub fn diff(&self) -> Vec<DiffLine> {
        let e: Vec<&str> = self.expected.lines().collect();
        let c: Vec<&str> = self.computed.lines().collect();
        (0..e.len().max(c.len()))
            .filter(|&i| e.get(i) != c.get(i))
            .map(|i| DiffLine {
                line: i + 1,
                expected: e.get(i).map(|s| s.to_string()),
                computed: c.get(i).map(|s| s.to_string()),
            })
            .collect()
    }
}

/// Recompute `id` with `jobs` workers and pair it with its golden record.
pub fn run(id: &str, jobs: usize) -> Result<ReproOutcome, ReproError> {
    let t = target(id).ok_or_else(|| ReproError::UnknownTarget(id.to_string()))?;
    let computed = match id {
        "lemma-d8" => dihedral_witnesses()?,
        "thm-q8-n0" => quaternion_check("Q8", Strategy::Matrix, jobs, None)?,
        "thm-q8-n1" => quaternion_check("Q8xC2", Strategy::Matrix, jobs, None)?,
        "thm-q8-n2" => quaternion_check("Q8xC2^2", Strategy::CharactersWhenValid, jobs, Some(100))?,
        "abelian-ks" => abelian_census(jobs)?,
        "g46-quotients" => gij_quotient_census()?,
        "cubic-av-spotcheck" => cubic_census()?,
        _ => {
            let k: usize = id["lemma-a4-".len()..].parse().expect("target ids are fixed");
            let (name, words) = SPECTRUM_CASES[k - 1];
            format!("{}\n", spectrum_display(name, words)?)
        }
    };
    Ok(ReproOutcome {
        id: id.to_string(),
        expected: t.golden.to_string(),
        computed,
    })
}

/// Factored characteristic polynomial of `Cay(name, words)`.
pub fn spectrum_display(name: &str, words: &[&str]) -> Result<String, ReproError> {
    let g = catalog(name)?;
    let s = ConnectionSet::from_words(&g, words)?;
    Ok(is_integral_graph(&g, &s).display())
}

fn dihedral_witnesses() -> Result<String, ReproError> {
    let d8 = catalog("D8")?;
    let v = is_cayley_integral(&d8, &SearchOptions::default().with_strategy(Strategy::Matrix))?;
    let mut out = String::new();
    let w = v.witness.as_ref().expect("D8 has a witness");
    writeln!(out, "D8: not Cayley integral, first witness {{{}}}", w.set.words(&d8).join(", ")).unwrap();
    for n in 4..=8 {
        let name = format!("D{}", 2 * n);
        writeln!(out, "{name} {{b, ba}}: {}", spectrum_display(&name, &["b", "ba"])?).unwrap();
    }
    Ok(out)
}

fn quaternion_check(name: &str, strategy: Strategy, jobs: usize, sample: Option<u64>) -> Result<String, ReproError> {
    let g = catalog(name)?;
    let v = is_cayley_integral(&g, &SearchOptions::default().with_strategy(strategy).with_jobs(jobs))?;
    let mut out = format!(
        "{name}: order {}, {}, {} of {} sets, character {} matrix {}\n",
        v.order,
        verdict_word(v.cayley_integral),
        v.sets_checked,
        v.total_sets,
        v.method_breakdown.character,
        v.method_breakdown.matrix,
    );
    if let Some(every) = sample {
        let compared = cross_check_sample(&g, every)?;
        writeln!(out, "matrix cross-check on masks divisible by {every}: {compared} sets agree").unwrap();
    }
    Ok(out)
}

fn verdict_word(integral: bool) -> &'static str {
    if integral {
        "Cayley integral"
    } else {
        "not Cayley integral"
    }
}

/// Abelian catalog groups of order at most 16 whose exponent divides 4 or 6.
pub fn abelian_small_exponent() -> Result<Vec<&'static str>, ReproError> {
    let mut out = Vec::new();
    for &name in crate::catalog::ALL {
        let g = catalog(name)?;
        let e = g.exponent();
        if g.is_abelian() && g.order() <= 16 && (4 % e == 0 || 6 % e == 0) {
            out.push(name);
        }
    }
    Ok(out)
}

fn abelian_census(jobs: usize) -> Result<String, ReproError> {
    let mut out = String::new();
    let opts = SearchOptions::default().with_jobs(jobs);
    for name in abelian_small_exponent()? {
        let v = is_cayley_integral(&*catalog(name)?, &opts)?;
        writeln!(out, "{name}: {}, {} sets", verdict_word(v.cayley_integral), v.sets_checked).unwrap();
    }
    for name in ["C5", "C8", "C9"] {
        let g = catalog(name)?;
        let v = is_cayley_integral(&g, &opts)?;
        let w = v.witness.as_ref().expect("cyclic witness");
        writeln!(
            out,
            "{name}: {}, witness {{{}}}: {}",
            verdict_word(v.cayley_integral),
            w.set.words(&g).join(", "),
            w.report.display()
        )
        .unwrap();
    }
    Ok(out)
}

/// Names of the non-abelian exponent-12 quotients of `g`.
pub fn exponent_twelve_quotients(g: &GroupTable) -> Result<Vec<String>, ReproError> {
    let filter = QuotientFilter {
        nonabelian: true,
        exponent: Some(12),
    };
    let records = quotients(g, filter).map_err(|e| ReproError::Group(e.to_string()))?;
    Ok(records
        .into_iter()
        .map(|r| r.identified.unwrap_or_else(|| format!("unidentified group of order {}", r.quotient_order)))
        .collect())
}

fn gij_quotient_census() -> Result<String, ReproError> {
    let mut out = String::new();
    let mut union = BTreeSet::new();
    for i in GIJ_EXPONENTS {
        for j in GIJ_EXPONENTS {
            let g = catalog(&format!("G{i}{j}"))?;
            let names = exponent_twelve_quotients(&g)?;
            let distinct: BTreeSet<String> = names.iter().cloned().collect();
            writeln!(out, "G{i}{j}: order {}, quotients [{}]", g.order(), names.join(", ")).unwrap();
            union.extend(distinct);
        }
    }
    writeln!(out, "all: {}", union.into_iter().collect::<Vec<_>>().join(", ")).unwrap();
    Ok(out)
}

/// Per-group tally of cubic connection sets.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CubicTally {
    pub sets: usize,
    pub integral: usize,
    pub connected_integral: usize,
    /// Isomorphism types of `<S>` over the integral sets.
    pub spanned: BTreeSet<String>,
    /// Spectrum displays of the connected integral sets.
    pub spectra: BTreeSet<String>,
}

/// Tally every 3-element inverse-closed set of `name`.
pub fn cubic_tally(name: &str) -> Result<CubicTally, ReproError> {
    let g = catalog(name)?;
    let space = subset_space(&g);
    let mut t = CubicTally::default();
    for mask in 0..space.total_count() {
        let members = space.members(mask);
        if members.len() != 3 {
            continue;
        }
        t.sets += 1;
        let set = ConnectionSet::new(&g, members.iter().copied())?;
        let report = is_integral_graph(&g, &set);
        if !report.is_integral() {
            continue;
        }
        t.integral += 1;
        let sub = g.subgroup_generated(&members).map_err(|e| ReproError::Group(e.to_string()))?;
        if sub.len() == g.order() {
            t.connected_integral += 1;
            t.spectra.insert(report.display());
        }
        let h = g.subgroup_table(&sub);
        t.spanned.insert(identify(&h).unwrap_or_else(|| format!("order {}", h.order())));
    }
    Ok(t)
}

fn cubic_census() -> Result<String, ReproError> {
    let mut out = String::new();
    let mut spectra: BTreeMap<String, &str> = BTreeMap::new();
    for &name in CUBIC_LISTED.iter().chain(CUBIC_UNLISTED) {
        let t = cubic_tally(name)?;
        let spanned: Vec<_> = t.spanned.iter().cloned().collect();
        writeln!(
            out,
            "{name}: {} sets, {} integral, {} connected integral, spanned [{}]",
            t.sets,
            t.integral,
            t.connected_integral,
            spanned.join(", ")
        )
        .unwrap();
        for s in t.spectra {
            spectra.entry(s).or_insert(name);
        }
    }
    writeln!(out, "distinct connected integral spectra: {}", spectra.len()).unwrap();
    for (s, name) in spectra {
        writeln!(out, "{s} first on {name}").unwrap();
    }
    Ok(out)
}
