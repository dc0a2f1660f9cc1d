//! Named groups with generator labels, built once and shared.
//!
//! Base names: `C1` (alias `trivial`), `Cn`, `Cn^k`, `D2n` (n ≥ 2), `S3`,
//! `S4`, `A4`, `Q8`, `SL23`, `E27`, `C3_rtimes_C4`, `C4_rtimes_C4`, `S3xC3`,
//! `C3_rtimes_C4xC2`, `C4xC2_rtimes_C4`, `C3xC3_rtimes_C4`, and `Gij` /
//! `G_i_j` for `i, j ∈ {2,3,4,6}`. Any other name is read as a direct
//! product of base names joined by `x`, e.g. `Q8xC2^2` or `C4xC2`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;
use thiserror::Error;

use crate::group::GroupTable;
use crate::presentation::{build_gij, parse_presentation, todd_coxeter, DEFAULT_MAX_COSETS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog group `{0}`")]
    Unknown(String),
    #[error("building `{name}` failed: {reason}")]
    Build { name: String, reason: String },
}

/// Groups given by a fixed presentation: key, presentation, description.
const PRESENTED: &[(&str, &str, &str)] = &[
    ("S3", "<x,y | x^2=y^3=1, y^x=y^-1>", "symmetric group of degree 3"),
    ("A4", "<x,y | x^3, y^2, (xy)^3>", "alternating group of degree 4"),
    (
        "SL23",
        "<x,y | x^3=y^4=y^-1xyxy^-1x=x^-1y^-1(x^-1y)^2=(xy)^3=1>",
        "special linear group SL(2,3)",
    ),
    ("C3_rtimes_C4", "<x,y | x^3=y^4=1, x^y=x^-1>", "C3 extended by C4 acting by inversion"),
    ("C4_rtimes_C4", "<x,y | x^4=y^4=1, x^y=x^-1>", "C4 extended by C4 acting by inversion"),
    (
        "S3xC3",
        "<x,y,z | x^2=y^3=z^3=[x,z]=[y,z]=1, y^x=y^-1>",
        "direct product of S3 and C3",
    ),
    (
        "C3_rtimes_C4xC2",
        "<x,y,z | x^4=y^3=z^2=[x,z]=[y,z]=1, y^x=y^-1>",
        "direct product of C3_rtimes_C4 and C2",
    ),
    (
        "C4xC2_rtimes_C4",
        "<x,y | x^4=y^4=[x,y]^2=[x^2,y]=[x,y^2]=1>",
        "(C4 x C2) extended by C4, order 32",
    ),
    ("E27", "<x,y | x^3=y^3=(xy)^3=(xy^-1)^3=1>", "non-abelian group of order 27 and exponent 3"),
    (
        "C3xC3_rtimes_C4",
        "<x,y,z | x^3=y^3=z^4=[x,y]=1, x^z=x^-1, y^z=y^-1>",
        "C3 x C3 extended by C4 acting by inversion",
    ),
];

/// Catalog members used by batch classification, in report order.
pub const ALL: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C2^2", "C2^3", "C2^4", "C4xC2", "C4xC4", "C6xC2",
    "C3xC3", "S3", "D8", "D10", "D12", "D14", "D16", "A4", "S4", "Q8", "Q8xC2", "Q8xC2^2", "SL23",
    "C3_rtimes_C4", "C4_rtimes_C4", "S3xC3", "C3_rtimes_C4xC2", "C4xC2_rtimes_C4", "E27", "C3xC3_rtimes_C4",
];

/// The named group, built on first use.
pub fn catalog(name: &str) -> Result<Arc<GroupTable>, CatalogError> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<GroupTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().unwrap().get(name) {
        return Ok(g.clone());
    }
    let g = Arc::new(build(name)?.with_name(name));
    cache.lock().unwrap().insert(name.to_string(), g.clone());
    Ok(g)
}

fn build(name: &str) -> Result<GroupTable, CatalogError> {
    let fail = |reason: String| CatalogError::Build {
        name: name.to_string(),
        reason,
    };
    if let Some(g) = base(name, &fail)? {
        return Ok(g);
    }
    let parts: Vec<&str> = name.split('x').collect();
    if parts.len() < 2 {
        return Err(CatalogError::Unknown(name.to_string()));
    }
    let mut acc: Option<GroupTable> = None;
    for part in parts {
        let factor = base(part, &fail)?.ok_or_else(|| CatalogError::Unknown(name.to_string()))?;
        acc = Some(match acc {
            None => factor,
            Some(a) => GroupTable::direct_product(&a, &factor),
        });
    }
    Ok(acc.unwrap())
}

fn base(name: &str, fail: &dyn Fn(String) -> CatalogError) -> Result<Option<GroupTable>, CatalogError> {
    if let Some(&(_, text, _)) = PRESENTED.iter().find(|p| p.0 == name) {
        return presented(text, fail).map(Some);
    }
    let g = match name {
        "C1" | "trivial" => GroupTable::cyclic(1).unwrap(),
        "Q8" => GroupTable::quaternion(),
        "S4" => GroupTable::symmetric(4),
        "S5" => GroupTable::symmetric(5),
        _ => {
            if let Some(g) = gij(name, fail)? {
                return Ok(Some(g));
            }
            if let Some(rest) = name.strip_prefix('C') {
                let (n, k) = match rest.split_once('^') {
                    Some((n, k)) => (n, Some(k)),
                    None => (rest, None),
                };
                let (Ok(n), k) = (n.parse::<usize>(), k.map(str::parse::<usize>)) else {
                    return Ok(None);
                };
                if n == 0 {
                    return Ok(None);
                }
                let c = GroupTable::cyclic(n).unwrap();
                match k {
                    None => c,
                    Some(Ok(k)) if k >= 1 => (1..k).fold(c.clone(), |acc, _| GroupTable::direct_product(&acc, &c)),
                    _ => return Ok(None),
                }
            } else if let Some(m) = name.strip_prefix('D').and_then(|m| m.parse::<usize>().ok()) {
                if m < 4 || m % 2 == 1 {
                    return Ok(None);
                }
                GroupTable::dihedral(m / 2).map_err(|e| fail(e.to_string()))?
            } else {
                return Ok(None);
            }
        }
    };
    Ok(Some(g))
}

fn presented(text: &str, fail: &dyn Fn(String) -> CatalogError) -> Result<GroupTable, CatalogError> {
    let p = parse_presentation(text).map_err(|e| fail(e.to_string()))?;
    todd_coxeter(&p, DEFAULT_MAX_COSETS).map_err(|e| fail(e.to_string()))
}

fn gij(name: &str, fail: &dyn Fn(String) -> CatalogError) -> Result<Option<GroupTable>, CatalogError> {
    let Some(rest) = name.strip_prefix('G') else {
        return Ok(None);
    };
    let digits: Vec<u32> = match rest.split('_').filter(|s| !s.is_empty()).collect::<Vec<_>>()[..] {
        [a, b] => match (a.parse(), b.parse()) {
            (Ok(a), Ok(b)) => vec![a, b],
            _ => return Ok(None),
        },
        [ab] if ab.len() == 2 => ab.chars().filter_map(|c| c.to_digit(10)).collect(),
        _ => return Ok(None),
    };
    let [i, j] = digits[..] else {
        return Ok(None);
    };
    let p = build_gij(i, j).map_err(|e| fail(e.to_string()))?;
    todd_coxeter(&p, DEFAULT_MAX_COSETS).map(Some).map_err(|e| fail(e.to_string()))
}

/// One row of the machine-readable catalog manifest.
#[derive(Debug, Clone, Serialize)]
pub struct ManifestEntry {
    pub name: String,
    pub order: usize,
    pub construction: String,
    pub description: String,
    pub generators: Vec<(String, usize)>,
}

/// Manifest of the fixed catalog keys plus the batch list.
pub fn manifest() -> Result<Vec<ManifestEntry>, CatalogError> {
    let mut names: Vec<String> = ALL.iter().map(|s| s.to_string()).collect();
    for i in crate::presentation::GIJ_EXPONENTS {
        for j in crate::presentation::GIJ_EXPONENTS {
            names.push(format!("G{i}{j}"));
        }
    }
    names
        .into_iter()
        .map(|name| {
            let g = catalog(&name)?;
            let (construction, description) = describe(&name);
            Ok(ManifestEntry {
                order: g.order(),
                generators: g.generators().to_vec(),
                name,
                construction,
                description,
            })
        })
        .collect()
}

fn describe(name: &str) -> (String, String) {
    if let Some(&(_, text, desc)) = PRESENTED.iter().find(|p| p.0 == name) {
        return (format!("presentation {text}"), desc.to_string());
    }
    if let Some(rest) = name.strip_prefix('G').filter(|r| r.len() == 2) {
        let (i, j) = rest.split_at(1);
        let text = build_gij(i.parse().unwrap(), j.parse().unwrap())
            .map(|p| p.to_string())
            .unwrap_or_default();
        return (
            format!("presentation {text}"),
            format!("two-generator group with (xy)^{i} and [x,y]^{j}"),
        );
    }
    let d = match name {
        "C1" => "trivial group".to_string(),
        "Q8" => "quaternion group, labels i, j, k".to_string(),
        "S4" => "permutations of 4 points, a = (0 1 2 3), b = (0 1)".to_string(),
        n if n.contains('x') => format!("direct product {}", n.replace('x', " x ")),
        n if n.starts_with('D') => format!("dihedral group of order {}, a rotation, b reflection", &n[1..]),
        n if n.contains('^') => format!("elementary product {n}"),
        n => format!("cyclic group of order {}", &n[1..]),
    };
    ("explicit table".to_string(), d)
}

/// Extra names tried when identifying a group up to isomorphism.
const IDENTIFY_EXTRA: &[&str] = &[
    "C10", "C12", "C2^5", "C4xC2^2", "C6xC2^2", "C12xC2", "D18", "D20", "D24", "A4xC2", "SL23xC2", "Q8xC2^3",
    "S3xC2", "S3xC4", "D8xC3", "C3xC3xC2", "Q8xC3", "S3xS3",
];

/// First catalog name whose group is isomorphic to `g`.
pub fn identify(g: &GroupTable) -> Option<String> {
    ALL.iter().chain(IDENTIFY_EXTRA).find_map(|&name| {
        let h = catalog(name).ok()?;
        (h.order() == g.order() && crate::group::isomorphic(g, &h).unwrap_or(false)).then(|| name.to_string())
    })
}

/// Which quotients to keep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QuotientFilter {
    pub nonabelian: bool,
    pub exponent: Option<usize>,
}

impl QuotientFilter {
    /// Parse `nonabelian,exponent=12` (either part optional).
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut f = QuotientFilter::default();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part.split_once('=') {
                None if part == "nonabelian" => f.nonabelian = true,
                Some(("exponent", e)) => f.exponent = Some(e.parse().map_err(|_| format!("bad exponent `{e}`"))?),
                _ => return Err(format!("unknown filter term `{part}`")),
            }
        }
        Ok(f)
    }

    fn keeps(&self, q: &GroupTable) -> bool {
        (!self.nonabelian || !q.is_abelian()) && self.exponent.is_none_or(|e| q.exponent() == e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientRecord {
    pub normal_order: usize,
    pub quotient_order: usize,
    pub abelian: bool,
    pub exponent: usize,
    pub identified: Option<String>,
}

/// Every quotient by a normal subgroup passing `filter`, smallest normal
/// subgroup first, each identified against the catalog when possible.
pub fn quotients(g: &GroupTable, filter: QuotientFilter) -> Result<Vec<QuotientRecord>, crate::group::GroupError> {
    let mut out = Vec::new();
    for n in g.normal_subgroups()? {
        let q = g.quotient_group(&n)?;
        if !filter.keeps(&q) {
            continue;
        }
        out.push(QuotientRecord {
            normal_order: n.len(),
            quotient_order: q.order(),
            abelian: q.is_abelian(),
            exponent: q.exponent(),
            identified: identify(&q),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        for (name, n) in [
            ("C1", 1),
            ("trivial", 1),
            ("S3", 6),
            ("A4", 12),
            ("SL23", 24),
            ("E27", 27),
            ("C3_rtimes_C4", 12),
            ("C4_rtimes_C4", 16),
            ("S3xC3", 18),
            ("C3_rtimes_C4xC2", 24),
            ("C4xC2_rtimes_C4", 32),
            ("C3xC3_rtimes_C4", 36),
            ("Q8xC2^2", 32),
            ("Q8xC2^4", 128),
            ("C2^3", 8),
            ("D12", 12),
            ("C4xC2", 8),
            ("G34", 24),
            ("G_3_4", 24),
            ("SL23xC2", 48),
        ] {
            assert_eq!(catalog(name).unwrap().order(), n, "{name}");
        }
    }

    #[test]
    fn structure_of_named_groups() {
        let s3 = catalog("S3").unwrap();
        assert!(!s3.is_abelian());
        let e27 = catalog("E27").unwrap();
        assert_eq!(e27.exponent(), 3);
        assert!(!e27.is_abelian());
        assert!(crate::group::isomorphic(&catalog("SL23").unwrap(), &GroupTable::sl23_matrices()).unwrap());
        assert!(crate::group::isomorphic(&catalog("S3").unwrap(), &GroupTable::symmetric(3)).unwrap());
        assert_eq!(catalog("A4").unwrap().generator("y").map(|y| catalog("A4").unwrap().element_order(y)), Some(2));
    }

    #[test]
    fn unknown_names() {
        for bad in ["Z5", "C0", "D7", "G55", "C4xZ2", ""] {
            assert!(catalog(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn identification_and_filters() {
        let q8 = catalog("Q8").unwrap();
        let centre = q8.center();
        let v4 = q8.quotient_group(&centre).unwrap();
        assert_eq!(identify(&v4).as_deref(), Some("C2^2"));
        let f = QuotientFilter::parse("nonabelian,exponent=12").unwrap();
        assert_eq!(f, QuotientFilter { nonabelian: true, exponent: Some(12) });
        assert!(QuotientFilter::parse("prime").is_err());
        let all = quotients(&catalog("S3").unwrap(), QuotientFilter::default()).unwrap();
        let names: Vec<_> = all.iter().map(|r| r.identified.clone().unwrap()).collect();
        assert_eq!(names, vec!["S3", "C2", "C1"]);
    }

    #[test]
    fn manifest_lists_every_batch_group() {
        let m = manifest().unwrap();
        assert_eq!(m.len(), ALL.len() + 16);
        assert!(m.iter().all(|e| e.order > 0));
    }
}
