use crate::group::{ElementIndex, GroupError, GroupTable};
use crate::spectral::ConnectionSet;

/// Atom count above which the algebra is not expanded.
pub const DEFAULT_ATOM_LIMIT: usize = 20;

/// Atoms of the boolean algebra of subsets generated by the normal
/// subgroups: elements grouped by which normal subgroups contain them.
/// Sorted by smallest member, so the identity's atom comes first.
pub fn boolean_algebra_atoms(g: &GroupTable) -> Result<Vec<Vec<ElementIndex>>, GroupError> {
    let normals = g.normal_subgroups()?;
    let mut signature: Vec<(Vec<bool>, ElementIndex)> = (0..g.order())
        .map(|x| (normals.iter().map(|n| n.contains(x)).collect(), x))
        .collect();
    signature.sort();
    let mut atoms: Vec<Vec<ElementIndex>> = Vec::new();
    let mut last: Option<&Vec<bool>> = None;
    for (sig, x) in &signature {
        if last != Some(sig) {
            atoms.push(Vec::new());
            last = Some(sig);
        }
        atoms.last_mut().unwrap().push(*x);
    }
    atoms.sort();
    Ok(atoms)
}

/// `B \ {1}` for every member `B` of the algebra, without repeats.
///
/// Members are unions of atoms; `B` and `B ∪ {1}` give the same set, so the
/// identity's atom minus the identity is kept and every union is taken once.
pub fn boolean_algebra_sets(g: &GroupTable) -> Result<Vec<ConnectionSet>, GroupError> {
    boolean_algebra_sets_bounded(g, DEFAULT_ATOM_LIMIT)
}

pub fn boolean_algebra_sets_bounded(g: &GroupTable, atom_limit: usize) -> Result<Vec<ConnectionSet>, GroupError> {
    let mut atoms = boolean_algebra_atoms(g)?;
    if atoms.len() > atom_limit {
        return Err(GroupError::BoundExceeded {
            order: atoms.len(),
            bound: atom_limit,
        });
    }
    // the identity's atom is {1} alone: 1 lies in every normal subgroup,
    // and only elements of the trivial one share that signature
    atoms[0].retain(|&x| x != 0);
    let parts: Vec<&Vec<ElementIndex>> = atoms.iter().filter(|a| !a.is_empty()).collect();
    let mut out = Vec::with_capacity(1 << parts.len());
    for mask in 0u64..1 << parts.len() {
        let members = parts
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .flat_map(|(_, a)| a.iter().copied());
        out.push(ConnectionSet::new(g, members).expect("normal-subgroup atoms are inverse-closed"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::spectral::is_integral_graph;

    #[test]
    fn symmetric_three_sets() {
        let s3 = catalog("S3").unwrap();
        let sets = boolean_algebra_sets(&s3).unwrap();
        // atoms {1}, 3-cycles, involutions
        assert_eq!(sets.len(), 4);
        let y = s3.generator("y").unwrap();
        let triangles = ConnectionSet::new(&s3, [y, s3.inv(y)]).unwrap();
        assert!(sets.contains(&triangles));
        assert_eq!(is_integral_graph(&s3, &triangles).roots(), &[(2, 2), (-1, 4)]);
        let invols: Vec<_> = (1..6).filter(|&g| s3.element_order(g) == 2).collect();
        let k33 = ConnectionSet::new(&s3, invols).unwrap();
        assert!(sets.contains(&k33));
        assert_eq!(is_integral_graph(&s3, &k33).roots(), &[(3, 1), (0, 4), (-3, 1)]);
        assert!(sets.contains(&ConnectionSet::complete(&s3)));
    }

    #[test]
    fn sets_are_class_unions() {
        for name in ["D8", "A4", "Q8", "C6", "SL23"] {
            let g = catalog(name).unwrap();
            for s in boolean_algebra_sets(&g).unwrap() {
                assert!(s.is_conjugation_closed(&g), "{name}");
            }
        }
    }

    #[test]
    fn atom_limit() {
        let g = catalog("C2^4").unwrap();
        assert!(boolean_algebra_sets_bounded(&g, 4).is_err());
    }
}
