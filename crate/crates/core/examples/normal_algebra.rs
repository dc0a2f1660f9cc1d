//! Sets from the boolean algebra of normal subgroups always give integral graphs.

use cayint::catalog::catalog;
use cayint::search::{boolean_algebra_atoms, boolean_algebra_sets};
use cayint::spectral::is_integral_graph;

fn main() {
    for name in ["S3", "D8", "A4", "SL23"] {
        let g = catalog(name).unwrap();
        let atoms = boolean_algebra_atoms(&g).unwrap();
        let sets = boolean_algebra_sets(&g).unwrap();
        let integral = sets.iter().filter(|s| is_integral_graph(&g, s).is_integral()).count();
        println!("{name}: {} atoms, {} sets, {integral} integral", atoms.len(), sets.len());
    }
    let s3 = catalog("S3").unwrap();
    for s in boolean_algebra_sets(&s3).unwrap() {
        println!("  S3 {:?}: {}", s.words(&s3), is_integral_graph(&s3, &s).display());
    }
}
