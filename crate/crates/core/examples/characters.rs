//! Character tables and eigenvalues from characters.

use cayint::catalog::catalog;
use cayint::characters::{bh1_spectrum, character_table, integer_spectrum};
use cayint::spectral::{is_integral_graph, ConnectionSet};

fn main() {
    let g = catalog("Q8xC2").unwrap();
    let t = character_table(&g).unwrap();
    t.validate().unwrap();
    println!("{}: {:?} table, {} characters, degrees {:?}", g.name(), t.kind(), t.len(), t.degrees());

    // every inverse-closed set of Q8xC2 is a union of classes
    let s = ConnectionSet::from_words(&g, &["i", "i^-1", "x"]).unwrap();
    let entries = bh1_spectrum(&g, &s, &t).unwrap();
    for e in &entries {
        println!("  {} with multiplicity {}", e.value, e.multiplicity);
    }
    println!("from characters: {:?}", integer_spectrum(&entries));
    println!("from the matrix: {:?}", is_integral_graph(&g, &s).roots());

    let c12 = catalog("C12").unwrap();
    let t = character_table(&c12).unwrap();
    let s = ConnectionSet::from_words(&c12, &["x", "x^-1"]).unwrap();
    let entries = bh1_spectrum(&c12, &s, &t).unwrap();
    let values: Vec<String> = entries.iter().map(|e| e.value.to_string()).collect();
    println!("12-cycle eigenvalues in Z[z12]: {}", values.join(", "));
    println!("integral: {}", integer_spectrum(&entries).is_some());
}
