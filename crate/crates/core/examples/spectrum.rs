//! Characteristic polynomial and integrality of single Cayley graphs.

use cayint::catalog::catalog;
use cayint::spectral::{cayley_adjacency, char_poly, is_integral_graph, ConnectionSet};

fn main() {
    let a4 = catalog("A4").unwrap();
    let s = ConnectionSet::from_words(&a4, &["x", "x^-1", "y", "xy", "y^-1x^-1"]).unwrap();
    let report = is_integral_graph(&a4, &s);
    println!("A4 {:?}", s.words(&a4));
    println!("  {}", report.display());
    println!("  integral: {}", report.is_integral());

    let s3 = catalog("S3").unwrap();
    let involutions: Vec<usize> = (1..6).filter(|&g| s3.element_order(g) == 2).collect();
    let s = ConnectionSet::new(&s3, involutions).unwrap();
    let a = cayley_adjacency(&s3, &s);
    println!("S3 involutions: {}", char_poly(&a));
    println!("  {}", is_integral_graph(&s3, &s).display());

    let c7 = catalog("C7").unwrap();
    let s = ConnectionSet::from_words(&c7, &["x", "x^-1"]).unwrap();
    let r = is_integral_graph(&c7, &s);
    println!("7-cycle: {} ({})", r.display(), if r.is_integral() { "integral" } else { "not integral" });
    println!("{}", serde_json::to_string(&r.to_json()).unwrap());
}
