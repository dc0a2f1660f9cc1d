//! Coset enumeration from a text presentation.

use cayint::presentation::{build_gij, parse_presentation, todd_coxeter, todd_coxeter_with_order, DEFAULT_MAX_COSETS};

fn main() {
    let text = "<x,y | x^3=y^4=y^-1xyxy^-1x=x^-1y^-1(x^-1y)^2=(xy)^3=1>";
    let p = parse_presentation(text).unwrap();
    let g = todd_coxeter(&p, DEFAULT_MAX_COSETS).unwrap();
    println!("{text}");
    println!("  order {}, generators {:?}", g.order(), g.generators());

    // relators may be listed in any order; the enumerated order is the same
    let reversed: Vec<usize> = (0..p.relators().len()).rev().collect();
    let n = todd_coxeter_with_order(&p.with_relator_order(&reversed), DEFAULT_MAX_COSETS).unwrap();
    println!("  reversed relators: order {n}");

    for (i, j) in [(3, 4), (4, 6), (6, 4)] {
        let p = build_gij(i, j).unwrap();
        let g = todd_coxeter(&p, DEFAULT_MAX_COSETS).unwrap();
        println!("G({i},{j}) has order {}", g.order());
    }

    match parse_presentation("<x | x^>") {
        Ok(_) => unreachable!(),
        Err(e) => println!("bad input: {e}"),
    }
}
