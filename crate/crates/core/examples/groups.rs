//! Build groups from constructions and inspect their structure.

use cayint::group::{isomorphic, ActionTable};
use cayint::GroupTable;

fn main() {
    let c3 = GroupTable::cyclic(3).unwrap();
    let c4 = GroupTable::cyclic(4).unwrap();
    // generator of C4 inverts C3
    let inversion: Vec<usize> = (0..3).map(|x| c3.inv(x)).collect();
    let act = ActionTable::cyclic(&c3, &c4, 1, inversion).unwrap();
    let g = GroupTable::semidirect_product(&c3, &c4, &act).unwrap();

    println!("order {}, exponent {}, abelian {}", g.order(), g.exponent(), g.is_abelian());
    println!("element orders {:?}", g.order_spectrum());
    println!("center has {} elements", g.center().len());
    let classes = g.conjugacy_classes();
    println!("{} classes, sizes {:?}", classes.len(), classes.iter().map(Vec::len).collect::<Vec<_>>());

    for n in g.normal_subgroups().unwrap() {
        let q = g.quotient_group(&n).unwrap();
        println!("normal subgroup of order {:>2} -> quotient of order {}", n.len(), q.order());
    }

    let dic12 = cayint::catalog::catalog("C3_rtimes_C4").unwrap();
    println!("isomorphic to the presented C3_rtimes_C4: {}", isomorphic(&g, &dic12).unwrap());

    let q8 = GroupTable::quaternion();
    let d8 = GroupTable::dihedral(4).unwrap();
    println!("Q8 vs D8 isomorphic: {}", isomorphic(&q8, &d8).unwrap());
}
