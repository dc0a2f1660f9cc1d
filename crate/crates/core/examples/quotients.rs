//! Non-abelian exponent-12 quotients of the two-generator groups G(i,j).

use cayint::catalog::{catalog, quotients, QuotientFilter};
use cayint::presentation::GIJ_EXPONENTS;

fn main() {
    let filter = QuotientFilter::parse("nonabelian,exponent=12").unwrap();
    for i in GIJ_EXPONENTS {
        for j in GIJ_EXPONENTS {
            let g = catalog(&format!("G{i}{j}")).unwrap();
            let found: Vec<String> = quotients(&g, filter)
                .unwrap()
                .into_iter()
                .map(|r| r.identified.unwrap_or_else(|| format!("order {}", r.quotient_order)))
                .collect();
            println!("G{i}{j} (order {:>2}): {:?}", g.order(), found);
        }
    }
}
