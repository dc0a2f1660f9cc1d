//! Exhaustive integrality check of every Cayley graph on one group.

use cayint::catalog::catalog;
use cayint::search::{is_cayley_integral, SearchOptions, Strategy};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "Q8xC2".into());
    let g = catalog(&name).unwrap();
    for strategy in [Strategy::Matrix, Strategy::Auto] {
        let v = is_cayley_integral(&g, &SearchOptions::default().with_strategy(strategy)).unwrap();
        println!(
            "{name} {strategy:?}: integral {} after {} of {} sets {:?}",
            v.cayley_integral, v.sets_checked, v.total_sets, v.method_breakdown
        );
        if let Some(w) = v.witness {
            println!("  witness {:?}: {}", w.set.words(&g), w.report.display());
        }
    }
}
