//! Recompute stored results and compare with the golden records.

use cayint::repro::{run, TARGETS};

fn main() {
    let only = std::env::args().nth(1);
    for t in TARGETS.iter().filter(|t| only.as_deref().is_none_or(|id| id == t.id)) {
        let o = run(t.id, 1).unwrap();
        println!("{:<20} {:<5} {}", t.id, if o.matches() { "ok" } else { "DIFF" }, t.summary);
        for d in o.diff() {
            println!("    {:?}", d);
        }
    }
}
