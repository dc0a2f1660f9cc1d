//! Classify the whole catalog, in parallel when more than one worker is asked for.

use cayint::catalog::ALL;
use cayint::search::{classify_catalog, SearchOptions};

fn main() {
    let jobs = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let verdicts = classify_catalog(ALL, &SearchOptions::default().with_jobs(jobs)).unwrap();
    let (yes, no): (Vec<_>, Vec<_>) = verdicts.iter().partition(|v| v.cayley_integral);
    println!("Cayley integral: {}", yes.iter().map(|v| v.group.as_str()).collect::<Vec<_>>().join(" "));
    println!("not:");
    for v in no {
        let w = v.witness.as_ref().unwrap();
        println!("  {:<16} {}", v.group, w.report.display());
    }
}
