//! Run the builtin zoo through the consistency gate: measured growth on
//! one side, the symbolic calculus on the other, plus a seeded rescale
//! that must not move a single rank.

use gklab::cli::{builtin_zoo, verify_consistency, RunConfig};

fn main() {
    let config = RunConfig::default();
    let entries = builtin_zoo();
    let mut failed = 0;
    for entry in &entries {
        let report = verify_consistency(entry, &config);
        let tag = if report.passed { "PASS" } else { "FAIL" };
        println!("{tag} {}: {}", report.name, report.detail);
        if !report.passed {
            failed += 1;
        }
    }
    println!("{}/{} entries consistent", entries.len() - failed, entries.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
