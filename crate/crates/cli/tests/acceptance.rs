//! Every acceptance criterion at every prime it names, without a budget.
//! Prints one line per criterion.

use tauq_cli::acceptance::{Suite, CRITERIA};

#[test]
fn acceptance() {
    let suite = Suite::exhaustive();
    let reports = suite.run_all(|r| println!("{}", r.line()));
    assert_eq!(reports.len(), CRITERIA.len());
    for r in &reports {
        for note in &r.notes {
            println!("    note: {note}");
        }
        for f in &r.failures {
            println!("    failure: {f}");
        }
        for s in &r.skips {
            println!("    {s}");
        }
    }
    let failed: Vec<u32> = reports.iter().filter(|r| r.failed()).map(|r| r.id).collect();
    let skipped: Vec<u32> = reports.iter().filter(|r| !r.skips.is_empty()).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
    assert!(skipped.is_empty(), "criteria with budget skips: {skipped:?}");
}
