//! Regenerates every published table and prints the diff summary.

use deuring::verify::{table_ids, verify_table};

fn main() {
    let mut passed = 0;
    let ids = table_ids();
    for id in &ids {
        let report = verify_table(id).unwrap();
        println!("{}", report.status_line());
        passed += usize::from(report.passed());
    }
    println!("{passed} of {} tables match", ids.len());
    if let Some(id) = std::env::args().nth(1) {
        println!("\n{}", verify_table(&id).unwrap().diff());
    }
}
