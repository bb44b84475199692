//! Replays the whole catalog of worked examples and prints each comparison
//! row: the computed quantity, the relation, and the published reference
//! value it is checked against.
//!
//! Run with: cargo run --example worked_examples

use psdrank::report::{reproduce, EXAMPLE_IDS};

fn main() -> psdrank::Result<()> {
    let mut all = true;
    for id in EXAMPLE_IDS {
        let report = reproduce(id, 0)?;
        println!("== {id} ==");
        for row in &report.rows {
            println!(
                "  {:<44} {:>14.6} {} {:<14.6} {}",
                row.quantity,
                row.computed_value,
                row.relation,
                row.reference_value,
                if row.pass { "pass" } else { "FAIL" }
            );
        }
        all &= report.pass;
    }
    println!();
    println!("overall: {}", if all { "all rows pass" } else { "FAILURES present" });
    std::process::exit(if all { 0 } else { 1 });
}
