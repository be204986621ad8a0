//! Runs every machine check over all graphs on at most four vertices.

use symreg::verify::{run_suite, CheckConfig, InstanceKind, SuiteConfig};

fn main() -> symreg::Result<()> {
    let config = SuiteConfig::exhaustive(InstanceKind::Graph, 4, CheckConfig::new(2));
    let report = run_suite(&config)?;
    println!("{} instances, {} records", report.instance_count, report.records.len());
    print!("{}", report.summary_csv());
    for failure in report.failures() {
        println!("FAIL {}", serde_json::to_string(failure).unwrap());
    }
    println!("all passed: {}", report.all_passed());
    Ok(())
}
