//! Run every check over a small grid and print the report table.
//!
//! ```text
//! cargo run --release --example verify_sweep -- 2,3:1-3
//! ```

use component_graphs::verify::{parse_grid, run_sweep, SweepConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let grid = std::env::args().nth(1).unwrap_or_else(|| "2,3:1-3".into());
    let (q, n) = parse_grid(&grid)?;
    let report = run_sweep(&SweepConfig { q, n, ..SweepConfig::default() })?;
    print!("{}", report.table(true));
    let s = report.summary();
    println!("json summary: {}", serde_json::to_string(&s)?);
    std::process::exit(report.exit_code());
}
