//! Prints the network-family proposition report as CSV.
//!
//! Pass a vertex limit to run the exact solver on larger instances, e.g.
//! `cargo run --release --example propositions -- 20`.

use mcgraph::{proposition_report, ReportOptions};

fn main() -> mcgraph::Result<()> {
    let mut opts = ReportOptions::default();
    if let Some(n) = std::env::args().nth(1) {
        opts.max_exact_vertices = n.parse().expect("vertex limit must be an integer");
    }
    let report = proposition_report(opts)?;
    print!("{}", report.to_csv());
    eprintln!("{} rows, all agree: {}", report.rows.len(), report.all_agree());
    Ok(())
}
