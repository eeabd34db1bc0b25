//! Runs every verification suite with default options and prints the
//! summaries, findings included.

use mcgraph::{run_suite, Suite, VerifyOptions};

fn main() -> mcgraph::Result<()> {
    let seed = std::env::args().nth(1).map_or(0, |s| s.parse().expect("seed must be an integer"));
    for suite in [Suite::Core, Suite::Products, Suite::Bounds, Suite::Propositions] {
        let report = run_suite(suite, VerifyOptions { seed, ..VerifyOptions::for_suite(suite) })?;
        println!("{report}\n");
    }
    Ok(())
}
