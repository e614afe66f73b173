//! Runs one invariant suite, the same as `revtier verify <suite>`.
//!
//!     cargo run --release --example verify -- pairs 8

use revtier::verify::{run, Suite};

fn main() -> revtier::Result<()> {
    let mut args = std::env::args().skip(1);
    let suite: Suite = args.next().as_deref().unwrap_or("pairs").parse()?;
    let max_n = args.next().and_then(|s| s.parse().ok()).unwrap_or(8);
    let report = run(suite, max_n)?;
    print!("{}", report.to_text());
    std::process::exit(if report.passed() { 0 } else { 1 });
}
