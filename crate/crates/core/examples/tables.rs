//! Counts of permutations by rev-tier, exact and cumulative.
//!
//!     cargo run --release --example tables -- 9

use revtier::tables::{exact_tier_table, refined_counts_bruteforce, refined_counts_recurrence};

fn main() -> revtier::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);

    let exact = exact_tier_table(max_n)?;
    print!("{}", exact.to_text());
    println!();
    print!("{}", exact.cumulative().to_csv());

    // the insertion recurrences reproduce the brute-force refined counts
    let brute = refined_counts_bruteforce(max_n.min(8))?;
    let rec = refined_counts_recurrence(max_n.min(8))?;
    println!("\nrefined counts agree: {}", brute == rec);
    println!("mu_U(7, 1, 4) = {}", rec.mu_u(7, 1, 4));
    Ok(())
}
