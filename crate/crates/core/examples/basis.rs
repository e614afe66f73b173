//! Mines the basis of the permutations with rev-tier at most t.
//!
//!     cargo run --release --example basis -- 2 9

use revtier::basis::{compute_basis_with_progress, Strategy};

fn main() -> revtier::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().ok());
    let t = args.next().flatten().unwrap_or(2);
    let max_len = args.next().flatten().unwrap_or(3 * (t + 1)).min(9);

    let report = compute_basis_with_progress(t, max_len, Strategy::Extension, |n, c| {
        eprintln!("length {n}: {c}");
    })?;
    print!("{}", report.to_text());
    println!("histogram {:?}", report.histogram());
    if !report.complete {
        println!("searched up to length {max_len} only");
    }
    Ok(())
}
