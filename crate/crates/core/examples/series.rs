//! Generating functions for up-oriented permutations and for fixed rev-tier.

use revtier::series::{catalan_series, mu_u_series, tier_series};

fn main() -> revtier::Result<()> {
    let order = 12;
    println!("C(x)    = {}", catalan_series(order));
    for j in 0..=2 {
        println!("M^U_{j}  = {}", mu_u_series(j, order)?);
    }
    for t in 0..=2 {
        let coeffs = tier_series(t, order)?.to_integers()?;
        println!("tier {t}: {:?}", coeffs);
    }
    Ok(())
}
