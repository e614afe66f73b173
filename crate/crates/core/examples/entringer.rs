//! Entringer numbers against the permutations of maximal rev-tier.

use num_bigint::BigUint;
use revtier::entringer::{entringer_table, maximal_tier_family};

fn main() -> revtier::Result<()> {
    let e = entringer_table(8)?;
    print!("{}", e.to_text());

    let n = 7;
    let fam = maximal_tier_family(n)?;
    for (k, members) in &fam.members_by_k {
        let expect = e.get(n - 1, *k);
        println!(
            "R({n},{k}) = {:<3} E({},{k}) = {expect}  {}",
            members.len(),
            n - 1,
            if BigUint::from(members.len()) == expect { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
