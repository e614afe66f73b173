//! Rev-tier of a permutation, computed three ways.
//!
//!     cargo run --example tier -- 426135

use revtier::pairs::{rev_tier_by_pairs, rev_tier_by_pairs_dp};
use revtier::sorter::rev_tier_by_simulation;
use revtier::{Permutation, SeparatedPairProfile};

fn main() -> revtier::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2413".into());
    let p: Permutation = arg.parse()?;

    let (sim, _) = rev_tier_by_simulation(&p);
    let (greedy, witness) = rev_tier_by_pairs(&p);
    let dp = rev_tier_by_pairs_dp(&p);
    let profile = SeparatedPairProfile::of(&p);

    println!("{p}: rev-tier {sim} (pairs {greedy}, dp {dp})");
    println!("orientations {}  class {}", profile.signature(), profile.class_label);
    println!("witness pairs {witness:?}");
    Ok(())
}
