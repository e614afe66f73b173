//! Prints every push and pop of the reverse-pass machine.
//!
//!     cargo run --example trace -- 35241

use revtier::sorter::rev_tier_by_simulation;
use revtier::Permutation;

fn main() -> revtier::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2413".into());
    let p: Permutation = arg.parse()?;
    let (_, trace) = rev_tier_by_simulation(&p);
    print!("{}", trace.render_text(p.values()));
    for (i, pass) in trace.passes.iter().enumerate() {
        println!(
            "pass {}: input {:?} emitted {:?}",
            i + 1,
            pass.input_at_start,
            pass.emitted
        );
    }
    Ok(())
}
