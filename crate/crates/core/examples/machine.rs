//! Stacks in series: k stacks sort exactly the permutations of rev-tier below k.

use revtier::pairs::rev_tier;
use revtier::perm::Lexicographic;
use revtier::sorter::series_machine_sort;

fn main() -> revtier::Result<()> {
    let n = 6;
    for k in 1..=4 {
        let mut sorted = 0;
        let mut agree = true;
        for p in Lexicographic::new(n)? {
            let ok = series_machine_sort(&p, k).sorted;
            sorted += ok as usize;
            agree &= ok == (rev_tier(p.values()) < k);
        }
        println!("{k} stack(s): {sorted} of 720 sorted, matches rev-tier: {agree}");
    }

    let run = series_machine_sort(&"2413".parse()?, 3);
    println!("2413 with 3 stacks: {} moves, sorted {}", run.moves.len(), run.sorted);
    Ok(())
}
