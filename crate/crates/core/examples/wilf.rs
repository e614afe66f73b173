//! 1 / (1 - x C(x C(x))) counts permutations of rev-tier at most 1.

use revtier::basis::enumerate_av;
use revtier::series::wilf_series;
use revtier::tables::cumulative_tier_table;

fn main() -> revtier::Result<()> {
    let n = 9;
    let gf = wilf_series(n + 1)?.to_integers()?;
    let table = cumulative_tier_table(n)?;
    let av = enumerate_av(&["4321".parse()?, "4213".parse()?], n)?;
    println!("{:>2} {:>8} {:>8} {:>8}", "n", "series", "sweep", "Av");
    for k in 1..=n {
        println!("{k:>2} {:>8} {:>8} {:>8}", gf[k], table.get(k, 1), av[k]);
    }
    Ok(())
}
