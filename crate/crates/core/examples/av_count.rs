//! Sizes of avoidance classes.

use revtier::basis::{b1, enumerate_av};
use revtier::Permutation;

fn main() -> revtier::Result<()> {
    let pair: Vec<Permutation> = vec!["4321".parse()?, "4213".parse()?];
    let a = enumerate_av(&pair, 9)?;
    let b = enumerate_av(&b1(), 9)?;
    println!("Av(4321, 4213)          {:?}", &a[1..]);
    println!("Av(2413, 2431, 23154)   {:?}", &b[1..]);
    println!("Av(231)                 {:?}", &enumerate_av(&["231".parse()?], 9)?[1..]);
    Ok(())
}
