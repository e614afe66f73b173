//! The bijection f from alternating permutations onto maximal rev-tier ones.
//!
//!     cargo run --example bijection -- 21534

use revtier::entringer::{bijection_f, bijection_f_inverse, enumerate_alternating};
use revtier::Permutation;

fn main() -> revtier::Result<()> {
    if let Some(arg) = std::env::args().nth(1) {
        let pi: Permutation = arg.parse()?;
        let sigma = bijection_f(&pi)?;
        println!("f({pi}) = {sigma}");
        println!("f^-1({sigma}) = {}", bijection_f_inverse(&sigma)?);
        return Ok(());
    }
    for pi in enumerate_alternating(5, None)? {
        let sigma = bijection_f(&pi)?;
        println!("{pi} -> {sigma}  (1 at position {})", sigma.position_of_one().unwrap());
    }
    Ok(())
}
