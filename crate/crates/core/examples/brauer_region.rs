//! Brauer states in both parametrizations, and a coarse map of where they
//! are separable.
//!
//! ```text
//! cargo run --example brauer_region
//! ```

use monogamy::extendibility::{brauer_is_separable, is_positive_brauer_prime, BrauerParams};
use monogamy::{int, ratio};

pub fn run_example() -> monogamy::Result<()> {
    let d = 2;
    let s = BrauerParams::from_projector(ratio(3, 5), ratio(1, 10), d)?;
    println!("(p, q) = ({}, {}) ↔ (p′, q′) = ({}, {})", s.p, s.q, s.p_prime, s.q_prime);
    println!("separable: {}", brauer_is_separable(s.p, s.q, d)?);

    println!("d = {d}, rows q = 1 → 0, columns p = 0 → 1 (S separable, e entangled):");
    let steps = 10;
    for j in (0..=steps).rev() {
        let mut line = String::new();
        for i in 0..=steps - j {
            let (p, q) = (ratio(i, steps), ratio(j, steps));
            let params = BrauerParams::from_projector(p, q, d)?;
            let ppt = is_positive_brauer_prime(params.q_prime, params.p_prime, d);
            line.push(if ppt { 'S' } else { 'e' });
        }
        println!("  q = {:>4}  {line}", ratio(j, steps).to_string());
    }
    println!("maximally mixed state has (p′, q′) = (0, 0): {}", BrauerParams::from_prime(int(0), int(0), d)?.p == ratio(1, 4));
    Ok(())
}

#[allow(dead_code)]
fn main() -> monogamy::Result<()> {
    run_example()
}
