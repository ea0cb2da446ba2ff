//! Perfect matchings of K_n and the global state that mixes maximally
//! entangled pairs along them.
//!
//! ```text
//! cargo run --example matching_states
//! ```

use monogamy::extendibility::states::{
    isotropic_prime_state, matching_lower_bound_state, matching_marginal_parameter, reduced_state,
};
use monogamy::graphs::{perfect_matchings, Graph};

pub fn run_example() -> monogamy::Result<()> {
    let k4 = Graph::complete(4)?;
    for m in perfect_matchings(&k4) {
        println!("matching: {m}");
    }
    for n in 2..=10 {
        println!("K_{n}: {} perfect matchings", perfect_matchings(&Graph::complete(n)?).len());
    }
    for (n, d) in [(4, 2), (5, 2), (3, 3)] {
        let rho = matching_lower_bound_state(n, d)?;
        let p = matching_marginal_parameter(n);
        let ok = reduced_state(&rho, (0, 1), n, d)? == isotropic_prime_state(p, d)?;
        println!("n = {n}, d = {d}: edge marginal is isotropic with p′ = {p}: {ok}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> monogamy::Result<()> {
    run_example()
}
