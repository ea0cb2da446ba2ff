//! Optimal values on complete and complete bipartite graphs, and their
//! limits.
//!
//! ```text
//! cargo run --example closed_forms
//! ```

use monogamy::extendibility::closed_form::bipartite_value;
use monogamy::extendibility::{asymptotic_limit, value, Limit, StateFamily};

pub fn run_example() -> monogamy::Result<()> {
    for family in StateFamily::ALL {
        println!("{} on K_n, d = 3:", family.symbol());
        let row: Vec<String> = (2..=9).map(|n| value(family, n, 3).unwrap().value.to_string()).collect();
        println!("  n = 2..9: {}", row.join(", "));
        println!(
            "  n → ∞: {}, d → ∞ at n = 5: {}",
            asymptotic_limit(family, Limit::ManySites { d: 3 })?,
            asymptotic_limit(family, Limit::LargeDimension { n: 5 })?
        );
    }
    let v = bipartite_value(2, 3, 2)?;
    println!("isotropic on {}: {} ({})", v.graph, v.value, v.method);
    Ok(())
}

#[allow(dead_code)]
fn main() -> monogamy::Result<()> {
    run_example()
}
