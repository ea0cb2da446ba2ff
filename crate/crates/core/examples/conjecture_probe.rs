//! Grid comparison of the signed-weight and nonnegative-weight dual
//! problems on small graphs. A numerical observation only.
//!
//! ```text
//! cargo run --release --example conjecture_probe
//! ```

use monogamy::extendibility::oracle::{conjecture_probe, Which};
use monogamy::graphs::Graph;

pub fn run_example() -> monogamy::Result<()> {
    for g in [Graph::complete(2)?, Graph::complete(3)?, Graph::path(3)?, Graph::star(3)?] {
        for which in [Which::Werner, Which::Brauer] {
            println!("{}", conjecture_probe(&g, which, 2, 12)?);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> monogamy::Result<()> {
    run_example()
}
