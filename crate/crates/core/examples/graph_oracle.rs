//! Optimal values from the largest eigenvalue of edge-averaged
//! Hamiltonians, checked against the closed forms.
//!
//! ```text
//! cargo run --release --example graph_oracle
//! ```

use monogamy::extendibility::oracle::{p_avg_numeric, Which};
use monogamy::extendibility::{p_b_complete, p_iso_bipartite, p_w_complete};
use monogamy::graphs::Graph;
use monogamy::operator::to_f64;

pub fn run_example() -> monogamy::Result<()> {
    let d = 2;
    for n in 2..=8 {
        let g = Graph::complete(n)?;
        let w = p_avg_numeric(&g, Which::Werner, d)?;
        let b = p_avg_numeric(&g, Which::Brauer, d)?;
        println!(
            "K_{n}: werner {w:.12} (closed {:.12}), brauer {b:.12} (closed {:.12})",
            to_f64(p_w_complete(n, d)),
            to_f64(p_b_complete(n, d))
        );
    }
    let g = Graph::complete_bipartite(2, 3)?;
    println!(
        "{g}: brauer {:.12} vs {}",
        p_avg_numeric(&g, Which::Brauer, d)?,
        p_iso_bipartite(2, 3, d)
    );
    let star = Graph::star(4)?;
    println!("{star}: werner {:.12}", p_avg_numeric(&star, Which::Werner, d)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> monogamy::Result<()> {
    run_example()
}
