//! The optimal Werner state on K_n, built from a Young symmetrizer, reaches
//! the closed-form value exactly.
//!
//! ```text
//! cargo run --example werner_certificate
//! ```

use monogamy::extendibility::p_w_complete;
use monogamy::extendibility::states::werner_primal_certificate;
use monogamy::partitions::optimal_rectangular_partition;

pub fn run_example() -> monogamy::Result<()> {
    for (n, d) in [(3, 2), (4, 2), (5, 2), (4, 3), (5, 3)] {
        let (rho, achieved) = werner_primal_certificate(n, d)?;
        println!(
            "n = {n}, d = {d}: λ* = {}, {} nonzero entries, Tr[Π_(1,1) ρ_e] = {achieved} (closed form {})",
            optimal_rectangular_partition(n, d),
            rho.matrix().nnz(),
            p_w_complete(n, d)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> monogamy::Result<()> {
    run_example()
}
