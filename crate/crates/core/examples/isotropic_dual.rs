//! The isotropic dual as a minimum of an upper envelope of lines, solved
//! exactly, and the same problem solved numerically from the Hamiltonian.
//!
//! ```text
//! cargo run --example isotropic_dual
//! ```

use monogamy::extendibility::dual::{dual_scan, isotropic_dual_solution, iso_dual_numeric, q0_dual_value, x_tilde};
use monogamy::ratio;

pub fn run_example() -> monogamy::Result<()> {
    let (n, d) = (5, 3);
    let (family, m) = isotropic_dual_solution(n, d)?;
    println!("{} affine functions for n = {n}, d = {d}", family.len());
    let at = match (&m.lo, &m.hi) {
        (Some(lo), Some(hi)) if lo == hi => format!("x = {lo}"),
        (lo, hi) => format!("x in [{}, {}]", show(lo), show(hi)),
    };
    println!("minimum {} at {at}; x̃ = {}", m.value, x_tilde(n, d));
    for &i in &m.active {
        println!("  active: {}", family[i]);
    }
    println!("golden section on λ_max(H(x)): {:.12}", iso_dual_numeric(n, d)?);
    println!("q = 0 Brauer dual at (3, 3): {}", q0_dual_value(3, 3)?);

    println!("x, envelope, λ_max at n = 4, d = 2:");
    for p in dual_scan(4, 2, ratio(-1, 4), ratio(1, 4), 6)? {
        println!("  {:>6} {:>8} {:.9}", p.x.to_string(), p.envelope.to_string(), p.numeric.unwrap_or(f64::NAN));
    }
    Ok(())
}

fn show(x: &Option<monogamy::Rational>) -> String {
    x.map_or("unbounded".into(), |x| x.to_string())
}

#[allow(dead_code)]
fn main() -> monogamy::Result<()> {
    run_example()
}
