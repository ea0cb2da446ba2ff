//! Joint spectrum of the Jucys–Murphy sums J_S = Σ F_ij and
//! J_B = Σ (F_ij − W_ij), compared with the irrep pairs the easy rules
//! predict.
//!
//! ```text
//! cargo run --example jucys_murphy
//! ```

use monogamy::diagram::{jm_sum_brauer, jm_sum_sym};
use monogamy::extendibility::omega::{easy_pairs, jb_eigenvalue, js_eigenvalue};
use monogamy::operator::to_f64;
use monogamy::spectral::joint_spectrum;

pub fn run_example() -> monogamy::Result<()> {
    let (n, d) = (3, 3);
    let joint = joint_spectrum(&jm_sum_sym(n, d)?, &jm_sum_brauer(n, d)?)?;
    println!("joint eigenvalues of (J_S, J_B) at n = {n}, d = {d}:");
    for &(a, b, m) in joint.pairs() {
        println!("  ({:>5.1}, {:>5.1}) × {m}", tidy(a), tidy(b));
    }
    println!("pairs from the easy rules:");
    for (lambda, mu) in easy_pairs(n, d) {
        let (a, b) = (to_f64(js_eigenvalue(&mu)), to_f64(jb_eigenvalue(&lambda, n, d)));
        let seen = joint.multiplicity_of(a, b, 1e-8) > 0;
        println!("  λ = {lambda:<8} μ = {mu:<8} → ({a:>5.1}, {b:>5.1}) present: {seen}");
    }
    Ok(())
}

fn tidy(x: f64) -> f64 {
    (x * 1e6).round() / 1e6 + 0.0
}

#[allow(dead_code)]
fn main() -> monogamy::Result<()> {
    run_example()
}
