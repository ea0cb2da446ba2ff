//! Brauer diagrams as operators on (C^d)^⊗n: composition with loop
//! counting agrees with the matrix product.
//!
//! ```text
//! cargo run --example brauer_diagrams
//! ```

use monogamy::diagram::{pair_operators, projectors, BrauerDiagram, Endpoint};
use monogamy::int;

pub fn run_example() -> monogamy::Result<()> {
    let n = 3;
    let d = 2;
    let a = BrauerDiagram::bar(n, 0, 1)?;
    let b = BrauerDiagram::from_permutation(&[2, 0, 1])?;
    let (c, loops) = BrauerDiagram::compose(&a, &a)?;
    println!("a = {a}\nb = {b}");
    println!("a·a = d^{loops} · {c}");

    let lhs = &a.matrix_rep(d)? * &b.matrix_rep(d)?;
    let (ab, l) = BrauerDiagram::compose(&a, &b)?;
    let rhs = ab.matrix_rep(d)?.scaled(int((d as i128).pow(l as u32)));
    println!("ψ(a)ψ(b) = d^{l} ψ(a·b): {}", lhs == rhs);

    let cup = BrauerDiagram::from_pairs(
        2,
        &[(Endpoint::In(0), Endpoint::In(1)), (Endpoint::Out(0), Endpoint::Out(1))],
    )?;
    let (w, i, f) = pair_operators(d)?;
    println!("ψ(cup) = W: {}, ψ(swap) = F: {}", cup.matrix_rep(d)? == w, BrauerDiagram::transposition(2, 0, 1)?.matrix_rep(d)? == f);
    println!("Tr W = {}, Tr I = {}, Tr F = {}", w.trace(), i.trace(), f.trace());

    let (p0, pa, ps) = projectors(3)?;
    println!(
        "d = 3 projector traces: Π_∅ {}, Π_(1,1) {}, Π_(2) {}; sum is I: {}",
        p0.trace(),
        pa.trace(),
        ps.trace(),
        &(&p0 + &pa) + &ps == monogamy::operator::SiteOperator::identity(2, 3)
    );
    println!("|Br_3| = {}", BrauerDiagram::all(3).len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> monogamy::Result<()> {
    run_example()
}
