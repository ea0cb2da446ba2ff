//! Young diagram combinatorics: contents, hooks, irrep dimensions and
//! characters.
//!
//! ```text
//! cargo run --example young_diagrams
//! ```

use monogamy::partitions::{
    all_partitions, enumerate_brauer_irreps, enumerate_sym_irreps, mn_character, optimal_rectangular_partition,
    shifted_schur_11, CycleType, Partition,
};

pub fn run_example() -> monogamy::Result<()> {
    let lambda = Partition::new(vec![3, 3, 1])?;
    println!("λ = {lambda}, λ′ = {}, cont(λ) = {}", lambda.conjugate(), lambda.content());
    println!("hooks {:?}, d(λ) = {}, m_3(λ) = {}", lambda.hooks(), lambda.sym_dim(), lambda.gl_dim(3)?);

    let (n, d) = (4, 2);
    let total: u128 = enumerate_sym_irreps(n, d).iter().map(|mu| mu.sym_dim() * mu.gl_dim(d).unwrap()).sum();
    println!("Σ d(μ)·m_{d}(μ) over μ ⊢ {n} = {total} = {d}^{n}");

    let labels: Vec<String> = enumerate_brauer_irreps(n, d).iter().map(|l| l.to_string()).collect();
    println!("orthogonal labels for n = {n}, d = {d}: {}", labels.join(" "));

    let classes = all_partitions(4);
    let header: Vec<String> = classes.iter().map(|c| format!("{:>10}", c.to_string())).collect();
    println!("character table of S_4, rows λ, columns cycle types:");
    println!("  {:<10}{}", "", header.join(""));
    for l in all_partitions(4) {
        let row: Vec<String> = classes
            .iter()
            .map(|ct| format!("{:>10}", mn_character(&l, &CycleType::new(ct.clone())).unwrap()))
            .collect();
        println!("  {:<10}{}", l.to_string(), row.join(""));
    }

    let (n, d) = (7, 3);
    let rect = optimal_rectangular_partition(n, d);
    let value = shifted_schur_11(&rect, d)? / monogamy::int((n * (n - 1)) as i128);
    println!("most rectangular λ ⊢ {n} in {d} rows: {rect}; s*(1,1)/(n(n−1)) = {value}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> monogamy::Result<()> {
    run_example()
}
