//! Werner values on even cycles at d = 2: the antiferromagnetic Heisenberg
//! ring, approaching ln 2 from above.
//!
//! ```text
//! cargo run --release --example heisenberg_cycle
//! ```

use monogamy::extendibility::oracle::cycle_werner_value;
use monogamy::extendibility::LN_2;

pub fn run_example() -> monogamy::Result<()> {
    for n in (4..=10).step_by(2) {
        let v = cycle_werner_value(n)?;
        println!("C_{n:<2} {v:.12}  (above ln 2 by {:.3e})", v - LN_2);
    }
    println!("ln 2 = {LN_2:.12}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> monogamy::Result<()> {
    run_example()
}
