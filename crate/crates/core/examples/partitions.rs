//! Enumerate m-partitions with their index, deficiencies and error weights.

use mstable_psi::combinatorics::{
    block_multinomial_product, deficiencies, enumerate_m_partitions, stirling2,
};
use mstable_psi::recursion::{error_sum, Parity};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = [5, 0, 0, 0, 0];
    let m = 3;
    println!(
        "{}-partitions of [{}], S({}, {m}) = {}",
        m,
        d.len(),
        d.len(),
        stirling2(d.len(), m)
    );
    for p in enumerate_m_partitions(d.len(), m) {
        let weight = block_multinomial_product(&p, &d);
        println!(
            "  {:?}  k={}  e={:?}  weight={weight}",
            p.blocks(),
            p.k(),
            deficiencies(&p, &d)?
        );
    }
    println!(
        "reduction error sum: {}",
        error_sum(&d, m, Parity::Reduction)?
    );
    println!(
        "string/dilaton error sum: {}",
        error_sum(&d, m, Parity::StringDilaton)?
    );
    Ok(())
}
