//! Compute an error-term degree symbolically in the Chow ring of the
//! projectivized normal bundle and compare with the closed form.

use mstable_psi::chow::{closed_form_error, error_contribution, BlockShape, ChowOracle, Variant};
use mstable_psi::recursion::initial_condition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let oracle = ChowOracle::new();
    let cases = [
        (Variant::A, 1, vec![vec![0, 0, 0]], 4),
        (Variant::B, 2, vec![vec![1, 0, 0]], 4),
        (Variant::C, 2, vec![vec![0, 0]], 3),
        (Variant::A, 2, vec![vec![0, 0], vec![0, 0]], 5),
        (Variant::C, 3, vec![vec![0, 0], vec![1, 0, 0]], 5),
    ];
    for (variant, m, blocks, d) in cases {
        let shape = BlockShape::new(m, blocks.clone(), initial_condition(m))?;
        let n = shape.check(variant, d)?;
        let q0 = oracle.leading_coefficient(variant, shape.k(), d)?;
        println!("variant {variant}, m={m}, n={n}, blocks {blocks:?}, d={d}");
        println!("  eta^{} coefficient: {q0}", shape.k() - 1);
        println!(
            "  deg Z = {}  closed form = {}  recursion term = {}",
            oracle.deg_z(variant, &shape, d)?,
            closed_form_error(variant, &shape, d)?,
            error_contribution(variant, &shape, d)?
        );
    }
    Ok(())
}
