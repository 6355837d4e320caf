//! Walk a symbol up through the levels with the reduction recursion and
//! compare against the string/dilaton driver at each level.

use mstable_psi::recursion::initial_condition;
use mstable_psi::{Engine, IntersectionSymbol, Strategy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let engine = Engine::new();
    let d = [5, 1, 0, 0, 0, 0];
    let top = d.len() - 1;
    let mut sym = IntersectionSymbol::new(&d, 0)?;
    println!("m=0  {sym} = {}", engine.value(&sym)?);
    for m in 1..top {
        let stepped = engine.reduce_step(&sym)?;
        sym = sym.at_level(m)?;
        let direct = engine.value(&sym)?;
        let mark = if stepped == direct { "ok" } else { "MISMATCH" };
        println!("m={m}  {sym} = {stepped}  (direct {direct}) {mark}");
    }

    // top powers at n = m+1 come back to m!/24
    for m in 1..=7 {
        let mut d = vec![0; m + 1];
        d[0] = m + 1;
        let v = engine.compute(&IntersectionSymbol::new(&d, m)?, Strategy::ViaReduction(0))?;
        println!(
            "<t{}>^{m} via reduction = {v}, m!/24 = {}",
            m + 1,
            initial_condition(m)
        );
    }
    Ok(())
}
