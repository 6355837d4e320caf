//! Evaluate a single m-stable number given in tau notation.
//!
//!     cargo run --example compute_symbol -- 3 "t0^4 t5"

use mstable_psi::io::{format_value, parse_tau_word};
use mstable_psi::symbol::tau_to_symbol;
use mstable_psi::Engine;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().as_deref().unwrap_or("3").parse()?;
    let word = args.next().unwrap_or_else(|| "t0^4 t5".to_string());

    let sym = tau_to_symbol(&parse_tau_word(&word)?, m)?;
    let value = Engine::new().value(&sym)?;
    println!("{sym} = {value}  (x24: {})", format_value(&value, true));
    Ok(())
}
