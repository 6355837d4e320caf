//! Print the 24-scaled reference table for m < n <= 6.

use mstable_psi::io::{format_table, TableFormat};
use mstable_psi::Engine;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(6);
    let engine = Engine::new();
    print!(
        "{}",
        format_table(&engine, n_max, true, TableFormat::Pretty)?
    );
    println!("\n{} values memoized", engine.memo().len());
    Ok(())
}
