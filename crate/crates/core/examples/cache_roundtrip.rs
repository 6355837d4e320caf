//! Persist memoized values to a plain-text cache and seed a fresh engine.

use mstable_psi::io::{cache_load, cache_save, CacheRecord};
use mstable_psi::{Engine, IntersectionSymbol};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::temp_dir().join("mstable-psi-example.cache");

    let engine = Engine::new();
    let sym = IntersectionSymbol::new(&[3, 2, 1, 0, 0, 0], 4)?;
    let value = engine.value(&sym)?;
    let records: Vec<CacheRecord> = engine
        .memo()
        .snapshot()
        .into_iter()
        .map(|(s, v)| CacheRecord::new(&s, v))
        .collect();
    cache_save(&path, &records)?;
    println!(
        "{sym} = {value}; wrote {} records to {}",
        records.len(),
        path.display()
    );

    let loaded = cache_load(&path)?;
    let fresh = Engine::new();
    fresh.seed(
        loaded
            .iter()
            .map(|r| (r.symbol().unwrap(), r.value.clone())),
    );
    assert_eq!(fresh.value(&sym)?, value);
    println!("reloaded {} records, value matches", loaded.len());
    for r in loaded.iter().take(5) {
        println!("  {}", r.to_line());
    }
    std::fs::remove_file(&path)?;
    Ok(())
}
