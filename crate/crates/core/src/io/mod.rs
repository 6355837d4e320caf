//! Text formats: τ-notation, the reference table and the result cache.

pub mod cache;
pub mod table;
pub mod tau;

pub use cache::{cache_load, cache_save, read_records, write_records, CacheRecord};
pub use table::{format_table, format_value, top_exponent_vectors, TableFormat};
pub use tau::{format_tau_word, parse_tau_word};
