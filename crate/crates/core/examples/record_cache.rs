//! Persisting exact records in a checksummed cache directory.
//!
//! Run with `cargo run --release --example record_cache`.

use lettermethod::extremal::{ex_exact, RecordCache, RecordKind};
use lettermethod::hypercore::cycle;
use lettermethod::search::Budget;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("lettermethod-example-cache");
    let cache = RecordCache::new(&dir);
    let c4 = cycle(4)?;

    let record = ex_exact(6, &c4, &Budget::default())?;
    let path = cache.store(&record)?.expect("exact records are stored");
    println!("stored {}", path.display());

    let hit = cache.get_or_compute(RecordKind::ExHypergraph, &record.params, || unreachable!("cached"))?;
    println!("loaded ex = {} from the cache", hit.value);

    // tampering is caught on load
    let text = std::fs::read_to_string(&path)?.replace("\"value\": 7", "\"value\": 8");
    std::fs::write(&path, text)?;
    match cache.load(RecordKind::ExHypergraph, &record.params) {
        Err(e) => println!("tampered record rejected: {e}"),
        Ok(_) => println!("tampered record accepted?"),
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
