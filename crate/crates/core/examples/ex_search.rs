//! Exact Turán numbers with re-verifiable witnesses.
//!
//! Run with `cargo run --release --example ex_search`.

use lettermethod::extremal::{ex_exact, Witness};
use lettermethod::hypercore::{build_k_h_t, cycle, matching};
use lettermethod::search::Budget;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let budget = Budget::with_workers(4);
    let c4 = cycle(4)?;
    for n in 4..=7 {
        let record = ex_exact(n, &c4, &budget)?;
        record.verify()?;
        println!("ex_2({n}, C4) = {}", record.value);
    }

    // the witness is a maximum C4-free graph
    let record = ex_exact(7, &c4, &budget)?;
    if let Witness::Hypergraph(g) = &record.witness {
        println!("witness on 7 vertices:\n{}", g.to_text());
    }

    // a small budget returns a lower bound instead of failing
    let partial = ex_exact(8, &c4, &Budget::with_max_nodes(1_000))?;
    println!("ex_2(8, C4) >= {} (exact: {})", partial.value, partial.exact);

    let kht = build_k_h_t(&matching(2, 2)?, 2)?;
    println!("ex_3(6, K_(M2,2)) = {}", ex_exact(6, &kht, &budget)?.value);
    Ok(())
}
