//! Builds the standard forbidden hypergraphs and tests containment.
//!
//! Run with `cargo run --example containment`.

use lettermethod::hypercore::{build_k_h_t, build_k_h_t_s_r, complete, contains, cycle, find_embedding, matching};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c4 = cycle(4)?;
    let k22 = build_k_h_t(&matching(1, 2)?, 2)?;
    println!("C4:\n{}", c4.to_text());
    println!("K_(2,2) built from two singleton edges:\n{}", k22.to_text());

    // K_{H,t} for a 2-uniform H is 3-uniform
    let kht = build_k_h_t(&c4, 2)?;
    println!("K_(C4,2): {} vertices, {} edges, {}-uniform", kht.vertex_count(), kht.edge_count(), kht.uniformity());
    assert_eq!(build_k_h_t_s_r(&c4, 2, 2, 1)?, kht);

    let k5 = complete(2, 5)?;
    let map = find_embedding(&k5, &c4)?.expect("K5 contains every 4-vertex graph");
    println!("C4 -> K5 via {map:?}");
    println!("C5 contains C4: {}", contains(&cycle(5)?, &c4)?);
    Ok(())
}
