//! Audits the low-degree counting argument on a lettered host.
//!
//! Run with `cargo run --example pigeonhole_audit`.

use lettermethod::extremal::ex_exact;
use lettermethod::hypercore::{build_k_h_t, contains, matching, Hypergraph};
use lettermethod::lettering::{lemma2_audit, letter_transform};
use lettermethod::search::Budget;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a triangle-free graph is K_(H,2)-free for H two singleton edges
    let h = matching(1, 2)?;
    let host = Hypergraph::new(6, 2, [[0, 3], [0, 4], [1, 4], [1, 5], [2, 3], [2, 5]])?;
    assert!(!contains(&host, &build_k_h_t(&h, 2)?)?);

    let lettered = letter_transform(&host, 1);
    let ex = ex_exact(6, &h, &Budget::default())?.value as u64;
    let audit = lemma2_audit(&lettered, &h, 2, ex, true)?;
    println!("profile deg(z): {:?}", audit.deg_profile);
    println!("sum C(deg(z), t) = {} <= C(r, t) ex = {}", audit.tuple_count, audit.pigeonhole_bound);
    println!("(t-1) p = {} >= k r - excess = {}", audit.chain_lhs, audit.chain_rhs);
    println!("all steps hold: {}", audit.verdicts.all());
    if let Some(p) = audit.forced_p_lower_bound() {
        println!("forced (t-1) p >= {p}");
    }
    Ok(())
}
