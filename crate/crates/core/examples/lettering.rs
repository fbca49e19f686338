//! Lettered hypergraphs: the greedy lettering, f searches and the
//! lettering inequality ex <= k (f + n).
//!
//! Run with `cargo run --release --example lettering`.

use lettermethod::extremal::{f_exact, verify_lemma1, Witness};
use lettermethod::hypercore::cycle;
use lettermethod::lettering::{letter_transform, validate_lettering};
use lettermethod::search::Budget;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c5 = cycle(5)?;
    let lettered = letter_transform(&c5, 2);
    let report = validate_lettering(&lettered, Some(2));
    println!("greedy lettering of C5 with k = 2: {} letters, valid = {}", report.letter_count, report.valid);
    print!("{}", lettered.to_text());

    let c4 = cycle(4)?;
    let budget = Budget::default();
    for k in 1..=3 {
        let f = f_exact(6, k, &c4, &budget)?;
        println!("f_2(6, {k}, C4) = {}", f.value);
        if let Witness::Lettered(l) = &f.witness {
            assert_eq!(validate_lettering(l, Some(k)).letter_count, f.value);
        }
    }

    for k in 1..=3 {
        let r = verify_lemma1(6, k, &c4, &budget)?;
        println!("k = {k}: ex = {} <= {} = k (f + n): {}", r.ex, r.rhs, r.holds);
    }
    Ok(())
}
