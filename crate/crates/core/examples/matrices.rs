//! 0-1 matrix patterns: containment, the polarity construction, stacking
//! and inflation, and the exact Zarankiewicz search.
//!
//! Run with `cargo run --release --example matrices`.

use lettermethod::matrix01::{inflate, mat_contains, mat_ex_exact, polarity_construction, stack, Matrix01};
use lettermethod::search::Budget;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let square = Matrix01::all_ones(&[2, 2])?;
    for q in [2, 3, 4, 5] {
        let m = polarity_construction(q)?;
        println!("q = {q}: side {}, {} ones, avoids 2x2: {}", m.dims()[0], m.one_count(), !mat_contains(&m, &square)?);
    }
    println!("{}", polarity_construction(2)?.text_grid().unwrap());

    for n in 1..=5 {
        let record = mat_ex_exact(n, &square, &Budget::default())?;
        println!("ex({n}, 2x2 all-ones, 2) = {}", record.value);
    }

    let lifted = inflate(&polarity_construction(2)?, 2, 7)?;
    let pair = stack(&Matrix01::all_ones(&[2, 1])?, 2)?;
    println!(
        "inflated: dims {:?}, {} ones, contains stacked column pair: {}",
        lifted.dims(),
        lifted.one_count(),
        mat_contains(&lifted, &pair)?
    );

    let pattern = Matrix01::from_rows(&["110", "011"])?;
    println!("staircase in polarity q=3: {}", mat_contains(&polarity_construction(3)?, &pattern)?);
    Ok(())
}
