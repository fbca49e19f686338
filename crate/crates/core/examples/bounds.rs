//! Exact parameter and bound arithmetic next to exact extremal values.
//!
//! Run with `cargo run --release --example bounds`.

use lettermethod::bounds::{factorial_bound_check, kst_parameters, theorem3_bound, ConstantMode, KHT_CONSTANT};
use lettermethod::extremal::ex_exact;
use lettermethod::hypercore::{build_k_h_t, cycle};
use lettermethod::search::Budget;
use num::rational::BigRational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = BigRational::from_integer(KHT_CONSTANT.into());
    let h = cycle(4)?;
    let kht = build_k_h_t(&h, 2)?;
    println!("   n  ex(C4)      k     r   bound  ex(K_(C4,2))");
    for n in 4..=6u64 {
        let ex = ex_exact(n as usize, &h, &Budget::default())?.value as u64;
        let p = kst_parameters(n, 2, 2, ex, &ConstantMode::Eight)?;
        let bound = theorem3_bound(n, 2, 2, ex, &c)?;
        let exact = ex_exact(n as usize, &kht, &Budget::default())?.value;
        println!("{n:4} {ex:7} {:6} {:5} {:7} {exact:13}", p.k, p.r, bound.value);
    }

    // the e-mode constant shrinks k and grows r
    let e = kst_parameters(1000, 2, 3, 5000, &ConstantMode::EUpper)?;
    let eight = kst_parameters(1000, 2, 3, 5000, &ConstantMode::Eight)?;
    println!("n = 1000: k = {} (e) vs {} (8), r = {} (e) vs {} (8)", e.k, eight.k, e.r, eight.r);

    let report = factorial_bound_check(300)?;
    println!("8^t t! > t^t for t <= 300: {} ({} checks)", report.passed, report.checks);
    Ok(())
}
