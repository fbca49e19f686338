//! Dependent random choice on concrete hosts: exact expectations, the
//! witness search and a small exhaustive sweep.
//!
//! Run with `cargo run --release --example dependent_random_choice`.

use lettermethod::drc::{drc_check, drc_witness, neighbor_sets, sweep, DrcBudget, DrcInstance, SweepConfig};
use lettermethod::hypercore::complete;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = complete(3, 6)?;
    let nbrs = neighbor_sets(&g)?;
    println!("|N(0)| = {}, common neighbors of {{0, 1}}: {}", nbrs.degree(0), nbrs.common_count(&[0, 1]));

    let inst = DrcInstance::new(g.clone(), 1, 2, 0, 1)?;
    let report = drc_check(&inst, &DrcBudget::default())?;
    println!("hypothesis left side {} (holds: {})", report.hypothesis_lhs, report.hypothesis_holds);
    println!("E[X] = {} >= {}", report.ex.exact, report.ex.jensen_bound);
    println!("E[Y] = {} <= {}", report.ey.exact, report.ey.bound);
    println!("witness: {:?}", report.witness.map(|w| w.set));

    // too many sample choices for exhaustive search: sampling needs a seed
    let big = DrcInstance::new(g, 4, 2, 3, 1)?;
    let budget = DrcBudget { exhaustive_limit: 1_000, samples: 500, seed: Some(42) };
    let w = drc_witness(&big, &budget)?;
    println!("sampled witness {:?} from {:?}", w.set, w.sample);

    let small = sweep(&SweepConfig { n: 4, max_edges: 4, ..SweepConfig::default() })?;
    println!(
        "sweep: {} hypergraphs, {} instances, {} violations",
        small.hypergraphs,
        small.instances,
        small.violations.len()
    );
    Ok(())
}
