mod common;

use common::hosts::random_host;
use lettermethod::arith::binomial;
use lettermethod::extremal::ex_exact;
use lettermethod::hypercore::{build_k_h_t, cycle, matching, Hypergraph};
use lettermethod::lettering::{
    lemma2_audit, letter_transform, low_degree_profile, validate_lettering, LetteredHypergraph, LetteringError,
};
use lettermethod::search::Budget;
use num::bigint::BigUint;
use proptest::prelude::*;

fn arb_graph(n: usize) -> impl Strategy<Value = Hypergraph> {
    let all = common::edges_of(n, 3);
    proptest::collection::vec(any::<bool>(), all.len()).prop_map(move |pick| {
        let edges: Vec<Vec<u32>> = all.iter().zip(&pick).filter(|(_, &p)| p).map(|(e, _)| e.clone()).collect();
        Hypergraph::new(n, 3, edges).unwrap()
    })
}

proptest! {
    #[test]
    fn greedy_lettering_deletes_at_most_n_k_minus_one(g in arb_graph(6), k in 1usize..5) {
        let l = letter_transform(&g, k);
        let report = validate_lettering(&l, Some(k));
        prop_assert!(report.valid);
        prop_assert!(report.multiplicities.iter().all(|&m| m == k));
        prop_assert!(g.edge_count() - l.base().edge_count() <= 6 * (k - 1));
        // the greedy count is the floor sum over greatest-vertex groups
        let floor_sum: usize = (0..6u32)
            .map(|v| g.edges().iter().filter(|e| *e.last().unwrap() == v).count() / k)
            .sum();
        prop_assert_eq!(l.letter_count(), floor_sum);
    }

    #[test]
    fn profile_partitions_the_edges(g in arb_graph(6)) {
        let profile = low_degree_profile(&g).unwrap();
        prop_assert_eq!(profile.values().sum::<usize>(), g.edge_count());
        for (z, &deg) in &profile {
            let direct = g.edges().iter().filter(|e| &e[..2] == z.as_slice()).count();
            prop_assert_eq!(deg, direct);
        }
    }

    #[test]
    fn lettered_text_round_trips(g in arb_graph(5), k in 1usize..3) {
        let l = letter_transform(&g, k);
        prop_assert_eq!(LetteredHypergraph::parse_text(&l.to_text()).unwrap(), l);
    }

    #[test]
    fn audits_of_random_free_hosts(seed in any::<u64>(), which in 0usize..3, t in 2usize..4) {
        let h = [matching(1, 2).unwrap(), matching(2, 2).unwrap(), cycle(4).unwrap()][which].clone();
        let host = random_host(&h, 6, t, seed);
        let ex = ex_exact(6, &h, &Budget::default()).unwrap().value as u64;
        let audit = lemma2_audit(&host.lettered, &h, t, ex, true).unwrap();
        prop_assert!(audit.verdicts.all(), "{:?}", audit.verdicts);
        let tuples: BigUint = audit.deg_profile.iter().map(|(_, deg)| binomial(*deg as u64, t as u64)).sum();
        prop_assert_eq!(&tuples, &audit.tuple_count);
        prop_assert!(tuples <= binomial(audit.r as u64, t as u64) * ex);
        prop_assert_eq!(audit.k * audit.r, host.lettered.base().edge_count());
        prop_assert_eq!(audit.k, if audit.r == 0 { 0 } else { host.k });
    }
}

#[test]
fn audit_rejects_a_host_containing_the_pattern() {
    let h = matching(1, 2).unwrap();
    let k22 = build_k_h_t(&h, 2).unwrap();
    let l = letter_transform(&k22, 1);
    match lemma2_audit(&l, &h, 2, 1, true) {
        Err(LetteringError::NotKHtFree(copy)) => assert_eq!(copy.edges.len(), 4),
        other => panic!("expected a copy, got {other:?}"),
    }
}

#[test]
fn audit_rejects_mixed_multiplicities() {
    let g = Hypergraph::new(4, 2, [[0, 3], [1, 3], [2, 3]]).unwrap();
    let l = LetteredHypergraph::new(g, vec![0, 0, 1]).unwrap();
    assert!(matches!(
        lemma2_audit(&l, &matching(1, 2).unwrap(), 2, 1, false),
        Err(LetteringError::NotUniformMultiplicity(_))
    ));
}

#[test]
fn lettering_rule_is_enforced() {
    let g = Hypergraph::new(4, 2, [[0, 2], [1, 3]]).unwrap();
    assert!(matches!(LetteredHypergraph::new(g, vec![0, 0]), Err(LetteringError::InvalidLettering(_))));
}
