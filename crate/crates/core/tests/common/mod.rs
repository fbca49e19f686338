//! Independent brute-force oracles. None of them call the library's search
//! or containment code; they work on plain vectors and bitmasks.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num::rational::BigRational;
use num::BigInt;

pub type Edge = Vec<u32>;

/// All `k`-subsets of `0..n`, lexicographically.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn edges_of(n: usize, d: usize) -> Vec<Edge> {
    subsets(n, d).into_iter().map(|s| s.into_iter().map(|v| v as u32).collect()).collect()
}

fn sorted(mut e: Edge) -> Edge {
    e.sort_unstable();
    e
}

/// Does some injection `V(h) -> 0..g_n` map every edge of `h` onto an edge of `g`?
pub fn brute_contains(g_n: usize, g: &[Edge], h_n: usize, h: &[Edge]) -> bool {
    if h_n > g_n {
        return false;
    }
    let host: BTreeSet<Edge> = g.iter().cloned().map(sorted).collect();
    let mut image = vec![u32::MAX; h_n];
    let mut used = vec![false; g_n];
    fn rec(i: usize, image: &mut [u32], used: &mut [bool], host: &BTreeSet<Edge>, h: &[Edge]) -> bool {
        if i == image.len() {
            return h.iter().all(|e| host.contains(&sorted(e.iter().map(|&v| image[v as usize]).collect())));
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                image[i] = v as u32;
                if rec(i + 1, image, used, host, h) {
                    return true;
                }
                used[v] = false;
            }
        }
        false
    }
    rec(0, &mut image, &mut used, &host, h)
}

/// All `h`-free edge subsets of the complete `d`-uniform hypergraph on `n`
/// vertices, as lists of edges.
pub fn free_subgraphs(n: usize, d: usize, h_n: usize, h: &[Edge]) -> Vec<Vec<Edge>> {
    let all = edges_of(n, d);
    assert!(all.len() <= 20, "oracle universe too large");
    let mut out = Vec::new();
    for mask in 0u32..(1 << all.len()) {
        let g: Vec<Edge> = (0..all.len()).filter(|i| mask >> i & 1 == 1).map(|i| all[i].clone()).collect();
        if !brute_contains(n, &g, h_n, h) {
            out.push(g);
        }
    }
    out
}

/// `ex_d(n, h)` by enumerating every edge subset.
pub fn ex_oracle(n: usize, d: usize, h_n: usize, h: &[Edge]) -> usize {
    let all = edges_of(n, d);
    assert!(all.len() <= 20, "oracle universe too large");
    let mut best = 0;
    for mask in 0u32..(1 << all.len()) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let g: Vec<Edge> = (0..all.len()).filter(|i| mask >> i & 1 == 1).map(|i| all[i].clone()).collect();
        if !brute_contains(n, &g, h_n, h) {
            best = size;
        }
    }
    best
}

/// Most blocks in a partition of `edges` where each block has at least `k`
/// edges sharing a greatest vertex (i.e. most letters of a valid lettering).
pub fn max_letters(edges: &[Edge], k: usize) -> usize {
    fn rec(i: usize, edges: &[Edge], blocks: &mut Vec<(u32, usize)>, k: usize) -> Option<usize> {
        if i == edges.len() {
            return if blocks.iter().all(|&(_, size)| size >= k) { Some(blocks.len()) } else { None };
        }
        let top = *edges[i].iter().max().unwrap();
        let mut best = None;
        for b in 0..blocks.len() {
            if blocks[b].0 == top {
                blocks[b].1 += 1;
                best = best.max(rec(i + 1, edges, blocks, k));
                blocks[b].1 -= 1;
            }
        }
        blocks.push((top, 1));
        best = best.max(rec(i + 1, edges, blocks, k));
        blocks.pop();
        best
    }
    // the empty lettering of the empty hypergraph has zero letters; edges
    // that cannot be lettered make this graph useless, not negative
    rec(0, edges, &mut Vec::new(), k).unwrap_or(0)
}

/// `f_d(n, k, h)` by enumerating free hypergraphs and their letterings.
/// A lettered hypergraph may be any free subgraph, so only subgraphs whose
/// every edge is lettered count.
pub fn f_oracle(n: usize, d: usize, k: usize, h_n: usize, h: &[Edge]) -> usize {
    free_subgraphs(n, d, h_n, h).iter().map(|g| max_letters(g, k)).max().unwrap_or(0)
}

/// Whether `b` embeds in `a` by enumerating every tuple of strictly
/// increasing index maps.
pub fn matrix_contains_oracle(a_dims: &[usize], a: &BTreeSet<Vec<usize>>, b_dims: &[usize], b: &[Vec<usize>]) -> bool {
    let choices: Vec<Vec<Vec<usize>>> = a_dims.iter().zip(b_dims).map(|(&an, &bn)| subsets(an, bn)).collect();
    let mut pick = vec![0; choices.len()];
    if choices.iter().any(|c| c.is_empty()) {
        return false;
    }
    loop {
        let ok = b.iter().all(|one| {
            let img: Vec<usize> = one.iter().enumerate().map(|(j, &x)| choices[j][pick[j]][x]).collect();
            a.contains(&img)
        });
        if ok {
            return true;
        }
        let mut j = 0;
        loop {
            if j == pick.len() {
                return false;
            }
            pick[j] += 1;
            if pick[j] < choices[j].len() {
                break;
            }
            pick[j] = 0;
            j += 1;
        }
    }
}

/// Largest number of ones in an `n x n` matrix without a 2x2 all-ones
/// submatrix, choosing rows as bitmasks one at a time and rejecting a row
/// that shares two columns with an earlier one.
pub fn zarankiewicz_oracle(n: usize) -> usize {
    fn rec(rows: &mut Vec<u32>, n: usize, best: &mut usize, total: usize) {
        if rows.len() == n {
            *best = (*best).max(total);
            return;
        }
        // the remaining rows hold at most n ones each
        if total + (n - rows.len()) * n <= *best {
            return;
        }
        for mask in (0u32..1 << n).rev() {
            if rows.iter().all(|&r| (r & mask).count_ones() < 2) {
                rows.push(mask);
                rec(rows, n, best, total + mask.count_ones() as usize);
                rows.pop();
            }
        }
    }
    let mut best = 0;
    rec(&mut Vec::new(), n, &mut best, 0);
    best
}

/// Exhaustive expectations for dependent random choice: every ordered
/// sample of `t` `d`-sets is enumerated and `X`, `Y` evaluated from the
/// neighbor definition directly. `ey[i]` is `E[Y]` for threshold `xs[i]`.
pub struct DrcOracle {
    pub ex: BigRational,
    pub ey: Vec<BigRational>,
}

pub fn drc_oracle(n: usize, uniformity: usize, edges: &[Edge], t: u32, r: usize, xs: &[u64]) -> DrcOracle {
    let d = uniformity - 1;
    let host: BTreeSet<Edge> = edges.iter().cloned().map(sorted).collect();
    let neighbors = |v: usize, s: &[usize]| -> bool {
        if s.contains(&v) {
            return false;
        }
        let mut e: Edge = s.iter().map(|&u| u as u32).collect();
        e.push(v as u32);
        host.contains(&sorted(e))
    };
    let dsets = subsets(n, d);
    let rsets: Vec<(Vec<usize>, u64)> = subsets(n, r)
        .into_iter()
        .map(|s| {
            let common = dsets.iter().filter(|ds| s.iter().all(|&v| neighbors(v, ds))).count() as u64;
            (s, common)
        })
        .collect();
    let total = (dsets.len() as u64).pow(t);
    let mut sum_x = 0u64;
    let mut sum_y = vec![0u64; xs.len()];
    for code in 0..total {
        let mut c = code;
        let mut sample = Vec::new();
        for _ in 0..t {
            sample.push(&dsets[(c % dsets.len() as u64) as usize]);
            c /= dsets.len() as u64;
        }
        let b: Vec<usize> = (0..n).filter(|&v| sample.iter().all(|s| neighbors(v, s))).collect();
        sum_x += b.len() as u64;
        for (s, common) in &rsets {
            if s.iter().all(|v| b.contains(v)) {
                for (i, &x) in xs.iter().enumerate() {
                    if *common < x {
                        sum_y[i] += 1;
                    }
                }
            }
        }
    }
    let q = |v: u64| BigRational::new(BigInt::from(v), BigInt::from(total));
    DrcOracle { ex: q(sum_x), ey: sum_y.into_iter().map(q).collect() }
}

/// Seeded random `K_{H,t}`-free lettered hosts with every letter used
/// exactly `k` times: edges are added in random order while the host stays
/// free, then each greatest-vertex group is shuffled and cut into blocks.
pub mod hosts {
    use lettermethod::hypercore::{build_k_h_t, contains, Hypergraph};
    use lettermethod::lettering::{Letter, LetteredHypergraph};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub struct Host {
        pub lettered: LetteredHypergraph,
        pub t: usize,
        pub k: usize,
    }

    pub fn random_host(h: &Hypergraph, n: usize, t: usize, seed: u64) -> Host {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let kht = build_k_h_t(h, t).unwrap();
        let mut pool = super::edges_of(n, h.uniformity() + 1);
        pool.shuffle(&mut rng);
        let target = rng.random_range(1..=pool.len());
        let mut g = Hypergraph::empty(n, h.uniformity() + 1).unwrap();
        for e in pool.into_iter().take(target) {
            let grown = g.with_edge(&e).unwrap();
            if !contains(&grown, &kht).unwrap() {
                g = grown;
            }
        }
        let k = rng.random_range(1..=3usize);
        let mut groups: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n];
        for e in g.edges() {
            groups[*e.last().unwrap() as usize].push(e.clone());
        }
        let mut kept: Vec<(Vec<u32>, Letter)> = Vec::new();
        let mut next: Letter = 0;
        for group in &mut groups {
            group.shuffle(&mut rng);
            for block in group.chunks_exact(k) {
                kept.extend(block.iter().map(|e| (e.clone(), next)));
                next += 1;
            }
        }
        kept.sort();
        let base = Hypergraph::new(n, h.uniformity() + 1, kept.iter().map(|(e, _)| e.clone())).unwrap();
        let letters = kept.into_iter().map(|(_, l)| l).collect();
        Host { lettered: LetteredHypergraph::new(base, letters).unwrap(), t, k }
    }
}
