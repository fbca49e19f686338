//! Unordered sub-hypergraph containment by backtracking over vertex injections.
//!
//! Host edges live in an [`EdgeSet`]: bitset rows for `d <= 3`, a hash set of
//! vertex masks above that. Pattern vertices are placed in a greedy order that
//! keeps each new vertex attached to already placed ones, and every pattern
//! edge is checked as soon as all of its vertices are mapped. Candidates must
//! have host degree at least the pattern degree.

use std::collections::HashSet;

use super::{Hypergraph, HypergraphError, Vertex};

/// Largest host vertex count accepted by the containment search.
pub const MAX_CONTAINMENT_VERTICES: usize = 128;

const UNASSIGNED: Vertex = Vertex::MAX;

#[derive(Debug, Clone)]
enum Repr {
    Singletons(u128),
    Pairs(Vec<u128>),
    // row a * n + b holds the mask of c with {a, b, c} an edge, for every ordering
    Triples(Vec<u128>),
    Hashed(HashSet<u128>),
}

/// Mutable edge membership structure with per-vertex degrees.
#[derive(Debug, Clone)]
pub(crate) struct EdgeSet {
    n: usize,
    d: usize,
    repr: Repr,
    degree: Vec<u32>,
    len: usize,
}

impl EdgeSet {
    pub(crate) fn new(n: usize, d: usize) -> Self {
        assert!(n <= MAX_CONTAINMENT_VERTICES);
        let repr = match d {
            1 => Repr::Singletons(0),
            2 => Repr::Pairs(vec![0; n]),
            3 => Repr::Triples(vec![0; n * n]),
            _ => Repr::Hashed(HashSet::new()),
        };
        EdgeSet { n, d, repr, degree: vec![0; n], len: 0 }
    }

    pub(crate) fn from_hypergraph(g: &Hypergraph) -> Self {
        let mut set = EdgeSet::new(g.vertex_count(), g.uniformity());
        for e in g.edges() {
            set.insert(e);
        }
        set
    }

    pub(crate) fn vertex_count(&self) -> usize {
        self.n
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    pub(crate) fn degree(&self, v: Vertex) -> u32 {
        self.degree[v as usize]
    }

    pub(crate) fn insert(&mut self, e: &[Vertex]) {
        debug_assert_eq!(e.len(), self.d);
        if self.contains(e) {
            return;
        }
        self.toggle(e, true);
        for &v in e {
            self.degree[v as usize] += 1;
        }
        self.len += 1;
    }

    pub(crate) fn remove(&mut self, e: &[Vertex]) {
        if !self.contains(e) {
            return;
        }
        self.toggle(e, false);
        for &v in e {
            self.degree[v as usize] -= 1;
        }
        self.len -= 1;
    }

    fn toggle(&mut self, e: &[Vertex], on: bool) {
        fn set(word: &mut u128, bit: Vertex, on: bool) {
            if on {
                *word |= 1u128 << bit;
            } else {
                *word &= !(1u128 << bit);
            }
        }
        let n = self.n;
        match &mut self.repr {
            Repr::Singletons(mask) => set(mask, e[0], on),
            Repr::Pairs(rows) => {
                set(&mut rows[e[0] as usize], e[1], on);
                set(&mut rows[e[1] as usize], e[0], on);
            }
            Repr::Triples(rows) => {
                let (a, b, c) = (e[0] as usize, e[1] as usize, e[2] as usize);
                for (x, y, z) in [(a, b, c), (b, a, c), (a, c, b), (c, a, b), (b, c, a), (c, b, a)] {
                    set(&mut rows[x * n + y], z as Vertex, on);
                }
            }
            Repr::Hashed(set) => {
                let key = mask_of(e);
                if on {
                    set.insert(key);
                } else {
                    set.remove(&key);
                }
            }
        }
    }

    /// Membership test; `e` may list its (distinct) vertices in any order.
    pub(crate) fn contains(&self, e: &[Vertex]) -> bool {
        match &self.repr {
            Repr::Singletons(mask) => mask >> e[0] & 1 == 1,
            Repr::Pairs(rows) => rows[e[0] as usize] >> e[1] & 1 == 1,
            Repr::Triples(rows) => rows[e[0] as usize * self.n + e[1] as usize] >> e[2] & 1 == 1,
            Repr::Hashed(set) => set.contains(&mask_of(e)),
        }
    }
}

fn mask_of(e: &[Vertex]) -> u128 {
    e.iter().fold(0u128, |m, &v| m | 1u128 << v)
}

/// Placement order plus the pattern edges completed at each position.
#[derive(Debug, Clone)]
struct Plan {
    order: Vec<Vertex>,
    checks: Vec<Vec<Vec<Vertex>>>,
}

impl Plan {
    fn new(order: Vec<Vertex>, edges: &[Vec<Vertex>], n: usize) -> Self {
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            position[v as usize] = i;
        }
        let mut checks = vec![Vec::new(); order.len()];
        for e in edges {
            let last = e.iter().map(|&v| position[v as usize]).max().unwrap();
            checks[last].push(e.clone());
        }
        Plan { order, checks }
    }
}

/// A compiled pattern hypergraph, reusable across many host queries.
#[derive(Debug, Clone)]
pub(crate) struct Pattern {
    n: usize,
    d: usize,
    edges: Vec<Vec<Vertex>>,
    degree: Vec<u32>,
    free: Plan,
    anchored: Vec<Plan>,
}

impl Pattern {
    pub(crate) fn new(h: &Hypergraph) -> Self {
        let n = h.vertex_count();
        let edges = h.edges().to_vec();
        let degree: Vec<u32> = h.degrees().into_iter().map(|x| x as u32).collect();
        let free = Plan::new(greedy_order(n, &edges, &degree, &[]), &edges, n);
        let anchored = edges.iter().map(|f| Plan::new(greedy_order(n, &edges, &degree, f), &edges, n)).collect();
        Pattern { n, d: h.uniformity(), edges, degree, free, anchored }
    }

    fn fits(&self, g: &EdgeSet) -> bool {
        self.n <= g.vertex_count() && self.edges.len() <= g.len()
    }

    /// Some injection of the pattern into `g`, as a map pattern vertex -> host vertex.
    pub(crate) fn find(&self, g: &EdgeSet) -> Option<Vec<Vertex>> {
        if !self.fits(g) {
            return None;
        }
        let mut assign = vec![UNASSIGNED; self.n];
        if self.extend(&self.free, 0, g, &mut assign, 0) {
            Some(self.complete(assign, g.vertex_count()))
        } else {
            None
        }
    }

    /// Some injection whose image uses the host edge `e` (which must be in `g`).
    pub(crate) fn find_through(&self, g: &EdgeSet, e: &[Vertex]) -> Option<Vec<Vertex>> {
        if !self.fits(g) {
            return None;
        }
        let mut assign = vec![UNASSIGNED; self.n];
        for plan in &self.anchored {
            let anchor = &plan.order[..self.d];
            let mut image = e.to_vec();
            let mut found = false;
            for_each_permutation(&mut image, &mut |perm| {
                if found {
                    return;
                }
                let mut used = 0u128;
                let mut ok = true;
                for (&p, &v) in anchor.iter().zip(perm) {
                    if g.degree(v) < self.degree[p as usize] {
                        ok = false;
                    }
                    assign[p as usize] = v;
                    used |= 1u128 << v;
                }
                if ok && self.extend(plan, self.d, g, &mut assign, used) {
                    found = true;
                    return;
                }
                for &p in anchor {
                    assign[p as usize] = UNASSIGNED;
                }
            });
            if found {
                return Some(self.complete(assign, g.vertex_count()));
            }
        }
        None
    }

    fn extend(&self, plan: &Plan, pos: usize, g: &EdgeSet, assign: &mut [Vertex], used: u128) -> bool {
        if pos > 0 && !self.checks_hold(plan, pos - 1, g, assign) {
            return false;
        }
        if pos == plan.order.len() {
            return true;
        }
        let p = plan.order[pos] as usize;
        for v in 0..g.vertex_count() as Vertex {
            if used >> v & 1 == 1 || g.degree(v) < self.degree[p] {
                continue;
            }
            assign[p] = v;
            if self.extend(plan, pos + 1, g, assign, used | 1u128 << v) {
                return true;
            }
        }
        assign[p] = UNASSIGNED;
        false
    }

    fn checks_hold(&self, plan: &Plan, pos: usize, g: &EdgeSet, assign: &[Vertex]) -> bool {
        let mut image = [0 as Vertex; 16];
        plan.checks[pos].iter().all(|e| {
            if e.len() <= image.len() {
                for (slot, &p) in image.iter_mut().zip(e) {
                    *slot = assign[p as usize];
                }
                g.contains(&image[..e.len()])
            } else {
                let img: Vec<Vertex> = e.iter().map(|&p| assign[p as usize]).collect();
                g.contains(&img)
            }
        })
    }

    // isolated pattern vertices go to the smallest unused host vertices
    fn complete(&self, mut assign: Vec<Vertex>, host_n: usize) -> Vec<Vertex> {
        let mut used: Vec<bool> = vec![false; host_n];
        for &v in &assign {
            if v != UNASSIGNED {
                used[v as usize] = true;
            }
        }
        let mut free = (0..host_n as Vertex).filter(|&v| !used[v as usize]);
        for slot in assign.iter_mut().filter(|s| **s == UNASSIGNED) {
            *slot = free.next().expect("host has enough vertices");
        }
        assign
    }
}

// Non-isolated pattern vertices in placement order, starting with `anchor`.
fn greedy_order(n: usize, edges: &[Vec<Vertex>], degree: &[u32], anchor: &[Vertex]) -> Vec<Vertex> {
    let mut placed = vec![false; n];
    let mut order: Vec<Vertex> = anchor.to_vec();
    for &v in anchor {
        placed[v as usize] = true;
    }
    let active = degree.iter().filter(|&&x| x > 0).count();
    while order.len() < active {
        let score = |v: usize| {
            let mut closed = 0;
            let mut touching = 0;
            for e in edges.iter().filter(|e| e.contains(&(v as Vertex))) {
                let others = e.iter().filter(|&&u| u as usize != v);
                let placed_others = others.clone().filter(|&&u| placed[u as usize]).count();
                if placed_others == e.len() - 1 {
                    closed += 1;
                }
                if placed_others > 0 {
                    touching += 1;
                }
            }
            (closed, touching, degree[v])
        };
        let best = (0..n)
            .filter(|&v| !placed[v] && degree[v] > 0)
            .max_by(|&a, &b| score(a).cmp(&score(b)).then(b.cmp(&a)))
            .expect("an unplaced active vertex remains");
        placed[best] = true;
        order.push(best as Vertex);
    }
    order
}

fn for_each_permutation(items: &mut [Vertex], f: &mut impl FnMut(&[Vertex])) {
    fn heap(k: usize, items: &mut [Vertex], f: &mut impl FnMut(&[Vertex])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, items, f);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
        heap(k - 1, items, f);
    }
    let k = items.len();
    heap(k, items, f);
}

fn check_pair(g: &Hypergraph, h: &Hypergraph) -> Result<(), HypergraphError> {
    if g.uniformity() != h.uniformity() {
        return Err(HypergraphError::ArityMismatch { host: g.uniformity(), pattern: h.uniformity() });
    }
    if g.vertex_count() > MAX_CONTAINMENT_VERTICES {
        return Err(HypergraphError::TooLarge {
            what: "containment",
            limit: MAX_CONTAINMENT_VERTICES,
            n: g.vertex_count(),
        });
    }
    Ok(())
}

/// An injection `V(h) -> V(g)` mapping every edge of `h` onto an edge of `g`.
pub fn find_embedding(g: &Hypergraph, h: &Hypergraph) -> Result<Option<Vec<Vertex>>, HypergraphError> {
    check_pair(g, h)?;
    if h.vertex_count() > g.vertex_count() {
        return Ok(None);
    }
    Ok(Pattern::new(h).find(&EdgeSet::from_hypergraph(g)))
}

/// Whether `g` contains a (not necessarily induced) copy of `h`.
pub fn contains(g: &Hypergraph, h: &Hypergraph) -> Result<bool, HypergraphError> {
    Ok(find_embedding(g, h)?.is_some())
}

/// Whether some copy of `h` in `g` uses the edge `e` of `g`.
pub fn contains_through_edge(g: &Hypergraph, h: &Hypergraph, e: &[Vertex]) -> Result<bool, HypergraphError> {
    check_pair(g, h)?;
    if !g.has_edge(e) || h.vertex_count() > g.vertex_count() {
        return Ok(false);
    }
    Ok(Pattern::new(h).find_through(&EdgeSet::from_hypergraph(g), e).is_some())
}
