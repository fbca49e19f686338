//! Isomorphism of unordered hypergraphs via an exhaustive canonical form.
//!
//! Vertices are first split into classes by degree; the canonical form is the
//! lexicographically least sorted edge list over all relabelings that keep
//! the classes in order. Only small vertex counts are supported.

use super::{Hypergraph, HypergraphError, Vertex};

pub const MAX_ISOMORPHISM_VERTICES: usize = 10;

/// The canonical relabeling of `h` (equal for isomorphic inputs).
pub fn canonical_form(h: &Hypergraph) -> Result<Hypergraph, HypergraphError> {
    let n = h.vertex_count();
    if n > MAX_ISOMORPHISM_VERTICES {
        return Err(HypergraphError::TooLarge { what: "isomorphism", limit: MAX_ISOMORPHISM_VERTICES, n });
    }
    let deg = h.degrees();
    // slot i of the new labeling must be filled from class_of_slot[i]
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    let slot_degree: Vec<usize> = by_degree.iter().map(|&v| deg[v]).collect();

    let mut best: Option<Vec<Vec<Vertex>>> = None;
    let mut label = vec![Vertex::MAX; n];
    let mut used = vec![false; n];
    assign(h, &deg, &slot_degree, 0, &mut label, &mut used, &mut best);
    let edges = best.unwrap_or_default();
    Ok(Hypergraph::from_sorted_unchecked(n, h.uniformity(), edges))
}

fn assign(
    h: &Hypergraph,
    deg: &[usize],
    slot_degree: &[usize],
    slot: usize,
    label: &mut [Vertex],
    used: &mut [bool],
    best: &mut Option<Vec<Vec<Vertex>>>,
) {
    if slot == label.len() {
        let mut edges: Vec<Vec<Vertex>> = h
            .edges()
            .iter()
            .map(|e| {
                let mut img: Vec<Vertex> = e.iter().map(|&v| label[v as usize]).collect();
                img.sort_unstable();
                img
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            *best = Some(edges);
        }
        return;
    }
    for v in 0..label.len() {
        if used[v] || deg[v] != slot_degree[slot] {
            continue;
        }
        used[v] = true;
        label[v] = slot as Vertex;
        assign(h, deg, slot_degree, slot + 1, label, used, best);
        used[v] = false;
    }
}

/// Isomorphism of the underlying unordered hypergraphs.
pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool, HypergraphError> {
    if a.vertex_count() != b.vertex_count() || a.uniformity() != b.uniformity() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let (mut da, mut db) = (a.degrees(), b.degrees());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
