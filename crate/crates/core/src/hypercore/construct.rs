use crate::arith::combinations;

use super::{Hypergraph, HypergraphError, Vertex};

/// `s` pairwise disjoint `d`-edges on `d * s` vertices.
pub fn matching(d: usize, s: usize) -> Result<Hypergraph, HypergraphError> {
    if d == 0 || s == 0 {
        return Err(HypergraphError::InvalidParameter("matching needs d >= 1 and s >= 1".into()));
    }
    let edges = (0..s).map(|i| ((i * d) as Vertex..((i + 1) * d) as Vertex).collect::<Vec<_>>());
    Hypergraph::new(d * s, d, edges)
}

/// The graph cycle on `len >= 3` vertices.
pub fn cycle(len: usize) -> Result<Hypergraph, HypergraphError> {
    if len < 3 {
        return Err(HypergraphError::InvalidParameter("cycle needs at least 3 vertices".into()));
    }
    Hypergraph::new(len, 2, (0..len).map(|i| [i as Vertex, ((i + 1) % len) as Vertex]))
}

/// The complete `d`-uniform hypergraph on `n` vertices.
pub fn complete(d: usize, n: usize) -> Result<Hypergraph, HypergraphError> {
    let edges = combinations(n, d).map(|c| c.into_iter().map(|v| v as Vertex).collect::<Vec<_>>());
    Hypergraph::new(n, d, edges)
}

/// `K_{H,t}`: every edge of `h` extended by each of `t` new vertices.
///
/// The new vertices are `h.n .. h.n + t`, so they are the greatest in the
/// vertex order. With `h` the 1-uniform hypergraph of `s` singleton edges
/// this is the complete bipartite graph `K_{s,t}`.
pub fn build_k_h_t(h: &Hypergraph, t: usize) -> Result<Hypergraph, HypergraphError> {
    if t == 0 {
        return Err(HypergraphError::InvalidParameter("t must be at least 1".into()));
    }
    if h.edge_count() == 0 {
        return Err(HypergraphError::InvalidParameter("H needs at least one edge".into()));
    }
    let base = h.vertex_count();
    let mut edges = Vec::with_capacity(h.edge_count() * t);
    for e in h.edges() {
        for i in 0..t {
            let mut grown = e.clone();
            grown.push((base + i) as Vertex);
            edges.push(grown);
        }
    }
    edges.sort_unstable();
    Ok(Hypergraph::from_sorted_unchecked(base + t, h.uniformity() + 1, edges))
}

/// `K_{H,t,s,r}`: for every `t`-subset `T` of `s` special vertices, `r`
/// disjoint copies of `h`, each copy edge extended by every vertex of `T`.
///
/// Copies occupy the low vertex range (subset-major, then copy index) and the
/// special vertices come last, so `K_{H,t,t,1}` coincides with `K_{H,t}`
/// vertex for vertex.
pub fn build_k_h_t_s_r(h: &Hypergraph, t: usize, s: usize, r: usize) -> Result<Hypergraph, HypergraphError> {
    if s < t {
        return Err(HypergraphError::ParameterOrder { s, t });
    }
    if t < 2 || r == 0 {
        return Err(HypergraphError::InvalidParameter("need t >= 2 and r >= 1".into()));
    }
    if h.edge_count() == 0 {
        return Err(HypergraphError::InvalidParameter("H needs at least one edge".into()));
    }
    let hn = h.vertex_count();
    let subsets: Vec<Vec<usize>> = combinations(s, t).collect();
    let copies = subsets.len() * r;
    let specials = copies * hn;
    let mut edges = Vec::with_capacity(copies * h.edge_count() * t);
    for (si, subset) in subsets.iter().enumerate() {
        for copy in 0..r {
            let offset = (si * r + copy) * hn;
            for e in h.edges() {
                for &u in subset {
                    let mut grown: Vec<Vertex> = e.iter().map(|&v| v + offset as Vertex).collect();
                    grown.push((specials + u) as Vertex);
                    edges.push(grown);
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(Hypergraph::from_sorted_unchecked(specials + s, h.uniformity() + 1, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial_u64;

    #[test]
    fn matchings() {
        assert_eq!(matching(2, 2).unwrap().edges(), &[vec![0, 1], vec![2, 3]]);
        let m = matching(3, 2).unwrap();
        assert_eq!((m.vertex_count(), m.edge_count()), (6, 2));
        let m1 = matching(1, 4).unwrap();
        assert_eq!((m1.vertex_count(), m1.edge_count(), m1.uniformity()), (4, 4, 1));
        assert!(matching(0, 2).is_err());
    }

    #[test]
    fn k_h_t_of_two_singletons_is_k22() {
        let k = build_k_h_t(&matching(1, 2).unwrap(), 2).unwrap();
        assert_eq!(k.vertex_count(), 4);
        assert_eq!(k.edges(), &[vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn k_h_t_with_one_extra_vertex_keeps_edge_count() {
        let h = cycle(5).unwrap();
        let k = build_k_h_t(&h, 1).unwrap();
        assert_eq!(k.edge_count(), h.edge_count());
        assert!(k.edges().iter().all(|e| e[2] == 5));
    }

    #[test]
    fn mubayi_verstraete_pattern() {
        let k = build_k_h_t(&matching(2, 2).unwrap(), 3).unwrap();
        assert_eq!((k.uniformity(), k.vertex_count(), k.edge_count()), (3, 7, 6));
    }

    #[test]
    fn k_h_t_s_r_counts() {
        let h = matching(1, 2).unwrap();
        let k = build_k_h_t_s_r(&h, 2, 3, 1).unwrap();
        assert_eq!((k.vertex_count(), k.edge_count()), (9, 12));
        assert_eq!(build_k_h_t_s_r(&h, 3, 2, 1).unwrap_err(), HypergraphError::ParameterOrder { s: 2, t: 3 });
        let k = build_k_h_t_s_r(&cycle(4).unwrap(), 2, 4, 2).unwrap();
        let subsets = binomial_u64(4, 2) as usize;
        assert_eq!(k.vertex_count(), 4 + subsets * 2 * 4);
        assert_eq!(k.edge_count(), subsets * 2 * 4 * 2);
    }

    #[test]
    fn k_h_t_t_1_is_literally_k_h_t() {
        let h = matching(2, 2).unwrap();
        for t in 2..4 {
            assert_eq!(build_k_h_t_s_r(&h, t, t, 1).unwrap(), build_k_h_t(&h, t).unwrap());
        }
    }
}
