//! Lettered hypergraphs and the counting audit behind the letter method.
//!
//! A lettering labels every edge with a letter such that two edges share a
//! letter only when they have the same greatest vertex. [`letter_transform`]
//! is the deterministic greedy lettering: edges are grouped by their greatest
//! vertex (processed from the greatest vertex down, lexicographically inside
//! a group), cut into blocks of exactly `k`, and the fewer than `k` leftovers
//! of each group are deleted.
//!
//! [`lemma2_audit`] recomputes every quantity of the low-degree counting
//! argument on a concrete `(d+1)`-uniform lettered hypergraph: the profile
//! `deg(z)` over `d`-sets `z`, the number `p` of `z` with positive degree,
//! the number of `t`-tuples of edges sharing their `d` least vertices, and
//! the chain `(t-1) p >= k r - sum (deg(z) - t + 1)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::str::FromStr;

use num::bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::binomial;
use crate::hypercore::format::{content_lines, parse_err, parse_from_lines, parse_numbers};
use crate::hypercore::{build_k_h_t, find_embedding, EdgeId, Hypergraph, HypergraphError, Vertex};

pub type Letter = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LetteringError {
    #[error("lettering has {letters} labels for {edges} edges")]
    LengthMismatch { letters: usize, edges: usize },
    #[error("letter multiplicities are not uniform: {0:?}")]
    NotUniformMultiplicity(Vec<usize>),
    #[error("lettering violates the greatest-vertex rule")]
    InvalidLettering(Vec<LetteringViolation>),
    #[error("profile needs uniformity at least 2, got {0}")]
    ArityTooSmall(usize),
    #[error("host is {host}-uniform but the pattern is {pattern}-uniform; expected host = pattern + 1")]
    UniformityMismatch { host: usize, pattern: usize },
    #[error("t must be at least 2")]
    InvalidT,
    #[error("hypergraph asserted K_(H,t)-free contains a copy: {0:?}")]
    NotKHtFree(Box<KhtCopy>),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// A concrete copy of `K_{H,t}` found in a host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KhtCopy {
    /// pattern vertex -> host vertex
    pub embedding: Vec<Vertex>,
    pub edges: Vec<Vec<Vertex>>,
}

/// An ordered hypergraph with one letter per edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetteredHypergraph {
    base: Hypergraph,
    letters: Vec<Letter>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum LetteringViolation {
    /// Edges sharing `letter` have different greatest vertices.
    MixedGreatestVertex { letter: Letter, edges: Vec<EdgeId> },
    /// Letter ids are not exactly `0..r`.
    SparseIds { missing: Vec<Letter> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetteringReport {
    pub valid: bool,
    pub letter_count: usize,
    /// multiplicity of letter `i`
    pub multiplicities: Vec<usize>,
    pub violations: Vec<LetteringViolation>,
    /// letters occurring fewer than the requested minimum
    pub below_min: Vec<Letter>,
}

impl LetteredHypergraph {
    /// A lettering that satisfies the greatest-vertex rule and uses dense ids.
    pub fn new(base: Hypergraph, letters: Vec<Letter>) -> Result<Self, LetteringError> {
        let l = LetteredHypergraph::from_raw(base, letters)?;
        let report = validate_lettering(&l, None);
        if report.valid {
            Ok(l)
        } else {
            Err(LetteringError::InvalidLettering(report.violations))
        }
    }

    /// Pairs edges with letters without checking the lettering rule, so that
    /// external data can be audited with [`validate_lettering`].
    pub fn from_raw(base: Hypergraph, letters: Vec<Letter>) -> Result<Self, LetteringError> {
        if letters.len() != base.edge_count() {
            return Err(LetteringError::LengthMismatch { letters: letters.len(), edges: base.edge_count() });
        }
        Ok(LetteredHypergraph { base, letters })
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, id: EdgeId) -> Letter {
        self.letters[id.0]
    }

    pub fn letter_count(&self) -> usize {
        let mut seen: Vec<Letter> = self.letters.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Hypergraph text followed by one `edge_index letter_id` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = self.base.to_text();
        for (i, l) in self.letters.iter().enumerate() {
            writeln!(out, "{i} {l}").unwrap();
        }
        out
    }

    /// Parses the text form; the lettering rule is not enforced here.
    pub fn parse_text(text: &str) -> Result<Self, LetteringError> {
        let mut lines = content_lines(text);
        let (base, mut last) = parse_from_lines(&mut lines)?;
        let m = base.edge_count();
        let mut letters: Vec<Option<Letter>> = vec![None; m];
        for _ in 0..m {
            let (line, body) = lines
                .next()
                .ok_or_else(|| parse_err(last + 1, format!("expected {m} `edge_index letter_id` lines")))?;
            let nums: Vec<u64> = parse_numbers(line, body)?;
            let [idx, letter] = nums[..] else {
                return Err(parse_err(line, "expected `edge_index letter_id`").into());
            };
            let slot = letters
                .get_mut(idx as usize)
                .ok_or_else(|| parse_err(line, format!("edge index {idx} out of range")))?;
            if slot.is_some() {
                return Err(parse_err(line, format!("edge index {idx} lettered twice")).into());
            }
            *slot = Some(Letter::try_from(letter).map_err(|_| parse_err(line, "letter id too large"))?);
            last = line;
        }
        if let Some((line, _)) = lines.next() {
            return Err(parse_err(line, "trailing content after the lettering").into());
        }
        let letters = letters.into_iter().map(|l| l.expect("every index seen once")).collect();
        LetteredHypergraph::from_raw(base, letters)
    }
}

impl FromStr for LetteredHypergraph {
    type Err = LetteringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LetteredHypergraph::parse_text(s)
    }
}

/// The greedy lettering with blocks of exactly `k` edges per letter.
///
/// Groups are processed from the greatest vertex down; letters are fresh
/// integers in processing order. Leftover edges of each group (fewer than
/// `k`) are deleted, so at most `n (k - 1)` edges disappear.
pub fn letter_transform(q: &Hypergraph, k: usize) -> LetteredHypergraph {
    assert!(k >= 1, "k must be at least 1");
    let mut groups: BTreeMap<Vertex, Vec<&Vec<Vertex>>> = BTreeMap::new();
    for e in q.edges() {
        groups.entry(Hypergraph::top(e)).or_default().push(e);
    }
    let mut assigned: HashMap<&Vec<Vertex>, Letter> = HashMap::new();
    let mut next: Letter = 0;
    for (_, group) in groups.iter().rev() {
        // group is lexicographic already because edge lists are canonical
        for block in group.chunks_exact(k) {
            for e in block {
                assigned.insert(*e, next);
            }
            next += 1;
        }
    }
    let base = q.filter_edges(|_, e| assigned.contains_key(&e.to_vec()));
    let letters = base.edges().iter().map(|e| assigned[e]).collect();
    LetteredHypergraph { base, letters }
}

/// Checks the greatest-vertex rule and dense ids, and reports multiplicities.
///
/// Violations are collected rather than returned as errors. Letters below
/// `min_multiplicity` are listed when a minimum is given.
pub fn validate_lettering(l: &LetteredHypergraph, min_multiplicity: Option<usize>) -> LetteringReport {
    let mut by_letter: BTreeMap<Letter, Vec<EdgeId>> = BTreeMap::new();
    for (i, &letter) in l.letters.iter().enumerate() {
        by_letter.entry(letter).or_default().push(EdgeId(i));
    }
    let mut violations = Vec::new();
    for (&letter, ids) in &by_letter {
        let top = Hypergraph::top(l.base.edge(ids[0]));
        if ids.iter().any(|&id| Hypergraph::top(l.base.edge(id)) != top) {
            violations.push(LetteringViolation::MixedGreatestVertex { letter, edges: ids.clone() });
        }
    }
    let r = by_letter.len();
    let missing: Vec<Letter> = (0..r as Letter).filter(|x| !by_letter.contains_key(x)).collect();
    if !missing.is_empty() {
        violations.push(LetteringViolation::SparseIds { missing });
    }
    let multiplicities: Vec<usize> = by_letter.values().map(Vec::len).collect();
    let below_min = match min_multiplicity {
        Some(k) => by_letter.iter().filter(|(_, ids)| ids.len() < k).map(|(&l, _)| l).collect(),
        None => Vec::new(),
    };
    LetteringReport { valid: violations.is_empty(), letter_count: r, multiplicities, violations, below_min }
}

/// `deg(z)` for every `d`-set `z` (with `d = q.d - 1`) that is the set of
/// `d` least vertices of some edge; the partition identity
/// `sum deg(z) = |E(q)|` holds by construction.
pub fn low_degree_profile(q: &Hypergraph) -> Result<BTreeMap<Vec<Vertex>, usize>, LetteringError> {
    if q.uniformity() < 2 {
        return Err(LetteringError::ArityTooSmall(q.uniformity()));
    }
    let mut profile: BTreeMap<Vec<Vertex>, usize> = BTreeMap::new();
    for e in q.edges() {
        *profile.entry(e[..e.len() - 1].to_vec()).or_default() += 1;
    }
    Ok(profile)
}

/// Every intermediate count of the pigeonhole audit, with verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma2Audit {
    pub n: usize,
    pub d: usize,
    pub t: usize,
    pub r: usize,
    pub k: usize,
    pub edge_count: usize,
    pub ex_value: u64,
    pub deg_profile: Vec<(Vec<Vertex>, usize)>,
    pub p: usize,
    #[serde(with = "crate::arith::decimal")]
    pub binom_n_d: BigUint,
    /// sum over z of C(deg(z), t)
    #[serde(with = "crate::arith::decimal")]
    pub tuple_count: BigUint,
    /// C(r, t) * ex_value
    #[serde(with = "crate::arith::decimal")]
    pub pigeonhole_bound: BigUint,
    /// sum over z with deg(z) >= t of (deg(z) - t + 1)
    pub excess_sum: usize,
    #[serde(with = "crate::arith::decimal")]
    pub chain_lhs: BigUint,
    /// k r - excess_sum, clamped at zero
    #[serde(with = "crate::arith::decimal")]
    pub chain_rhs: BigUint,
    /// whether the host was checked for a copy of K_{H,t}, and found none
    pub kht_free_checked: bool,
    pub verdicts: Lemma2Verdicts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma2Verdicts {
    /// sum deg(z) = k r = |E|
    pub partition_identity: bool,
    /// excess_sum <= tuple_count
    pub excess_below_tuples: bool,
    /// tuple_count <= C(r,t) ex_value
    pub pigeonhole: bool,
    /// (t-1) p >= k r - excess_sum
    pub chain: bool,
    /// p <= C(n, d)
    pub p_bounded: bool,
}

impl Lemma2Verdicts {
    pub fn all(&self) -> bool {
        self.partition_identity && self.excess_below_tuples && self.pigeonhole && self.chain && self.p_bounded
    }
}

/// Audits the low-degree counting argument on a concrete lettered host.
///
/// `l` must validate and use every letter equally often; `l.base()` must be
/// `(h.d + 1)`-uniform. `ex_value` is the caller's exact or upper value for
/// `ex_d(n, h)` with `n = l.base().vertex_count()`. With `check_free` the
/// host is searched for `K_{h,t}` first and a found copy is an error.
pub fn lemma2_audit(
    l: &LetteredHypergraph,
    h: &Hypergraph,
    t: usize,
    ex_value: u64,
    check_free: bool,
) -> Result<Lemma2Audit, LetteringError> {
    if t < 2 {
        return Err(LetteringError::InvalidT);
    }
    let q = l.base();
    if q.uniformity() != h.uniformity() + 1 {
        return Err(LetteringError::UniformityMismatch { host: q.uniformity(), pattern: h.uniformity() });
    }
    let report = validate_lettering(l, None);
    if !report.valid {
        return Err(LetteringError::InvalidLettering(report.violations));
    }
    let mut mult = report.multiplicities.clone();
    mult.dedup();
    if mult.len() > 1 {
        return Err(LetteringError::NotUniformMultiplicity(report.multiplicities));
    }
    let k = mult.first().copied().unwrap_or(0);
    let r = report.letter_count;

    if check_free && h.edge_count() > 0 {
        let kht = build_k_h_t(h, t)?;
        if let Some(embedding) = find_embedding(q, &kht)? {
            let edges = kht
                .edges()
                .iter()
                .map(|e| {
                    let mut img: Vec<Vertex> = e.iter().map(|&v| embedding[v as usize]).collect();
                    img.sort_unstable();
                    img
                })
                .collect();
            return Err(LetteringError::NotKHtFree(Box::new(KhtCopy { embedding, edges })));
        }
    }

    let n = q.vertex_count();
    let d = h.uniformity();
    let profile = low_degree_profile(q)?;
    let p = profile.len();
    let tuple_count: BigUint = profile.values().map(|&deg| binomial(deg as u64, t as u64)).sum();
    let pigeonhole_bound = binomial(r as u64, t as u64) * ex_value;
    let excess_sum: usize = profile.values().filter(|&&deg| deg >= t).map(|&deg| deg - t + 1).sum();
    let degree_sum: usize = profile.values().sum();
    let chain_lhs = BigUint::from((t - 1) * p);
    let kr = k * r;
    let chain_rhs = BigUint::from(kr.saturating_sub(excess_sum));
    let binom_n_d = binomial(n as u64, d as u64);

    let verdicts = Lemma2Verdicts {
        partition_identity: degree_sum == q.edge_count() && kr == q.edge_count(),
        excess_below_tuples: BigUint::from(excess_sum) <= tuple_count,
        pigeonhole: tuple_count <= pigeonhole_bound,
        chain: chain_lhs >= chain_rhs,
        p_bounded: BigUint::from(p) <= binom_n_d,
    };
    Ok(Lemma2Audit {
        n,
        d,
        t,
        r,
        k,
        edge_count: q.edge_count(),
        ex_value,
        deg_profile: profile.into_iter().collect(),
        p,
        binom_n_d,
        tuple_count,
        pigeonhole_bound,
        excess_sum,
        chain_lhs,
        chain_rhs,
        kht_free_checked: check_free,
        verdicts,
    })
}

impl Lemma2Audit {
    /// The closing step: the chain forces `(t-1) p >= k r - C(r,t) ex`;
    /// returns that right-hand side when it is positive.
    pub fn forced_p_lower_bound(&self) -> Option<BigUint> {
        let kr = BigUint::from(self.k * self.r);
        if kr > self.pigeonhole_bound {
            Some(kr - &self.pigeonhole_bound)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::{build_k_h_t, cycle, matching};

    fn star_into_top() -> Hypergraph {
        // five edges all with greatest vertex 5
        Hypergraph::new(6, 2, (0..5).map(|v| [v, 5])).unwrap()
    }

    #[test]
    fn k_one_keeps_every_edge() {
        let q = cycle(5).unwrap();
        let l = letter_transform(&q, 1);
        assert_eq!(l.base(), &q);
        assert_eq!(l.letter_count(), 5);
        let report = validate_lettering(&l, Some(1));
        assert!(report.valid);
        assert_eq!(report.multiplicities, vec![1; 5]);
    }

    #[test]
    fn star_with_blocks_of_two() {
        let l = letter_transform(&star_into_top(), 2);
        assert_eq!(l.letter_count(), 2);
        assert_eq!(l.base().edge_count(), 4);
        // lexicographic blocks: {0,5},{1,5} then {2,5},{3,5}; {4,5} deleted
        assert!(!l.base().has_edge(&[4, 5]));
        assert_eq!(l.letters(), &[0, 0, 1, 1]);
    }

    #[test]
    fn letters_follow_processing_order() {
        // greatest vertex 3 is processed first and gets letter 0
        let q = Hypergraph::new(4, 2, [[0, 2], [1, 2], [0, 3], [1, 3]]).unwrap();
        let l = letter_transform(&q, 2);
        assert_eq!(l.letters(), &[1, 0, 1, 0]);
    }

    #[test]
    fn validation_reports_mixed_tops() {
        let base = Hypergraph::new(4, 2, [[0, 1], [2, 3]]).unwrap();
        let l = LetteredHypergraph::from_raw(base.clone(), vec![0, 0]).unwrap();
        let report = validate_lettering(&l, None);
        assert!(!report.valid);
        assert!(matches!(report.violations[0], LetteringViolation::MixedGreatestVertex { letter: 0, .. }));
        assert!(LetteredHypergraph::new(base, vec![0, 0]).is_err());
    }

    #[test]
    fn validation_reports_sparse_ids_and_low_multiplicity() {
        let base = Hypergraph::new(4, 2, [[0, 1], [2, 3]]).unwrap();
        let l = LetteredHypergraph::from_raw(base, vec![0, 2]).unwrap();
        let report = validate_lettering(&l, Some(2));
        assert_eq!(report.violations, vec![LetteringViolation::SparseIds { missing: vec![1] }]);
        assert_eq!(report.below_min, vec![0, 2]);
    }

    #[test]
    fn empty_lettering_is_valid() {
        let l = letter_transform(&Hypergraph::empty(3, 2).unwrap(), 3);
        let report = validate_lettering(&l, Some(3));
        assert!(report.valid);
        assert_eq!(report.letter_count, 0);
    }

    #[test]
    fn profile_of_single_triple() {
        let q = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let profile = low_degree_profile(&q).unwrap();
        assert_eq!(profile.into_iter().collect::<Vec<_>>(), vec![(vec![0, 1], 1)]);
        assert_eq!(low_degree_profile(&matching(1, 2).unwrap()), Err(LetteringError::ArityTooSmall(1)));
    }

    #[test]
    fn profile_of_k22_counts_greater_neighbours() {
        let k22 = build_k_h_t(&matching(1, 2).unwrap(), 2).unwrap();
        let profile = low_degree_profile(&k22).unwrap();
        // vertices 0 and 1 each see 2 and 3 above them; 2 and 3 see nothing above
        assert_eq!(profile.into_iter().collect::<Vec<_>>(), vec![(vec![0], 2), (vec![1], 2)]);
    }

    #[test]
    fn audit_of_empty_lettering() {
        let l = letter_transform(&Hypergraph::empty(5, 2).unwrap(), 2);
        let audit = lemma2_audit(&l, &matching(1, 2).unwrap(), 2, 1, true).unwrap();
        assert_eq!((audit.r, audit.p, audit.excess_sum), (0, 0, 0));
        assert_eq!(audit.tuple_count, BigUint::from(0u32));
        assert!(audit.verdicts.all());
    }

    #[test]
    fn audit_of_five_cycle() {
        // C5 is K_{2,2}-free; low degrees: 0 -> {1,4}, 1 -> {2}, 2 -> {3}, 3 -> {4}
        let l = letter_transform(&cycle(5).unwrap(), 1);
        let audit = lemma2_audit(&l, &matching(1, 2).unwrap(), 2, 1, true).unwrap();
        assert_eq!(audit.p, 4);
        assert_eq!(audit.tuple_count, BigUint::from(1u32));
        assert_eq!(audit.pigeonhole_bound, BigUint::from(10u32));
        assert_eq!(audit.excess_sum, 1);
        assert_eq!(audit.chain_lhs, BigUint::from(4u32));
        assert_eq!(audit.chain_rhs, BigUint::from(4u32));
        assert!(audit.verdicts.all());
    }

    #[test]
    fn audit_detects_a_copy() {
        let k22 = build_k_h_t(&matching(1, 2).unwrap(), 2).unwrap();
        let l = letter_transform(&k22, 1);
        let err = lemma2_audit(&l, &matching(1, 2).unwrap(), 2, 1, true).unwrap_err();
        let LetteringError::NotKHtFree(copy) = err else { panic!("expected a copy") };
        assert_eq!(copy.edges.len(), 4);
        assert!(copy.edges.iter().all(|e| k22.has_edge(e)));
    }

    #[test]
    fn audit_rejects_mixed_multiplicities() {
        let base = Hypergraph::new(4, 2, [[0, 3], [1, 3], [2, 3]]).unwrap();
        let l = LetteredHypergraph::new(base, vec![0, 0, 1]).unwrap();
        let err = lemma2_audit(&l, &matching(1, 2).unwrap(), 2, 1, false).unwrap_err();
        assert_eq!(err, LetteringError::NotUniformMultiplicity(vec![2, 1]));
    }

    #[test]
    fn lettered_text_round_trip() {
        let l = letter_transform(&star_into_top(), 2);
        let text = l.to_text();
        assert!(text.ends_with("0 0\n1 0\n2 1\n3 1\n"));
        let back = LetteredHypergraph::parse_text(&text).unwrap();
        assert_eq!(back.letters(), l.letters());
        assert_eq!(back.base(), l.base());
        assert!(LetteredHypergraph::parse_text("2 3 1\n0 1\n0 0\n0 1\n").is_err());
        assert!(LetteredHypergraph::parse_text("2 3 1\n0 1\n5 0\n").is_err());
    }
}
