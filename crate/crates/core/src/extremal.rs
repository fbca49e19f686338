//! Exact extremal numbers by branch and bound, with re-verifiable records.
//!
//! `ex_d(n, H)` is searched over the `d`-sets of `0..n` in lexicographic
//! order. An edge is taken only if no copy of `H` passes through it, so every
//! state on the search path is `H`-free. The first edge `{0, .., d-1}` is
//! forced: relabeling vertices maps any nonempty `H`-free hypergraph onto one
//! containing it.
//!
//! `f_d(n, k, H)` allows letters occurring at least `k` times. Only the
//! greatest vertex of an edge constrains its letter, so a lettering of `G` is
//! a partition of each group `E_v` (edges with greatest vertex `v`) into
//! blocks of size at least `k`. Group `E_v` supports at most
//! `floor(|E_v| / k)` such blocks, and exactly that many are reached by
//! cutting it into blocks of exactly `k` and adding the leftovers to the last
//! block. Hence
//!
//! ```text
//! f_d(n, k, H) = max over H-free G of  sum_v floor(|E_v(G)| / k)
//! ```
//!
//! and the search runs over `H`-free hypergraphs with that objective, visiting
//! edges grouped by greatest vertex. The returned witness is the greedy
//! lettering of the optimal `G`, which attains the sum with blocks of
//! exactly `k`.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::arith::{binomial_u64, combinations};
use crate::hypercore::{contains, EdgeSet, Hypergraph, HypergraphError, Pattern, Vertex, MAX_CONTAINMENT_VERTICES};
use crate::lettering::{letter_transform, validate_lettering, LetteredHypergraph, LetteringError};
use crate::matrix01::{mat_contains, Matrix01, MatrixError};
use crate::search::{branch_and_bound, Budget, SearchState, SearchStats};

/// Environment variable naming the record cache directory.
pub const CACHE_ENV: &str = "LETTERMETHOD_CACHE";

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("budget exceeded while computing {what}; best lower bound {lower_bound}")]
    BudgetExceeded { what: String, lower_bound: usize },
    #[error("record does not verify: {0}")]
    InvalidWitness(String),
    #[error("corrupt record {path}: {reason}")]
    CorruptRecord { path: PathBuf, reason: String },
    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Lettering(#[from] LetteringError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordKind {
    ExHypergraph,
    FLettered,
    ExMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordParams {
    pub n: usize,
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub forbidden_digest: String,
}

/// The forbidden object of a search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TextObject", try_from = "TextObject")]
pub enum Forbidden {
    Hypergraph(Hypergraph),
    Matrix(Matrix01),
}

/// A maximizing object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TextObject", try_from = "TextObject")]
pub enum Witness {
    Hypergraph(Hypergraph),
    Lettered(LetteredHypergraph),
    Matrix(Matrix01),
}

// Objects are stored in their text formats so record files stay readable.
#[derive(Serialize, Deserialize)]
struct TextObject {
    format: String,
    text: String,
}

impl From<Forbidden> for TextObject {
    fn from(f: Forbidden) -> Self {
        match f {
            Forbidden::Hypergraph(h) => TextObject { format: "hypergraph".into(), text: h.to_text() },
            Forbidden::Matrix(m) => TextObject { format: "matrix".into(), text: m.to_text() },
        }
    }
}

impl TryFrom<TextObject> for Forbidden {
    type Error = String;

    fn try_from(o: TextObject) -> Result<Self, String> {
        match o.format.as_str() {
            "hypergraph" => Hypergraph::parse_text(&o.text).map(Forbidden::Hypergraph).map_err(|e| e.to_string()),
            "matrix" => Matrix01::parse_text(&o.text).map(Forbidden::Matrix).map_err(|e| e.to_string()),
            other => Err(format!("unknown object format {other:?}")),
        }
    }
}

impl From<Witness> for TextObject {
    fn from(w: Witness) -> Self {
        match w {
            Witness::Hypergraph(h) => TextObject { format: "hypergraph".into(), text: h.to_text() },
            Witness::Lettered(l) => TextObject { format: "lettered".into(), text: l.to_text() },
            Witness::Matrix(m) => TextObject { format: "matrix".into(), text: m.to_text() },
        }
    }
}

impl TryFrom<TextObject> for Witness {
    type Error = String;

    fn try_from(o: TextObject) -> Result<Self, String> {
        match o.format.as_str() {
            "hypergraph" => Hypergraph::parse_text(&o.text).map(Witness::Hypergraph).map_err(|e| e.to_string()),
            "lettered" => LetteredHypergraph::parse_text(&o.text).map(Witness::Lettered).map_err(|e| e.to_string()),
            "matrix" => Matrix01::parse_text(&o.text).map(Witness::Matrix).map_err(|e| e.to_string()),
            other => Err(format!("unknown object format {other:?}")),
        }
    }
}

impl Forbidden {
    pub fn digest(&self) -> String {
        match self {
            Forbidden::Hypergraph(h) => h.digest(),
            Forbidden::Matrix(m) => m.digest(),
        }
    }
}

/// Result of an exact search.
///
/// `stats` is not serialized: node counts and wall time vary between runs,
/// and records must be byte-reproducible. Equality ignores it too.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExtremalRecord {
    pub kind: RecordKind,
    pub params: RecordParams,
    pub forbidden: Forbidden,
    pub value: usize,
    /// false when a budget stopped the search; `value` is then a lower bound
    pub exact: bool,
    pub witness: Witness,
    #[serde(skip)]
    pub stats: SearchStats,
}

impl PartialEq for ExtremalRecord {
    fn eq(&self, other: &Self) -> bool {
        (self.kind, &self.params, &self.forbidden, self.value, self.exact, &self.witness)
            == (other.kind, &other.params, &other.forbidden, other.value, other.exact, &other.witness)
    }
}

impl Eq for ExtremalRecord {}

impl ExtremalRecord {
    /// Re-checks that the witness attains `value`, avoids the forbidden
    /// object, and matches the recorded parameters.
    pub fn verify(&self) -> Result<(), SearchError> {
        let fail = |msg: String| Err(SearchError::InvalidWitness(msg));
        if self.params.forbidden_digest != self.forbidden.digest() {
            return fail("forbidden object does not match its digest".into());
        }
        let (n, d) = (self.params.n, self.params.d);
        match (self.kind, &self.forbidden, &self.witness) {
            (RecordKind::ExHypergraph, Forbidden::Hypergraph(h), Witness::Hypergraph(g)) => {
                check_host(g, n, d)?;
                if g.edge_count() != self.value {
                    return fail(format!("witness has {} edges, record says {}", g.edge_count(), self.value));
                }
                if self.value as u64 > binomial_u64(n as u64, d as u64) {
                    return fail("value exceeds C(n, d)".into());
                }
                if contains(g, h)? {
                    return fail("witness contains the forbidden hypergraph".into());
                }
            }
            (RecordKind::FLettered, Forbidden::Hypergraph(h), Witness::Lettered(l)) => {
                let k = self.params.k.ok_or_else(|| SearchError::InvalidWitness("missing k".into()))?;
                check_host(l.base(), n, d)?;
                let report = validate_lettering(l, Some(k));
                if !report.valid || !report.below_min.is_empty() {
                    return fail("witness lettering is invalid or has a letter below multiplicity k".into());
                }
                if report.letter_count != self.value {
                    return fail(format!("witness has {} letters, record says {}", report.letter_count, self.value));
                }
                if contains(l.base(), h)? {
                    return fail("witness contains the forbidden hypergraph".into());
                }
            }
            (RecordKind::ExMatrix, Forbidden::Matrix(q), Witness::Matrix(m)) => {
                if m.dims() != vec![n; d].as_slice() {
                    return fail(format!("witness dims {:?} do not match side {n}", m.dims()));
                }
                if m.one_count() != self.value {
                    return fail(format!("witness has {} ones, record says {}", m.one_count(), self.value));
                }
                if mat_contains(m, q)? {
                    return fail("witness contains the forbidden pattern".into());
                }
            }
            _ => return fail("record kind does not match its objects".into()),
        }
        Ok(())
    }

    /// The value, or `BudgetExceeded` when the search was cut short.
    pub fn exact_value(&self) -> Result<usize, SearchError> {
        if self.exact {
            Ok(self.value)
        } else {
            Err(SearchError::BudgetExceeded { what: format!("{:?}", self.kind), lower_bound: self.value })
        }
    }
}

fn check_host(g: &Hypergraph, n: usize, d: usize) -> Result<(), SearchError> {
    if g.vertex_count() != n || g.uniformity() != d {
        return Err(SearchError::InvalidWitness(format!(
            "witness is {}-uniform on {} vertices, expected {d}-uniform on {n}",
            g.uniformity(),
            g.vertex_count()
        )));
    }
    Ok(())
}

fn check_search_input(n: usize, h: &Hypergraph) -> Result<(), SearchError> {
    if h.edge_count() == 0 {
        return Err(SearchError::InvalidParameter("the forbidden hypergraph needs at least one edge".into()));
    }
    if n > MAX_CONTAINMENT_VERTICES {
        return Err(HypergraphError::TooLarge { what: "exact search", limit: MAX_CONTAINMENT_VERTICES, n }.into());
    }
    Ok(())
}

#[derive(Clone)]
struct HypergraphState {
    items: Arc<Vec<Vec<Vertex>>>,
    pattern: Arc<Pattern>,
    set: EdgeSet,
}

impl HypergraphState {
    fn new(n: usize, h: &Hypergraph, items: Vec<Vec<Vertex>>) -> Self {
        HypergraphState {
            items: Arc::new(items),
            pattern: Arc::new(Pattern::new(h)),
            set: EdgeSet::new(n, h.uniformity()),
        }
    }

    fn try_take(&mut self, item: usize) -> bool {
        let e = &self.items[item];
        self.set.insert(e);
        if self.pattern.find_through(&self.set, e).is_some() {
            self.set.remove(e);
            false
        } else {
            true
        }
    }
}

impl SearchState for HypergraphState {
    fn item_count(&self) -> usize {
        self.items.len()
    }

    fn try_push(&mut self, item: usize) -> bool {
        self.try_take(item)
    }

    fn pop(&mut self, item: usize) {
        self.set.remove(&self.items[item]);
    }

    fn value(&self) -> usize {
        self.set.len()
    }

    fn upper_bound(&self, next: usize) -> usize {
        self.set.len() + self.items.len() - next
    }
}

fn all_edges(n: usize, d: usize) -> Vec<Vec<Vertex>> {
    combinations(n, d).map(|c| c.into_iter().map(|v| v as Vertex).collect()).collect()
}

fn witness_graph(n: usize, d: usize, items: &[Vec<Vertex>], chosen: &[usize]) -> Hypergraph {
    let mut edges: Vec<Vec<Vertex>> = chosen.iter().map(|&i| items[i].clone()).collect();
    edges.sort_unstable();
    Hypergraph::from_sorted_unchecked(n, d, edges)
}

/// Exact `ex_d(n, H)` with a maximizing witness.
pub fn ex_exact(n: usize, h: &Hypergraph, budget: &Budget) -> Result<ExtremalRecord, SearchError> {
    check_search_input(n, h)?;
    let d = h.uniformity();
    let root = HypergraphState::new(n, h, all_edges(n, d));
    let items = root.items.clone();
    let out = branch_and_bound(root, true, budget);
    Ok(ExtremalRecord {
        kind: RecordKind::ExHypergraph,
        params: RecordParams { n, d, k: None, forbidden_digest: h.digest() },
        forbidden: Forbidden::Hypergraph(h.clone()),
        value: out.value,
        exact: out.exact,
        witness: Witness::Hypergraph(witness_graph(n, d, &items, &out.chosen)),
        stats: out.stats,
    })
}

#[derive(Clone)]
struct LetterState {
    inner: HypergraphState,
    k: usize,
    top: Arc<Vec<usize>>,
    group_end: Arc<Vec<usize>>,
    // blocks available from groups with a greater top vertex than v
    tail: Arc<Vec<usize>>,
    m: Vec<usize>,
    value: usize,
}

impl SearchState for LetterState {
    fn item_count(&self) -> usize {
        self.inner.items.len()
    }

    fn try_push(&mut self, item: usize) -> bool {
        if !self.inner.try_take(item) {
            return false;
        }
        let v = self.top[item];
        self.m[v] += 1;
        if self.m[v] % self.k == 0 {
            self.value += 1;
        }
        true
    }

    fn pop(&mut self, item: usize) {
        self.inner.pop(item);
        let v = self.top[item];
        if self.m[v] % self.k == 0 {
            self.value -= 1;
        }
        self.m[v] -= 1;
    }

    fn value(&self) -> usize {
        self.value
    }

    fn upper_bound(&self, next: usize) -> usize {
        if next == self.top.len() {
            return self.value;
        }
        let v = self.top[next];
        let remaining = self.group_end[next] - next;
        self.value - self.m[v] / self.k + (self.m[v] + remaining) / self.k + self.tail[v]
    }
}

/// Exact `f_d(n, k, H)`; the witness is the greedy lettering (blocks of
/// exactly `k`) of an optimal `H`-free hypergraph.
pub fn f_exact(n: usize, k: usize, h: &Hypergraph, budget: &Budget) -> Result<ExtremalRecord, SearchError> {
    if k == 0 {
        return Err(SearchError::InvalidParameter("k must be at least 1".into()));
    }
    check_search_input(n, h)?;
    let d = h.uniformity();
    let mut items = all_edges(n, d);
    items.sort_by_key(|e| (Hypergraph::top(e), e.clone()));
    let top: Vec<usize> = items.iter().map(|e| Hypergraph::top(e) as usize).collect();
    let mut group_end = vec![top.len(); top.len()];
    for i in (0..top.len().saturating_sub(1)).rev() {
        group_end[i] = if top[i + 1] == top[i] { group_end[i + 1] } else { i + 1 };
    }
    let mut tail = vec![0; n];
    for v in (0..n.saturating_sub(1)).rev() {
        let size = binomial_u64((v + 1) as u64, (d - 1) as u64) as usize;
        tail[v] = tail[v + 1] + size / k;
    }
    let root = LetterState {
        inner: HypergraphState::new(n, h, items),
        k,
        top: Arc::new(top),
        group_end: Arc::new(group_end),
        tail: Arc::new(tail),
        m: vec![0; n],
        value: 0,
    };
    let items = root.inner.items.clone();
    let out = branch_and_bound(root, false, budget);
    let base = witness_graph(n, d, &items, &out.chosen);
    let lettered = letter_transform(&base, k);
    debug_assert_eq!(lettered.letter_count(), out.value);
    Ok(ExtremalRecord {
        kind: RecordKind::FLettered,
        params: RecordParams { n, d, k: Some(k), forbidden_digest: h.digest() },
        forbidden: Forbidden::Hypergraph(h.clone()),
        value: out.value,
        exact: out.exact,
        witness: Witness::Lettered(lettered),
        stats: out.stats,
    })
}

/// Both sides of `ex_d(n, H) <= k (f_d(n, k, H) + n)` and a check of the
/// greedy lettering on the extremal witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Report {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub ex: usize,
    pub f: usize,
    /// `k (f + n)`
    pub rhs: usize,
    pub holds: bool,
    /// letters produced by the greedy lettering of the `ex` witness
    pub transform_letters: usize,
    /// edges the greedy lettering deleted (at most `n (k - 1)`)
    pub transform_deleted: usize,
    /// greedy letters never exceed `f`, all have multiplicity exactly `k`,
    /// and at most `n (k - 1)` edges were deleted
    pub transform_ok: bool,
}

pub fn verify_lemma1(n: usize, k: usize, h: &Hypergraph, budget: &Budget) -> Result<Lemma1Report, SearchError> {
    let ex = ex_exact(n, h, budget)?;
    let ex_value = ex.exact_value()?;
    let f_value = f_exact(n, k, h, budget)?.exact_value()?;
    let Witness::Hypergraph(g) = &ex.witness else { unreachable!("ex records carry hypergraph witnesses") };
    let lettered = letter_transform(g, k);
    let report = validate_lettering(&lettered, Some(k));
    let transform_deleted = g.edge_count() - lettered.base().edge_count();
    let transform_ok = report.valid
        && report.letter_count <= f_value
        && report.multiplicities.iter().all(|&m| m == k)
        && transform_deleted <= n * (k - 1);
    let rhs = k * (f_value + n);
    Ok(Lemma1Report {
        n,
        d: h.uniformity(),
        k,
        ex: ex_value,
        f: f_value,
        rhs,
        holds: ex_value <= rhs,
        transform_letters: report.letter_count,
        transform_deleted,
        transform_ok,
    })
}

/// Directory of verified records, addressed by a digest of their parameters.
#[derive(Debug, Clone)]
pub struct RecordCache {
    dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    record: ExtremalRecord,
    checksum: String,
}

impl RecordCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        RecordCache { dir: dir.into() }
    }

    /// The cache named by `LETTERMETHOD_CACHE`, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV).map(RecordCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(kind: RecordKind, params: &RecordParams) -> String {
        let text = serde_json::to_string(&(kind, params)).expect("parameters serialize");
        hex::encode(Sha256::digest(text.as_bytes()))
    }

    pub fn path_for(&self, kind: RecordKind, params: &RecordParams) -> PathBuf {
        self.dir.join(format!("{}.json", RecordCache::key(kind, params)))
    }

    /// Verifies and writes an exact record; inexact records are not cached.
    pub fn store(&self, record: &ExtremalRecord) -> Result<Option<PathBuf>, SearchError> {
        if !record.exact {
            return Ok(None);
        }
        record.verify()?;
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(record.kind, &record.params);
        let file = CacheFile { record: record.clone(), checksum: checksum(record) };
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string_pretty(&file).expect("record serializes") + "\n")?;
        fs::rename(&tmp, &path)?;
        Ok(Some(path))
    }

    /// Loads and re-verifies a record; `None` on a cache miss.
    pub fn load(&self, kind: RecordKind, params: &RecordParams) -> Result<Option<ExtremalRecord>, SearchError> {
        let path = self.path_for(kind, params);
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let corrupt = |reason: String| SearchError::CorruptRecord { path: path.clone(), reason };
        let file: CacheFile = serde_json::from_str(&text).map_err(|e| corrupt(e.to_string()))?;
        if file.checksum != checksum(&file.record) {
            return Err(corrupt("checksum mismatch".into()));
        }
        if file.record.kind != kind || &file.record.params != params || !file.record.exact {
            return Err(corrupt("record parameters do not match its address".into()));
        }
        file.record.verify().map_err(|e| corrupt(e.to_string()))?;
        Ok(Some(file.record))
    }

    /// Returns the cached record for these parameters or runs `search` and
    /// stores its result.
    pub fn get_or_compute(
        &self,
        kind: RecordKind,
        params: &RecordParams,
        search: impl FnOnce() -> Result<ExtremalRecord, SearchError>,
    ) -> Result<ExtremalRecord, SearchError> {
        if let Some(hit) = self.load(kind, params)? {
            return Ok(hit);
        }
        let record = search()?;
        self.store(&record)?;
        Ok(record)
    }
}

fn checksum(record: &ExtremalRecord) -> String {
    let text = serde_json::to_string(record).expect("record serializes");
    hex::encode(Sha256::digest(text.as_bytes()))
}
