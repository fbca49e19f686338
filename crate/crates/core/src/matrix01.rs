//! `d`-dimensional 0-1 matrices and pattern containment.
//!
//! `A` contains `B` when there are strictly increasing index maps, one per
//! dimension, sending every one of `B` onto a one of `A`. The search assigns
//! the maps dimension by dimension. After an index of dimension `j` is fixed,
//! every one of `B` on that index must have its mapped prefix (first `j + 1`
//! coordinates) present among the prefix projections of `A`'s ones.

use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::extremal::{ExtremalRecord, Forbidden, RecordKind, RecordParams, SearchError, Witness};
use crate::hypercore::format::{content_lines, parse_numbers};
use crate::search::{branch_and_bound, Budget, SearchState};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("coordinate {coord:?} outside dims {dims:?}")]
    OutOfRange { coord: Vec<usize>, dims: Vec<usize> },
    #[error("duplicate one at {0:?}")]
    DuplicateOne(Vec<usize>),
    #[error("matrix is not square with side {side}: dims {dims:?}")]
    NotSquare { dims: Vec<usize>, side: usize },
    #[error("projective plane of order {0} is not supported (use 2, 3, 4 or 5)")]
    UnsupportedOrder(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A 0-1 matrix given by its side lengths and the coordinates of its ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct Matrix01 {
    dims: Vec<usize>,
    ones: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawMatrix {
    dims: Vec<usize>,
    ones: Vec<Vec<usize>>,
}

impl TryFrom<RawMatrix> for Matrix01 {
    type Error = MatrixError;

    fn try_from(raw: RawMatrix) -> Result<Self, MatrixError> {
        Matrix01::new(raw.dims, raw.ones)
    }
}

impl Matrix01 {
    pub fn new(dims: Vec<usize>, ones: impl IntoIterator<Item = Vec<usize>>) -> Result<Self, MatrixError> {
        if dims.is_empty() {
            return Err(MatrixError::InvalidParameter("a matrix needs at least one dimension".into()));
        }
        let mut ones: Vec<Vec<usize>> = ones.into_iter().collect();
        for c in &ones {
            if c.len() != dims.len() {
                return Err(MatrixError::DimensionMismatch { left: c.len(), right: dims.len() });
            }
            if c.iter().zip(&dims).any(|(&x, &side)| x >= side) {
                return Err(MatrixError::OutOfRange { coord: c.clone(), dims: dims.clone() });
            }
        }
        ones.sort_unstable();
        if let Some(w) = ones.windows(2).find(|w| w[0] == w[1]) {
            return Err(MatrixError::DuplicateOne(w[0].clone()));
        }
        Ok(Matrix01 { dims, ones })
    }

    pub fn all_ones(dims: &[usize]) -> Result<Self, MatrixError> {
        let cells = cells_in_order(dims);
        Matrix01::new(dims.to_vec(), cells)
    }

    pub fn zeros(dims: &[usize]) -> Result<Self, MatrixError> {
        Matrix01::new(dims.to_vec(), Vec::new())
    }

    /// 2-D matrix from rows of `0`/`1` characters.
    pub fn from_rows(rows: &[&str]) -> Result<Self, MatrixError> {
        let width = rows.first().map_or(0, |r| r.len());
        let mut ones = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(MatrixError::InvalidParameter("ragged rows".into()));
            }
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '1' => ones.push(vec![i, j]),
                    '0' => {}
                    other => return Err(MatrixError::InvalidParameter(format!("bad cell {other:?}"))),
                }
            }
        }
        Matrix01::new(vec![rows.len(), width], ones)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dimension(&self) -> usize {
        self.dims.len()
    }

    pub fn ones(&self) -> &[Vec<usize>] {
        &self.ones
    }

    pub fn one_count(&self) -> usize {
        self.ones.len()
    }

    pub fn get(&self, coord: &[usize]) -> bool {
        self.ones.binary_search_by(|c| c.as_slice().cmp(coord)).is_ok()
    }

    pub fn text_grid(&self) -> Option<String> {
        let [rows, cols] = self.dims[..] else { return None };
        let mut out = String::new();
        for i in 0..rows {
            for j in 0..cols {
                out.push(if self.get(&[i, j]) { '1' } else { '0' });
            }
            out.push('\n');
        }
        Some(out)
    }

    /// Text form: `d`, then the side lengths, then one coordinate tuple per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.dims.len());
        let sides: Vec<String> = self.dims.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", sides.join(" ")).unwrap();
        for c in &self.ones {
            let coords: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}", coords.join(" ")).unwrap();
        }
        out
    }

    /// Hex SHA-256 of the text form.
    pub fn digest(&self) -> String {
        use sha2::{Digest, Sha256};
        hex::encode(Sha256::digest(self.to_text().as_bytes()))
    }

    pub fn parse_text(text: &str) -> Result<Self, MatrixError> {
        let to_matrix_err = |e: crate::hypercore::HypergraphError| match e {
            crate::hypercore::HypergraphError::Parse { line, message } => MatrixError::Parse { line, message },
            other => MatrixError::Parse { line: 0, message: other.to_string() },
        };
        let mut lines = content_lines(text);
        let (dline, dtext) = lines.next().ok_or(MatrixError::Parse { line: 0, message: "missing dimension".into() })?;
        let d: Vec<usize> = parse_numbers(dline, dtext).map_err(to_matrix_err)?;
        let [d] = d[..] else {
            return Err(MatrixError::Parse { line: dline, message: "first line must be the dimension d".into() });
        };
        let (sline, stext) =
            lines.next().ok_or(MatrixError::Parse { line: dline + 1, message: "missing side lengths".into() })?;
        let dims: Vec<usize> = parse_numbers(sline, stext).map_err(to_matrix_err)?;
        if dims.len() != d {
            return Err(MatrixError::Parse { line: sline, message: format!("expected {d} side lengths") });
        }
        let mut ones = Vec::new();
        let mut last = sline;
        for (line, body) in lines {
            let c: Vec<usize> = parse_numbers(line, body).map_err(to_matrix_err)?;
            if c.len() != d {
                return Err(MatrixError::Parse { line, message: format!("coordinate needs {d} entries") });
            }
            ones.push(c);
            last = line;
        }
        Matrix01::new(dims, ones).map_err(|e| MatrixError::Parse { line: last, message: e.to_string() })
    }
}

impl FromStr for Matrix01 {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Matrix01::parse_text(s)
    }
}

/// All coordinates of a box, lexicographically.
pub fn cells_in_order(dims: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = dims.iter().product();
    let mut out = Vec::with_capacity(total);
    if total == 0 {
        return out;
    }
    let mut c = vec![0; dims.len()];
    loop {
        out.push(c.clone());
        let mut j = dims.len();
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            c[j] += 1;
            if c[j] < dims[j] {
                break;
            }
            c[j] = 0;
        }
    }
}

/// Ones of a host matrix with counts of every prefix projection.
#[derive(Debug, Clone)]
pub(crate) struct Cells {
    dims: Vec<usize>,
    // proj[j][prefix index over dims 0..=j]
    proj: Vec<Vec<u32>>,
    count: usize,
}

impl Cells {
    fn new(dims: &[usize]) -> Self {
        let mut proj = Vec::with_capacity(dims.len());
        let mut size = 1;
        for &side in dims {
            size *= side;
            proj.push(vec![0; size]);
        }
        Cells { dims: dims.to_vec(), proj, count: 0 }
    }

    fn from_matrix(m: &Matrix01) -> Self {
        let mut cells = Cells::new(m.dims());
        for c in m.ones() {
            cells.insert(c);
        }
        cells
    }

    fn set(&mut self, c: &[usize], delta: i32) {
        let mut idx = 0;
        for (j, &x) in c.iter().enumerate() {
            idx = idx * self.dims[j] + x;
            let slot = &mut self.proj[j][idx];
            *slot = (*slot as i32 + delta) as u32;
        }
    }

    fn insert(&mut self, c: &[usize]) {
        self.set(c, 1);
        self.count += 1;
    }

    fn remove(&mut self, c: &[usize]) {
        self.set(c, -1);
        self.count -= 1;
    }
}

/// A compiled pattern for repeated containment queries.
#[derive(Debug, Clone)]
pub(crate) struct MatPattern {
    dims: Vec<usize>,
    ones: Vec<Vec<usize>>,
    // at[j][i] = ones whose coordinate j equals i
    at: Vec<Vec<Vec<usize>>>,
}

impl MatPattern {
    pub(crate) fn new(b: &Matrix01) -> Self {
        let mut at: Vec<Vec<Vec<usize>>> = b.dims().iter().map(|&side| vec![Vec::new(); side]).collect();
        for (idx, c) in b.ones().iter().enumerate() {
            for (j, &x) in c.iter().enumerate() {
                at[j][x].push(idx);
            }
        }
        MatPattern { dims: b.dims().to_vec(), ones: b.ones().to_vec(), at }
    }

    fn fits(&self, host: &Cells) -> bool {
        self.dims.len() == host.dims.len()
            && self.dims.iter().zip(&host.dims).all(|(b, a)| b <= a)
            && self.ones.len() <= host.count
    }

    /// Index maps (one per dimension) witnessing containment.
    fn find(&self, host: &Cells, fixed: &[Vec<Option<usize>>]) -> Option<Vec<Vec<usize>>> {
        if !self.fits(host) {
            return None;
        }
        let mut maps: Vec<Vec<usize>> = self.dims.iter().map(|&side| vec![0; side]).collect();
        if self.assign(host, fixed, &mut maps, 0, 0) {
            Some(maps)
        } else {
            None
        }
    }

    fn find_free(&self, host: &Cells) -> Option<Vec<Vec<usize>>> {
        let fixed: Vec<Vec<Option<usize>>> = self.dims.iter().map(|&side| vec![None; side]).collect();
        self.find(host, &fixed)
    }

    /// Containment with some one of the pattern mapped onto `cell`.
    fn find_through(&self, host: &Cells, cell: &[usize]) -> Option<Vec<Vec<usize>>> {
        if !self.fits(host) {
            return None;
        }
        let mut fixed: Vec<Vec<Option<usize>>> = self.dims.iter().map(|&side| vec![None; side]).collect();
        for b in &self.ones {
            for (j, (&bj, &cj)) in b.iter().zip(cell).enumerate() {
                fixed[j][bj] = Some(cj);
            }
            if let Some(maps) = self.find(host, &fixed) {
                return Some(maps);
            }
            for (j, &bj) in b.iter().enumerate() {
                fixed[j][bj] = None;
            }
        }
        None
    }

    fn assign(&self, host: &Cells, fixed: &[Vec<Option<usize>>], maps: &mut [Vec<usize>], j: usize, i: usize) -> bool {
        if j == self.dims.len() {
            return true;
        }
        if i == self.dims[j] {
            return self.assign(host, fixed, maps, j + 1, 0);
        }
        let side = host.dims[j];
        let lo = if i == 0 { 0 } else { maps[j][i - 1] + 1 };
        // leave room for the remaining indices and respect later fixed values
        let mut hi = side as isize - (self.dims[j] - i) as isize;
        for (later, f) in fixed[j].iter().enumerate().skip(i + 1) {
            if let Some(x) = f {
                hi = hi.min(*x as isize - (later - i) as isize);
                break;
            }
        }
        let candidates: Box<dyn Iterator<Item = usize>> = match fixed[j][i] {
            Some(x) => Box::new(std::iter::once(x)),
            None => Box::new(lo..(hi + 1).max(0) as usize),
        };
        for x in candidates {
            if x < lo || x as isize > hi {
                continue;
            }
            maps[j][i] = x;
            let ok = self.at[j][i].iter().all(|&one| {
                let c = &self.ones[one];
                let mut idx = 0;
                for jj in 0..=j {
                    idx = idx * host.dims[jj] + maps[jj][c[jj]];
                }
                host.proj[j][idx] > 0
            });
            if ok && self.assign(host, fixed, maps, j, i + 1) {
                return true;
            }
        }
        false
    }
}

/// Index maps, one strictly increasing map per dimension, embedding `b` in `a`.
pub fn find_containment(a: &Matrix01, b: &Matrix01) -> Result<Option<Vec<Vec<usize>>>, MatrixError> {
    if a.dimension() != b.dimension() {
        return Err(MatrixError::DimensionMismatch { left: a.dimension(), right: b.dimension() });
    }
    Ok(MatPattern::new(b).find_free(&Cells::from_matrix(a)))
}

/// Whether `a` contains the pattern `b`.
pub fn mat_contains(a: &Matrix01, b: &Matrix01) -> Result<bool, MatrixError> {
    Ok(find_containment(a, b)?.is_some())
}

/// `Q_{P,t}`: `t` copies of `p` stacked along a new last dimension.
pub fn stack(p: &Matrix01, t: usize) -> Result<Matrix01, MatrixError> {
    if t == 0 {
        return Err(MatrixError::InvalidParameter("t must be at least 1".into()));
    }
    let mut dims = p.dims().to_vec();
    dims.push(t);
    let ones = p.ones().iter().flat_map(|c| {
        (0..t).map(move |layer| {
            let mut x = c.clone();
            x.push(layer);
            x
        })
    });
    Matrix01::new(dims, ones)
}

#[derive(Debug, Clone, Copy)]
enum Field {
    Prime(usize),
    Four,
}

impl Field {
    fn of_order(q: usize) -> Result<Self, MatrixError> {
        match q {
            2 | 3 | 5 => Ok(Field::Prime(q)),
            4 => Ok(Field::Four),
            _ => Err(MatrixError::UnsupportedOrder(q)),
        }
    }

    fn add(self, a: usize, b: usize) -> usize {
        match self {
            Field::Prime(p) => (a + b) % p,
            Field::Four => a ^ b,
        }
    }

    fn mul(self, a: usize, b: usize) -> usize {
        // GF(4) = {0, 1, w, w + 1} encoded 0..3 with w^2 = w + 1
        const GF4: [[usize; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
        match self {
            Field::Prime(p) => a * b % p,
            Field::Four => GF4[a][b],
        }
    }
}

/// Points of the projective plane over `GF(q)`: nonzero triples whose first
/// nonzero entry is 1, in lexicographic order.
fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut points = Vec::new();
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let v = [x, y, z];
                if v.iter().find(|&&c| c != 0) == Some(&1) {
                    points.push(v);
                }
            }
        }
    }
    points
}

/// The polarity incidence matrix of the projective plane of order `q`:
/// rows and columns are the `q^2 + q + 1` points, with a one at `(x, y)`
/// exactly when `x . y = 0`.
pub fn polarity_construction(q: usize) -> Result<Matrix01, MatrixError> {
    let field = Field::of_order(q)?;
    let points = projective_points(q);
    let n = points.len();
    let mut ones = Vec::new();
    for (i, x) in points.iter().enumerate() {
        for (j, y) in points.iter().enumerate() {
            let dot = (0..3).fold(0, |acc, c| field.add(acc, field.mul(x[c], y[c])));
            if dot == 0 {
                ones.push(vec![i, j]);
            }
        }
    }
    Matrix01::new(vec![n, n], ones)
}

/// Lifts a square 2-D matrix to `d + 1` dimensions of side `n`: the one
/// pattern of `m` sits in the first and last dimensions and is repeated
/// across all middle ones.
pub fn inflate(m: &Matrix01, d: usize, n: usize) -> Result<Matrix01, MatrixError> {
    if m.dims() != [n, n] {
        return Err(MatrixError::NotSquare { dims: m.dims().to_vec(), side: n });
    }
    if d < 2 {
        return Err(MatrixError::InvalidParameter("inflate needs d >= 2".into()));
    }
    let middle = cells_in_order(&vec![n; d - 1]);
    let mut ones = Vec::with_capacity(m.one_count() * middle.len());
    for c in m.ones() {
        for mid in &middle {
            let mut x = Vec::with_capacity(d + 1);
            x.push(c[0]);
            x.extend_from_slice(mid);
            x.push(c[1]);
            ones.push(x);
        }
    }
    Matrix01::new(vec![n; d + 1], ones)
}

#[derive(Clone)]
struct MatrixState {
    cells: Arc<Vec<Vec<usize>>>,
    pattern: Arc<MatPattern>,
    host: Cells,
}

impl SearchState for MatrixState {
    fn item_count(&self) -> usize {
        self.cells.len()
    }

    fn try_push(&mut self, item: usize) -> bool {
        let cell = &self.cells[item];
        self.host.insert(cell);
        if self.pattern.find_through(&self.host, cell).is_some() {
            self.host.remove(cell);
            false
        } else {
            true
        }
    }

    fn pop(&mut self, item: usize) {
        self.host.remove(&self.cells[item]);
    }

    fn value(&self) -> usize {
        self.host.count
    }

    fn upper_bound(&self, next: usize) -> usize {
        self.host.count + self.cells.len() - next
    }
}

/// Exact `ex(n, Q, d)`: the most ones in a `d`-dimensional side-`n` matrix
/// avoiding `q`, with `d` the dimension of `q`.
pub fn mat_ex_exact(n: usize, q: &Matrix01, budget: &Budget) -> Result<ExtremalRecord, SearchError> {
    let d = q.dimension();
    let dims = vec![n; d];
    let cells = Arc::new(cells_in_order(&dims));
    let root = MatrixState { cells: cells.clone(), pattern: Arc::new(MatPattern::new(q)), host: Cells::new(&dims) };
    let outcome = branch_and_bound(root, false, budget);
    let witness = Matrix01::new(dims, outcome.chosen.iter().map(|&i| cells[i].clone()))?;
    Ok(ExtremalRecord {
        kind: RecordKind::ExMatrix,
        params: RecordParams { n, d, k: None, forbidden_digest: q.digest() },
        forbidden: Forbidden::Matrix(q.clone()),
        value: outcome.value,
        exact: outcome.exact,
        witness: Witness::Matrix(witness),
        stats: outcome.stats,
    })
}
