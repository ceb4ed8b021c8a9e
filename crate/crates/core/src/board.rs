//! Generators for chessboard complexes and their relatives.
//!
//! Every board is `[m] × [n]`: `m` columns, `n` rows, rows counted
//! bottom-up. The square `(c, r)` (1-based) is the vertex `(r − 1)·m + (c − 1)`,
//! so the vertices of row 1 come first, then row 2, and so on. Complexes
//! produced here carry these coordinates.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{for_each_combination, Simplex, SimplicialComplex, Square, Vertex};
use crate::error::{Error, Result};

/// Vertex id of the square `(col, row)` on a board with `m` columns.
pub fn square_id(m: usize, col: u32, row: u32) -> Vertex {
    (row - 1) * m as u32 + (col - 1)
}

/// Square of vertex `v` on a board with `m` columns.
pub fn id_square(m: usize, v: Vertex) -> Square {
    Square::new(v % m as u32 + 1, v / m as u32 + 1)
}

pub fn board_coords(m: usize, n: usize) -> Vec<Square> {
    (0..(m * n) as Vertex).map(|v| id_square(m, v)).collect()
}

/// Row and column caps of a multiple chessboard complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoardSpec {
    pub m: usize,
    pub n: usize,
    /// `k_1, …, k_n`: at most `k_i` rooks in row `i`.
    pub row_caps: Vec<usize>,
    /// `l_1, …, l_m`: at most `l_j` rooks in column `j`.
    pub col_caps: Vec<usize>,
}

impl BoardSpec {
    pub fn new(m: usize, n: usize, row_caps: Vec<usize>, col_caps: Vec<usize>) -> Result<Self> {
        let spec = BoardSpec { m, n, row_caps, col_caps };
        spec.validate()?;
        Ok(spec)
    }

    /// Column caps all equal to one.
    pub fn rook(m: usize, row_caps: Vec<usize>) -> Result<Self> {
        let n = row_caps.len();
        Self::new(m, n, row_caps, vec![1; m])
    }

    pub fn uniform(m: usize, n: usize, p: usize, q: usize) -> Result<Self> {
        Self::new(m, n, vec![p; n], vec![q; m])
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.n == 0 {
            return Err(Error::InvalidSpec(format!("board must be non-empty, got {}x{}", self.m, self.n)));
        }
        if self.row_caps.len() != self.n {
            return Err(Error::InvalidSpec(format!("{} row caps for {} rows", self.row_caps.len(), self.n)));
        }
        if self.col_caps.len() != self.m {
            return Err(Error::InvalidSpec(format!("{} column caps for {} columns", self.col_caps.len(), self.m)));
        }
        Ok(())
    }

    pub fn has_unit_columns(&self) -> bool {
        self.col_caps.iter().all(|&l| l == 1)
    }

    pub fn sum_row_caps(&self) -> usize {
        self.row_caps.iter().sum()
    }

    /// Caps larger than the opposite side of the board are vacuous; they are
    /// clamped with a warning.
    fn clamped(&self) -> BoardSpec {
        let mut spec = self.clone();
        for k in spec.row_caps.iter_mut() {
            if *k > self.m {
                log::warn!("row cap {k} exceeds m = {}; clamping", self.m);
                *k = self.m;
            }
        }
        for l in spec.col_caps.iter_mut() {
            if *l > self.n {
                log::warn!("column cap {l} exceeds n = {}; clamping", self.n);
                *l = self.n;
            }
        }
        spec
    }

    /// Number of faces (excluding ∅) for unit column caps, by multinomial
    /// counting over per-row rook counts. `None` when columns are not unit
    /// capped.
    pub fn count_faces(&self) -> Option<u128> {
        if !self.has_unit_columns() {
            return None;
        }
        let spec = self.clamped();
        fn rec(caps: &[usize], free: u128, acc: u128, total: &mut u128) {
            match caps.split_first() {
                None => *total += acc,
                Some((&k, rest)) => {
                    for a in 0..=k.min(free as usize) {
                        rec(rest, free - a as u128, acc * binomial(free, a as u128), total);
                    }
                }
            }
        }
        let mut total = 0u128;
        rec(&spec.row_caps, spec.m as u128, 1, &mut total);
        Some(total - 1)
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// `Δ_{m,n}^{k;l}`: placements with at most `k_i` rooks in row `i` and at
/// most `l_j` in column `j`.
pub fn multi_chessboard(spec: &BoardSpec) -> Result<SimplicialComplex> {
    spec.validate()?;
    let spec = spec.clamped();
    let m = spec.m;
    let coords = board_coords(m, spec.n);
    let ground: Vec<Vertex> = (0..(m * spec.n) as Vertex).collect();

    if spec.row_caps.iter().all(|&k| k == 0) || spec.col_caps.iter().all(|&l| l == 0) {
        return Ok(SimplicialComplex::from_parts(ground, vec![Simplex::empty()], Some(coords)));
    }

    // first-row choices fan out; the merged list is re-sorted canonically
    let available: Vec<u32> = (0..m as u32).filter(|&c| spec.col_caps[c as usize] > 0).collect();
    let mut first_rows: Vec<Vec<u32>> = Vec::new();
    for size in (0..=spec.row_caps[0].min(available.len())).rev() {
        for_each_combination(&available, size, |c| first_rows.push(c.to_vec()));
    }
    let facets: Vec<Simplex> = first_rows
        .par_iter()
        .flat_map_iter(|first| {
            let mut used = vec![0usize; m];
            for &c in first {
                used[c as usize] += 1;
            }
            let mut rows = vec![first.clone()];
            let mut out = Vec::new();
            if row_choice_viable(&spec, 0, first, &used) {
                board_rec(&spec, 1, &mut used, &mut rows, &mut out);
            }
            out
        })
        .collect();
    Ok(SimplicialComplex::from_parts(ground, facets, Some(coords)))
}

// A row left below its cap must see every other column saturated by the end.
fn row_choice_viable(spec: &BoardSpec, row: usize, chosen: &[u32], used: &[usize]) -> bool {
    if chosen.len() >= spec.row_caps[row] {
        return true;
    }
    let rows_after = spec.n - row - 1;
    (0..spec.m as u32)
        .filter(|c| !chosen.contains(c))
        .all(|c| spec.col_caps[c as usize] - used[c as usize] <= rows_after)
}

fn board_rec(spec: &BoardSpec, row: usize, used: &mut [usize], rows: &mut Vec<Vec<u32>>, out: &mut Vec<Simplex>) {
    if row == spec.n {
        if is_maximal_placement(spec, rows, used) {
            let mut verts: Vec<Vertex> = Vec::new();
            for (r, cols) in rows.iter().enumerate() {
                verts.extend(cols.iter().map(|&c| r as u32 * spec.m as u32 + c));
            }
            out.push(Simplex::from_sorted(verts));
        }
        return;
    }
    let available: Vec<u32> = (0..spec.m as u32).filter(|&c| used[c as usize] < spec.col_caps[c as usize]).collect();
    for size in (0..=spec.row_caps[row].min(available.len())).rev() {
        for_each_combination(&available, size, |choice| {
            for &c in choice {
                used[c as usize] += 1;
            }
            if row_choice_viable(spec, row, choice, used) {
                rows.push(choice.to_vec());
                board_rec(spec, row + 1, used, rows, out);
                rows.pop();
            }
            for &c in choice {
                used[c as usize] -= 1;
            }
        });
    }
}

fn is_maximal_placement(spec: &BoardSpec, rows: &[Vec<u32>], used: &[usize]) -> bool {
    for (r, cols) in rows.iter().enumerate() {
        if cols.len() >= spec.row_caps[r] {
            continue;
        }
        if (0..spec.m as u32).any(|c| !cols.contains(&c) && used[c as usize] < spec.col_caps[c as usize]) {
            return false;
        }
    }
    true
}

/// `Δ_{m,n}^{p,q}`: at most `p` rooks per row and `q` per column.
pub fn uniform_chessboard(m: usize, n: usize, p: usize, q: usize) -> Result<SimplicialComplex> {
    check_uniform(m, n, p, q)?;
    multi_chessboard(&BoardSpec::uniform(m, n, p, q)?)
}

/// The same complex built as the `n`-fold `(q+1)`-deleted join of the
/// `(p−1)`-skeleton of the simplex on `[m]`. Only used to cross-check the
/// direct generator.
pub fn uniform_via_deleted_join(m: usize, n: usize, p: usize, q: usize) -> Result<SimplicialComplex> {
    check_uniform(m, n, p, q)?;
    let skeleton = SimplicialComplex::simplex(m as u32).skeleton(p - 1);
    skeleton.deleted_join(n, q + 1)?.with_coords(board_coords(m, n))
}

fn check_uniform(m: usize, n: usize, p: usize, q: usize) -> Result<()> {
    if p == 0 || p > m || q == 0 || q > n {
        return Err(Error::InvalidSpec(format!("need 1 <= p <= m and 1 <= q <= n, got m={m} n={n} p={p} q={q}")));
    }
    Ok(())
}

/// Per-row and per-column complexes of a general chessboard complex.
///
/// Row complex `K_r` lives on `{0, …, m−1}` (column `c` is vertex `c − 1`);
/// column complex `L_c` lives on `{0, …, n−1}`.
#[derive(Clone, Debug)]
pub struct GeneralBoardSpec {
    pub m: usize,
    pub n: usize,
    pub row_complexes: Vec<SimplicialComplex>,
    pub col_complexes: Vec<SimplicialComplex>,
}

impl GeneralBoardSpec {
    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.n == 0 {
            return Err(Error::InvalidSpec("board must be non-empty".into()));
        }
        if self.row_complexes.len() != self.n || self.col_complexes.len() != self.m {
            return Err(Error::InvalidSpec(format!(
                "expected {} row complexes and {} column complexes, got {} and {}",
                self.n,
                self.m,
                self.row_complexes.len(),
                self.col_complexes.len()
            )));
        }
        for k in &self.row_complexes {
            if let Some(&v) = k.used_vertices().iter().find(|&&v| v as usize >= self.m) {
                return Err(Error::NotOnGround { m: self.m, vertex: v });
            }
        }
        for l in &self.col_complexes {
            if let Some(&v) = l.used_vertices().iter().find(|&&v| v as usize >= self.n) {
                return Err(Error::NotOnGround { m: self.n, vertex: v });
            }
        }
        Ok(())
    }
}

/// `Δ_{m,n}^{𝒦,ℒ}`: placements whose trace on row `r` is a face of `K_r` and
/// whose trace on column `c` is a face of `L_c`.
///
/// A void row or column complex admits no trace at all, so the result is
/// void; use `{∅}` to forbid rooks in a line.
pub fn general_chessboard(spec: &GeneralBoardSpec) -> Result<SimplicialComplex> {
    spec.validate()?;
    let (m, n) = (spec.m, spec.n);
    let ground: Vec<Vertex> = (0..(m * n) as Vertex).collect();
    let coords = board_coords(m, n);
    if spec.row_complexes.iter().chain(&spec.col_complexes).any(SimplicialComplex::is_void) {
        return Ok(SimplicialComplex::from_parts(ground, Vec::new(), Some(coords)));
    }
    let row_faces: Vec<Vec<Vec<u32>>> = spec
        .row_complexes
        .iter()
        .map(|k| {
            let mut faces: Vec<Vec<u32>> = vec![Vec::new()];
            for dim in k.all_faces() {
                faces.extend(dim.into_iter().map(Simplex::into_vertices));
            }
            faces
        })
        .collect();
    let mut state = GeneralState { spec, row_faces: &row_faces, rows: Vec::new(), col_traces: vec![Vec::new(); m] };
    let mut out = Vec::new();
    state.rec(0, &mut out);
    Ok(SimplicialComplex::from_parts(ground, out, Some(coords)))
}

struct GeneralState<'a> {
    spec: &'a GeneralBoardSpec,
    row_faces: &'a [Vec<Vec<u32>>],
    rows: Vec<Vec<u32>>,
    col_traces: Vec<Vec<u32>>,
}

impl GeneralState<'_> {
    fn rec(&mut self, row: usize, out: &mut Vec<Simplex>) {
        let (m, n) = (self.spec.m, self.spec.n);
        if row == n {
            if self.is_maximal() {
                let mut verts = Vec::new();
                for (r, cols) in self.rows.iter().enumerate() {
                    verts.extend(cols.iter().map(|&c| (r * m) as u32 + c));
                }
                out.push(Simplex::from_sorted(verts));
            }
            return;
        }
        let faces = &self.row_faces[row];
        for face in faces {
            // traces only grow, so a bad column trace can be pruned here
            let ok = face.iter().all(|&c| {
                let mut t = self.col_traces[c as usize].clone();
                t.push(row as u32);
                self.spec.col_complexes[c as usize].contains_face(&Simplex::from_sorted(t))
            });
            if !ok {
                continue;
            }
            for &c in face {
                self.col_traces[c as usize].push(row as u32);
            }
            self.rows.push(face.clone());
            self.rec(row + 1, out);
            self.rows.pop();
            for &c in face {
                self.col_traces[c as usize].pop();
            }
        }
    }

    fn is_maximal(&self) -> bool {
        for (r, cols) in self.rows.iter().enumerate() {
            for c in 0..self.spec.m as u32 {
                if cols.contains(&c) {
                    continue;
                }
                let row_ok = self.spec.row_complexes[r].contains_face(&Simplex::new([cols.as_slice(), &[c]].concat()));
                if !row_ok {
                    continue;
                }
                let mut t = self.col_traces[c as usize].clone();
                t.push(r as u32);
                if self.spec.col_complexes[c as usize].contains_face(&Simplex::new(t)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Board with at most two rooks in the rows of `rows` and one elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoOneJSpec {
    pub m: usize,
    pub n: usize,
    /// 1-based row labels allowed two rooks.
    pub rows: Vec<usize>,
}

impl TwoOneJSpec {
    /// The default distinguished rows `{1, …, j}`.
    pub fn new(m: usize, n: usize, j: usize) -> Self {
        TwoOneJSpec { m, n, rows: (1..=j).collect() }
    }

    pub fn j(&self) -> usize {
        self.rows.len()
    }

    pub fn board(&self) -> Result<BoardSpec> {
        let mut rows = self.rows.clone();
        rows.sort_unstable();
        rows.dedup();
        if rows.len() != self.rows.len() || rows.iter().any(|&r| r == 0 || r > self.n) {
            return Err(Error::InvalidSpec(format!("distinguished rows {:?} are not a subset of [{}]", self.rows, self.n)));
        }
        let caps = (1..=self.n).map(|r| if rows.contains(&r) { 2 } else { 1 }).collect();
        BoardSpec::rook(self.m, caps)
    }
}

/// `Δ_{m,n}^{2,1(j)}`.
pub fn two_one_j(spec: &TwoOneJSpec) -> Result<SimplicialComplex> {
    multi_chessboard(&spec.board()?)
}

/// The Bier sphere `Bier_m(K) = K * K°` realized on the `m × 2` board with
/// row complexes `(K, K°)` and at most one rook per column.
pub fn bier_sphere(k: &SimplicialComplex, m: usize) -> Result<SimplicialComplex> {
    if let Some(&v) = k.ground().iter().find(|&&v| v as usize >= m) {
        return Err(Error::NotOnGround { m, vertex: v });
    }
    if k.is_void() {
        return Err(Error::InvalidSpec("Bier sphere needs ∅ ∈ K".into()));
    }
    let dual = k.alexander_dual(m)?;
    if dual.is_void() {
        return Err(Error::InvalidSpec("Bier sphere needs K to be a proper subcomplex of 2^[m]".into()));
    }
    let column = SimplicialComplex::points(2);
    general_chessboard(&GeneralBoardSpec {
        m,
        n: 2,
        row_complexes: vec![k.clone(), dual],
        col_complexes: vec![column; m],
    })
}

/// The complete multipartite complex `[t_1] * ⋯ * [t_k]`.
pub fn multipartite(sizes: &[usize]) -> Result<SimplicialComplex> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidSpec(format!("part sizes must be positive, got {sizes:?}")));
    }
    let mut out = SimplicialComplex::empty_face();
    for &t in sizes {
        out = out.join(&SimplicialComplex::points(t as u32));
    }
    Ok(out)
}
