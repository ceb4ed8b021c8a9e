//! Sparse integer matrices and their Smith normal form.
//!
//! Elimination runs in two phases. The sparse phase pivots only on entries
//! `±1` (each such pivot contributes an invariant factor 1 and removes a row
//! and a column). Whatever survives, typically a small block, goes through a
//! dense Smith reduction over arbitrary-precision integers with the pivot of
//! smallest absolute value, leftmost on ties.
//!
//! The sparse phase works in `i64` with checked arithmetic and restarts over
//! `BigInt` on overflow, so results are always exact.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A sparse matrix over ℤ with no stored zeros; rows are kept sorted by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, BigInt)>>,
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets<I, V>(rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, V)>,
        V: Into<BigInt>,
    {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triplets {
            let old = m.get(r, c);
            m.set(r, c, old + v.into());
        }
        m
    }

    pub fn from_dense<V: Into<BigInt> + Clone>(dense: &[Vec<V>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let triplets = dense
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (i, j, v.clone().into())));
        Self::from_triplets::<_, BigInt>(rows, cols, triplets)
    }

    pub(crate) fn from_small_rows(rows: usize, cols: usize, small: Vec<Vec<(u32, i64)>>) -> Self {
        debug_assert_eq!(small.len(), rows);
        let data = small.into_iter().map(|r| r.into_iter().map(|(c, v)| (c as usize, BigInt::from(v))).collect()).collect();
        SparseIntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        match self.data[r].binary_search_by_key(&c, |e| e.0) {
            Ok(i) => self.data[r][i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(i) if v.is_zero() => {
                row.remove(i);
            }
            Ok(i) => row[i].1 = v,
            Err(_) if v.is_zero() => {}
            Err(i) => row.insert(i, (c, v)),
        }
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, c, v) in self.iter() {
            t.data[c].push((r, v.clone()));
        }
        t
    }

    pub fn mul(&self, other: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc: std::collections::BTreeMap<usize, BigInt> = Default::default();
            for (k, a) in row {
                for (c, b) in &other.data[*k] {
                    *acc.entry(*c).or_default() += a * b;
                }
            }
            out.data[r] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, c, v) in self.iter() {
            d[r][c] = v.clone();
        }
        d
    }
}

/// Invariant factors of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries `d_1 | d_2 | ⋯ | d_r`, all positive.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &SparseIntMatrix) -> SmithForm {
    let small: Option<Vec<Vec<(u32, i64)>>> = m
        .data
        .iter()
        .map(|row| row.iter().map(|(c, v)| v.to_i64().map(|x| (*c as u32, x))).collect())
        .collect();
    match small {
        Some(rows) => smith_of_rows(m.cols, rows),
        None => {
            let rows = m.data.iter().map(|row| row.iter().map(|(c, v)| (*c as u32, v.clone())).collect()).collect();
            finish(eliminate::<BigInt>(m.cols, rows).expect("BigInt arithmetic cannot overflow"))
        }
    }
}

/// Smith form of a matrix given by sorted sparse `i64` rows.
pub(crate) fn smith_of_rows(cols: usize, rows: Vec<Vec<(u32, i64)>>) -> SmithForm {
    match eliminate::<i64>(cols, rows.clone()) {
        Some(e) => finish(e),
        None => {
            log::debug!("i64 overflow in sparse elimination; retrying over BigInt");
            let big = rows.into_iter().map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect()).collect();
            finish(eliminate::<BigInt>(cols, big).expect("BigInt arithmetic cannot overflow"))
        }
    }
}

pub fn rank(m: &SparseIntMatrix) -> usize {
    smith_normal_form(m).rank()
}

trait Coeff: Clone + Debug + PartialEq {
    fn is_nil(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Coeff for i64 {
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i64::checked_mul(*self, *other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i64::checked_sub(*self, *other)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for BigInt {
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

struct Eliminated {
    unit_pivots: usize,
    remainder: Vec<Vec<BigInt>>,
}

/// Sparse unit-pivot elimination. Returns `None` on arithmetic overflow.
fn eliminate<T: Coeff>(cols: usize, mut rows: Vec<Vec<(u32, T)>>) -> Option<Eliminated> {
    let nrows = rows.len();
    let mut alive = vec![true; nrows];
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); cols];
    let mut col_dead = vec![false; cols];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c as usize].push(r as u32);
        }
    }
    let mut heap: BinaryHeap<Reverse<(usize, u32)>> = BinaryHeap::with_capacity(nrows);
    for (r, row) in rows.iter().enumerate() {
        if row.is_empty() {
            alive[r] = false;
        } else {
            heap.push(Reverse((row.len(), r as u32)));
        }
    }
    let mut unit_pivots = 0usize;
    let mut scratch: Vec<(u32, T)> = Vec::new();

    while let Some(Reverse((len, r))) = heap.pop() {
        let r = r as usize;
        if !alive[r] || rows[r].len() != len {
            continue;
        }
        // unit entry in the sparsest column
        let Some((pc, pv)) = rows[r]
            .iter()
            .filter(|(_, v)| v.is_unit())
            .min_by_key(|(c, _)| (col_rows[*c as usize].len(), *c))
            .cloned()
        else {
            continue;
        };
        let pivot_row = std::mem::take(&mut rows[r]);
        alive[r] = false;
        let targets = std::mem::take(&mut col_rows[pc as usize]);
        for &t in &targets {
            let t = t as usize;
            if t == r || !alive[t] {
                continue;
            }
            let Ok(pos) = rows[t].binary_search_by_key(&pc, |e| e.0) else { continue };
            // pivot is ±1, so its inverse is itself
            let factor = rows[t][pos].1.checked_mul(&pv)?;
            scratch.clear();
            let (a, b) = (&rows[t], &pivot_row);
            let (mut i, mut j) = (0, 0);
            while i < a.len() || j < b.len() {
                let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
                let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
                if take_a {
                    scratch.push(a[i].clone());
                    i += 1;
                } else if take_b {
                    let v = T::checked_sub(&zero_like(&b[j].1), &factor.checked_mul(&b[j].1)?)?;
                    col_rows[b[j].0 as usize].push(t as u32);
                    scratch.push((b[j].0, v));
                    j += 1;
                } else {
                    let v = a[i].1.checked_sub(&factor.checked_mul(&b[j].1)?)?;
                    if !v.is_nil() {
                        scratch.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            std::mem::swap(&mut rows[t], &mut scratch);
            if rows[t].is_empty() {
                alive[t] = false;
            } else {
                heap.push(Reverse((rows[t].len(), t as u32)));
            }
        }
        col_dead[pc as usize] = true;
        unit_pivots += 1;
    }

    // dense remainder over surviving rows and columns
    let live_rows: Vec<usize> = (0..nrows).filter(|&r| alive[r] && !rows[r].is_empty()).collect();
    let mut live_cols: Vec<u32> = live_rows.iter().flat_map(|&r| rows[r].iter().map(|e| e.0)).collect();
    live_cols.sort_unstable();
    live_cols.dedup();
    debug_assert!(live_cols.iter().all(|&c| !col_dead[c as usize]));
    let mut remainder = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
    for (i, &r) in live_rows.iter().enumerate() {
        for (c, v) in &rows[r] {
            let j = live_cols.binary_search(c).expect("collected above");
            remainder[i][j] = v.to_big();
        }
    }
    Some(Eliminated { unit_pivots, remainder })
}

fn zero_like<T: Coeff>(x: &T) -> T {
    // x - x is zero in both coefficient types without a Zero bound
    x.checked_sub(x).expect("x - x never overflows")
}

fn finish(e: Eliminated) -> SmithForm {
    let mut factors = vec![BigInt::one(); e.unit_pivots];
    factors.extend(dense_smith_diagonal(e.remainder));
    SmithForm { invariant_factors: factors }
}

/// Diagonal of a dense integer matrix brought to divisibility order.
pub(crate) fn dense_smith_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest |a_ij| over the trailing block, leftmost then topmost
        let mut best: Option<(usize, usize)> = None;
        for j in t..cols {
            for i in t..rows {
                if a[i][j].is_zero() {
                    continue;
                }
                if best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&p);
                for j in t..cols {
                    let delta = &q * &a[t][j];
                    a[i][j] -= delta;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&p);
                for i in t..rows {
                    let delta = &q * &a[i][t];
                    a[i][j] -= delta;
                }
            }
            // remainders left behind are smaller than the pivot; promote the smallest
            let mut best: Option<(bool, usize)> = None;
            let mut best_abs = p.abs();
            for i in t + 1..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < best_abs {
                    best_abs = a[i][t].abs();
                    best = Some((true, i));
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < best_abs {
                    best_abs = a[t][j].abs();
                    best = Some((false, j));
                }
            }
            match best {
                Some((true, i)) => a.swap(t, i),
                Some((false, j)) => {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    // (d_i, d_j) -> (gcd, lcm) yields the divisibility chain
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}
