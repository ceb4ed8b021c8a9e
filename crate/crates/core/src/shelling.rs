//! The cyclic reversed-lexicographic facet order on multiple chessboard
//! complexes with unit column caps, and a generic shelling verifier.
//!
//! A facet is written as a tuple `(A_1, …, A_n)` of disjoint column sets,
//! `A_i` holding the columns of the rooks in row `i`. Columns are 1-based.
//!
//! Comparing `A` and `B`: if the first rows differ, the one whose symmetric
//! difference maximum lies in `B_1` comes first. Otherwise the remaining
//! columns are scanned in priority order (see [`priority_sequence`]). At the
//! first column where the two facets differ, a facet without a rook there
//! comes first, and between two rooks the one in the higher row comes first.
//! If a column is empty in both, the scanned columns, the first row, the
//! columns of `A_1` and every row whose cap is used up inside the scanned
//! columns are removed, and the comparison restarts on what is left.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::board::{id_square, multi_chessboard, square_id, BoardSpec};
use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// A facet as disjoint per-row column sets, `parts[i]` for row `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FacetTuple {
    parts: Vec<Vec<u32>>,
}

impl FacetTuple {
    /// Sorts each part and checks disjointness and the column range `1..=m`.
    pub fn new(m: usize, mut parts: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = vec![false; m + 1];
        for (i, part) in parts.iter_mut().enumerate() {
            part.sort_unstable();
            for &c in part.iter() {
                if c == 0 || c as usize > m {
                    return Err(Error::FacetShape(format!("column {c} in row {} outside [1, {m}]", i + 1)));
                }
                if std::mem::replace(&mut seen[c as usize], true) {
                    return Err(Error::FacetShape(format!("column {c} used twice")));
                }
            }
        }
        Ok(FacetTuple { parts })
    }

    /// Reads a face of an `m × n` board.
    pub fn from_simplex(m: usize, n: usize, face: &Simplex) -> Result<Self> {
        let mut parts = vec![Vec::new(); n];
        for &v in face.vertices() {
            let sq = id_square(m, v);
            if sq.row as usize > n {
                return Err(Error::FacetShape(format!("vertex {v} is off the {m}x{n} board")));
            }
            parts[sq.row as usize - 1].push(sq.col);
        }
        Self::new(m, parts)
    }

    pub fn to_simplex(&self, m: usize) -> Simplex {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, part)| part.iter().map(move |&c| square_id(m, c, i as u32 + 1)))
            .collect()
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// `table[c]` is the 1-based row of the rook in column `c`, 0 if none.
    fn column_rows(&self, m: usize) -> Vec<u8> {
        let mut table = vec![0u8; m + 1];
        for (i, part) in self.parts.iter().enumerate() {
            for &c in part {
                table[c as usize] = i as u8 + 1;
            }
        }
        table
    }
}

impl fmt::Display for FacetTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for (j, c) in part.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, ")")
    }
}

/// A maximal run `start, start + 1, …, start + len − 1` of free columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lacuna {
    pub start: u32,
    pub len: u32,
}

impl Lacuna {
    pub fn end(&self) -> u32 {
        self.start + self.len - 1
    }
}

/// Free columns of the first row, in the order they are examined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrioritySequence {
    pub lacunas: Vec<Lacuna>,
    pub columns: Vec<u32>,
}

/// Lacunas of `[m] ∖ a1` left to right, each read right to left.
pub fn priority_sequence(a1: &[u32], m: usize) -> PrioritySequence {
    let mut taken = vec![false; m + 2];
    for &c in a1 {
        if (c as usize) <= m {
            taken[c as usize] = true;
        }
    }
    let mut lacunas = Vec::new();
    let mut c = 1;
    while c <= m {
        if taken[c] {
            c += 1;
            continue;
        }
        let start = c;
        while c <= m && !taken[c] {
            c += 1;
        }
        lacunas.push(Lacuna { start: start as u32, len: (c - start) as u32 });
    }
    let columns = lacunas.iter().flat_map(|l| (l.start..=l.end()).rev()).collect();
    PrioritySequence { lacunas, columns }
}

/// How the board left after a reduction step is renumbered.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relabel {
    /// Surviving columns and rows keep their relative order.
    #[default]
    OrderPreserving,
    /// Surviving columns are numbered right to left; rows keep their order.
    ReverseColumns,
}

/// The facet order for one board.
#[derive(Clone, Debug)]
pub struct FacetOrder {
    m: usize,
    caps: Vec<usize>,
    relabel: Relabel,
}

impl FacetOrder {
    /// Requires unit column caps; rows may have any cap.
    pub fn new(spec: &BoardSpec) -> Result<Self> {
        spec.validate()?;
        if !spec.has_unit_columns() {
            return Err(Error::InvalidSpec("the facet order needs column caps equal to 1".into()));
        }
        if spec.n > u8::MAX as usize {
            return Err(Error::TooLarge(format!("{} rows", spec.n)));
        }
        Ok(FacetOrder { m: spec.m, caps: spec.row_caps.clone(), relabel: Relabel::OrderPreserving })
    }

    pub fn with_relabel(mut self, relabel: Relabel) -> Self {
        self.relabel = relabel;
        self
    }

    fn check(&self, a: &FacetTuple) -> Result<()> {
        if a.rows() != self.caps.len() {
            return Err(Error::FacetShape(format!("{} rows, expected {}", a.rows(), self.caps.len())));
        }
        for (i, (part, &k)) in a.parts.iter().zip(&self.caps).enumerate() {
            if part.len() > k {
                return Err(Error::FacetShape(format!("row {} holds {} rooks, cap {k}", i + 1, part.len())));
            }
            if part.iter().any(|&c| c == 0 || c as usize > self.m) {
                return Err(Error::FacetShape(format!("row {} leaves the board", i + 1)));
            }
        }
        Ok(())
    }

    /// `Less` when `a` comes before `b`.
    pub fn compare(&self, a: &FacetTuple, b: &FacetTuple) -> Result<Ordering> {
        self.check(a)?;
        self.check(b)?;
        self.compare_tables(&a.column_rows(self.m), &b.column_rows(self.m))
    }

    fn compare_tables(&self, a: &[u8], b: &[u8]) -> Result<Ordering> {
        let cols: Vec<u32> = (1..=self.m as u32).collect();
        let rows: Vec<u8> = (1..=self.caps.len() as u8).collect();
        compare_rec(a, b, cols, rows, self.caps.clone(), self.relabel)
    }

    /// Sorts facets of this board; all must be valid tuples.
    pub fn sort(&self, facets: &mut [FacetTuple]) -> Result<()> {
        for f in facets.iter() {
            self.check(f)?;
        }
        let tables: Vec<Vec<u8>> = facets.iter().map(|f| f.column_rows(self.m)).collect();
        let mut idx: Vec<usize> = (0..facets.len()).collect();
        let failure = RefCell::new(None);
        idx.sort_by(|&i, &j| match self.compare_tables(&tables[i], &tables[j]) {
            Ok(o) => o,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                Ordering::Equal
            }
        });
        if let Some(e) = failure.into_inner() {
            return Err(e);
        }
        let sorted: Vec<FacetTuple> = idx.iter().map(|&i| facets[i].clone()).collect();
        facets.clone_from_slice(&sorted);
        Ok(())
    }
}

// `cols[x - 1]` is the original label of current column `x`; `rows[t]` the
// original label of current row `t + 1`, with cap `caps[t]`.
fn compare_rec(
    a: &[u8],
    b: &[u8],
    cols: Vec<u32>,
    rows: Vec<u8>,
    caps: Vec<usize>,
    relabel: Relabel,
) -> Result<Ordering> {
    let Some(&first) = rows.first() else {
        return if cols.iter().all(|&c| a[c as usize] == b[c as usize]) {
            Ok(Ordering::Equal)
        } else {
            Err(Error::Internal("distinct facets agree on every reduced board".into()))
        };
    };
    let mut rank = [u8::MAX; 256];
    for (t, &r) in rows.iter().enumerate() {
        rank[r as usize] = t as u8;
    }
    let alive = |r: u8| (r != 0 && rank[r as usize] != u8::MAX).then_some(rank[r as usize]);

    // first row, compared anti-lexicographically
    let top = cols.iter().rposition(|&c| (a[c as usize] == first) != (b[c as usize] == first));
    if let Some(x) = top {
        return Ok(if b[cols[x] as usize] == first { Ordering::Less } else { Ordering::Greater });
    }

    let a1: Vec<u32> = (1..=cols.len() as u32).filter(|&x| a[cols[x as usize - 1] as usize] == first).collect();
    let order = priority_sequence(&a1, cols.len()).columns;
    for (idx, &x) in order.iter().enumerate() {
        let c = cols[x as usize - 1] as usize;
        match (alive(a[c]), alive(b[c])) {
            (Some(i), Some(j)) if i == j => continue,
            (None, Some(_)) => return Ok(Ordering::Less),
            (Some(_), None) => return Ok(Ordering::Greater),
            (Some(i), Some(j)) => return Ok(if i > j { Ordering::Less } else { Ordering::Greater }),
            (None, None) => {
                let scanned = &order[..=idx];
                let mut used = vec![0usize; rows.len()];
                for &y in scanned {
                    if let Some(t) = alive(a[cols[y as usize - 1] as usize]) {
                        used[t as usize] += 1;
                    }
                }
                let mut next_rows = Vec::new();
                let mut next_caps = Vec::new();
                for t in 1..rows.len() {
                    if used[t] < caps[t] {
                        next_rows.push(rows[t]);
                        next_caps.push(caps[t] - used[t]);
                    }
                }
                let mut drop = vec![false; cols.len() + 1];
                for &y in scanned.iter().chain(&a1) {
                    drop[y as usize] = true;
                }
                let mut next_cols: Vec<u32> =
                    (1..=cols.len()).filter(|&y| !drop[y]).map(|y| cols[y - 1]).collect();
                if relabel == Relabel::ReverseColumns {
                    next_cols.reverse();
                }
                return compare_rec(a, b, next_cols, next_rows, next_caps, relabel);
            }
        }
    }
    Ok(Ordering::Equal)
}

/// Compares two facets of the board `spec` (unit column caps).
pub fn compare_facets(a: &FacetTuple, b: &FacetTuple, spec: &BoardSpec) -> Result<Ordering> {
    FacetOrder::new(spec)?.compare(a, b)
}

fn check_shelling_hypothesis(spec: &BoardSpec) -> Result<()> {
    spec.validate()?;
    if !spec.has_unit_columns() {
        return Err(Error::InvalidSpec("the shelling order needs column caps equal to 1".into()));
    }
    let sum_k = spec.sum_row_caps();
    if spec.m + 1 < sum_k + spec.n {
        return Err(Error::ShellingHypothesis { m: spec.m, sum_k, n: spec.n });
    }
    Ok(())
}

/// All facets of `Δ_{m,n}^{k;1}` sorted by the facet order. Requires
/// `m ≥ Σk + n − 1`.
pub fn shelling_order(spec: &BoardSpec) -> Result<Vec<FacetTuple>> {
    shelling_order_with(spec, Relabel::OrderPreserving)
}

pub fn shelling_order_with(spec: &BoardSpec, relabel: Relabel) -> Result<Vec<FacetTuple>> {
    check_shelling_hypothesis(spec)?;
    let order = FacetOrder::new(spec)?.with_relabel(relabel);
    let k = multi_chessboard(spec)?;
    let mut facets = k
        .facets()
        .iter()
        .map(|f| FacetTuple::from_simplex(spec.m, spec.n, f))
        .collect::<Result<Vec<_>>>()?;
    order.sort(&mut facets)?;
    Ok(facets)
}

/// Facets in increasing lexicographic order of their sorted vertex ids.
pub fn lexicographic_order(k: &SimplicialComplex) -> Vec<Simplex> {
    let mut facets = k.facets().to_vec();
    facets.sort_by(crate::complex::lex_cmp);
    facets
}

/// A pair of facets breaking the shelling condition: everything `F_j`
/// shares with earlier facets along codimension-one faces lies inside `F_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// 0-based positions in the order, `i < j`.
    pub i: usize,
    pub j: usize,
    pub facet: Simplex,
    pub earlier: Simplex,
    pub intersection: Simplex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingCertificate {
    pub facets: Vec<Simplex>,
    /// `R_j`: vertices `v` of `F_j` with `F_j ∖ v` inside an earlier facet.
    pub restriction_faces: Vec<Simplex>,
    pub spanning: Vec<bool>,
    pub violation: Option<Violation>,
}

impl ShellingCertificate {
    pub fn is_verified(&self) -> bool {
        self.violation.is_none()
    }
}

struct Bits {
    words: usize,
    data: Vec<u64>,
}

impl Bits {
    fn new(rows: usize, max_vertex: Vertex) -> Self {
        let words = max_vertex as usize / 64 + 1;
        Bits { words, data: vec![0; rows * words] }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    fn set(&mut self, i: usize, v: Vertex) {
        self.data[i * self.words + v as usize / 64] |= 1 << (v % 64);
    }
}

/// Checks whether `order` is a shelling of the pure complex `k`.
///
/// An order `F_1, …, F_t` is a shelling iff for every `i < j` some vertex
/// `v ∈ F_j ∖ F_i` has `F_j ∖ v` contained in an earlier facet.
pub fn verify_shelling(k: &SimplicialComplex, order: &[Simplex]) -> Result<ShellingCertificate> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    if order.len() != k.facets().len() {
        return Err(Error::NotPermutation(format!("{} facets given, complex has {}", order.len(), k.facets().len())));
    }
    let mut seen = HashSet::with_capacity(order.len());
    for f in order {
        if !seen.insert(f) {
            return Err(Error::NotPermutation(format!("facet {f} repeated")));
        }
        if k.facets().binary_search(f).is_err() {
            return Err(Error::NotPermutation(format!("{f} is not a facet")));
        }
    }

    let max_vertex = order.iter().flat_map(|f| f.vertices().last().copied()).max().unwrap_or(0);
    let mut facet_bits = Bits::new(order.len(), max_vertex);
    let mut ridges: HashSet<Simplex> = HashSet::new();
    let mut restriction_faces = Vec::with_capacity(order.len());
    let mut spanning = Vec::with_capacity(order.len());
    let mut violation = None;

    for (j, f) in order.iter().enumerate() {
        for &v in f.vertices() {
            facet_bits.set(j, v);
        }
        let r: Simplex = (0..f.len())
            .filter(|&pos| j > 0 && ridges.contains(f.without_position(pos).vertices()))
            .map(|pos| f.vertices()[pos])
            .collect();
        if violation.is_none() && j > 0 {
            let mut r_bits = Bits::new(1, max_vertex);
            for &v in r.vertices() {
                r_bits.set(0, v);
            }
            let rb = r_bits.row(0);
            let bad = (0..j).find(|&i| facet_bits.row(i).iter().zip(rb).all(|(fi, ri)| ri & !fi == 0));
            if let Some(i) = bad {
                violation = Some(Violation {
                    i,
                    j,
                    facet: f.clone(),
                    earlier: order[i].clone(),
                    intersection: f.intersection(&order[i]),
                });
            }
        }
        for pos in 0..f.len() {
            ridges.insert(f.without_position(pos));
        }
        spanning.push(r.len() == f.len() && j > 0);
        restriction_faces.push(r);
    }
    Ok(ShellingCertificate { facets: order.to_vec(), restriction_faces, spanning, violation })
}

/// Number of spanning facets of a verified shelling: the number of spheres
/// in the wedge, equal to the top reduced Betti number.
pub fn wedge_summary(cert: &ShellingCertificate) -> Result<usize> {
    if !cert.is_verified() {
        return Err(Error::Unverified);
    }
    Ok(cert.spanning.iter().filter(|&&s| s).count())
}

/// Exhaustive search for any shelling order; for complexes with at most 8
/// facets. Meant for testing.
pub fn find_shelling(k: &SimplicialComplex) -> Result<Option<Vec<Simplex>>> {
    const LIMIT: usize = 8;
    if k.facets().len() > LIMIT {
        return Err(Error::TooLarge(format!("{} facets, brute force handles {LIMIT}", k.facets().len())));
    }
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    fn extends(prefix: &[Simplex], f: &Simplex) -> bool {
        if prefix.is_empty() {
            return true;
        }
        let r: Vec<Vertex> = f
            .vertices()
            .iter()
            .copied()
            .filter(|&v| {
                let ridge = f.without(v);
                prefix.iter().any(|g| ridge.is_subset(g))
            })
            .collect();
        prefix.iter().all(|g| r.iter().any(|v| !g.contains(*v)))
    }
    fn rec(rest: &mut Vec<Simplex>, prefix: &mut Vec<Simplex>) -> bool {
        if rest.is_empty() {
            return true;
        }
        for idx in 0..rest.len() {
            if !extends(prefix, &rest[idx]) {
                continue;
            }
            let f = rest.remove(idx);
            prefix.push(f);
            if rec(rest, prefix) {
                return true;
            }
            let f = prefix.pop().expect("pushed above");
            rest.insert(idx, f);
        }
        false
    }
    let mut rest = k.facets().to_vec();
    let mut prefix = Vec::new();
    Ok(rec(&mut rest, &mut prefix).then_some(prefix))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::top_betti;

    fn tuple(m: usize, parts: &[&[u32]]) -> FacetTuple {
        FacetTuple::new(m, parts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn priority_sequences() {
        assert_eq!(priority_sequence(&[3], 5).columns, vec![2, 1, 5, 4]);
        assert_eq!(priority_sequence(&[1, 4], 5).columns, vec![3, 2, 5]);
        assert_eq!(priority_sequence(&[], 4).columns, vec![4, 3, 2, 1]);
        assert!(priority_sequence(&[1, 2, 3], 3).columns.is_empty());
        let p = priority_sequence(&[3], 5);
        assert_eq!(p.lacunas, vec![Lacuna { start: 1, len: 2 }, Lacuna { start: 4, len: 2 }]);
    }

    #[test]
    fn reduction_to_a_single_row() {
        let spec = BoardSpec::rook(5, vec![1, 2]).unwrap();
        let a = tuple(5, &[&[3], &[1, 4]]);
        let b = tuple(5, &[&[3], &[1, 5]]);
        assert_eq!(compare_facets(&a, &b, &spec).unwrap(), Ordering::Less);
        assert_eq!(compare_facets(&b, &a, &spec).unwrap(), Ordering::Greater);
        assert_eq!(compare_facets(&a, &a, &spec).unwrap(), Ordering::Equal);
    }

    #[test]
    fn first_row_anti_lex() {
        let spec = BoardSpec::rook(4, vec![1, 1]).unwrap();
        let a = tuple(4, &[&[2], &[4]]);
        let b = tuple(4, &[&[3], &[4]]);
        assert_eq!(compare_facets(&a, &b, &spec).unwrap(), Ordering::Less);
    }

    #[test]
    fn second_row_predecessors_of_the_lex_obstruction() {
        for m in 3..=6u32 {
            let spec = BoardSpec::rook(m as usize, vec![1, 1]).unwrap();
            let b = tuple(m as usize, &[&[2], &[1]]);
            for j in 3..=m {
                let a = tuple(m as usize, &[&[2], &[j]]);
                assert_eq!(compare_facets(&a, &b, &spec).unwrap(), Ordering::Less, "m={m} j={j}");
            }
        }
    }

    #[test]
    fn triangle_edges() {
        let spec = BoardSpec::rook(3, vec![2]).unwrap();
        let order: Vec<_> = shelling_order(&spec).unwrap().into_iter().map(|f| f.parts()[0].clone()).collect();
        assert_eq!(order, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn hypothesis_is_enforced() {
        let spec = BoardSpec::rook(4, vec![2, 2]).unwrap();
        assert!(matches!(shelling_order(&spec), Err(Error::ShellingHypothesis { .. })));
    }

    #[test]
    fn shape_errors() {
        let spec = BoardSpec::rook(4, vec![1, 1]).unwrap();
        let a = tuple(4, &[&[1, 2], &[3]]);
        let b = tuple(4, &[&[1], &[3]]);
        assert!(matches!(compare_facets(&a, &b, &spec), Err(Error::FacetShape(_))));
        assert!(FacetTuple::new(4, vec![vec![1], vec![1]]).is_err());
        assert!(FacetTuple::new(4, vec![vec![5]]).is_err());
    }

    #[test]
    fn certificate_on_small_boards() {
        let spec = BoardSpec::rook(5, vec![2, 2]).unwrap();
        let k = multi_chessboard(&spec).unwrap();
        let order: Vec<Simplex> = shelling_order(&spec).unwrap().iter().map(|f| f.to_simplex(5)).collect();
        let cert = verify_shelling(&k, &order).unwrap();
        assert!(cert.is_verified(), "{:?}", cert.violation);
        assert_eq!(wedge_summary(&cert).unwrap(), top_betti(&k));
    }

    #[test]
    fn lex_fails_on_standard_board() {
        let k = multi_chessboard(&BoardSpec::rook(3, vec![1, 1]).unwrap()).unwrap();
        let cert = verify_shelling(&k, &lexicographic_order(&k)).unwrap();
        let v = cert.violation.clone().unwrap();
        assert_eq!(v.facet, Simplex::from([1, 3]));
        assert!(v.intersection.is_empty());
        assert!(matches!(wedge_summary(&cert), Err(Error::Unverified)));
    }

    #[test]
    fn single_facet_and_boundary() {
        let k = SimplicialComplex::simplex(3);
        let cert = verify_shelling(&k, k.facets()).unwrap();
        assert!(cert.is_verified());
        assert!(cert.restriction_faces[0].is_empty());
        assert_eq!(wedge_summary(&cert).unwrap(), 0);

        let k = SimplicialComplex::simplex_boundary(3);
        let cert = verify_shelling(&k, k.facets()).unwrap();
        assert_eq!(wedge_summary(&cert).unwrap(), 1);
    }

    #[test]
    fn input_errors() {
        let k = SimplicialComplex::from_facets([Simplex::from([0, 1]), Simplex::from([2])]);
        assert!(matches!(verify_shelling(&k, k.facets()), Err(Error::NotPure)));
        let k = SimplicialComplex::simplex_boundary(3);
        let twice = vec![k.facets()[0].clone(), k.facets()[0].clone(), k.facets()[1].clone()];
        assert!(matches!(verify_shelling(&k, &twice), Err(Error::NotPermutation(_))));
        assert!(matches!(verify_shelling(&k, &k.facets()[..2]), Err(Error::NotPermutation(_))));
    }

    #[test]
    fn brute_force_search() {
        let k = SimplicialComplex::simplex_boundary(3);
        let order = find_shelling(&k).unwrap().unwrap();
        assert!(verify_shelling(&k, &order).unwrap().is_verified());
        // two disjoint edges admit no shelling
        let k = SimplicialComplex::from_facets([Simplex::from([0, 1]), Simplex::from([2, 3])]);
        assert_eq!(find_shelling(&k).unwrap(), None);
    }
}
