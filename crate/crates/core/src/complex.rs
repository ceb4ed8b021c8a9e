//! Finite abstract simplicial complexes stored by their facets.
//!
//! A complex is kept as the antichain of its maximal faces together with a
//! ground set. Face membership is containment in some facet, so the full face
//! lattice is only materialized on demand (`faces`, `f_vector`).
//!
//! Two degenerate complexes are kept apart: the *void* complex has no faces
//! at all, while `{∅}` has exactly one face, the empty simplex. Reduced
//! homology distinguishes them (`H̃₋₁({∅}) = ℤ`).

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// A finite set of vertices, stored sorted and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    pub fn new(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    /// Wraps a vector that is already strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Cardinality minus one; the empty simplex has dimension −1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Simplex) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Simplex::new(v)
    }

    /// The codimension-one face obtained by dropping the vertex at `position`.
    pub fn without_position(&self, position: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(position);
        Simplex(v)
    }

    pub fn without(&self, vertex: Vertex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|&v| v != vertex).collect())
    }
}

impl std::borrow::Borrow<[Vertex]> for Simplex {
    fn borrow(&self) -> &[Vertex] {
        &self.0
    }
}

impl From<Vec<Vertex>> for Simplex {
    fn from(v: Vec<Vertex>) -> Self {
        Simplex::new(v)
    }
}

impl Serialize for Simplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Simplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Vec::<Vertex>::deserialize(d).map(Simplex::new)
    }
}

impl<const N: usize> From<[Vertex; N]> for Simplex {
    fn from(v: [Vertex; N]) -> Self {
        Simplex::new(v.to_vec())
    }
}

impl FromIterator<Vertex> for Simplex {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Simplex::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn is_sorted_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut j = 0;
    for &x in small {
        while j < big.len() && big[j] < x {
            j += 1;
        }
        if j == big.len() || big[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Calls `f` on every `k`-element subset of `items`, in lexicographic order of positions.
pub(crate) fn for_each_combination<T: Copy>(items: &[T], k: usize, mut f: impl FnMut(&[T])) {
    let n = items.len();
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf: Vec<T> = idx.iter().map(|&i| items[i]).collect();
    loop {
        f(&buf);
        // rightmost position that can still move
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        let i = i - 1;
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i..k {
            buf[j] = items[idx[j]];
        }
    }
}

/// A square of a chessboard: `col ∈ [m]`, `row ∈ [n]`, both 1-based, rows
/// counted bottom-up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Square {
    pub col: u32,
    pub row: u32,
}

impl Square {
    pub fn new(col: u32, row: u32) -> Self {
        Square { col, row }
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// Face counts `f_0, f_1, …, f_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector {
    pub counts: Vec<usize>,
}

impl FVector {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Non-reduced Euler characteristic `Σ (−1)^i f_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

/// An immutable simplicial complex presented by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: Vec<Vertex>,
    facets: Vec<Simplex>,
    coords: Option<Vec<Square>>,
}

impl SimplicialComplex {
    /// The complex generated by `candidates`; dominated and repeated sets are
    /// dropped. The ground set is the union of the candidates.
    pub fn from_facets<I, S>(candidates: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<Simplex>,
    {
        let facets = maximal_sets(candidates.into_iter().map(Into::into).collect());
        let mut ground: Vec<Vertex> = facets.iter().flat_map(|f| f.0.iter().copied()).collect();
        ground.sort_unstable();
        ground.dedup();
        SimplicialComplex { ground, facets, coords: None }
    }

    /// Like [`from_facets`](Self::from_facets) with an explicit ground set,
    /// which may contain vertices used by no facet.
    pub fn with_ground<G, I, S>(ground: G, candidates: I) -> Result<Self>
    where
        G: IntoIterator<Item = Vertex>,
        I: IntoIterator<Item = S>,
        S: Into<Simplex>,
    {
        let mut ground: Vec<Vertex> = ground.into_iter().collect();
        ground.sort_unstable();
        ground.dedup();
        let facets = maximal_sets(candidates.into_iter().map(Into::into).collect());
        for f in &facets {
            for &v in f.vertices() {
                if ground.binary_search(&v).is_err() {
                    return Err(Error::VertexNotInGround { vertex: v });
                }
            }
        }
        Ok(SimplicialComplex { ground, facets, coords: None })
    }

    /// Facets already known to be a canonical antichain over `ground`.
    pub(crate) fn from_parts(ground: Vec<Vertex>, mut facets: Vec<Simplex>, coords: Option<Vec<Square>>) -> Self {
        facets.sort_unstable();
        facets.dedup();
        SimplicialComplex { ground, facets, coords }
    }

    /// Attaches board coordinates, one per ground vertex in ground order.
    pub fn with_coords(mut self, coords: Vec<Square>) -> Result<Self> {
        if coords.len() != self.ground.len() {
            return Err(Error::InvalidSpec(format!(
                "{} coordinates for a ground set of {} vertices",
                coords.len(),
                self.ground.len()
            )));
        }
        self.coords = Some(coords);
        Ok(self)
    }

    /// The complex with no faces at all.
    pub fn void() -> Self {
        SimplicialComplex { ground: Vec::new(), facets: Vec::new(), coords: None }
    }

    /// The complex `{∅}` whose only face is the empty simplex.
    pub fn empty_face() -> Self {
        SimplicialComplex { ground: Vec::new(), facets: vec![Simplex::empty()], coords: None }
    }

    /// The full simplex on `0..n`.
    pub fn simplex(n: u32) -> Self {
        Self::from_facets([Simplex::from_sorted((0..n).collect())])
    }

    /// `n` isolated points `0..n`.
    pub fn points(n: u32) -> Self {
        Self::from_facets((0..n).map(|v| Simplex::from_sorted(vec![v])))
    }

    /// Boundary of the simplex on `0..n`; for `n == 1` this is `{∅}`.
    pub fn simplex_boundary(n: u32) -> Self {
        let ground: Vec<Vertex> = (0..n).collect();
        let facets = (0..n).map(|skip| Simplex::from_sorted(ground.iter().copied().filter(|&v| v != skip).collect()));
        Self::with_ground(ground.clone(), facets).expect("facets lie in ground")
    }

    /// All subsets of `0..n` of size at most `p`.
    pub fn bounded_subsets(n: u32, p: usize) -> Self {
        let ground: Vec<Vertex> = (0..n).collect();
        let mut facets = Vec::new();
        for_each_combination(&ground, p.min(n as usize), |c| facets.push(Simplex::from_sorted(c.to_vec())));
        Self::with_ground(ground.clone(), facets).expect("facets lie in ground")
    }

    pub fn ground(&self) -> &[Vertex] {
        &self.ground
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn coords(&self) -> Option<&[Square]> {
        self.coords.as_deref()
    }

    pub fn square_of(&self, v: Vertex) -> Option<Square> {
        let coords = self.coords.as_ref()?;
        let i = self.ground.binary_search(&v).ok()?;
        Some(coords[i])
    }

    pub fn vertex_at(&self, square: Square) -> Option<Vertex> {
        let coords = self.coords.as_ref()?;
        coords.iter().position(|&s| s == square).map(|i| self.ground[i])
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, −1 for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(Simplex::dim).max()
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f) => self.facets.iter().all(|g| g.len() == f.len()),
        }
    }

    pub fn contains_face(&self, face: &Simplex) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// Vertices that occur in some facet.
    pub fn used_vertices(&self) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = self.facets.iter().flat_map(|f| f.0.iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// All `i`-dimensional faces in lexicographic order.
    pub fn faces(&self, i: usize) -> Vec<Simplex> {
        let k = i + 1;
        let mut seen: HashSet<Simplex> = HashSet::new();
        for f in &self.facets {
            if f.len() < k {
                continue;
            }
            if f.len() == k {
                seen.insert(f.clone());
                continue;
            }
            for_each_combination(f.vertices(), k, |c| {
                if !seen.contains(c as &[Vertex]) {
                    seen.insert(Simplex::from_sorted(c.to_vec()));
                }
            });
        }
        let mut out: Vec<Simplex> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Faces of every dimension `0..=dim`, indexed by dimension.
    pub fn all_faces(&self) -> Vec<Vec<Simplex>> {
        match self.dim() {
            Some(d) if d >= 0 => (0..=d as usize).map(|i| self.faces(i)).collect(),
            _ => Vec::new(),
        }
    }

    pub fn f_vector(&self) -> FVector {
        match self.dim() {
            Some(d) if d >= 0 => FVector { counts: (0..=d as usize).map(|i| count_faces(&self.facets, i + 1)).collect() },
            _ => FVector { counts: Vec::new() },
        }
    }

    /// `Σ (−1)^i f_i`. Both the void complex and `{∅}` give 0.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// `χ − 1` for non-void complexes, 0 for the void complex.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        if self.is_void() {
            0
        } else {
            self.euler_characteristic() - 1
        }
    }

    /// The join `self * other`. `other`'s vertices are shifted past the
    /// largest vertex of `self`'s ground set.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let offset = self.join_offset();
        let mut ground = self.ground.clone();
        ground.extend(other.ground.iter().map(|v| v + offset));
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                let mut v = a.0.clone();
                v.extend(b.0.iter().map(|x| x + offset));
                facets.push(Simplex::from_sorted(v));
            }
        }
        SimplicialComplex::from_parts(ground, facets, None)
    }

    /// Shift applied to the right-hand operand of [`join`](Self::join).
    pub fn join_offset(&self) -> Vertex {
        self.ground.last().map_or(0, |v| v + 1)
    }

    /// The `n`-fold `s`-deleted join: joins `σ₁ * ⋯ * σ_n` of faces of `self`
    /// in which every vertex is used by fewer than `s` of the `σ_i`.
    ///
    /// Vertex `(v, i)` (ground position `v`, copy `i`, both 0-based) becomes
    /// `i · |ground| + v`.
    pub fn deleted_join(&self, n: usize, s: usize) -> Result<SimplicialComplex> {
        if n == 0 || s < 2 {
            return Err(Error::InvalidSpec(format!("deleted join needs n >= 1 and s >= 2, got n = {n}, s = {s}")));
        }
        let width = self.ground.len();
        let ground: Vec<Vertex> = (0..(n * width) as Vertex).collect();
        if self.is_void() {
            return Ok(SimplicialComplex::from_parts(ground, Vec::new(), None));
        }
        let pos: HashMap<Vertex, usize> = self.ground.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        // faces as sorted ground positions
        let mut faces: Vec<Vec<usize>> = Vec::new();
        let mut face_set: HashSet<Vec<usize>> = HashSet::new();
        for dim_faces in self.all_faces() {
            for f in dim_faces {
                let p: Vec<usize> = f.vertices().iter().map(|v| pos[v]).collect();
                face_set.insert(p.clone());
                faces.push(p);
            }
        }
        faces.push(Vec::new());
        face_set.insert(Vec::new());

        let mut out = Vec::new();
        let mut mult = vec![0usize; width];
        let mut chosen: Vec<usize> = Vec::with_capacity(n);
        deleted_join_rec(&faces, &face_set, n, s, width, &mut mult, &mut chosen, &mut out);
        Ok(SimplicialComplex::from_parts(ground, out, None))
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`.
    pub fn link(&self, sigma: &Simplex) -> Result<SimplicialComplex> {
        if !self.contains_face(sigma) {
            return Err(Error::FaceNotInComplex(sigma.clone()));
        }
        let candidates: Vec<Simplex> =
            self.facets.iter().filter(|f| sigma.is_subset(f)).map(|f| f.difference(sigma)).collect();
        let keep: Vec<usize> = (0..self.ground.len()).filter(|&i| !sigma.contains(self.ground[i])).collect();
        let ground = keep.iter().map(|&i| self.ground[i]).collect();
        let coords = self.coords.as_ref().map(|c| keep.iter().map(|&i| c[i]).collect());
        Ok(SimplicialComplex::from_parts(ground, maximal_sets(candidates), coords))
    }

    /// All faces of dimension at most `d`, presented by their maximal members.
    pub fn skeleton(&self, d: usize) -> SimplicialComplex {
        let k = d + 1;
        let mut candidates = Vec::new();
        for f in &self.facets {
            if f.len() <= k {
                candidates.push(f.clone());
            } else {
                for_each_combination(f.vertices(), k, |c| candidates.push(Simplex::from_sorted(c.to_vec())));
            }
        }
        SimplicialComplex::from_parts(self.ground.clone(), maximal_sets(candidates), self.coords.clone())
    }

    /// The combinatorial Alexander dual over `[m] = {0, …, m−1}`:
    /// `K° = {σ ⊆ [m] : [m] ∖ σ ∉ K}`.
    ///
    /// The dual of the full simplex is the void complex; this is logged.
    pub fn alexander_dual(&self, m: usize) -> Result<SimplicialComplex> {
        if m > 24 {
            return Err(Error::TooLarge(format!("Alexander dual enumerates 2^{m} subsets")));
        }
        for &v in &self.ground {
            if v as usize >= m {
                return Err(Error::NotOnGround { m, vertex: v });
            }
        }
        let full: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
        let facet_masks: Vec<u32> = self.facets.iter().map(|f| mask_of(f.vertices())).collect();
        let in_k = |mask: u32| facet_masks.iter().any(|&f| mask & !f == 0);
        let mut facets = Vec::new();
        for sigma in 0..=full {
            let comp = full & !sigma;
            if in_k(comp) {
                continue;
            }
            // maximal in K° iff every one-point extension has complement in K
            let maximal = (0..m).filter(|&v| sigma & (1 << v) == 0).all(|v| in_k(comp & !(1u32 << v)));
            if maximal {
                facets.push(Simplex::from_sorted((0..m as u32).filter(|&v| sigma & (1 << v) != 0).collect()));
            }
        }
        if facets.is_empty() {
            log::warn!("Alexander dual of the full simplex on [{m}] is the void complex");
        }
        Ok(SimplicialComplex::from_parts((0..m as Vertex).collect(), facets, None))
    }
}

fn mask_of(vertices: &[Vertex]) -> u32 {
    vertices.iter().fold(0u32, |acc, &v| acc | (1 << v))
}

fn count_faces(facets: &[Simplex], k: usize) -> usize {
    let mut seen: HashSet<Vec<Vertex>> = HashSet::new();
    for f in facets {
        if f.len() < k {
            continue;
        }
        for_each_combination(f.vertices(), k, |c| {
            if !seen.contains(c) {
                seen.insert(c.to_vec());
            }
        });
    }
    seen.len()
}

#[allow(clippy::too_many_arguments)]
fn deleted_join_rec(
    faces: &[Vec<usize>],
    face_set: &HashSet<Vec<usize>>,
    n: usize,
    s: usize,
    width: usize,
    mult: &mut [usize],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Simplex>,
) {
    if chosen.len() == n {
        // maximal iff no single (vertex, copy) can be added
        for &fi in chosen.iter() {
            let face = &faces[fi];
            for v in 0..width {
                if mult[v] + 1 >= s || face.binary_search(&v).is_ok() {
                    continue;
                }
                let mut bigger = face.clone();
                let at = bigger.partition_point(|&x| x < v);
                bigger.insert(at, v);
                if face_set.contains(&bigger) {
                    return;
                }
            }
        }
        let mut verts = Vec::new();
        for (copy, &fi) in chosen.iter().enumerate() {
            verts.extend(faces[fi].iter().map(|&v| (copy * width + v) as Vertex));
        }
        out.push(Simplex::from_sorted(verts));
        return;
    }
    for (fi, face) in faces.iter().enumerate() {
        if face.iter().any(|&v| mult[v] + 1 >= s) {
            continue;
        }
        for &v in face {
            mult[v] += 1;
        }
        chosen.push(fi);
        deleted_join_rec(faces, face_set, n, s, width, mult, chosen, out);
        chosen.pop();
        for &v in face {
            mult[v] -= 1;
        }
    }
}

/// Removes duplicates and sets contained in other sets; returns the rest in
/// canonical order.
pub(crate) fn maximal_sets(mut sets: Vec<Simplex>) -> Vec<Simplex> {
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Simplex> = Vec::with_capacity(sets.len());
    let mut first_of_len = 0usize;
    let mut current_len = usize::MAX;
    for s in sets {
        if s.len() != current_len {
            current_len = s.len();
            first_of_len = kept.len();
        }
        // only strictly larger sets can dominate
        if kept[..first_of_len].iter().any(|k| s.is_subset(k)) {
            continue;
        }
        kept.push(s);
    }
    kept.sort_unstable();
    kept
}

/// Lexicographic comparison of faces, used where a total order on facets is
/// needed independently of the derived `Ord`.
pub fn lex_cmp(a: &Simplex, b: &Simplex) -> Ordering {
    a.vertices().cmp(b.vertices())
}
