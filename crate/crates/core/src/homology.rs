//! Integral simplicial homology.
//!
//! Reduced homology is the default: the chain complex is augmented by the
//! (−1)-chains spanned by the empty face, so `H̃₋₁({∅}) = ℤ` and a
//! non-void connected complex has `H̃₀ = 0`.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::snf::{smith_of_rows, SmithForm, SparseIntMatrix};

/// One homology group `ℤ^rank ⊕ ⨁ ℤ/t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub rank: usize,
    #[serde(with = "bigint_strings")]
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 { "Z".to_string() } else { format!("Z^{}", self.rank) });
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HomologyOptions {
    /// Non-reduced homology (no augmentation).
    pub non_reduced: bool,
    /// Rank-only mode: torsion is dropped, which yields the rational Betti numbers.
    pub rank_only: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySummary {
    pub reduced: bool,
    /// Dimension of `groups[0]`: −1 when reduced, 0 otherwise.
    pub min_dim: isize,
    pub groups: Vec<HomologyGroup>,
    /// Set for the void complex, whose homology vanishes identically.
    pub void: bool,
}

impl HomologySummary {
    pub fn group(&self, i: isize) -> HomologyGroup {
        if i < self.min_dim {
            return HomologyGroup::default();
        }
        self.groups.get((i - self.min_dim) as usize).cloned().unwrap_or_default()
    }

    pub fn betti(&self, i: isize) -> usize {
        self.group(i).rank
    }

    pub fn torsion(&self, i: isize) -> Vec<BigInt> {
        self.group(i).torsion
    }

    /// Betti numbers in dimensions `0..=dim`.
    pub fn betti_vector(&self) -> Vec<usize> {
        let top = self.min_dim + self.groups.len() as isize - 1;
        (0..=top).map(|i| self.betti(i)).collect()
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|g| !g.torsion.is_empty())
    }

    /// `Σ (−1)^i β_i` over all stored dimensions.
    pub fn alternating_betti_sum(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(k, g)| {
                let i = self.min_dim + k as isize;
                if i.rem_euclid(2) == 0 {
                    g.rank as i64
                } else {
                    -(g.rank as i64)
                }
            })
            .sum()
    }

    /// True when the only nonzero group is `ℤ` in dimension `d`.
    pub fn is_sphere_like(&self, d: isize) -> bool {
        self.groups.iter().enumerate().all(|(k, g)| {
            let i = self.min_dim + k as isize;
            if i == d {
                g.rank == 1 && g.torsion.is_empty()
            } else {
                g.is_zero()
            }
        }) && self.min_dim + self.groups.len() as isize > d
    }
}

/// Chain groups and boundary maps of a complex, with faces listed per dimension.
struct ChainComplex {
    faces: Vec<Vec<Simplex>>,
}

impl ChainComplex {
    fn new(k: &SimplicialComplex) -> Self {
        ChainComplex { faces: k.all_faces() }
    }

    fn count(&self, i: isize) -> usize {
        if i == -1 {
            1
        } else if i < -1 || i as usize >= self.faces.len() {
            0
        } else {
            self.faces[i as usize].len()
        }
    }

    /// `∂_i` transposed: one sparse row per `i`-face, indexed by `(i−1)`-faces.
    fn boundary_rows(&self, i: usize) -> Vec<Vec<(u32, i64)>> {
        if i == 0 {
            return vec![vec![(0, 1)]; self.faces[0].len()];
        }
        let index: HashMap<&[Vertex], u32> =
            self.faces[i - 1].iter().enumerate().map(|(j, f)| (f.vertices(), j as u32)).collect();
        self.faces[i]
            .iter()
            .map(|sigma| {
                let v = sigma.vertices();
                let mut buf: Vec<Vertex> = Vec::with_capacity(v.len() - 1);
                let mut row: Vec<(u32, i64)> = (0..v.len())
                    .map(|k| {
                        buf.clear();
                        buf.extend(v.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &x)| x));
                        let sign = if k % 2 == 0 { 1 } else { -1 };
                        (index[buf.as_slice()], sign)
                    })
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect()
    }

    fn smith(&self, i: usize) -> SmithForm {
        let rows = self.boundary_rows(i);
        let cols = if i == 0 { 1 } else { self.faces[i - 1].len() };
        smith_of_rows(cols, rows)
    }
}

/// Boundary matrices `∂_0, …, ∂_d` of the augmented chain complex, where
/// `∂_i` maps `i`-chains to `(i−1)`-chains over the canonical face order.
pub fn boundary_matrices(k: &SimplicialComplex) -> Vec<SparseIntMatrix> {
    let cc = ChainComplex::new(k);
    (0..cc.faces.len())
        .map(|i| {
            let rows = cc.boundary_rows(i);
            let target = if i == 0 { 1 } else { cc.faces[i - 1].len() };
            SparseIntMatrix::from_small_rows(rows.len(), target, rows).transpose()
        })
        .collect()
}

pub fn homology(k: &SimplicialComplex) -> HomologySummary {
    homology_with(k, HomologyOptions::default())
}

pub fn homology_with(k: &SimplicialComplex, opts: HomologyOptions) -> HomologySummary {
    let reduced = !opts.non_reduced;
    let min_dim = if reduced { -1 } else { 0 };
    if k.is_void() {
        return HomologySummary { reduced, min_dim, groups: Vec::new(), void: true };
    }
    let cc = ChainComplex::new(k);
    let top = cc.faces.len();
    // smith[i] is ∂_i for i in 0..top; ∂_0 only matters for reduced homology
    let smith: Vec<Option<SmithForm>> =
        (0..top).into_par_iter().map(|i| if i == 0 && !reduced { None } else { Some(cc.smith(i)) }).collect();
    let rank = |i: isize| -> usize {
        if i < 0 || i as usize >= top {
            0
        } else {
            smith[i as usize].as_ref().map_or(0, SmithForm::rank)
        }
    };
    let mut groups = Vec::new();
    for i in min_dim..top as isize {
        let rank_h = cc.count(i) - rank(i) - rank(i + 1);
        let torsion = if opts.rank_only || i + 1 >= top as isize {
            Vec::new()
        } else {
            smith[(i + 1) as usize].as_ref().map(SmithForm::torsion).unwrap_or_default()
        };
        groups.push(HomologyGroup { rank: rank_h, torsion });
    }
    HomologySummary { reduced, min_dim, groups, void: false }
}

/// Rank of the top reduced homology group, from `∂_d` alone.
pub fn top_betti(k: &SimplicialComplex) -> usize {
    match k.dim() {
        None => 0,
        Some(-1) => 1,
        Some(d) => {
            let d = d as usize;
            let top_faces = k.faces(d);
            let mut cc = ChainComplex { faces: vec![Vec::new(); d + 1] };
            if d > 0 {
                cc.faces[d - 1] = k.faces(d - 1);
            }
            let n = top_faces.len();
            cc.faces[d] = top_faces;
            n - cc.smith(d).rank()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    /// Largest `c` with `H̃_i = 0` for all `i <= c`; −2 for the void complex
    /// and for `{∅}`; capped at the dimension when all reduced homology vanishes.
    pub hconn: isize,
    /// First nonvanishing reduced homology group.
    pub witness: Option<(isize, HomologyGroup)>,
    pub dim: Option<isize>,
    /// Fundamental groups are not computed, so connectivity is homological only.
    pub note: String,
}

pub const HOMOLOGICAL_ONLY_NOTE: &str = "homological connectivity only; pi_1 is not computed";

/// Reduced homology is computed bottom-up and stops at the first nonzero group.
pub fn homological_connectivity(k: &SimplicialComplex) -> ConnectivityReport {
    let note = HOMOLOGICAL_ONLY_NOTE.to_string();
    let Some(dim) = k.dim() else {
        return ConnectivityReport { hconn: -2, witness: None, dim: None, note };
    };
    let cc = ChainComplex::new(k);
    let top = cc.faces.len();
    let mut cache: HashMap<usize, SmithForm> = HashMap::new();
    let mut smith = |i: isize| -> Option<SmithForm> {
        if i < 0 || i as usize >= top {
            return None;
        }
        Some(cache.entry(i as usize).or_insert_with(|| cc.smith(i as usize)).clone())
    };
    for i in -1..top as isize {
        let below = smith(i).map_or(0, |s| s.rank());
        let above = smith(i + 1);
        let rank_h = cc.count(i) - below - above.as_ref().map_or(0, SmithForm::rank);
        let torsion = above.map(|s| s.torsion()).unwrap_or_default();
        let g = HomologyGroup { rank: rank_h, torsion };
        if !g.is_zero() {
            return ConnectivityReport { hconn: i - 1, witness: Some((i, g)), dim: Some(dim), note };
        }
    }
    ConnectivityReport { hconn: dim, witness: None, dim: Some(dim), note }
}

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        raw.iter().map(|s| s.parse().map_err(serde::de::Error::custom)).collect()
    }
}
