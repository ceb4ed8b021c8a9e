//! Colored Tverberg partitions with a per-color cap, searched exhaustively
//! and certified with exact rational arithmetic.
//!
//! Points come in `k` colors. A partition picks `r` disjoint nonempty
//! groups, each holding at most `p` points of any one color, whose convex
//! hulls share a point. Points may stay unused.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp::feasible_point;

pub type Point = Vec<BigRational>;

/// `(color, index within the color)`.
pub type PointId = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TverbergInstance {
    pub d: usize,
    pub r: usize,
    pub p: usize,
    #[serde(with = "crate::exact")]
    pub colors: Vec<Vec<Point>>,
}

impl TverbergInstance {
    pub fn new(d: usize, r: usize, p: usize, colors: Vec<Vec<Point>>) -> Result<Self> {
        if r == 0 || p == 0 {
            return Err(Error::InvalidSpec("r and p must be positive".into()));
        }
        for (c, class) in colors.iter().enumerate() {
            if let Some(pt) = class.iter().find(|pt| pt.len() != d) {
                return Err(Error::InvalidSpec(format!("color {c} has a point of dimension {}, expected {d}", pt.len())));
            }
        }
        Ok(TverbergInstance { d, r, p, colors })
    }

    pub fn k(&self) -> usize {
        self.colors.len()
    }

    pub fn point(&self, id: PointId) -> &Point {
        &self.colors[id.0][id.1]
    }

    pub fn hypothesis_holds(&self) -> bool {
        hypothesis_holds(self.d, self.k(), self.r, self.p)
    }
}

/// Points per color in the theorem's setting: `(p + 1) r − 1`.
pub fn class_size(r: usize, p: usize) -> usize {
    (p + 1) * r - 1
}

/// `p r k ≥ (r − 1)(d + 1) + 1`.
pub fn hypothesis_holds(d: usize, k: usize, r: usize, p: usize) -> bool {
    p * r * k >= (r - 1) * (d + 1) + 1
}

pub fn is_prime_power(r: usize) -> bool {
    if r < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= r {
        if r % q == 0 {
            let mut x = r;
            while x % q == 0 {
                x /= q;
            }
            return x == 1;
        }
        q += 1;
    }
    true
}

/// A common point together with convex coefficients for every group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(with = "crate::exact")]
    pub point: Point,
    #[serde(with = "crate::exact")]
    pub coefficients: Vec<Vec<BigRational>>,
}

impl Witness {
    /// Substitutes the coefficients back in.
    pub fn verify(&self, groups: &[Vec<Point>]) -> bool {
        groups.len() == self.coefficients.len()
            && groups.iter().zip(&self.coefficients).all(|(g, lam)| {
                g.len() == lam.len()
                    && lam.iter().all(|l| !l.is_negative())
                    && lam.iter().sum::<BigRational>().is_one()
                    && combine(g, lam).as_ref() == Some(&self.point)
            })
    }
}

fn combine(points: &[Point], lam: &[BigRational]) -> Option<Point> {
    let d = dim_of(points)?;
    let mut x = vec![BigRational::zero(); d];
    for (pt, l) in points.iter().zip(lam) {
        for (xc, pc) in x.iter_mut().zip(pt) {
            *xc += l * pc;
        }
    }
    Some(x)
}

fn dim_of(points: &[Point]) -> Option<usize> {
    points.first().map(Vec::len)
}

/// Exact test whether the convex hulls of the groups share a point.
pub fn hulls_intersect(groups: &[Vec<Point>]) -> Option<Witness> {
    if groups.is_empty() || groups.iter().any(Vec::is_empty) {
        return None;
    }
    let d = groups[0][0].len();
    assert!(groups.iter().flatten().all(|pt| pt.len() == d), "points of mixed dimension");
    let offsets: Vec<usize> = groups
        .iter()
        .scan(0, |acc, g| {
            let o = *acc;
            *acc += g.len();
            Some(o)
        })
        .collect();
    let vars: usize = groups.iter().map(Vec::len).sum();
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (g, group) in groups.iter().enumerate() {
        let mut row = vec![BigRational::zero(); vars];
        for s in 0..group.len() {
            row[offsets[g] + s] = BigRational::one();
        }
        a.push(row);
        b.push(BigRational::one());
    }
    for (g, group) in groups.iter().enumerate().skip(1) {
        for c in 0..d {
            let mut row = vec![BigRational::zero(); vars];
            for (s, pt) in group.iter().enumerate() {
                row[offsets[g] + s] = pt[c].clone();
            }
            for (s, pt) in groups[0].iter().enumerate() {
                row[s] = -pt[c].clone();
            }
            a.push(row);
            b.push(BigRational::zero());
        }
    }
    let x = feasible_point(&a, &b)?;
    let coefficients: Vec<Vec<BigRational>> =
        groups.iter().enumerate().map(|(g, group)| x[offsets[g]..offsets[g] + group.len()].to_vec()).collect();
    let point = combine(&groups[0], &coefficients[0]).expect("group 0 is nonempty");
    Some(Witness { point, coefficients })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCertificate {
    pub groups: Vec<Vec<PointId>>,
    pub witness: Witness,
}

impl PartitionCertificate {
    /// Checks disjointness, nonempty groups, the group count, per-color caps
    /// and the witness.
    pub fn verify(&self, inst: &TverbergInstance, caps: &[usize]) -> std::result::Result<(), String> {
        if self.groups.len() != inst.r {
            return Err(format!("{} groups, expected {}", self.groups.len(), inst.r));
        }
        let mut seen = std::collections::HashSet::new();
        for (g, group) in self.groups.iter().enumerate() {
            if group.is_empty() {
                return Err(format!("group {g} is empty"));
            }
            let mut per_color = vec![0usize; inst.k()];
            for &(c, i) in group {
                if c >= inst.k() || i >= inst.colors[c].len() {
                    return Err(format!("point ({c}, {i}) does not exist"));
                }
                if !seen.insert((c, i)) {
                    return Err(format!("point ({c}, {i}) used twice"));
                }
                per_color[c] += 1;
                if per_color[c] > caps[c] {
                    return Err(format!("group {g} holds {} points of color {c}", per_color[c]));
                }
            }
        }
        if !self.witness.verify(&self.point_groups(inst)) {
            return Err("witness does not verify".into());
        }
        Ok(())
    }

    pub fn point_groups(&self, inst: &TverbergInstance) -> Vec<Vec<Point>> {
        self.groups.iter().map(|g| g.iter().map(|&id| inst.point(id).clone()).collect()).collect()
    }

    /// Groups sorted internally and by their least point; the content of a
    /// partition independent of group labels.
    pub fn canonical_groups(&self) -> Vec<Vec<PointId>> {
        let mut groups: Vec<Vec<PointId>> = self
            .groups
            .iter()
            .map(|g| {
                let mut g = g.clone();
                g.sort_unstable();
                g
            })
            .collect();
        groups.sort();
        groups
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Found,
    /// Every admissible partition was tested and none works.
    Exhausted,
    /// The budget ran out first; this is not a counterexample.
    Truncated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub certificate: Option<PartitionCertificate>,
    /// Number of partitions whose hulls were tested.
    pub tested: u64,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Per-color caps; defaults to `p` for every color.
    pub caps: Option<Vec<usize>>,
    /// Maximum number of partitions to test.
    pub budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { caps: None, budget: 1_000_000 }
    }
}

struct Search<'a> {
    inst: &'a TverbergInstance,
    caps: Vec<usize>,
    order: Vec<PointId>,
    assign: Vec<Option<usize>>,
    counts: Vec<Vec<usize>>,
    opened: usize,
    tested: u64,
    budget: u64,
    found: Option<PartitionCertificate>,
    truncated: bool,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) {
        if self.found.is_some() || self.truncated {
            return;
        }
        let remaining = self.order.len() - pos;
        if self.opened + remaining < self.inst.r {
            return;
        }
        if pos == self.order.len() {
            self.leaf();
            return;
        }
        let color = self.order[pos].0;
        let groups = (self.opened + 1).min(self.inst.r);
        for g in 0..groups {
            if self.counts[g][color] >= self.caps[color] {
                continue;
            }
            let opens = g == self.opened;
            self.assign[pos] = Some(g);
            self.counts[g][color] += 1;
            self.opened += usize::from(opens);
            self.run(pos + 1);
            self.opened -= usize::from(opens);
            self.counts[g][color] -= 1;
            self.assign[pos] = None;
            if self.found.is_some() || self.truncated {
                return;
            }
        }
        self.run(pos + 1);
    }

    fn leaf(&mut self) {
        if self.opened < self.inst.r {
            return;
        }
        // a partition that could absorb an unused point is dominated by one that does
        for (pos, a) in self.assign.iter().enumerate() {
            let color = self.order[pos].0;
            if a.is_none() && (0..self.inst.r).any(|g| self.counts[g][color] < self.caps[color]) {
                return;
            }
        }
        if self.tested >= self.budget {
            self.truncated = true;
            return;
        }
        self.tested += 1;
        let mut groups: Vec<Vec<PointId>> = vec![Vec::new(); self.inst.r];
        for (pos, a) in self.assign.iter().enumerate() {
            if let Some(g) = a {
                groups[*g].push(self.order[pos]);
            }
        }
        let points: Vec<Vec<Point>> =
            groups.iter().map(|g| g.iter().map(|&id| self.inst.point(id).clone()).collect()).collect();
        if let Some(witness) = hulls_intersect(&points) {
            self.found = Some(PartitionCertificate { groups, witness });
        }
    }
}

/// Depth-first search over assignments of points to groups. Points are
/// visited with colors interleaved; each point tries the open groups in
/// index order, then a new group, then staying unused. Groups are opened in
/// order, so the first point used always lands in group 0.
pub fn search_partition(inst: &TverbergInstance, opts: &SearchOptions) -> Result<SearchOutcome> {
    let caps = opts.caps.clone().unwrap_or_else(|| vec![inst.p; inst.k()]);
    if caps.len() != inst.k() {
        return Err(Error::InvalidSpec(format!("{} caps for {} colors", caps.len(), inst.k())));
    }
    let longest = inst.colors.iter().map(Vec::len).max().unwrap_or(0);
    let order: Vec<PointId> =
        (0..longest).flat_map(|i| (0..inst.k()).filter(move |&c| i < inst.colors[c].len()).map(move |c| (c, i))).collect();
    let mut search = Search {
        inst,
        caps,
        assign: vec![None; order.len()],
        order,
        counts: vec![vec![0; inst.k()]; inst.r],
        opened: 0,
        tested: 0,
        budget: opts.budget,
        found: None,
        truncated: false,
    };
    search.run(0);
    let status = if search.found.is_some() {
        SearchStatus::Found
    } else if search.truncated {
        SearchStatus::Truncated
    } else {
        SearchStatus::Exhausted
    };
    Ok(SearchOutcome { status, certificate: search.found, tested: search.tested })
}

const GRID: i64 = 1000;

/// Seeded random instance with `(p + 1) r − 1` points per color on a
/// rational grid with denominator 1000. Candidates that would make some
/// `d + 1` points affinely dependent are redrawn.
pub fn random_instance(d: usize, k: usize, r: usize, p: usize, seed: u64) -> Result<TverbergInstance> {
    if d == 0 || k == 0 || r == 0 || p == 0 {
        return Err(Error::InvalidSpec("d, k, r and p must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let per_color = class_size(r, p);
    let total = per_color * k;
    let mut raw: Vec<Vec<i64>> = Vec::with_capacity(total);
    let mut attempts = 0usize;
    while raw.len() < total {
        attempts += 1;
        if attempts > 1000 * total {
            return Err(Error::Internal("could not place points in general position".into()));
        }
        let cand: Vec<i64> = (0..d).map(|_| rng.gen_range(-GRID..=GRID)).collect();
        if keeps_general_position(&raw, &cand, d) {
            raw.push(cand);
        }
    }
    let scale = BigInt::from(GRID);
    let to_point = |v: &Vec<i64>| -> Point { v.iter().map(|&x| BigRational::new(x.into(), scale.clone())).collect() };
    let colors = raw.chunks(per_color).map(|chunk| chunk.iter().map(to_point).collect()).collect();
    TverbergInstance::new(d, r, p, colors)
}

fn keeps_general_position(existing: &[Vec<i64>], cand: &[i64], d: usize) -> bool {
    if existing.iter().any(|q| q.as_slice() == cand) {
        return false;
    }
    if existing.len() < d {
        return true;
    }
    let mut ok = true;
    let idx: Vec<usize> = (0..existing.len()).collect();
    crate::complex::for_each_combination(&idx, d, |subset| {
        if ok {
            let mut pts: Vec<&[i64]> = subset.iter().map(|&i| existing[i].as_slice()).collect();
            pts.push(cand);
            if affinely_dependent(&pts) {
                ok = false;
            }
        }
    });
    ok
}

/// Whether `d + 1` points of `R^d` lie on a common hyperplane.
fn affinely_dependent(points: &[&[i64]]) -> bool {
    let base = points[0];
    let rows: Vec<Vec<BigRational>> = points[1..]
        .iter()
        .map(|q| q.iter().zip(base).map(|(a, b)| BigRational::from_integer(BigInt::from(a - b))).collect())
        .collect();
    determinant(rows).is_zero()
}

fn determinant(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            let f = &a[r][col] / &p;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let delta = &f * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

/// General position check: no `d + 1` points affinely dependent and no
/// repeated points.
pub fn in_general_position(points: &[Point], d: usize) -> bool {
    let mut seen: Vec<&Point> = Vec::new();
    for pt in points {
        if seen.contains(&pt) {
            return false;
        }
        seen.push(pt);
    }
    if points.len() <= d {
        return true;
    }
    let idx: Vec<usize> = (0..points.len()).collect();
    let mut ok = true;
    crate::complex::for_each_combination(&idx, d + 1, |subset| {
        if ok {
            let base = &points[subset[0]];
            let rows = subset[1..].iter().map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
            if determinant(rows).is_zero() {
                ok = false;
            }
        }
    });
    ok
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremStats {
    pub d: usize,
    pub k: usize,
    pub r: usize,
    pub p: usize,
    pub trials: usize,
    pub seed: u64,
    pub hypothesis_holds: bool,
    pub prime_power: bool,
    pub successes: usize,
    pub truncated: usize,
    /// Certificates that failed re-verification; always expected to be zero.
    pub unverified: usize,
    pub mean_tested: f64,
    /// Instances where the search finished without a certificate.
    pub exhausted: Vec<TverbergInstance>,
}

/// Runs the search on `trials` random instances. Trial seeds are drawn from
/// one generator seeded with `seed`.
pub fn verify_theorem(
    d: usize,
    k: usize,
    r: usize,
    p: usize,
    trials: usize,
    seed: u64,
    budget: u64,
) -> Result<TheoremStats> {
    let holds = hypothesis_holds(d, k, r, p);
    if !holds {
        log::warn!("p r k >= (r - 1)(d + 1) + 1 fails for d={d} k={k} r={r} p={p}; running anyway");
    }
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..trials).map(|_| master.next_u64()).collect();
    let opts = SearchOptions { caps: None, budget };
    let results = seeds
        .par_iter()
        .map(|&s| {
            let inst = random_instance(d, k, r, p, s)?;
            let outcome = search_partition(&inst, &opts)?;
            Ok((inst, outcome))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut stats = TheoremStats {
        d,
        k,
        r,
        p,
        trials,
        seed,
        hypothesis_holds: holds,
        prime_power: is_prime_power(r),
        successes: 0,
        truncated: 0,
        unverified: 0,
        mean_tested: 0.0,
        exhausted: Vec::new(),
    };
    let mut tested = 0u64;
    for (inst, outcome) in results {
        tested += outcome.tested;
        match outcome.status {
            SearchStatus::Found => {
                let cert = outcome.certificate.expect("found implies a certificate");
                if cert.verify(&inst, &vec![p; k]).is_ok() {
                    stats.successes += 1;
                } else {
                    stats.unverified += 1;
                }
            }
            SearchStatus::Truncated => stats.truncated += 1,
            SearchStatus::Exhausted => stats.exhausted.push(inst),
        }
    }
    if trials > 0 {
        stats.mean_tested = tested as f64 / trials as f64;
    }
    Ok(stats)
}
