#![allow(dead_code)]

use std::cmp::Ordering;

use chessboard_core::board::multi_chessboard;
use chessboard_core::shelling::FacetTuple;
use chessboard_core::BoardSpec;

pub fn facet_count(m: usize, caps: &[usize]) -> u128 {
    let mut free = m as u128;
    let mut total = 1u128;
    for &k in caps {
        let mut c = 1u128;
        for i in 0..k as u128 {
            c = c * (free - i) / (i + 1);
        }
        total *= c;
        free -= k as u128;
    }
    total
}

/// Row-cap vectors with entries in `1..=max_cap`, `n` rows, satisfying the
/// shelling hypothesis for `m` columns.
pub fn hypothesis_caps(m: usize, n: usize, max_cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut caps = vec![1; n];
    loop {
        if caps.iter().sum::<usize>() + n <= m + 1 {
            out.push(caps.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if caps[i] < max_cap {
                caps[i] += 1;
                break;
            }
            caps[i] = 1;
            i += 1;
        }
    }
}

pub fn boards_up_to(facets: u128) -> Vec<BoardSpec> {
    let mut specs = Vec::new();
    for n in 1..=3 {
        for m in 1..=10 {
            for caps in hypothesis_caps(m, n, m) {
                if facet_count(m, &caps) <= facets {
                    specs.push(BoardSpec::rook(m, caps).unwrap());
                }
            }
        }
    }
    specs
}

pub fn tuples(spec: &BoardSpec) -> Vec<FacetTuple> {
    multi_chessboard(spec)
        .unwrap()
        .facets()
        .iter()
        .map(|f| FacetTuple::from_simplex(spec.m, spec.n, f).unwrap())
        .collect()
}

/// Direct rendition of the cyclic order for one rook per row: rooks are
/// compared column by column walking leftwards (cyclically) from the first
/// row's rook, and an empty column starts a new stage on the smaller board.
pub fn standard_compare(a: &[u32], b: &[u32], m: usize) -> Ordering {
    let mut cols: Vec<u32> = (1..=m as u32).collect();
    let mut rows: Vec<usize> = (0..a.len()).collect();
    while let Some(&r0) = rows.first() {
        let pa = cols.iter().position(|&c| c == a[r0]).unwrap();
        let pb = cols.iter().position(|&c| c == b[r0]).unwrap();
        if pa != pb {
            return pa.cmp(&pb);
        }
        let rook = |f: &[u32], c: u32| rows[1..].iter().copied().find(|&r| f[r] == c);
        let len = cols.len();
        let mut interval = Vec::new();
        let mut reduced = false;
        for step in 1..len {
            let e = cols[(pa + len - step) % len];
            match (rook(a, e), rook(b, e)) {
                (Some(i), Some(j)) if i == j => interval.push((e, i)),
                (Some(i), Some(j)) => return if i > j { Ordering::Less } else { Ordering::Greater },
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (None, None) => {
                    let mut gone: Vec<u32> = interval.iter().map(|&(c, _)| c).collect();
                    gone.push(e);
                    gone.push(a[r0]);
                    cols.retain(|c| !gone.contains(c));
                    rows.retain(|&r| r != r0 && !interval.iter().any(|&(_, i)| i == r));
                    reduced = true;
                    break;
                }
            }
        }
        if !reduced {
            return Ordering::Equal;
        }
    }
    Ordering::Equal
}


pub type Q = num_rational::BigRational;
pub type P2 = (Q, Q);

fn cross(o: &P2, a: &P2, b: &P2) -> Q {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

fn on_segment(x: &P2, a: &P2, b: &P2) -> bool {
    use num_traits::Zero;
    cross(a, b, x).is_zero()
        && x.0 >= a.0.clone().min(b.0.clone())
        && x.0 <= a.0.clone().max(b.0.clone())
        && x.1 >= a.1.clone().min(b.1.clone())
        && x.1 <= a.1.clone().max(b.1.clone())
}

fn in_triangle(x: &P2, a: &P2, b: &P2, c: &P2) -> bool {
    use num_traits::{Signed, Zero};
    let s = [cross(a, b, x), cross(b, c, x), cross(c, a, x)];
    let pos = s.iter().any(|v| v.is_positive());
    let neg = s.iter().any(|v| v.is_negative());
    !(pos && neg) && !cross(a, b, c).is_zero()
}

/// Membership in the convex hull of a planar point set: by Carathéodory a
/// point of the hull lies in a triangle, on a segment, or at a point.
pub fn in_planar_hull(x: &P2, pts: &[P2]) -> bool {
    let n = pts.len();
    for i in 0..n {
        if &pts[i] == x {
            return true;
        }
        for j in i + 1..n {
            if on_segment(x, &pts[i], &pts[j]) {
                return true;
            }
            for k in j + 1..n {
                if in_triangle(x, &pts[i], &pts[j], &pts[k]) {
                    return true;
                }
            }
        }
    }
    false
}

/// Single intersection point of two segments, if they meet in exactly one point.
fn segment_crossing(a: &P2, b: &P2, c: &P2, d: &P2) -> Option<P2> {
    use num_traits::Zero;
    let r = (&b.0 - &a.0, &b.1 - &a.1);
    let s = (&d.0 - &c.0, &d.1 - &c.1);
    let denom = &r.0 * &s.1 - &r.1 * &s.0;
    if denom.is_zero() {
        return None;
    }
    let qp = (&c.0 - &a.0, &c.1 - &a.1);
    let t = (&qp.0 * &s.1 - &qp.1 * &s.0) / &denom;
    let u = (&qp.0 * &r.1 - &qp.1 * &r.0) / &denom;
    let zero = Q::zero();
    let one = Q::from_integer(1.into());
    if t < zero || t > one || u < zero || u > one {
        return None;
    }
    Some((&a.0 + &t * &r.0, &a.1 + &t * &r.1))
}

/// Brute-force test whether planar hulls share a point. A nonempty
/// intersection has an extreme point, which is an input point or a crossing
/// of two hull edges from different groups; all such candidates are tried.
pub fn planar_hulls_meet(groups: &[Vec<P2>]) -> bool {
    let mut candidates: Vec<P2> = groups.iter().flatten().cloned().collect();
    for g in 0..groups.len() {
        for h in g + 1..groups.len() {
            for (i, a) in groups[g].iter().enumerate() {
                for b in &groups[g][i + 1..] {
                    for (j, c) in groups[h].iter().enumerate() {
                        for d in &groups[h][j + 1..] {
                            if let Some(x) = segment_crossing(a, b, c, d) {
                                candidates.push(x);
                            }
                        }
                    }
                }
            }
        }
    }
    candidates.iter().any(|x| groups.iter().all(|g| in_planar_hull(x, g)))
}

/// Two or three groups of one to six points on a small integer grid, so
/// that degenerate configurations (collinear, repeated points) are common.
pub fn random_planar_groups(rng: &mut impl rand::Rng) -> Vec<Vec<P2>> {
    let q = |v: i64| Q::from_integer(v.into());
    let r = rng.gen_range(2..=3);
    (0..r)
        .map(|_| {
            let size = rng.gen_range(1..=6);
            (0..size).map(|_| (q(rng.gen_range(-4..=4)), q(rng.gen_range(-4..=4)))).collect()
        })
        .collect()
}

pub fn to_points(groups: &[Vec<P2>]) -> Vec<Vec<Vec<Q>>> {
    groups.iter().map(|g| g.iter().map(|(x, y)| vec![x.clone(), y.clone()]).collect()).collect()
}
