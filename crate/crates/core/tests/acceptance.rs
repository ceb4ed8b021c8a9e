//! Acceptance suite: one PASS/FAIL line per criterion. Run with
//! `cargo test -p chessboard-core --test acceptance -- --nocapture` to see
//! the table even when everything passes. All checks are exact; the only
//! pinned numbers are seeds, trial counts and the face budget.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use chessboard_core::board::{multi_chessboard, uniform_via_deleted_join};
use chessboard_core::bounds::two_one_rows;
use chessboard_core::shelling::shelling_order;
use chessboard_core::{
    bier_sphere, bound_scan, homology, lexicographic_order, multipartite, random_instance,
    search_partition, top_betti, uniform_chessboard, verify_shelling, wedge_summary, BoardSpec, FacetOrder,
    HomologySummary, ScanGrid, SearchOptions, SearchStatus, Simplex, SimplicialComplex, Vertex,
};
use num_traits::{One, Signed, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

mod common;
use common::{
    boards_up_to, hypothesis_caps, in_planar_hull, planar_hulls_meet, random_planar_groups, standard_compare,
    to_points, tuples, Q,
};

/// Face budget of the bound scan.
const SCAN_BUDGET: u128 = 200_000;
const TVERBERG_TRIALS: usize = 200;
const TVERBERG_SEED: u64 = 0x5eed;
const ORACLE_CASES: usize = 1000;
const ORACLE_SEED: u64 = 7;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rook(m: usize, caps: &[usize]) -> SimplicialComplex {
    multi_chessboard(&BoardSpec::rook(m, caps.to_vec()).unwrap()).unwrap()
}

fn reduced_betti(h: &HomologySummary, top: isize) -> Vec<usize> {
    (0..=top).map(|i| h.betti(i)).collect()
}

/// Euler characteristic of the `m × n` board with `p` rooks per row and one
/// per column, from the closed-form face count: a face with `a_i` rooks in
/// row `i` is a choice of distinct columns, `m! / (a_1! ⋯ a_n! (m − Σa)!)`.
fn counted_euler(m: u64, n: usize, p: u64) -> i64 {
    let fact = |x: u64| (1..=x).product::<u64>();
    let mut chi = 0i64;
    let mut a = vec![0u64; n];
    loop {
        let s: u64 = a.iter().sum();
        if s >= 1 && s <= m {
            let count = fact(m) / (a.iter().map(|&x| fact(x)).product::<u64>() * fact(m - s));
            chi += if s % 2 == 1 { count as i64 } else { -(count as i64) };
        }
        let Some(i) = a.iter().position(|&x| x < p) else { return chi };
        a[i] += 1;
        for x in &mut a[..i] {
            *x = 0;
        }
    }
}

fn euler(k: &SimplicialComplex, h: &HomologySummary) -> Outcome {
    let chi = k.euler_characteristic();
    let counted = counted_euler(7, 3, 2);
    let via_betti = h.alternating_betti_sum() + 1;
    ensure(chi == 147, || {
        format!("chi = {chi} (closed-form count {counted}, alternating Betti sum {via_betti}); expected 147")
    })?;
    ensure(via_betti == 147, || format!("alternating Betti sum gives {via_betti}"))?;
    Ok(format!("chi = {chi}, f = {:?}", k.f_vector()))
}

fn ranks(h: &HomologySummary) -> Outcome {
    let b = reduced_betti(h, 5);
    ensure(h.betti(-1) == 0 && b == [0, 0, 0, 0, 147, 1], || format!("reduced Betti {b:?}"))?;
    let torsion: Vec<String> = (0..=5).filter(|&i| !h.torsion(i).is_empty()).map(|i| format!("{i}:{:?}", h.torsion(i))).collect();
    Ok(format!("reduced Betti {b:?}, torsion {}", if torsion.is_empty() { "none".into() } else { torsion.join(" ") }))
}

fn spheres() -> Outcome {
    let s3 = uniform_chessboard(5, 2, 2, 1).unwrap();
    ensure(homology(&s3).is_sphere_like(3), || "Δ(5,2;2,1) is not a homology 3-sphere".into())?;
    let mut links = 0;
    for i in 0..=3usize {
        for face in s3.faces(i) {
            let lk = s3.link(&face).unwrap();
            let want = 2 - i as isize;
            ensure(homology(&lk).is_sphere_like(want), || format!("link of {face} is not a homology {want}-sphere"))?;
            links += 1;
        }
    }
    ensure(homology(&uniform_chessboard(4, 2, 2, 1).unwrap()).is_sphere_like(2), || "Δ(4,2;2,1) is not S^2".into())?;
    ensure(homology(&uniform_chessboard(3, 2, 2, 2).unwrap()).is_sphere_like(3), || "Δ(3,2;2,2) is not S^3".into())?;
    let mut family = 0;
    for m in 2..=4usize {
        for n in 1..=2usize {
            let d = ((m - 1) * n) as isize - 1;
            let k = uniform_chessboard(m, n, m - 1, n).unwrap();
            ensure(homology(&k).is_sphere_like(d), || format!("Δ({m},{n};{},{n}) is not S^{d}", m - 1))?;
            family += 1;
        }
    }
    Ok(format!("{links} face links of the 3-sphere checked, {family} boundary-sphere cases"))
}

fn cylinder() -> Outcome {
    let k = rook(3, &[2, 2]);
    let f = k.f_vector();
    let f_vec: Vec<usize> = (0..=2).map(|i| k.faces(i).len()).collect();
    ensure(f_vec == [6, 12, 6], || format!("f-vector {f_vec:?}"))?;
    ensure(k.euler_characteristic() == 0, || format!("chi = {}", k.euler_characteristic()))?;
    let h = homology(&k);
    ensure(h.is_sphere_like(1), || format!("reduced Betti {:?}", reduced_betti(&h, 2)))?;
    Ok(format!("f = {f:?}, chi = 0, homology of S^1"))
}

fn bier() -> Outcome {
    let mut cases = 0;
    for m in 3..=7usize {
        for p in 1..=m - 2 {
            let k = SimplicialComplex::bounded_subsets(m as u32, p);
            let b = bier_sphere(&k, m).unwrap();
            let direct = rook(m, &[p, m - p - 1]);
            ensure(b.facets() == direct.facets(), || format!("m={m} p={p}: facet sets differ"))?;
            ensure(homology(&b).is_sphere_like(m as isize - 2), || format!("m={m} p={p}: not S^{}", m - 2))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (m, p) pairs match and are homology spheres"))
}

fn is_single_cycle(lk: &SimplicialComplex) -> Option<usize> {
    let edges = lk.facets();
    if edges.iter().any(|e| e.len() != 2) {
        return None;
    }
    let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for e in edges {
        let [a, b] = [e.vertices()[0], e.vertices()[1]];
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if adj.values().any(|n| n.len() != 2) {
        return None;
    }
    let start = *adj.keys().next()?;
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[&v] {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    (seen.len() == adj.len()).then_some(edges.len())
}

fn link_census(k: &SimplicialComplex) -> Outcome {
    let m = 7;
    for face in k.faces(4) {
        let lk = k.link(&face).unwrap();
        let two_points = lk.facets().len() == 2 && lk.facets().iter().all(|f| f.len() == 1);
        ensure(two_points, || format!("link of {face} is {:?}", lk.facets()))?;
    }
    let mut lengths: HashMap<usize, usize> = HashMap::new();
    for face in k.faces(3) {
        let lk = k.link(&face).unwrap();
        match is_single_cycle(&lk) {
            Some(len @ (3 | 6)) => *lengths.entry(len).or_default() += 1,
            _ => return Err(format!("link of {face} is not a 3- or 6-cycle")),
        }
    }
    let faces2 = k.faces(2);
    let verdicts: Vec<Result<bool, String>> = faces2
        .par_iter()
        .map(|face| {
            let h = homology(&k.link(face).unwrap());
            let b = reduced_betti(&h, 2);
            let torus = b == [0, 2, 1] && !h.has_torsion();
            let sphere = h.is_sphere_like(2);
            let rows: HashSet<u32> = face.vertices().iter().map(|v| v / m).collect();
            match (torus, sphere, rows.len() == 3) {
                (true, _, true) => Ok(true),
                (_, true, false) => Ok(false),
                _ => Err(format!("link of {face} has reduced Betti {b:?}, rows {}", rows.len())),
            }
        })
        .collect();
    let mut tori = 0;
    for v in verdicts {
        tori += usize::from(v?);
    }
    Ok(format!(
        "{} ridges, 3-faces with cycles {:?}, {} triangles ({tori} torus links)",
        k.faces(4).len(),
        {
            let mut l: Vec<_> = lengths.into_iter().collect();
            l.sort_unstable();
            l
        },
        faces2.len()
    ))
}

fn shelling_grid() -> Outcome {
    let mut specs = Vec::new();
    for n in 1..=3 {
        for m in 1..=10 {
            for caps in hypothesis_caps(m, n, m) {
                specs.push(BoardSpec::rook(m, caps).unwrap());
            }
        }
    }
    let results: Vec<Result<usize, String>> = specs
        .par_iter()
        .map(|spec| {
            let k = multi_chessboard(spec).unwrap();
            let order: Vec<Simplex> = shelling_order(spec).unwrap().iter().map(|f| f.to_simplex(spec.m)).collect();
            let cert = verify_shelling(&k, &order).map_err(|e| format!("{spec:?}: {e}"))?;
            if let Some(v) = &cert.violation {
                return Err(format!("{spec:?}: violation at {} vs {}", v.facet, v.earlier));
            }
            let wedge = wedge_summary(&cert).unwrap();
            let top = top_betti(&k);
            if wedge != top {
                return Err(format!("{spec:?}: {wedge} spanning facets, top Betti {top}"));
            }
            Ok(order.len())
        })
        .collect();
    let mut facets = 0;
    for r in results {
        facets += r?;
    }
    Ok(format!("{} boards, {facets} facets, all shellings verified", specs.len()))
}

fn lex_counterexample() -> Outcome {
    for m in 3..=6usize {
        let k = rook(m, &[1, 1]);
        let cert = verify_shelling(&k, &lexicographic_order(&k)).unwrap();
        let v = cert.violation.ok_or_else(|| format!("m={m}: lex order verified"))?;
        // B = {(2,1), (1,2)} is the vertex set {1, m}
        let b = Simplex::from([1, m as Vertex]);
        ensure(v.facet == b && v.intersection.is_empty(), || format!("m={m}: violation at {} vs {}", v.facet, v.earlier))?;
    }
    Ok("m = 3..6 fail at B = {(2,1),(1,2)} with an empty intersection".into())
}

fn order_laws() -> Outcome {
    use std::cmp::Ordering;
    let specs = boards_up_to(200);
    for spec in &specs {
        let order = FacetOrder::new(spec).unwrap();
        let facets = tuples(spec);
        let t = facets.len();
        let table: Vec<Vec<Ordering>> =
            facets.iter().map(|a| facets.iter().map(|b| order.compare(a, b).unwrap()).collect()).collect();
        for i in 0..t {
            for j in 0..t {
                let ok = if i == j { table[i][j] == Ordering::Equal } else { table[i][j] == table[j][i].reverse() && table[i][j] != Ordering::Equal };
                ensure(ok, || format!("{spec:?}: {} vs {}", facets[i], facets[j]))?;
            }
        }
        let mut wins: Vec<usize> = table.iter().map(|row| row.iter().filter(|&&o| o == Ordering::Less).count()).collect();
        wins.sort_unstable();
        ensure(wins == (0..t).collect::<Vec<_>>(), || format!("{spec:?}: not transitive"))?;
    }
    let mut standard = 0;
    for n in 1..=3usize {
        for m in (2 * n - 1)..=6 {
            let spec = BoardSpec::rook(m, vec![1; n]).unwrap();
            let order = FacetOrder::new(&spec).unwrap();
            let facets = tuples(&spec);
            for a in &facets {
                for b in &facets {
                    let sa: Vec<u32> = a.parts().iter().map(|p| p[0]).collect();
                    let sb: Vec<u32> = b.parts().iter().map(|p| p[0]).collect();
                    ensure(order.compare(a, b).unwrap() == standard_compare(&sa, &sb, m), || format!("m={m} n={n}: {a} vs {b}"))?;
                }
            }
            standard += 1;
        }
    }
    let mut relabeled = 0;
    for spec in boards_up_to(3000) {
        let k = multi_chessboard(&spec).unwrap();
        let alt: Vec<Simplex> = chessboard_core::shelling::shelling_order_with(&spec, chessboard_core::Relabel::ReverseColumns)
            .unwrap()
            .iter()
            .map(|f| f.to_simplex(spec.m))
            .collect();
        let cert = verify_shelling(&k, &alt).unwrap();
        ensure(cert.is_verified(), || format!("{spec:?}: reversed relabeling is not a shelling"))?;
        relabeled += 1;
    }
    Ok(format!("{} boards exhaustively, {standard} standard boards, {relabeled} relabeled shellings", specs.len()))
}

fn bound_scan_check() -> Outcome {
    let reports = bound_scan(&ScanGrid { m: 1..=9, n: 1..=3, caps: 1..=3 }, SCAN_BUDGET);
    let skipped = reports.iter().filter(|r| r.skipped.is_some()).count();
    let hconn = |m: usize, caps: &[usize]| {
        reports.iter().find(|r| r.m == m && r.row_caps == caps).and_then(|r| r.hconn).expect("instance in grid")
    };
    let mut failures = Vec::new();
    let unit: Vec<String> = reports.iter().filter(|r| r.violation).map(|r| r.label()).collect();
    if !unit.is_empty() {
        failures.push(format!("unit-column bound violated at {}", unit.join("; ")));
    }
    let sharp = reports.iter().find(|r| r.m == 7 && r.row_caps == [2, 2, 2]).unwrap();
    if !(sharp.sharp && sharp.hconn == Some(3)) {
        failures.push(format!("m=7 n=3 k=2,2,2 has hconn {:?}, sharp {}", sharp.hconn, sharp.sharp));
    }
    let two_one: Vec<String> = reports
        .iter()
        .filter(|r| r.two_one_violation)
        .map(|r| format!("{} (hconn {}, mu {})", r.label(), r.hconn.unwrap(), r.mu_two_one.unwrap()))
        .collect();
    let checked = reports.iter().filter(|r| two_one_rows(&r.row_caps).is_some() && r.hconn.is_some()).count();
    if !two_one.is_empty() {
        failures.push(format!("two-one-j prediction fails on {} of {checked}: {}", two_one.len(), two_one.join("; ")));
    }
    let examples = [(3, vec![2, 2, 2], 1), (4, vec![2, 2, 2], 1), (5, vec![2, 2, 2], 2), (6, vec![2, 2, 2], 2)];
    for (m, caps, want) in examples.iter().cloned().chain((4..=9).map(|m| (m, vec![2, 1], 1))) {
        let h = hconn(m, &caps);
        if h < want {
            failures.push(format!("m={m} k={caps:?}: hconn {h} < {want}"));
        }
    }
    if failures.is_empty() {
        Ok(format!("{} instances, {skipped} skipped, {checked} two-one-j instances", reports.len()))
    } else {
        Err(failures.join(" | "))
    }
}

fn constructors() -> Outcome {
    let mut uniform = 0;
    for m in 1..=6usize {
        for n in 1..=3usize {
            for p in 1..=3usize.min(m) {
                for q in 1..=2usize.min(n) {
                    let direct = uniform_chessboard(m, n, p, q).unwrap();
                    let joined = uniform_via_deleted_join(m, n, p, q).unwrap();
                    ensure(direct.facets() == joined.facets(), || format!("m={m} n={n} p={p} q={q}"))?;
                    uniform += 1;
                }
            }
        }
    }
    let mut commutation = 0;
    let mut shapes: Vec<Vec<usize>> = Vec::new();
    for parts in 1..=3usize {
        let mut sizes = vec![1; parts];
        loop {
            shapes.push(sizes.clone());
            let Some(i) = sizes.iter().position(|&s| s < 3) else { break };
            sizes[i] += 1;
            for s in &mut sizes[..i] {
                *s = 1;
            }
        }
    }
    for sizes in &shapes {
        let total: usize = sizes.iter().sum();
        let offsets: Vec<usize> = sizes.iter().scan(0, |acc, &t| Some(std::mem::replace(acc, *acc + t))).collect();
        for r in 1..=3usize {
            let left = multipartite(sizes).unwrap().deleted_join(r, 2).unwrap();
            let mut right = SimplicialComplex::empty_face();
            for &t in sizes {
                right = right.join(&uniform_chessboard(t, r, 1, 1).unwrap());
            }
            // copy i of point u in part j: i·Σt + o_j + u on the left,
            // r·o_j + i·t_j + u on the right
            let relabel = |v: Vertex| {
                let (i, rest) = (v as usize / total, v as usize % total);
                let j = offsets.iter().rposition(|&o| o <= rest).unwrap();
                (r * offsets[j] + i * sizes[j] + rest - offsets[j]) as Vertex
            };
            let mut mapped: Vec<Simplex> =
                left.facets().iter().map(|f| f.vertices().iter().map(|&v| relabel(v)).collect()).collect();
            mapped.sort();
            ensure(mapped == right.facets(), || format!("sizes {sizes:?}, r={r}"))?;
            commutation += 1;
        }
    }
    Ok(format!("{uniform} uniform boards, {commutation} join/deleted-join cases"))
}

/// Convex-combination check written out directly, independent of the
/// library's witness verification.
fn witness_is_exact(point: &[Q], groups: &[Vec<Vec<Q>>], coefficients: &[Vec<Q>]) -> bool {
    groups.len() == coefficients.len()
        && groups.iter().zip(coefficients).all(|(g, lam)| {
            lam.len() == g.len()
                && lam.iter().all(|l| !l.is_negative())
                && lam.iter().fold(Q::zero(), |a, l| a + l).is_one()
                && (0..point.len()).all(|c| g.iter().zip(lam).fold(Q::zero(), |a, (x, l)| a + &x[c] * l) == point[c])
        })
}

fn tverberg_suite(d: usize, k: usize, r: usize, p: usize) -> Result<(usize, u64), String> {
    let mut master = ChaCha8Rng::seed_from_u64(TVERBERG_SEED);
    let seeds: Vec<u64> = (0..TVERBERG_TRIALS).map(|_| master.next_u64()).collect();
    let tested: Vec<Result<u64, String>> = seeds
        .par_iter()
        .map(|&seed| {
            let inst = random_instance(d, k, r, p, seed).map_err(|e| e.to_string())?;
            let out = search_partition(&inst, &SearchOptions::default()).map_err(|e| e.to_string())?;
            if out.status != SearchStatus::Found {
                return Err(format!("seed {seed}: {:?} after {} partitions", out.status, out.tested));
            }
            let cert = out.certificate.unwrap();
            cert.verify(&inst, &vec![p; k]).map_err(|e| format!("seed {seed}: {e}"))?;
            let groups = cert.point_groups(&inst);
            if !witness_is_exact(&cert.witness.point, &groups, &cert.witness.coefficients) {
                return Err(format!("seed {seed}: witness fails the direct check"));
            }
            let planar = (cert.witness.point[0].clone(), cert.witness.point[1].clone());
            let pts: Vec<Vec<common::P2>> =
                groups.iter().map(|g| g.iter().map(|x| (x[0].clone(), x[1].clone())).collect()).collect();
            if !pts.iter().all(|g| in_planar_hull(&planar, g)) {
                return Err(format!("seed {seed}: witness outside a hull by the planar oracle"));
            }
            Ok(out.tested)
        })
        .collect();
    let mut total = 0;
    for t in tested {
        total += t?;
    }
    Ok((TVERBERG_TRIALS, total))
}

fn tverberg() -> Outcome {
    let (n1, t1) = tverberg_suite(2, 1, 2, 2)?;
    let (n2, t2) = tverberg_suite(2, 3, 2, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    let mut meet = 0;
    for case in 0..ORACLE_CASES {
        let groups = random_planar_groups(&mut rng);
        let lp = chessboard_core::hulls_intersect(&to_points(&groups));
        ensure(lp.is_some() == planar_hulls_meet(&groups), || format!("oracle disagrees on case {case}: {groups:?}"))?;
        meet += usize::from(lp.is_some());
    }
    Ok(format!(
        "(2,1,2,2): {n1} found, {t1} partitions tried; (2,3,2,1): {n2} found, {t2} tried; oracle agrees on {ORACLE_CASES} ({meet} meet)"
    ))
}

#[test]
fn acceptance_criteria() {
    let big = rook(7, &[2, 2, 2]);
    let big_h = homology(&big);

    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("Euler characteristic of the 7x3 board with row caps 2", Box::new(|| euler(&big, &big_h))),
        ("homology ranks of the 7x3 board with row caps 2", Box::new(|| ranks(&big_h))),
        ("sphere fixtures and 3-manifold links", Box::new(spheres)),
        ("cylinder fixture", Box::new(cylinder)),
        ("Bier sphere correspondence", Box::new(bier)),
        ("quasi-manifold link census", Box::new(|| link_census(&big))),
        ("shelling soundness grid", Box::new(shelling_grid)),
        ("lexicographic counterexample", Box::new(lex_counterexample)),
        ("order laws", Box::new(order_laws)),
        ("connectivity bound scan", Box::new(bound_scan_check)),
        ("constructor equivalences", Box::new(constructors)),
        ("colored Tverberg suite", Box::new(tverberg)),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[{:>2}] PASS {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                println!("[{:>2}] FAIL {name} ({secs:.1}s): {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
