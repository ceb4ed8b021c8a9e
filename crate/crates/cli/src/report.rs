//! Regression fixtures: quick, fixed-size checks of the published claims,
//! each named by the claim it tests.

use anyhow::Result;
use chessboard_core::shelling::shelling_order;
use chessboard_core::{
    bier_sphere, bound_scan, homological_connectivity, homology, lexicographic_order, multi_chessboard,
    uniform_chessboard, verify_shelling, verify_theorem, wedge_summary, BoardSpec, ScanGrid, Simplex,
    SimplicialComplex, top_betti,
};
use clap::Args;
use serde::Serialize;

use crate::{Ctx, Output};

#[derive(Args, Debug, Serialize)]
pub struct ReportArgs {
    /// Seed of the Tverberg fixture.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Serialize)]
struct Fixture {
    claim: &'static str,
    expected: String,
    observed: String,
    pass: bool,
}

fn fixture(claim: &'static str, expected: impl ToString, observed: impl ToString) -> Fixture {
    let (expected, observed) = (expected.to_string(), observed.to_string());
    Fixture { pass: expected == observed, claim, expected, observed }
}

fn rook(m: usize, caps: &[usize]) -> Result<SimplicialComplex> {
    Ok(multi_chessboard(&BoardSpec::rook(m, caps.to_vec())?)?)
}

fn sphere_dim(k: &SimplicialComplex) -> String {
    let h = homology(k);
    let top = k.dim().unwrap_or(-1);
    match (-1..=top).find(|&d| h.is_sphere_like(d)) {
        Some(d) => format!("S^{d}"),
        None => format!("betti {:?}", h.betti_vector()),
    }
}

fn all_shellings_verify(max_m: usize) -> Result<String> {
    for n in 1..=3usize {
        for m in n..=max_m {
            let mut caps = vec![1usize; n];
            loop {
                if caps.iter().sum::<usize>() + n <= m + 1 {
                    let spec = BoardSpec::rook(m, caps.clone())?;
                    let k = multi_chessboard(&spec)?;
                    let order: Vec<Simplex> = shelling_order(&spec)?.iter().map(|f| f.to_simplex(m)).collect();
                    let cert = verify_shelling(&k, &order)?;
                    if !cert.is_verified() || wedge_summary(&cert)? != top_betti(&k) {
                        return Ok(format!("fails on m={m} k={caps:?}"));
                    }
                }
                let Some(i) = caps.iter().position(|&c| c < m) else { break };
                caps[i] += 1;
                for c in &mut caps[..i] {
                    *c = 1;
                }
            }
        }
    }
    Ok("all verified".into())
}

pub fn run(_ctx: &mut Ctx, a: &ReportArgs) -> Result<Output> {
    let big = rook(7, &[2, 2, 2])?;
    let h = homology(&big);
    let cylinder = rook(3, &[2, 2])?;
    let cyl_f = cylinder.f_vector().counts;

    let bier_ok = (3..=7usize).all(|m| {
        (1..=m - 2).all(|p| {
            let b = bier_sphere(&SimplicialComplex::bounded_subsets(m as u32, p), m);
            let direct = rook(m, &[p, m - p - 1]);
            matches!((b, direct), (Ok(b), Ok(d)) if b.facets() == d.facets() && homology(&b).is_sphere_like(m as isize - 2))
        })
    });

    let lex = rook(4, &[1, 1])?;
    let lex_cert = verify_shelling(&lex, &lexicographic_order(&lex))?;
    let lex_observed = match &lex_cert.violation {
        Some(v) => format!("violation at {}", v.facet.vertices().iter().map(|&x| lex.square_of(x).unwrap().to_string()).collect::<Vec<_>>().join(",")),
        None => "verified".into(),
    };

    let scan = bound_scan(&ScanGrid { m: 1..=7, n: 1..=3, caps: 1..=2 }, 200_000);
    let two_one_bad = scan.iter().filter(|r| r.two_one_violation).count();
    let unit_bad = scan.iter().filter(|r| r.violation).count();

    let tv = verify_theorem(2, 3, 2, 1, 50, a.seed, 1_000_000)?;

    let fixtures = vec![
        fixture("Euler characteristic of the 7x3 board with two rooks per row", 147, big.euler_characteristic()),
        fixture("top reduced Betti numbers of the same board", "(147, 1)", format!("({}, {})", h.betti(4), h.betti(5))),
        fixture("the same board has homological connectivity 3", 3, homological_connectivity(&big).hconn),
        fixture("4x2 board with two rooks per row is a 2-sphere", "S^2", sphere_dim(&rook(4, &[2, 2])?)),
        fixture("5x2 board with two rooks per row is a 3-sphere", "S^3", sphere_dim(&rook(5, &[2, 2])?)),
        fixture("3x2 board with two rooks per row and column is a 3-sphere", "S^3", sphere_dim(&uniform_chessboard(3, 2, 2, 2)?)),
        fixture("3x2 board with two rooks per row is a cylinder of 6 triangles", "[6, 12, 6]", format!("{cyl_f:?}")),
        fixture("Bier spheres of bounded subsets are two-row boards, m <= 7", true, bier_ok),
        fixture("lexicographic order on the 4x2 rook board is not a shelling", "violation at (2,1),(1,2)", lex_observed),
        fixture("the cyclic order shells every board with m >= sum k + n - 1, m <= 7", "all verified", all_shellings_verify(7)?),
        fixture("unit-column connectivity bound holds on m <= 7, n <= 3, caps <= 2", 0, unit_bad),
        fixture("two-one-j connectivity prediction on the same grid", 0, two_one_bad),
        fixture("colored Tverberg partitions for d=2 k=3 r=2 p=1, 50 trials", 50, tv.successes),
    ];
    let mut text = String::from("status\tclaim\texpected\tobserved\n");
    for f in &fixtures {
        text.push_str(&format!("{}\t{}\t{}\t{}\n", if f.pass { "PASS" } else { "FAIL" }, f.claim, f.expected, f.observed));
    }
    let failing: Vec<&str> = fixtures.iter().filter(|f| !f.pass).map(|f| f.claim).collect();
    for claim in &failing {
        log::error!("fixture failed: {claim}");
    }
    Ok(Output { ok: failing.is_empty(), result: serde_json::to_value(&fixtures)?, text: Some(text), seed: Some(a.seed) })
}
