//! Closed-form lower bounds on the connectivity of multiple chessboard
//! complexes with unit column caps, and a scanner that compares them with
//! computed homological connectivity.
//!
//! Every formula returns `μ`; the predicted connectivity is `μ − 2`.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::board::{multi_chessboard, BoardSpec};
use crate::homology::homological_connectivity;

fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

/// `min{m − n + 1, Σk}`.
pub fn mu_unit_columns(m: usize, n: usize, caps: &[usize]) -> i64 {
    let sum: usize = caps.iter().sum();
    (m as i64 - n as i64 + 1).min(sum as i64)
}

/// Bound for `j` rows of cap 2 and `n − j` rows of cap 1. Thresholds are
/// half-integers, so cases are selected in exact rational arithmetic; the
/// first matching case wins.
pub fn mu_two_one_j(m: usize, n: usize, j: usize) -> i64 {
    let (m, n, j) = (m as i64, n as i64, j as i64);
    let mr = Ratio::from_integer(m);
    let half = |a: i64| Ratio::new(a, 2);
    if mr < half(n + j) {
        m
    } else if mr < Ratio::from_integer(n - 1) + half(j) {
        ceil_div(m + n + j + 1, 3)
    } else if m < n + 2 * j {
        ceil_div(5 * m + n + 2 * j + 5, 9)
    } else if m < 2 * n + j - 1 {
        ceil_div(m + n + 2 * j + 1, 3)
    } else {
        n + j
    }
}

/// Rational-homology bound `min{m, ⌈(m + Σk + 1)/3⌉, Σk}`.
pub fn mu_rational(m: usize, _n: usize, caps: &[usize]) -> i64 {
    let sum = caps.iter().sum::<usize>() as i64;
    let m = m as i64;
    m.min(ceil_div(m + sum + 1, 3)).min(sum)
}

/// `Some(j)` when the caps are `j` twos followed by ones (up to order).
pub fn two_one_rows(caps: &[usize]) -> Option<usize> {
    caps.iter().all(|&k| k == 1 || k == 2).then(|| caps.iter().filter(|&&k| k == 2).count())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub m: usize,
    pub n: usize,
    pub row_caps: Vec<usize>,
    pub mu_unit_columns: i64,
    pub mu_two_one: Option<i64>,
    pub mu_rational: i64,
    /// `None` when the instance was over budget.
    pub hconn: Option<isize>,
    /// Computed connectivity equals `μ − 2` and `H̃_{μ−1}` is nonzero.
    pub sharp: bool,
    /// Computed connectivity below `mu_unit_columns − 2`.
    pub violation: bool,
    /// Computed connectivity below `mu_two_one − 2`.
    pub two_one_violation: bool,
    pub skipped: Option<String>,
}

impl BoundReport {
    pub fn label(&self) -> String {
        let caps: Vec<String> = self.row_caps.iter().map(ToString::to_string).collect();
        format!("m={} n={} k={}", self.m, self.n, caps.join(","))
    }

    pub fn predicted(&self) -> i64 {
        self.mu_unit_columns - 2
    }
}

pub fn bound_report(spec: &BoardSpec, budget: u128) -> BoundReport {
    let (m, n, caps) = (spec.m, spec.n, spec.row_caps.clone());
    let mu = mu_unit_columns(m, n, &caps);
    let mu_two_one = two_one_rows(&caps).map(|j| mu_two_one_j(m, n, j));
    let mut report = BoundReport {
        m,
        n,
        row_caps: caps.clone(),
        mu_unit_columns: mu,
        mu_two_one,
        mu_rational: mu_rational(m, n, &caps),
        hconn: None,
        sharp: false,
        violation: false,
        two_one_violation: false,
        skipped: None,
    };
    let faces = spec.count_faces();
    if faces.map_or(true, |f| f > budget) {
        let why = match faces {
            Some(f) => format!("{f} faces exceed budget {budget}"),
            None => "column caps are not 1".to_string(),
        };
        log::info!("skipping {}: {why}", report.label());
        report.skipped = Some(why);
        return report;
    }
    let complex = match multi_chessboard(spec) {
        Ok(k) => k,
        Err(e) => {
            report.skipped = Some(e.to_string());
            return report;
        }
    };
    let conn = homological_connectivity(&complex);
    let h = conn.hconn as i64;
    report.hconn = Some(conn.hconn);
    report.violation = h < mu - 2;
    report.two_one_violation = mu_two_one.is_some_and(|mu2| h < mu2 - 2);
    report.sharp = h == mu - 2 && conn.witness.as_ref().is_some_and(|(i, _)| *i as i64 == mu - 1);
    report
}

/// Parameter ranges of a scan. Cap vectors are nonincreasing, since
/// permuting rows gives isomorphic complexes, and capped at `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanGrid {
    pub m: RangeInclusive<usize>,
    pub n: RangeInclusive<usize>,
    pub caps: RangeInclusive<usize>,
}

impl ScanGrid {
    pub fn specs(&self) -> Vec<BoardSpec> {
        let mut out = Vec::new();
        for m in self.m.clone() {
            for n in self.n.clone() {
                let hi = (*self.caps.end()).min(m);
                let lo = *self.caps.start();
                if m == 0 || n == 0 || lo > hi {
                    continue;
                }
                let mut caps = vec![hi; n];
                loop {
                    out.push(BoardSpec::rook(m, caps.clone()).expect("grid specs are valid"));
                    // next nonincreasing vector in decreasing lex order
                    let Some(i) = caps.iter().rposition(|&k| k > lo) else { break };
                    caps[i] -= 1;
                    for t in i + 1..n {
                        caps[t] = caps[i];
                    }
                }
            }
        }
        out
    }
}

/// Reports in grid order; instances run in parallel.
pub fn bound_scan(grid: &ScanGrid, budget: u128) -> Vec<BoundReport> {
    grid.specs().par_iter().map(|spec| bound_report(spec, budget)).collect()
}

pub const TSV_HEADER: &str = "spec\tmu_unit_columns\tmu_two_one\tmu_rational\thconn\tsharp\tviolation";

pub fn render_tsv(reports: &[BoundReport]) -> String {
    let mut out = String::new();
    out.push_str(TSV_HEADER);
    out.push('\n');
    for r in reports {
        let two_one = r.mu_two_one.map_or("-".to_string(), |v| v.to_string());
        let hconn = r.hconn.map_or("skipped".to_string(), |v| v.to_string());
        let violation = match (r.violation, r.two_one_violation) {
            (false, false) => "no",
            (true, false) => "mu_unit_columns",
            (false, true) => "mu_two_one",
            (true, true) => "mu_unit_columns,mu_two_one",
        };
        let sharp = if r.sharp { "yes" } else { "no" };
        writeln!(out, "{}\t{}\t{}\t{}\t{}\t{}\t{}", r.label(), r.mu_unit_columns, two_one, r.mu_rational, hconn, sharp, violation)
            .expect("writing to a String cannot fail");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_column_formula() {
        assert_eq!(mu_unit_columns(7, 3, &[2, 2, 2]), 5);
        assert_eq!(mu_unit_columns(5, 2, &[1, 1]), 2);
        assert_eq!(mu_unit_columns(2, 3, &[1, 1, 1]), 0);
        for p in 1..=3 {
            for n in 1..=3 {
                let m = (p + 1) * n - 1;
                assert_eq!(mu_unit_columns(m, n, &vec![p; n]), (p * n) as i64);
            }
        }
    }

    #[test]
    fn two_one_cases() {
        // last case
        assert_eq!(mu_two_one_j(4, 2, 1), 3);
        assert_eq!(mu_two_one_j(9, 3, 3), 6);
        // first case: m < (n + j)/2
        assert_eq!(mu_two_one_j(1, 3, 0), 1);
        assert_eq!(mu_two_one_j(2, 3, 2), 2);
        // second case for n = 4, j = 2: 3 <= m < 4
        assert_eq!(mu_two_one_j(3, 4, 2), ceil_div(3 + 4 + 2 + 1, 3));
        // third case for n = 3, j = 2: 3 <= m < 7
        assert_eq!(mu_two_one_j(5, 3, 2), ceil_div(25 + 3 + 4 + 5, 9));
        // fourth case for n = 3, j = 1: 5 <= m < 6
        assert_eq!(mu_two_one_j(5, 3, 1), ceil_div(5 + 3 + 2 + 1, 3));
    }

    #[test]
    fn rational_formula() {
        assert_eq!(mu_rational(7, 3, &[2, 2, 2]), 5);
        assert_eq!(mu_rational(2, 2, &[2, 2]), 2);
    }

    #[test]
    fn grid_caps_are_nonincreasing() {
        let grid = ScanGrid { m: 3..=3, n: 2..=2, caps: 1..=3 };
        let caps: Vec<Vec<usize>> = grid.specs().into_iter().map(|s| s.row_caps).collect();
        assert_eq!(caps, vec![vec![3, 3], vec![3, 2], vec![3, 1], vec![2, 2], vec![2, 1], vec![1, 1]]);
        let grid = ScanGrid { m: 1..=1, n: 1..=2, caps: 1..=3 };
        assert_eq!(grid.specs().len(), 2);
    }

    #[test]
    fn report_for_small_instance() {
        let spec = BoardSpec::rook(3, vec![2, 2]).unwrap();
        let r = bound_report(&spec, 1000);
        assert_eq!(r.hconn, Some(0));
        assert!(!r.violation);
        assert!(r.sharp);
        let r = bound_report(&spec, 5);
        assert!(r.skipped.is_some());
        let tsv = render_tsv(&[r]);
        assert!(tsv.lines().nth(1).unwrap().contains("skipped"));
    }
}
