//! Exact feasibility of `A x = b, x ≥ 0` over the rationals.
//!
//! Phase one of the simplex method on a dense tableau: artificial variables
//! start in the basis and their sum is minimized. Bland's rule (smallest
//! eligible index for entering and leaving variables) guarantees termination.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Returns a nonnegative solution of `a x = b` if one exists.
pub fn feasible_point(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "one right-hand side per row");
    let n = a.first().map_or(0, Vec::len);
    if rows == 0 {
        return Some(vec![BigRational::zero(); n]);
    }
    let width = n + rows + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), n, "ragged constraint matrix");
        let flip = rhs.is_negative();
        let mut r: Vec<BigRational> = row.iter().map(|v| if flip { -v } else { v.clone() }).collect();
        r.extend((0..rows).map(|k| if k == i { BigRational::from_integer(1.into()) } else { BigRational::zero() }));
        r.push(if flip { -rhs } else { rhs.clone() });
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..n + rows).collect();
    // reduced costs of minimizing the sum of artificials
    let mut cost = vec![BigRational::zero(); width];
    for r in &t {
        for j in 0..n {
            cost[j] -= &r[j];
        }
        cost[width - 1] -= &r[width - 1];
    }

    while let Some(enter) = (0..width - 1).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..rows {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][width - 1] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (pr, _) = leave.expect("phase one objective is bounded below");
        pivot(&mut t, &mut cost, pr, enter);
        basis[pr] = enter;
    }

    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<BigRational>], cost: &mut [BigRational], pr: usize, pc: usize) {
    let p = t[pr][pc].clone();
    for v in t[pr].iter_mut() {
        *v /= &p;
    }
    let pivot_row = t[pr].clone();
    let eliminate = |row: &mut Vec<BigRational>| {
        let f = row[pc].clone();
        if f.is_zero() {
            return;
        }
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    };
    for (i, row) in t.iter_mut().enumerate() {
        if i != pr {
            eliminate(row);
        }
    }
    let mut c = cost.to_vec();
    eliminate(&mut c);
    cost.clone_from_slice(&c);
}
