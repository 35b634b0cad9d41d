//! Exact rational feasibility for small polyhedral questions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Decides whether `{x >= 0 : a * x = b}` is nonempty.
///
/// Phase-one simplex on an exact rational tableau with Bland's rule, so it
/// terminates on degenerate problems. `a` is given as rows of length `n`.
pub fn nonnegative_solution_exists(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let width = n + m + 1;
    let rhs = width - 1;

    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for (i, row) in a.iter().enumerate() {
        let flip = b[i].is_negative();
        let mut t = vec![BigRational::zero(); width];
        for (j, x) in row.iter().enumerate() {
            t[j] = if flip { -x.clone() } else { x.clone() };
        }
        t[n + i] = BigRational::from_integer(BigInt::from(1));
        t[rhs] = b[i].abs();
        tab.push(t);
    }
    // objective row: minimize the sum of artificials, expressed in nonbasic terms
    let mut obj = vec![BigRational::zero(); width];
    for t in &tab {
        for j in 0..n {
            obj[j] -= &t[j];
        }
        obj[rhs] -= &t[rhs];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    while let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, t) in tab.iter().enumerate() {
            if !t[enter].is_positive() {
                continue;
            }
            let ratio = &t[rhs] / &t[enter];
            let better = match &leave {
                None => true,
                Some((k, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*k]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((p, _)) = leave else {
            // unbounded direction; cannot happen for a bounded-below objective
            break;
        };
        let pivot = tab[p][enter].clone();
        for x in tab[p].iter_mut() {
            *x /= &pivot;
        }
        let prow = tab[p].clone();
        for (i, t) in tab.iter_mut().enumerate() {
            if i == p || t[enter].is_zero() {
                continue;
            }
            let f = t[enter].clone();
            for (x, y) in t.iter_mut().zip(&prow) {
                *x -= &f * y;
            }
        }
        let f = obj[enter].clone();
        for (x, y) in obj.iter_mut().zip(&prow) {
            *x -= &f * y;
        }
        basis[p] = enter;
    }
    obj[rhs].is_zero()
}

/// True when `point` is a nonnegative combination of `generators`.
pub fn in_cone(generators: &[&[BigInt]], point: &[BigInt]) -> bool {
    let rows = point.len();
    let a: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            generators
                .iter()
                .map(|g| BigRational::from_integer(g[i].clone()))
                .collect()
        })
        .collect();
    let b: Vec<BigRational> = point
        .iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect();
    if generators.is_empty() {
        return point.iter().all(Zero::is_zero);
    }
    nonnegative_solution_exists(&a, &b)
}
