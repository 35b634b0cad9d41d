//! Smith normal form over the integers.
//!
//! Pivoting rule: among the nonzero entries of the active submatrix pick the
//! one of minimal absolute value, ties broken by `(row, col)` in lexicographic
//! order. The pivot row and column are reduced by truncated division; any
//! nonzero remainder triggers a new pivot search. Once the pivot row and column
//! are clear, an entry of the submatrix not divisible by the pivot has its row
//! added to the pivot row and the search restarts. Output is deterministic for
//! a fixed input.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Result of [`smith_normal_form`]: `u * m * v == d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Diagonal matrix with the shape of the input.
    pub d: IntMatrix,
    /// Unimodular, `rows x rows`.
    pub u: IntMatrix,
    /// Unimodular, `cols x cols`.
    pub v: IntMatrix,
    /// Inverse of `u`, accumulated alongside it.
    pub u_inv: IntMatrix,
    /// The full nonzero diagonal `d_1 | d_2 | ...`, all positive.
    pub invariant_factors: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

struct Transforms {
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
}

impl Transforms {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.u.add_row_multiple(dst, src, f);
        self.u_inv.add_col_multiple(src, dst, &-f);
    }

    fn negate_row(&mut self, i: usize) {
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }
}

/// Smith normal form with unimodular transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut tr = Transforms {
        u: IntMatrix::identity(m.rows()),
        u_inv: IntMatrix::identity(m.rows()),
        v: IntMatrix::identity(m.cols()),
    };
    let d = diagonalize(m.clone(), Some(&mut tr));
    let invariant_factors = nonzero_diagonal(&d);
    SnfResult {
        d,
        u: tr.u,
        v: tr.v,
        u_inv: tr.u_inv,
        invariant_factors,
    }
}

/// Rank over the rationals: the number of nonzero invariant factors.
pub fn rank(m: &IntMatrix) -> usize {
    invariant_factors(m).len()
}

/// Nonzero SNF diagonal without tracking transforms.
///
/// Unit entries are eliminated first on a sparse copy of the matrix; only the
/// residue that has no unit entry goes through the dense reduction. This keeps
/// the large, sparse relation matrices of the graded oracle cheap.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let rows = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (j, x.clone()))
                .collect()
        })
        .collect();
    invariant_factors_sparse(rows, m.cols())
}

/// [`invariant_factors`] for a matrix given as sparse rows over `cols` columns.
pub fn invariant_factors_sparse(rows: Vec<BTreeMap<usize, BigInt>>, cols: usize) -> Vec<BigInt> {
    let mut rows: Vec<BTreeMap<usize, BigInt>> = rows
        .into_iter()
        .map(|mut r| {
            r.retain(|_, x| !x.is_zero());
            r
        })
        .filter(|r| !r.is_empty())
        .collect();
    let mut units = 0usize;
    let mut dead_cols = vec![false; cols];

    loop {
        let pivot = rows.iter().enumerate().find_map(|(i, r)| {
            r.iter()
                .find(|(_, x)| x.abs().is_one())
                .map(|(&j, x)| (i, j, x.clone()))
        });
        let Some((pi, pj, pv)) = pivot else { break };
        let prow = rows.swap_remove(pi);
        for r in rows.iter_mut() {
            let Some(x) = r.get(&pj) else { continue };
            // r -= (x / pv) * prow, with pv = ±1
            let factor = x * &pv;
            for (&j, y) in prow.iter() {
                let entry = r.entry(j).or_insert_with(BigInt::zero);
                *entry -= &factor * y;
                if entry.is_zero() {
                    r.remove(&j);
                }
            }
        }
        rows.retain(|r| !r.is_empty());
        dead_cols[pj] = true;
        units += 1;
    }

    let live: Vec<usize> = (0..cols).filter(|&j| !dead_cols[j]).collect();
    let position: BTreeMap<usize, usize> = live.iter().enumerate().map(|(k, &j)| (j, k)).collect();
    let mut dense = IntMatrix::zeros(rows.len(), live.len());
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r {
            dense[(i, position[j])] = x.clone();
        }
    }
    let d = diagonalize(dense, None);
    let mut out = vec![BigInt::one(); units];
    out.extend(nonzero_diagonal(&d));
    out
}

fn nonzero_diagonal(d: &IntMatrix) -> Vec<BigInt> {
    (0..d.rows().min(d.cols()))
        .map(|i| d[(i, i)].clone())
        .take_while(|x| !x.is_zero())
        .collect()
}

fn find_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn diagonalize(mut a: IntMatrix, mut tr: Option<&mut Transforms>) -> IntMatrix {
    let (rows, cols) = a.shape();
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = find_pivot(&a, t) else {
                return a;
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            if let Some(tr) = tr.as_deref_mut() {
                tr.swap_rows(t, pi);
                tr.v.swap_cols(t, pj);
            }

            let pivot = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&a[(i, t)] / &pivot);
                a.add_row_multiple(i, t, &q);
                if let Some(tr) = tr.as_deref_mut() {
                    tr.add_row_multiple(i, t, &q);
                }
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&a[(t, j)] / &pivot);
                a.add_col_multiple(j, t, &q);
                if let Some(tr) = tr.as_deref_mut() {
                    tr.v.add_col_multiple(j, t, &q);
                }
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    if let Some(tr) = tr.as_deref_mut() {
                        tr.add_row_multiple(t, i, &one);
                    }
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            if let Some(tr) = tr.as_deref_mut() {
                tr.negate_row(t);
            }
        }
    }
    a
}
