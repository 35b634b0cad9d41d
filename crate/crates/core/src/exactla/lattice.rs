//! Sublattices of `Z^n`: Hermite normal forms, saturation and complements.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// Row Hermite normal form with zero rows dropped.
///
/// Rows are in echelon form with positive pivots, and every entry above a pivot
/// lies in `[0, pivot)`. Spans the same lattice as the rows of `m`.
pub fn hnf_rows(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let pick = (r..rows)
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by(|&i, &j| a[(i, c)].abs().cmp(&a[(j, c)].abs()).then(i.cmp(&j)));
            let Some(p) = pick else { break };
            a.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let q = -(&a[(i, c)] / &a[(r, c)]);
                a.add_row_multiple(i, r, &q);
                done &= a[(i, c)].is_zero();
            }
            if done {
                break;
            }
        }
        if a[(r, c)].is_zero() {
            continue;
        }
        if a[(r, c)].is_negative() {
            a.negate_row(r);
        }
        let pivot = a[(r, c)].clone();
        for i in 0..r {
            let q = -a[(i, c)].div_floor(&pivot);
            a.add_row_multiple(i, r, &q);
        }
        r += 1;
    }
    a.select_rows(0..r)
}

/// Column Hermite normal form: the transpose of [`hnf_rows`] of the transpose.
/// Columns form a basis of the column span of `m`.
pub fn hnf_columns(m: &IntMatrix) -> IntMatrix {
    hnf_rows(&m.transpose()).transpose()
}

/// Basis (as columns, in column HNF) of the saturation of the column span of
/// `m` inside `Z^rows`: every `b` with some positive multiple in the span.
pub fn saturation(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let basis = snf.u_inv.select_columns(0..snf.rank());
    hnf_columns(&basis)
}

/// True when the lattice spanned by the columns of `m` is saturated.
pub fn is_saturated(m: &IntMatrix) -> bool {
    smith_normal_form(m)
        .invariant_factors
        .iter()
        .all(One::is_one)
}

/// Basis (as columns, in column HNF) of a direct complement of the saturated
/// sublattice spanned by the columns of `sublattice`.
pub fn complement(sublattice: &IntMatrix, ambient_rank: usize) -> Result<IntMatrix> {
    if sublattice.rows() != ambient_rank {
        return Err(Error::DimensionMismatch(format!(
            "sublattice vectors have length {}, ambient rank is {ambient_rank}",
            sublattice.rows()
        )));
    }
    let snf = smith_normal_form(sublattice);
    if let Some(bad) = snf.invariant_factors.iter().find(|a| !a.is_one()) {
        return Err(Error::NotSaturated(bad.to_string()));
    }
    let extra = snf.u_inv.select_columns(snf.rank()..ambient_rank);
    Ok(hnf_columns(&extra))
}

/// Coordinates of the columns of `m` in the basis `basis` (columns of a
/// saturated lattice containing them): returns `c` with `basis * c == m`.
pub fn coordinates_in_basis(basis: &IntMatrix, m: &IntMatrix) -> Result<IntMatrix> {
    let snf = smith_normal_form(basis);
    let k = basis.cols();
    if snf.rank() != k || !snf.invariant_factors.iter().all(One::is_one) {
        return Err(Error::NotSaturated("basis is not primitive".into()));
    }
    // u * basis * v = [I_k; 0], so v * [I_k 0] * u is a left inverse of basis.
    let left_inverse = snf.v.mul(&snf.u.select_rows(0..k))?;
    let c = left_inverse.mul(m)?;
    if basis.mul(&c)? != *m {
        return Err(Error::DimensionMismatch(
            "columns do not lie in the span of the basis".into(),
        ));
    }
    Ok(c)
}

/// `v / gcd(v)`, keeping the direction.
pub fn primitive(v: &[BigInt]) -> Result<Vec<BigInt>> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

pub fn is_primitive(v: &[BigInt]) -> bool {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x)).is_one()
}
