//! Degree-by-degree structure of a graded quotient ring as abelian groups.
//!
//! The degree-`k` piece of `Z[x] / I` is the free group on degree-`k` monomials
//! modulo the products of each relation of degree `e <= k` with every monomial
//! of degree `k - e`. Its invariant factors come from a Smith normal form of
//! that relation matrix.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use super::poly::{Monomial, Polynomial};
use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::exactla::{invariant_factors_sparse, FgAbelianGroup};

pub const MAX_DEGREE: usize = 12;
pub const MAX_VARIABLES: usize = 32;
/// Largest number of monomials allowed in a single degree.
pub const MAX_COMPONENT: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedTable {
    pub max_degree: usize,
    /// Entry `k` is the degree-`k` component.
    pub degrees: Vec<FgAbelianGroup>,
}

impl fmt::Display for GradedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.degrees.iter().enumerate() {
            writeln!(f, "deg {k}: {g}")?;
        }
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    let k = k.min(n - k);
    (0..k).try_fold(1usize, |acc, i| acc.checked_mul(n - i).map(|x| x / (i + 1)))
}

fn check_caps(p: &Presentation, max_degree: usize) -> Result<()> {
    if max_degree > MAX_DEGREE {
        return Err(Error::Limit(format!(
            "degree {max_degree} exceeds {MAX_DEGREE}"
        )));
    }
    let n = p.num_variables();
    if n > MAX_VARIABLES {
        return Err(Error::Limit(format!(
            "{n} variables exceed {MAX_VARIABLES}"
        )));
    }
    if n > 0 {
        let size = binomial(n - 1 + max_degree, max_degree).unwrap_or(usize::MAX);
        if size > MAX_COMPONENT {
            return Err(Error::Limit(format!(
                "degree {max_degree} has {size} monomials in {n} variables (limit {MAX_COMPONENT})"
            )));
        }
    }
    Ok(())
}

/// The degree-`k` component of `Z[n vars] / (relations)`.
pub fn component(nvars: usize, relations: &[Polynomial], k: usize) -> FgAbelianGroup {
    let basis = Monomial::all_of_degree(nvars, k as u32);
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<BTreeMap<usize, BigInt>> = Vec::new();
    for rel in relations {
        let Some(e) = rel.degree() else { continue };
        let e = e as usize;
        if e > k {
            continue;
        }
        for m in Monomial::all_of_degree(nvars, (k - e) as u32) {
            let row: BTreeMap<usize, BigInt> = rel
                .mul_monomial(&m)
                .terms()
                .map(|(t, c)| (index[t], c.clone()))
                .collect();
            rows.push(row);
        }
    }
    let factors = invariant_factors_sparse(rows, basis.len());
    let torsion: Vec<BigInt> = factors.iter().filter(|d| !d.is_one()).cloned().collect();
    FgAbelianGroup::new(basis.len() - factors.len(), torsion).expect("positive factors")
}

pub fn graded_invariants(p: &Presentation, max_degree: usize) -> Result<GradedTable> {
    check_caps(p, max_degree)?;
    let relations = p.all_relations();
    let n = p.num_variables();
    let degrees: Vec<FgAbelianGroup> = (0..=max_degree)
        .into_par_iter()
        .map(|k| component(n, &relations, k))
        .collect();
    Ok(GradedTable {
        max_degree,
        degrees,
    })
}

/// Degree-by-degree agreement up to `max_degree`. A necessary condition for an
/// isomorphism of graded rings, not a sufficient one.
pub fn graded_equal(p: &Presentation, q: &Presentation, max_degree: usize) -> Result<bool> {
    Ok(graded_invariants(p, max_degree)? == graded_invariants(q, max_degree)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::present::parse::parse_presentation;

    fn z(rank: usize, torsion: &[i64]) -> FgAbelianGroup {
        FgAbelianGroup::new(rank, torsion.iter().map(|&a| BigInt::from(a)).collect()).unwrap()
    }

    #[test]
    fn truncated_line_with_torsion() {
        let t = graded_invariants(&parse_presentation("24*t^2").unwrap(), 6).unwrap();
        assert_eq!(t.degrees[0], z(1, &[]));
        assert_eq!(t.degrees[1], z(1, &[]));
        for k in 2..=6 {
            assert_eq!(t.degrees[k], z(0, &[24]));
        }
    }

    #[test]
    fn two_torsion_plane() {
        let t = graded_invariants(&parse_presentation("Z[s,t]/(2*t)").unwrap(), 6).unwrap();
        for k in 0..=6 {
            assert_eq!(t.degrees[k], z(1, &vec![2; k]));
        }
    }

    #[test]
    fn equality_is_degreewise() {
        let a = parse_presentation("24*t^2").unwrap();
        let b = parse_presentation("12*t^2").unwrap();
        assert!(!graded_equal(&a, &b, 6).unwrap());
        assert!(graded_equal(&a, &a, 6).unwrap());
    }

    #[test]
    fn caps() {
        let p = parse_presentation("Z[a]").unwrap();
        assert!(matches!(graded_invariants(&p, 13), Err(Error::Limit(_))));
        let many: Vec<String> = (0..33).map(|i| format!("v{i}")).collect();
        let big = Presentation::free(many).unwrap();
        assert!(matches!(graded_invariants(&big, 1), Err(Error::Limit(_))));
        let wide = Presentation::free((0..32).map(|i| format!("v{i}"))).unwrap();
        assert!(matches!(graded_invariants(&wide, 12), Err(Error::Limit(_))));
    }

    #[test]
    fn degree_zero_is_always_z() {
        let p = parse_presentation("Z[a,b]/(3*a, a*b - b^2)").unwrap();
        assert_eq!(graded_invariants(&p, 3).unwrap().degrees[0], z(1, &[]));
        let empty = Presentation::free(Vec::<String>::new()).unwrap();
        let t = graded_invariants(&empty, 2).unwrap();
        assert_eq!(t.degrees, vec![z(1, &[]), z(0, &[]), z(0, &[])]);
    }

    #[test]
    fn table_display() {
        let t = graded_invariants(&parse_presentation("24*t^2").unwrap(), 2).unwrap();
        assert_eq!(t.to_string(), "deg 0: Z\ndeg 1: Z\ndeg 2: Z/24\n");
    }
}
