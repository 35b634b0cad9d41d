//! Deterministic simplification of presentations by linear elimination.
//!
//! Two moves, repeated until neither applies:
//!
//! 1. Scan the polynomial relations in stored order; in the first linear one
//!    that has a variable with coefficient `±1`, solve for the lowest-index such
//!    variable, substitute it everywhere and drop both the relation and the
//!    variable. A monomial relation containing the variable becomes a
//!    polynomial relation, appended after the existing ones.
//! 2. When there are no monomial relations and every relation is linear, change
//!    degree-one coordinates by a Smith normal form of the coefficient matrix,
//!    provided that at least one invariant factor is `1` (so a variable
//!    disappears). The surviving coordinates are renamed from `s, t, u, v, w`
//!    (or `w1, w2, ...` when more are needed), free ones first.
//!
//! Finally each relation is sign-normalized (positive leading coefficient) and
//! exact duplicates are removed.

use num_traits::{One, Signed};

use super::poly::Polynomial;
use super::presentation::Presentation;
use crate::exactla::{smith_normal_form, IntMatrix};

struct Work {
    names: Vec<String>,
    monomials: Vec<Vec<usize>>,
    polys: Vec<Polynomial>,
}

impl Work {
    fn nvars(&self) -> usize {
        self.names.len()
    }

    /// First `(relation, variable)` usable for a unit elimination.
    fn find_unit(&self) -> Option<(usize, usize)> {
        self.polys.iter().enumerate().find_map(|(k, p)| {
            let coeffs = p.linear_coefficients()?;
            coeffs.iter().position(|c| c.abs().is_one()).map(|i| (k, i))
        })
    }

    fn eliminate(&mut self, rel: usize, var: usize) {
        let n = self.nvars();
        let p = self.polys.remove(rel);
        let coeffs = p.linear_coefficients().expect("linear relation");
        // c * x_var + rest = 0  =>  x_var = -c * rest  (c = ±1)
        let c = coeffs[var].clone();
        let rest = p
            .sub(&Polynomial::var(n, var).scale(&c))
            .expect("same variables");
        let value = rest.scale(&-c);

        let mut polys: Vec<Polynomial> = self
            .polys
            .iter()
            .map(|q| q.substitute(var, &value).expect("same variables"))
            .collect();
        let mut monomials = Vec::new();
        for m in std::mem::take(&mut self.monomials) {
            if m.contains(&var) {
                let others: Vec<usize> = m.iter().copied().filter(|&i| i != var).collect();
                polys.push(
                    Polynomial::squarefree(n, &others)
                        .mul(&value)
                        .expect("same variables"),
                );
            } else {
                monomials.push(m);
            }
        }

        let map: Vec<Option<usize>> = (0..n)
            .map(|i| match i.cmp(&var) {
                std::cmp::Ordering::Less => Some(i),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(i - 1),
            })
            .collect();
        self.polys = polys
            .into_iter()
            .map(|q| q.remap(n - 1, &map).expect("variable eliminated"))
            .filter(|q| !q.is_zero())
            .collect();
        self.monomials = monomials
            .into_iter()
            .map(|m| m.into_iter().map(|i| map[i].unwrap()).collect())
            .collect();
        self.names.remove(var);
    }

    /// Smith change of coordinates on a purely linear presentation. Returns
    /// false when it would not remove any variable.
    fn linear_snf_step(&mut self) -> bool {
        if !self.monomials.is_empty() || self.polys.is_empty() {
            return false;
        }
        let n = self.nvars();
        let Some(rows) = self
            .polys
            .iter()
            .map(Polynomial::linear_coefficients)
            .collect::<Option<Vec<_>>>()
        else {
            return false;
        };
        let matrix = IntMatrix::from_rows(n, &rows).expect("coefficient rows");
        let snf = smith_normal_form(&matrix);
        if !snf.invariant_factors.iter().any(One::is_one) {
            return false;
        }
        // new coordinates w = v^-1 x turn the relations into d_i * w_i
        let rank = snf.rank();
        let free: Vec<usize> = (rank..n).collect();
        let torsion: Vec<usize> = (0..rank)
            .filter(|&i| !snf.invariant_factors[i].is_one())
            .collect();
        let kept: Vec<usize> = free.iter().chain(&torsion).copied().collect();
        let names = fresh_names(kept.len());
        let m = kept.len();
        self.polys = torsion
            .iter()
            .enumerate()
            .map(|(k, &i)| Polynomial::var(m, free.len() + k).scale(&snf.invariant_factors[i]))
            .collect();
        self.names = names;
        true
    }
}

fn fresh_names(count: usize) -> Vec<String> {
    const LETTERS: [&str; 5] = ["s", "t", "u", "v", "w"];
    if count <= LETTERS.len() {
        LETTERS[..count].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=count).map(|i| format!("w{i}")).collect()
    }
}

pub fn simplify(p: &Presentation) -> Presentation {
    let mut work = Work {
        names: p.names().iter().map(|s| s.to_string()).collect(),
        monomials: p.monomial_relations().to_vec(),
        polys: p.polynomial_relations().to_vec(),
    };
    loop {
        if let Some((rel, var)) = work.find_unit() {
            work.eliminate(rel, var);
            continue;
        }
        if work.linear_snf_step() {
            continue;
        }
        break;
    }
    let mut polys: Vec<Polynomial> = Vec::with_capacity(work.polys.len());
    for q in work.polys.iter().map(Polynomial::normalize_sign) {
        if !q.is_zero() && !polys.contains(&q) {
            polys.push(q);
        }
    }
    let mut monomials: Vec<Vec<usize>> = Vec::new();
    for m in work.monomials {
        if !monomials.contains(&m) {
            monomials.push(m);
        }
    }
    Presentation::new(work.names, monomials, polys).expect("simplification keeps invariants")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::present::parse::{parse_presentation, parse_relations};
    use crate::present::render::render_text;

    fn pres(names: &[&str], monos: Vec<Vec<usize>>, rels: &str) -> Presentation {
        let polys = parse_relations(rels, names).unwrap();
        Presentation::new(names.iter().copied(), monos, polys).unwrap()
    }

    #[test]
    fn weighted_projective_line() {
        let p = pres(
            &["x1", "x2", "y1"],
            vec![vec![0, 1]],
            "2*x1-3*x2, x1-x2+2*y1",
        );
        assert_eq!(render_text(&simplify(&p)), "Z[y1]/(24*y1^2)");
    }

    #[test]
    fn blowup_of_affine_space() {
        let p = pres(
            &["x1", "x2", "x3", "x4", "y1"],
            vec![vec![0, 1, 2]],
            "3*x1-x2+2*x4, 4*x1-x3+3*x4, -x2+x3+2*y1",
        );
        let s = simplify(&p);
        let target = pres(&["x4", "y1"], vec![], "(x4+2*y1)*(x4+6*y1)*(x4+8*y1)");
        assert_eq!(s, target);
    }

    #[test]
    fn no_unit_is_a_fixpoint() {
        let p = parse_presentation("Z[x]/(2*x)").unwrap();
        assert_eq!(simplify(&p), p);
    }

    #[test]
    fn linear_snf_step() {
        let p = pres(&["x1", "x2", "x3"], vec![], "2*x1+4*x3, 3*x2+2*x3");
        assert_eq!(render_text(&simplify(&p)), "Z[s,t]/(2*t)");
    }

    #[test]
    fn projective_plane_cube() {
        let p = pres(&["x1", "x2", "x3"], vec![vec![0, 1, 2]], "x1-x3, x2-x3");
        assert_eq!(render_text(&simplify(&p)), "Z[x3]/(x3^3)");
    }

    #[test]
    fn signs_are_normalized() {
        let p = pres(&["a", "b"], vec![], "-a^2 + 3*b^2");
        let s = simplify(&p);
        let (_, c) = s.polynomial_relations()[0].leading_term().unwrap();
        assert!(c.is_positive());
    }

    #[test]
    fn total_collapse() {
        let p = pres(&["x1", "x2"], vec![], "x1, x2");
        assert_eq!(render_text(&simplify(&p)), "Z");
    }
}
