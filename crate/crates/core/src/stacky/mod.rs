//! Non-strict stacky fans `(Σ, β: L -> N)` and their integral Chow rings.
//!
//! `N = Z^d + Z/a_1 + ... + Z/a_s` and `β` is given by a lift `B`, a
//! `(d + s) x r` integer matrix whose last `s` rows are read modulo the `a_j`.
//! With `F` the `n x r` ray matrix and `Q^T = [0 | diag(a)]`, the columns
//! `b_1, ..., b_{d+s}` of `F B^T` give the linear relations
//!
//! ```text
//! J1 = ( <x, b_i>              : i <= d )
//! J2 = ( <x, b_{d+j}> + a_j y_j : j <= s )
//! ```
//!
//! and the minimal non-faces of `Σ` give the monomial relations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{cokernel, coordinates_in_basis, rank, saturation, FgAbelianGroup, IntMatrix};
use crate::fan::{Fan, FanReport};
use crate::present::{Polynomial, Presentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackyFan {
    fan: Fan,
    target: FgAbelianGroup,
    lift: IntMatrix,
}

/// Which of the smooth / no-torus-factor hypotheses hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    /// `None` when the fan check was skipped.
    pub fan: Option<FanReport>,
    pub smooth: bool,
    pub torus_factor: bool,
}

impl HypothesisReport {
    pub fn is_ok(&self) -> bool {
        self.fan.as_ref().is_none_or(FanReport::is_ok) && self.smooth && !self.torus_factor
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .fan
            .iter()
            .flat_map(|r| r.violations.iter().map(|v| format!("invalid fan: {v}")))
            .collect();
        if !self.smooth {
            out.push("not smooth".into());
        }
        if self.torus_factor {
            out.push("torus factor".into());
        }
        out
    }
}

/// The block matrix `(F B^T ; Q^T)`, its cokernel `M`, and the weight of each
/// coordinate of `A^{n+s}` in `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxQuotientReport {
    pub matrix: IntMatrix,
    pub character_group: FgAbelianGroup,
    /// Quotient map `Z^{n+s} -> M`; column `i` is the weight of coordinate `i`.
    pub weights: IntMatrix,
}

impl StackyFan {
    /// `torsion` may contain trivial factors `1`; they are dropped together
    /// with their lift rows.
    pub fn new(
        fan: Fan,
        target_rank: usize,
        torsion: Vec<BigInt>,
        lift: IntMatrix,
    ) -> Result<Self> {
        let s = torsion.len();
        if lift.rows() != target_rank + s || lift.cols() != fan.lattice_rank() {
            return Err(Error::DimensionMismatch(format!(
                "lift is {}x{}, expected {}x{}",
                lift.rows(),
                lift.cols(),
                target_rank + s,
                fan.lattice_rank()
            )));
        }
        let (kept, stripped) = FgAbelianGroup::normalize_torsion(torsion)?;
        let lift = if stripped.is_empty() {
            lift
        } else {
            lift.select_rows(
                (0..lift.rows())
                    .filter(|i| *i < target_rank || !stripped.contains(&(i - target_rank))),
            )
        };
        Ok(Self {
            fan,
            target: FgAbelianGroup::new(target_rank, kept)?,
            lift,
        })
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn target(&self) -> &FgAbelianGroup {
        &self.target
    }

    pub fn lift(&self) -> &IntMatrix {
        &self.lift
    }

    fn free_rows(&self) -> IntMatrix {
        self.lift.select_rows(0..self.target.rank())
    }

    /// The lift with torsion rows reduced into `[0, a_j)`; for display only.
    pub fn normalized_lift(&self) -> IntMatrix {
        let d = self.target.rank();
        let mut out = self.lift.clone();
        for (j, a) in self.target.torsion().iter().enumerate() {
            for k in 0..out.cols() {
                out[(d + j, k)] = out[(d + j, k)].mod_floor(a);
            }
        }
        out
    }

    /// Fan validity (unless skipped), smoothness and absence of torus factors.
    pub fn validate_hypotheses_with(&self, skip_fan_check: bool) -> HypothesisReport {
        HypothesisReport {
            fan: (!skip_fan_check).then(|| self.fan.validate()),
            smooth: self.fan.is_smooth(),
            torus_factor: self.fan.has_torus_factor(),
        }
    }

    pub fn validate_hypotheses(&self) -> HypothesisReport {
        self.validate_hypotheses_with(false)
    }

    fn require_hypotheses(&self, skip_fan_check: bool) -> Result<()> {
        let report = self.validate_hypotheses_with(skip_fan_check);
        if report.is_ok() {
            Ok(())
        } else {
            Err(Error::Hypotheses(report.failures().join("; ")))
        }
    }

    /// `cok(β)` is finite iff the free rows of the lift have full rank `d`.
    pub fn cokernel_is_finite(&self) -> bool {
        rank(&self.free_rows()) == self.target.rank()
    }

    /// Splits `N = N_0 + N_1` with `N_1` the saturation of `β(L)`; returns
    /// `rk N_0` and the stacky fan `(Σ, β_1: L -> N_1)`.
    ///
    /// Torsion always lies in `N_1`, so only the free rows are rewritten, in the
    /// (column HNF) basis of the saturation of their column span.
    pub fn split_infinite(&self) -> (usize, StackyFan) {
        let free = self.free_rows();
        let basis = saturation(&free);
        let k = basis.cols();
        let coords = coordinates_in_basis(&basis, &free).expect("columns lie in their saturation");
        let torsion_rows = self.lift.select_rows(self.target.rank()..self.lift.rows());
        let lift = coords.vstack(&torsion_rows).expect("same width");
        let reduced = StackyFan {
            fan: self.fan.clone(),
            target: FgAbelianGroup::new(k, self.target.torsion().to_vec())
                .expect("already normalized"),
            lift,
        };
        (self.target.rank() - k, reduced)
    }

    /// `F B^T`, an `n x (d + s)` matrix; its columns are `b_1, ..., b_{d+s}`.
    pub fn relation_columns(&self) -> IntMatrix {
        self.fan
            .ray_matrix()
            .mul(&self.lift.transpose())
            .expect("lift width equals lattice rank")
    }

    pub fn assemble_block_matrix(&self) -> CoxQuotientReport {
        let d = self.target.rank();
        let s = self.target.torsion().len();
        let mut qt = IntMatrix::zeros(s, d + s);
        for (j, a) in self.target.torsion().iter().enumerate() {
            qt[(j, d + j)] = a.clone();
        }
        let matrix = self.relation_columns().vstack(&qt).expect("same width");
        let coker = cokernel(&matrix);
        CoxQuotientReport {
            matrix,
            character_group: coker.group,
            weights: coker.projection,
        }
    }

    /// `Z[x_1..x_n, y_1..y_s] / (I + J1 + J2)`. Requires the hypotheses and a
    /// finite cokernel.
    pub fn stanley_reisner(&self) -> Result<Presentation> {
        self.stanley_reisner_with(false)
    }

    pub fn stanley_reisner_with(&self, skip_fan_check: bool) -> Result<Presentation> {
        self.require_hypotheses(skip_fan_check)?;
        if !self.cokernel_is_finite() {
            return Err(Error::InfiniteCokernel);
        }
        self.build_stanley_reisner()
    }

    fn build_stanley_reisner(&self) -> Result<Presentation> {
        let n = self.fan.num_rays();
        let d = self.target.rank();
        let torsion = self.target.torsion();
        let s = torsion.len();
        let names: Vec<String> = (1..=n)
            .map(|i| format!("x{i}"))
            .chain((1..=s).map(|j| format!("y{j}")))
            .collect();
        let b = self.relation_columns();
        let mut relations = Vec::with_capacity(d + s);
        for i in 0..d + s {
            let mut coeffs: Vec<BigInt> = b.column(i);
            coeffs.resize(n + s, BigInt::zero());
            if i >= d {
                coeffs[n + i - d] = torsion[i - d].clone();
            }
            relations.push(Polynomial::linear(&coeffs));
        }
        let monomials = self.fan.minimal_nonfaces()?;
        Presentation::new(names, monomials, relations)
    }

    /// The integral Chow ring: the Stanley-Reisner presentation when `cok(β)`
    /// is finite; otherwise that of the reduced stacky fan with `rk N_0` free
    /// variables `z_1, z_2, ...` placed in front.
    pub fn chow_ring(&self) -> Result<Presentation> {
        self.chow_ring_with(false)
    }

    pub fn chow_ring_with(&self, skip_fan_check: bool) -> Result<Presentation> {
        self.require_hypotheses(skip_fan_check)?;
        if self.cokernel_is_finite() {
            return self.build_stanley_reisner();
        }
        let (n0, reduced) = self.split_infinite();
        let sr = reduced.build_stanley_reisner()?;
        prepend_free_variables(&sr, n0)
    }
}

fn prepend_free_variables(p: &Presentation, count: usize) -> Result<Presentation> {
    let old = p.num_variables();
    let n = old + count;
    let names: Vec<String> = (1..=count)
        .map(|i| format!("z{i}"))
        .chain(p.names().iter().map(|s| s.to_string()))
        .collect();
    let map: Vec<Option<usize>> = (0..old).map(|i| Some(i + count)).collect();
    let monomials = p
        .monomial_relations()
        .iter()
        .map(|m| m.iter().map(|i| i + count).collect())
        .collect();
    let polys = p
        .polynomial_relations()
        .iter()
        .map(|q| q.remap(n, &map))
        .collect::<Result<Vec<_>>>()?;
    Presentation::new(names, monomials, polys)
}

/// The stacky fan `(Σ̂, β: Z^n -> Z^d)` behind the fantastack of `(Σ, β)`,
/// where `images[i] = β(e_i)`.
pub fn induced_stacky_fan(target_fan: &Fan, images: &[Vec<BigInt>]) -> Result<StackyFan> {
    let hat = target_fan.hat_fan(images)?;
    let d = target_fan.lattice_rank();
    let lift = IntMatrix::from_columns(d, images)?;
    StackyFan::new(hat, d, Vec::new(), lift)
}

/// Chow ring of the fantastack `F_{Σ,β}`: `Z[x_1..x_n] / (I_β + J)` with `J`
/// generated by the rows of the image matrix paired with `x`.
pub fn fantastack_chow(target_fan: &Fan, images: &[Vec<BigInt>]) -> Result<Presentation> {
    fantastack_chow_with(target_fan, images, false)
}

pub fn fantastack_chow_with(
    target_fan: &Fan,
    images: &[Vec<BigInt>],
    skip_fan_check: bool,
) -> Result<Presentation> {
    let sf = induced_stacky_fan(target_fan, images)?;
    if !skip_fan_check {
        let report = target_fan.validate();
        if !report.is_ok() {
            let msgs: Vec<String> = report
                .violations
                .iter()
                .map(|v| format!("invalid fan: {v}"))
                .collect();
            return Err(Error::Hypotheses(msgs.join("; ")));
        }
    }
    if !sf.cokernel_is_finite() {
        return Err(Error::InfiniteCokernel);
    }
    sf.stanley_reisner_with(skip_fan_check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::present::{parse_relations, render_text};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn p64() -> StackyFan {
        let fan = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0], &[1]]).unwrap();
        StackyFan::new(
            fan,
            1,
            ints(&[2]),
            IntMatrix::from_i64(&[&[2, -3], &[1, -1]]),
        )
        .unwrap()
    }

    fn blowup() -> StackyFan {
        let fan = Fan::from_i64(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]],
            &[&[0, 1, 3], &[1, 2, 3], &[2, 0, 3]],
        )
        .unwrap();
        let lift = IntMatrix::from_i64(&[&[3, -1, 0], &[4, 0, -1], &[0, -1, 1]]);
        StackyFan::new(fan, 2, ints(&[2]), lift).unwrap()
    }

    fn bg(r: usize, torsion: &[i64]) -> StackyFan {
        let lift = IntMatrix::zeros(r + torsion.len(), 0);
        StackyFan::new(Fan::trivial(0), r, ints(torsion), lift).unwrap()
    }

    #[test]
    fn hypotheses() {
        assert!(p64().validate_hypotheses().is_ok());
        let line = Fan::from_i64(2, &[&[1, 0]], &[&[0]]).unwrap();
        let sf = StackyFan::new(line, 2, vec![], IntMatrix::identity(2)).unwrap();
        let rep = sf.validate_hypotheses();
        assert!(rep.torus_factor && !rep.is_ok());
        assert_eq!(rep.failures(), vec!["torus factor".to_string()]);
        let cone = Fan::from_i64(2, &[&[1, 0], &[1, 2]], &[&[0, 1]]).unwrap();
        let sf = StackyFan::new(cone, 2, vec![], IntMatrix::identity(2)).unwrap();
        assert!(!sf.validate_hypotheses().smooth);
        assert!(matches!(sf.chow_ring(), Err(Error::Hypotheses(_))));
    }

    #[test]
    fn finiteness_of_cokernel() {
        assert!(p64().cokernel_is_finite());
        assert!(!bg(2, &[2, 3]).cokernel_is_finite());
        assert!(bg(0, &[2]).cokernel_is_finite());
    }

    #[test]
    fn split_examples() {
        let (n0, reduced) = bg(2, &[2, 3]).split_infinite();
        assert_eq!(n0, 2);
        assert_eq!(
            reduced.target(),
            &FgAbelianGroup::new(0, ints(&[2, 3])).unwrap()
        );
        assert_eq!(reduced.lift().shape(), (2, 0));

        let fan = Fan::from_i64(1, &[&[1]], &[&[0]]).unwrap();
        let sf = StackyFan::new(fan, 2, vec![], IntMatrix::from_i64(&[&[2], &[0]])).unwrap();
        let (n0, reduced) = sf.split_infinite();
        assert_eq!(n0, 1);
        assert_eq!(reduced.target().rank(), 1);
        assert_eq!(reduced.lift(), &IntMatrix::from_i64(&[&[2]]));
        assert!(reduced.cokernel_is_finite());

        let (n0, same) = p64().split_infinite();
        assert_eq!(n0, 0);
        assert_eq!(same, p64());
    }

    #[test]
    fn block_matrices() {
        let rep = p64().assemble_block_matrix();
        assert_eq!(
            rep.matrix,
            IntMatrix::from_i64(&[&[2, 1], &[-3, -1], &[0, 2]])
        );
        assert_eq!(rep.character_group, FgAbelianGroup::free(1));
        assert_eq!(rep.weights, IntMatrix::from_i64(&[&[6, 4, -1]]));

        let rep = blowup().assemble_block_matrix();
        assert_eq!(
            rep.matrix,
            IntMatrix::from_i64(&[
                &[3, 4, 0],
                &[-1, 0, -1],
                &[0, -1, 1],
                &[2, 3, 0],
                &[0, 0, 2]
            ])
        );
        assert_eq!(rep.character_group, FgAbelianGroup::free(2));
        assert_eq!(rep.weights.shape(), (2, 5));

        let rep = bg(0, &[2]).assemble_block_matrix();
        assert_eq!(rep.matrix, IntMatrix::from_i64(&[&[2]]));
        assert_eq!(
            rep.character_group,
            FgAbelianGroup::new(0, ints(&[2])).unwrap()
        );
    }

    #[test]
    fn stanley_reisner_examples() {
        let sr = p64().stanley_reisner().unwrap();
        assert_eq!(
            render_text(&sr),
            "Z[x1,x2,y1]/(2*x1-3*x2, x1-x2+2*y1, x1*x2)"
        );

        let sr = blowup().stanley_reisner().unwrap();
        let names = sr.names();
        let expect = parse_relations("3*x1-x2+2*x4, 4*x1-x3+3*x4, -x2+x3+2*y1", &names).unwrap();
        assert_eq!(sr.polynomial_relations(), expect.as_slice());
        assert_eq!(sr.monomial_relations(), &[vec![0, 1, 2]]);

        let sr = bg(0, &[2]).stanley_reisner().unwrap();
        assert_eq!(render_text(&sr), "Z[y1]/(2*y1)");
        assert_eq!(bg(1, &[]).stanley_reisner(), Err(Error::InfiniteCokernel));
    }

    #[test]
    fn chow_ring_branches() {
        assert_eq!(
            render_text(&bg(2, &[2, 3]).chow_ring().unwrap()),
            "Z[z1,z2,y1,y2]/(2*y1, 3*y2)"
        );
        assert_eq!(p64().chow_ring().unwrap(), p64().stanley_reisner().unwrap());
    }

    #[test]
    fn trivial_torsion_is_stripped_with_its_row() {
        let fan = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0], &[1]]).unwrap();
        let lift = IntMatrix::from_i64(&[&[2, -3], &[5, 7], &[1, -1]]);
        let sf = StackyFan::new(fan, 1, ints(&[1, 2]), lift).unwrap();
        assert_eq!(sf, p64());
    }

    #[test]
    fn lift_shape_is_checked() {
        let fan = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0], &[1]]).unwrap();
        assert!(StackyFan::new(
            fan,
            1,
            ints(&[2]),
            IntMatrix::identity(2).transpose().select_rows(0..1)
        )
        .is_err());
    }

    #[test]
    fn fantastack_examples() {
        let quadrant = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]).unwrap();
        let p = fantastack_chow(&quadrant, &[ints(&[2, 0]), ints(&[0, 3]), ints(&[4, 2])]).unwrap();
        assert_eq!(render_text(&p), "Z[x1,x2,x3]/(2*x1+4*x3, 3*x2+2*x3)");

        let p2 = Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, -1]],
            &[&[0, 1], &[1, 2], &[2, 0]],
        )
        .unwrap();
        let p = fantastack_chow(&p2, &[ints(&[1, 0]), ints(&[0, 1]), ints(&[-1, -1])]).unwrap();
        assert_eq!(render_text(&p), "Z[x1,x2,x3]/(x1-x3, x2-x3, x1*x2*x3)");

        let a2 = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]).unwrap();
        let p = fantastack_chow(&a2, &[ints(&[1, 0]), ints(&[0, 1])]).unwrap();
        assert_eq!(render_text(&p), "Z[x1,x2]/(x1, x2)");

        assert_eq!(
            fantastack_chow(&quadrant, &[ints(&[1, 0]), ints(&[0, 1]), ints(&[-1, 1])]),
            Err(Error::ImageOutsideSupport(2))
        );
    }
}
