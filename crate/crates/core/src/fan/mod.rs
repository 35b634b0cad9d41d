//! Simplicial fans on `Z^r`: validity, smoothness, torus factors, minimal
//! non-faces and the hat-fan construction for fantastacks.
//!
//! Cones are ray-index sets. Every geometric question (pairwise intersections,
//! support membership) is decided with exact rational arithmetic.

mod rational;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactla::{is_primitive, rank, smith_normal_form, IntMatrix};

pub use rational::{in_cone, nonnegative_solution_exists};

/// Largest ray count accepted by [`Fan::minimal_nonfaces`].
pub const MAX_RAYS: usize = 32;

/// A fan given by its rays (rows of `rays`) and maximal cones (ray-index sets).
///
/// `max_cones == [[]]` with no rays is the trivial fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    lattice_rank: usize,
    rays: IntMatrix,
    max_cones: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FanViolation {
    ZeroRay(usize),
    NonPrimitiveRay(usize),
    DuplicateRay(usize, usize),
    RayNotInAnyCone(usize),
    /// Cone `.0` is contained in cone `.1`.
    NonMaximalCone(usize, usize),
    NonSimplicialCone(usize),
    IncompatibleCones(usize, usize),
}

impl fmt::Display for FanViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ZeroRay(i) => write!(f, "ray {i} is zero"),
            Self::NonPrimitiveRay(i) => write!(f, "ray {i} is not primitive"),
            Self::DuplicateRay(i, j) => write!(f, "rays {i} and {j} coincide"),
            Self::RayNotInAnyCone(i) => write!(f, "ray {i} lies in no maximal cone"),
            Self::NonMaximalCone(a, b) => write!(f, "cone {a} is contained in cone {b}"),
            Self::NonSimplicialCone(c) => write!(f, "cone {c} is not simplicial"),
            Self::IncompatibleCones(a, b) => {
                write!(f, "cones {a} and {b} do not meet along a common face")
            }
        }
    }
}

/// Outcome of [`Fan::validate`]; empty means the fan is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FanReport {
    pub violations: Vec<FanViolation>,
}

impl FanReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Fan {
    /// Checks shapes and indices only; mathematical validity is [`Fan::validate`].
    /// An empty cone list is read as the trivial fan `[[]]`.
    pub fn new(
        lattice_rank: usize,
        rays: Vec<Vec<BigInt>>,
        max_cones: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let rays = IntMatrix::from_rows(lattice_rank, &rays)?;
        let n = rays.rows();
        let mut cones = Vec::with_capacity(max_cones.len().max(1));
        for (c, cone) in max_cones.into_iter().enumerate() {
            let mut set: Vec<usize> = cone
                .into_iter()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            if let Some(&bad) = set.iter().find(|&&i| i >= n) {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    bound: n,
                    context: format!("max cone {c}"),
                });
            }
            set.shrink_to_fit();
            cones.push(set);
        }
        if cones.is_empty() {
            cones.push(Vec::new());
        }
        Ok(Self {
            lattice_rank,
            rays,
            max_cones: cones,
        })
    }

    pub fn from_i64(lattice_rank: usize, rays: &[&[i64]], max_cones: &[&[usize]]) -> Result<Self> {
        Self::new(
            lattice_rank,
            rays.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            max_cones.iter().map(|c| c.to_vec()).collect(),
        )
    }

    /// The trivial fan (only the zero cone) on `Z^lattice_rank`.
    pub fn trivial(lattice_rank: usize) -> Self {
        Self {
            lattice_rank,
            rays: IntMatrix::zeros(0, lattice_rank),
            max_cones: vec![Vec::new()],
        }
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    pub fn num_rays(&self) -> usize {
        self.rays.rows()
    }

    /// The `n x r` matrix whose rows are the rays.
    pub fn ray_matrix(&self) -> &IntMatrix {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &[BigInt] {
        self.rays.row(i)
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    fn cone_rays(&self, cone: &[usize]) -> Vec<&[BigInt]> {
        cone.iter().map(|&i| self.ray(i)).collect()
    }

    pub fn validate(&self) -> FanReport {
        let mut violations = Vec::new();
        let n = self.num_rays();
        for i in 0..n {
            let ray = self.ray(i);
            if ray.iter().all(Zero::is_zero) {
                violations.push(FanViolation::ZeroRay(i));
            } else if !is_primitive(ray) {
                violations.push(FanViolation::NonPrimitiveRay(i));
            }
            for j in 0..i {
                if self.ray(j) == ray {
                    violations.push(FanViolation::DuplicateRay(j, i));
                }
            }
        }
        let covered: BTreeSet<usize> = self.max_cones.iter().flatten().copied().collect();
        violations.extend(
            (0..n)
                .filter(|i| !covered.contains(i))
                .map(FanViolation::RayNotInAnyCone),
        );

        for (a, ca) in self.max_cones.iter().enumerate() {
            for (b, cb) in self.max_cones.iter().enumerate() {
                // equal cones are reported once, against the later copy
                let subset = ca.iter().all(|i| cb.contains(i));
                if a != b && subset && (ca.len() < cb.len() || a < b) {
                    violations.push(FanViolation::NonMaximalCone(a, b));
                }
            }
        }

        let mut simplicial = vec![true; self.max_cones.len()];
        for (c, cone) in self.max_cones.iter().enumerate() {
            if rank(&self.rays.select_rows(cone.iter().copied())) < cone.len() {
                simplicial[c] = false;
                violations.push(FanViolation::NonSimplicialCone(c));
            }
        }
        // a zero or repeated ray would make the intersection test meaningless
        if violations.iter().all(|v| {
            matches!(
                v,
                FanViolation::RayNotInAnyCone(_) | FanViolation::NonMaximalCone(..)
            )
        }) {
            let pairs: Vec<(usize, usize)> = (0..self.max_cones.len())
                .flat_map(|a| (a + 1..self.max_cones.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| simplicial[a] && simplicial[b])
                .collect();
            let bad: Vec<(usize, usize)> = pairs
                .par_iter()
                .copied()
                .filter(|&(a, b)| !self.cones_meet_in_face(a, b))
                .collect();
            violations.extend(
                bad.into_iter()
                    .map(|(a, b)| FanViolation::IncompatibleCones(a, b)),
            );
        }
        FanReport { violations }
    }

    /// `cone(A) ∩ cone(B) == cone(A ∩ B)` for two simplicial cones.
    ///
    /// Fails exactly when some `Σ λ_a v_a = Σ μ_b v_b` with `λ, μ >= 0` puts
    /// positive weight on a ray outside the common face; that is a rational
    /// feasibility problem with the extra normalization `Σ_outside = 1`.
    fn cones_meet_in_face(&self, a: usize, b: usize) -> bool {
        let ca = &self.max_cones[a];
        let cb = &self.max_cones[b];
        let vars: Vec<(usize, bool, bool)> = ca
            .iter()
            .map(|&i| (i, true, !cb.contains(&i)))
            .chain(cb.iter().map(|&i| (i, false, !ca.contains(&i))))
            .collect();
        if !vars.iter().any(|&(_, _, outside)| outside) {
            return true;
        }
        let r = self.lattice_rank;
        let mut rows: Vec<Vec<BigRational>> = (0..r)
            .map(|k| {
                vars.iter()
                    .map(|&(i, left, _)| {
                        let x = BigRational::from_integer(self.rays[(i, k)].clone());
                        if left {
                            x
                        } else {
                            -x
                        }
                    })
                    .collect()
            })
            .collect();
        rows.push(
            vars.iter()
                .map(|&(_, _, outside)| BigRational::from_integer(BigInt::from(outside as i32)))
                .collect(),
        );
        let mut rhs = vec![BigRational::zero(); r];
        rhs.push(BigRational::from_integer(BigInt::from(1)));
        !nonnegative_solution_exists(&rows, &rhs)
    }

    /// Every maximal cone's rays extend to a basis of the lattice.
    pub fn is_smooth(&self) -> bool {
        self.max_cones.iter().all(|cone| {
            let snf = smith_normal_form(&self.rays.select_rows(cone.iter().copied()));
            snf.rank() == cone.len() && snf.invariant_factors.iter().all(|d| d == &BigInt::from(1))
        })
    }

    /// The rays fail to span the lattice rationally.
    pub fn has_torus_factor(&self) -> bool {
        rank(&self.rays) < self.lattice_rank
    }

    /// Inclusion-minimal ray sets contained in no maximal cone, sorted
    /// lexicographically.
    ///
    /// A minimal non-face `R` has all of `R \ {i}` as faces, so candidates of
    /// size `k` are grown from faces of size `k - 1` by one larger index.
    pub fn minimal_nonfaces(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.num_rays();
        if n > MAX_RAYS {
            return Err(Error::TooManyRays(n));
        }
        let mut faces: HashSet<u64> = HashSet::new();
        for cone in &self.max_cones {
            let mask: u64 = cone.iter().map(|&i| 1u64 << i).sum();
            let mut sub = mask;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        let max_face = faces.iter().map(|f| f.count_ones()).max().unwrap_or(0) as usize;
        let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); max_face + 1];
        for &f in &faces {
            by_size[f.count_ones() as usize].push(f);
        }

        let mut out: Vec<Vec<usize>> = Vec::new();
        for smaller in &by_size {
            for &face in smaller {
                let start = if face == 0 {
                    0
                } else {
                    64 - face.leading_zeros() as usize
                };
                for j in start..n {
                    let cand = face | (1u64 << j);
                    if faces.contains(&cand) {
                        continue;
                    }
                    let minimal = (0..n)
                        .filter(|&i| cand & (1u64 << i) != 0)
                        .all(|i| faces.contains(&(cand & !(1u64 << i))));
                    if minimal {
                        out.push((0..n).filter(|&i| cand & (1u64 << i) != 0).collect());
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// The fan on `Z^n` whose cones are `{e_i : images[i] ∈ σ}` for the maximal
    /// cones `σ` of `self`.
    ///
    /// Every image must lie in the support and every ray must contain an image.
    pub fn hat_fan(&self, images: &[Vec<BigInt>]) -> Result<Fan> {
        for (i, img) in images.iter().enumerate() {
            if img.len() != self.lattice_rank {
                return Err(Error::DimensionMismatch(format!(
                    "image {i} has length {}, lattice rank is {}",
                    img.len(),
                    self.lattice_rank
                )));
            }
        }
        for rho in 0..self.num_rays() {
            let ray = self.ray(rho);
            if !images.iter().any(|img| positive_multiple(img, ray)) {
                return Err(Error::RayWithoutImage(rho));
            }
        }
        let n = images.len();
        let mut cones: Vec<Vec<usize>> = self
            .max_cones
            .iter()
            .map(|cone| {
                let gens = self.cone_rays(cone);
                (0..n).filter(|&i| in_cone(&gens, &images[i])).collect()
            })
            .collect();
        for i in 0..n {
            if !cones.iter().any(|c| c.contains(&i)) {
                return Err(Error::ImageOutsideSupport(i));
            }
        }
        cones.sort();
        cones.dedup();
        let maximal: Vec<Vec<usize>> = cones
            .iter()
            .filter(|c| {
                !cones
                    .iter()
                    .any(|d| d.len() > c.len() && c.iter().all(|i| d.contains(i)))
            })
            .cloned()
            .collect();
        let rays = IntMatrix::identity(n).to_rows();
        Fan::new(n, rays, maximal)
    }
}

/// `v == c * ray` for some rational `c > 0`.
fn positive_multiple(v: &[BigInt], ray: &[BigInt]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return false;
    }
    // cross-multiplied proportionality plus matching signs
    let Some(k) = ray.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let (a, b) = (&v[k], &ray[k]);
    if a.is_zero() || a.is_positive() != b.is_positive() {
        return false;
    }
    v.iter().zip(ray).all(|(x, y)| x * b == y * a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> Fan {
        Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, -1]],
            &[&[0, 1], &[1, 2], &[2, 0]],
        )
        .unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn projective_plane_is_valid_and_smooth() {
        let f = p2();
        assert!(f.validate().is_ok());
        assert!(f.is_smooth());
        assert!(!f.has_torus_factor());
        assert_eq!(f.minimal_nonfaces().unwrap(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn subset_cone_is_reported() {
        let f = Fan::from_i64(2, &[&[1, 0], &[1, 2]], &[&[0, 1], &[0]]).unwrap();
        assert_eq!(
            f.validate().violations,
            vec![FanViolation::NonMaximalCone(1, 0)]
        );
    }

    #[test]
    fn trivial_fan() {
        for r in [0, 2] {
            let f = Fan::trivial(r);
            assert!(f.validate().is_ok());
            assert!(f.is_smooth());
            assert_eq!(f.has_torus_factor(), r > 0);
            assert!(f.minimal_nonfaces().unwrap().is_empty());
        }
        assert_eq!(Fan::new(0, vec![], vec![]).unwrap(), Fan::trivial(0));
    }

    #[test]
    fn smoothness_and_torus_factors() {
        let f = Fan::from_i64(2, &[&[1, 0], &[1, 2]], &[&[0, 1]]).unwrap();
        assert!(f.validate().is_ok());
        assert!(!f.is_smooth());
        let punctured = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0], &[1]]).unwrap();
        assert!(!punctured.has_torus_factor());
        assert_eq!(punctured.minimal_nonfaces().unwrap(), vec![vec![0, 1]]);
        let line = Fan::from_i64(2, &[&[1, 0]], &[&[0]]).unwrap();
        assert!(line.has_torus_factor());
    }

    #[test]
    fn malformed_input_is_an_error() {
        assert!(Fan::from_i64(2, &[&[1, 0, 0]], &[&[0]]).is_err());
        assert!(matches!(
            Fan::from_i64(2, &[&[1, 0]], &[&[1]]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn ray_level_violations() {
        let f = Fan::from_i64(2, &[&[2, 0], &[0, 1], &[0, 1], &[0, 0]], &[&[0, 1], &[2]]).unwrap();
        let v = f.validate().violations;
        assert!(v.contains(&FanViolation::NonPrimitiveRay(0)));
        assert!(v.contains(&FanViolation::DuplicateRay(1, 2)));
        assert!(v.contains(&FanViolation::ZeroRay(3)));
        assert!(v.contains(&FanViolation::RayNotInAnyCone(3)));
    }

    #[test]
    fn overlapping_cones_are_incompatible() {
        // cone(e1, e1+e2) and cone(e1+2e2... ) overlap in their interiors
        let f = Fan::from_i64(
            2,
            &[&[1, 0], &[1, 1], &[0, 1], &[2, 1]],
            &[&[0, 1], &[2, 3]],
        )
        .unwrap();
        assert_eq!(
            f.validate().violations,
            vec![FanViolation::IncompatibleCones(0, 1)]
        );
        let g = Fan::from_i64(2, &[&[1, 0], &[1, 1], &[0, 1]], &[&[0, 1], &[1, 2]]).unwrap();
        assert!(g.validate().is_ok());
    }

    #[test]
    fn non_simplicial_cone() {
        let f = Fan::from_i64(2, &[&[1, 0], &[1, 1], &[0, 1]], &[&[0, 1, 2]]).unwrap();
        assert_eq!(
            f.validate().violations,
            vec![FanViolation::NonSimplicialCone(0)]
        );
    }

    #[test]
    fn hat_fan_of_single_cone() {
        let quadrant = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]).unwrap();
        let hat = quadrant
            .hat_fan(&[ints(&[2, 0]), ints(&[0, 3]), ints(&[4, 2])])
            .unwrap();
        assert_eq!(hat.lattice_rank(), 3);
        assert_eq!(hat.max_cones(), &[vec![0, 1, 2]]);
        assert_eq!(hat.ray_matrix(), &IntMatrix::identity(3));
    }

    #[test]
    fn hat_fan_of_projective_plane() {
        let hat = p2()
            .hat_fan(&[ints(&[1, 0]), ints(&[0, 1]), ints(&[-1, -1])])
            .unwrap();
        assert_eq!(hat.max_cones(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(hat.validate().is_ok());
    }

    #[test]
    fn hat_fan_identity_on_line() {
        let a1 = Fan::from_i64(1, &[&[1]], &[&[0]]).unwrap();
        assert_eq!(a1.hat_fan(&[ints(&[1])]).unwrap(), a1);
    }

    #[test]
    fn hat_fan_preconditions() {
        let quadrant = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]).unwrap();
        assert_eq!(
            quadrant.hat_fan(&[ints(&[1, 0]), ints(&[0, 1]), ints(&[-1, 0])]),
            Err(Error::ImageOutsideSupport(2))
        );
        assert_eq!(
            quadrant.hat_fan(&[ints(&[1, 0]), ints(&[1, 1])]),
            Err(Error::RayWithoutImage(1))
        );
    }
}
