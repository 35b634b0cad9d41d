use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::lattice::hnf_rows;
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// `Z^rank + Z/a_1 + ... + Z/a_s` with every `a_j >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbelianGroup {
    /// Builds the group, dropping trivial factors `Z/1` with a warning.
    /// Nonpositive coefficients are rejected.
    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        let (kept, _) = Self::normalize_torsion(torsion)?;
        Ok(Self {
            rank,
            torsion: kept,
        })
    }

    /// Splits `torsion` into the kept coefficients and the positions of the
    /// stripped `1` entries.
    pub(crate) fn normalize_torsion(torsion: Vec<BigInt>) -> Result<(Vec<BigInt>, Vec<usize>)> {
        let mut kept = Vec::with_capacity(torsion.len());
        let mut stripped = Vec::new();
        for (j, a) in torsion.into_iter().enumerate() {
            if !a.is_positive() {
                return Err(Error::InvalidTorsion(a.to_string()));
            }
            if a.is_one() {
                log::warn!("stripping trivial torsion factor Z/1 at position {j}");
                stripped.push(j);
            } else {
                kept.push(a);
            }
        }
        Ok((kept, stripped))
    }

    pub fn free(rank: usize) -> Self {
        Self {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|a| format!("Z/{a}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Cokernel of a map `Z^cols -> Z^rows`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel {
    pub group: FgAbelianGroup,
    /// `(rank + |torsion|) x rows`: the free coordinates first, then one row per
    /// torsion factor with entries reduced into `[0, a_j)`.
    pub projection: IntMatrix,
}

/// `Z^rows / (column span of m)` together with its quotient map.
///
/// The free rows of the projection are put in row Hermite normal form, so a
/// rank-one cokernel comes out with its first nonzero weight positive.
pub fn cokernel(m: &IntMatrix) -> Cokernel {
    let snf = smith_normal_form(m);
    let rows = m.rows();
    let r = snf.rank();

    let free_part = hnf_rows(&snf.u.select_rows(r..rows));
    let mut torsion = Vec::new();
    let mut torsion_rows = Vec::new();
    for (i, a) in snf.invariant_factors.iter().enumerate() {
        if a.is_one() {
            continue;
        }
        torsion.push(a.clone());
        torsion_rows.push(
            snf.u
                .row(i)
                .iter()
                .map(|x| x.mod_floor(a))
                .collect::<Vec<_>>(),
        );
    }
    let torsion_part = IntMatrix::from_rows(rows, &torsion_rows).expect("rows of u");
    let projection = free_part.vstack(&torsion_part).expect("same width");
    Cokernel {
        group: FgAbelianGroup {
            rank: rows - r,
            torsion,
        },
        projection,
    }
}

/// Checks that `projection` kills every column of `m`, with torsion rows read
/// modulo their coefficient.
pub fn projection_kills(m: &IntMatrix, coker: &Cokernel) -> bool {
    let Ok(image) = coker.projection.mul(m) else {
        return false;
    };
    let free = coker.group.rank();
    (0..image.rows()).all(|i| {
        image.row(i).iter().all(|x| {
            if i < free {
                x.is_zero()
            } else {
                x.is_multiple_of(&coker.group.torsion()[i - free])
            }
        })
    })
}
