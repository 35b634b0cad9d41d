use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::poly::Polynomial;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variable {
    pub name: String,
    pub degree: u32,
}

/// A quotient `Z[variables] / (monomial relations + polynomial relations)`,
/// graded with every variable in degree one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    variables: Vec<Variable>,
    monomial_relations: Vec<Vec<usize>>,
    polynomial_relations: Vec<Polynomial>,
}

impl Presentation {
    /// Validates names, indices and homogeneity. Zero polynomial relations are
    /// dropped; monomial relations are stored as sorted index sets.
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        monomial_relations: Vec<Vec<usize>>,
        polynomial_relations: Vec<Polynomial>,
    ) -> Result<Self> {
        let variables: Vec<Variable> = names
            .into_iter()
            .map(|n| Variable {
                name: n.into(),
                degree: 1,
            })
            .collect();
        let mut seen = HashSet::new();
        for v in &variables {
            if !seen.insert(v.name.as_str()) {
                return Err(Error::DuplicateVariable(v.name.clone()));
            }
        }
        let n = variables.len();
        let mut monos = Vec::with_capacity(monomial_relations.len());
        for (k, m) in monomial_relations.into_iter().enumerate() {
            let set: Vec<usize> = m.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
            if let Some(&bad) = set.iter().find(|&&i| i >= n) {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    bound: n,
                    context: format!("monomial relation {k}"),
                });
            }
            monos.push(set);
        }
        let mut polys = Vec::with_capacity(polynomial_relations.len());
        for (k, p) in polynomial_relations.into_iter().enumerate() {
            if p.nvars() != n {
                return Err(Error::VariableMismatch(p.nvars(), n));
            }
            if !p.is_homogeneous() {
                return Err(Error::Inhomogeneous(k));
            }
            if !p.is_zero() {
                polys.push(p);
            }
        }
        Ok(Self {
            variables,
            monomial_relations: monos,
            polynomial_relations: polys,
        })
    }

    /// The polynomial ring with no relations.
    pub fn free<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::new(names, Vec::new(), Vec::new())
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn names(&self) -> Vec<&str> {
        self.variables.iter().map(|v| v.name.as_str()).collect()
    }

    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn monomial_relations(&self) -> &[Vec<usize>] {
        &self.monomial_relations
    }

    pub fn polynomial_relations(&self) -> &[Polynomial] {
        &self.polynomial_relations
    }

    pub fn has_relations(&self) -> bool {
        !self.monomial_relations.is_empty() || !self.polynomial_relations.is_empty()
    }

    /// Every relation as a polynomial: monomial relations first.
    pub fn all_relations(&self) -> Vec<Polynomial> {
        let n = self.num_variables();
        self.monomial_relations
            .iter()
            .map(|m| Polynomial::squarefree(n, m))
            .chain(self.polynomial_relations.iter().cloned())
            .collect()
    }

    /// Appends fresh relation-free variables at the end of the variable list.
    pub fn adjoin_free_variables<S: Into<String>>(
        &self,
        names: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let mut all: Vec<String> = self.variables.iter().map(|v| v.name.clone()).collect();
        all.extend(names.into_iter().map(Into::into));
        let n = all.len();
        let map: Vec<Option<usize>> = (0..self.num_variables()).map(Some).collect();
        let polys = self
            .polynomial_relations
            .iter()
            .map(|p| p.remap(n, &map))
            .collect::<Result<Vec<_>>>()?;
        Self::new(all, self.monomial_relations.clone(), polys)
    }
}
