use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector over a fixed variable list, ordered graded-lexicographically:
/// higher total degree first, then a larger exponent on an earlier variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// The single variable index when this is `x_i`.
    pub fn as_variable(&self) -> Option<usize> {
        (self.degree() == 1).then(|| self.0.iter().position(|&e| e == 1).unwrap())
    }

    /// All monomials of total degree `degree` in `nvars` variables, in
    /// descending graded-lex order.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        fn fill(rest: u32, at: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if at + 1 == cur.len() {
                cur[at] = rest;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in (0..=rest).rev() {
                cur[at] = e;
                fill(rest - e, at + 1, cur, out);
            }
            cur[at] = 0;
        }
        if nvars == 0 {
            return if degree == 0 {
                vec![Monomial(Vec::new())]
            } else {
                Vec::new()
            };
        }
        let mut out = Vec::new();
        fill(degree, 0, &mut vec![0; nvars], &mut out);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Integer polynomial over `nvars` variables with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::term(nvars, Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(nvars, Monomial::var(nvars, i), 1)
    }

    pub fn term(nvars: usize, m: Monomial, c: impl Into<BigInt>) -> Self {
        assert_eq!(m.0.len(), nvars, "monomial length");
        let mut p = Self::zero(nvars);
        p.add_term(m, c.into());
        p
    }

    /// `Σ coeffs[i] * x_i`.
    pub fn linear(coeffs: &[BigInt]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c.clone());
        }
        p
    }

    /// Product of the listed variables.
    pub fn squarefree(nvars: usize, vars: &[usize]) -> Self {
        let mut e = vec![0; nvars];
        for &i in vars {
            e[i] += 1;
        }
        Self::term(nvars, Monomial(e), 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Coefficient vector when every term is a single variable.
    pub fn linear_coefficients(&self) -> Option<Vec<BigInt>> {
        let mut out = vec![BigInt::zero(); self.nvars];
        for (m, c) in &self.terms {
            out[m.as_variable()?] = c.clone();
        }
        Some(out)
    }

    pub fn uses_variable(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-BigInt::one())
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Self::constant(self.nvars, 1);
        for _ in 0..e {
            out = out.mul(self).expect("same variables");
        }
        out
    }

    /// Replaces `x_var` by `replacement` everywhere.
    pub fn substitute(&self, var: usize, replacement: &Polynomial) -> Result<Polynomial> {
        self.check(replacement)?;
        if var >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: var,
                bound: self.nvars,
                context: "substitution".into(),
            });
        }
        let mut powers: Vec<Polynomial> = vec![Self::constant(self.nvars, 1)];
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(replacement)?;
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.0[var] = 0;
            let piece = powers[e].mul_monomial(&rest).scale(c);
            out = out.add(&piece)?;
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over a new variable list; `map[i]` is the new
    /// index of old variable `i`, or `None` if it must not occur.
    pub fn remap(&self, new_nvars: usize, map: &[Option<usize>]) -> Result<Polynomial> {
        let mut out = Self::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; new_nvars];
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e[j] += k,
                    None => {
                        return Err(Error::Input(format!(
                            "variable {i} still occurs and cannot be dropped"
                        )))
                    }
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Multiplies by `-1` when the leading coefficient is negative.
    pub fn normalize_sign(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }
}
