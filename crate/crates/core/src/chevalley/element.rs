use std::collections::BTreeMap;

use num_traits::Zero;

use crate::linalg::{q, Q};

/// Sparse element of a Chevalley algebra with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChevalleyElement {
    terms: BTreeMap<usize, Q>,
}

impl ChevalleyElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(idx: usize) -> Self {
        Self::term(idx, q(1))
    }

    pub fn term(idx: usize, c: Q) -> Self {
        let mut e = Self::zero();
        e.add_term(idx, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, idx: usize) -> Q {
        self.terms.get(&idx).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().copied()
    }

    pub fn add_term(&mut self, idx: usize, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &ChevalleyElement, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(*k, v * c);
        }
    }

    pub fn add(&self, other: &ChevalleyElement) -> ChevalleyElement {
        let mut out = self.clone();
        out.add_scaled(other, &q(1));
        out
    }

    pub fn sub(&self, other: &ChevalleyElement) -> ChevalleyElement {
        let mut out = self.clone();
        out.add_scaled(other, &q(-1));
        out
    }

    pub fn scale(&self, c: &Q) -> ChevalleyElement {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); dim];
        for (k, c) in &self.terms {
            v[*k] = c.clone();
        }
        v
    }

    pub fn from_dense(v: &[Q]) -> Self {
        let mut e = Self::zero();
        for (k, c) in v.iter().enumerate() {
            e.add_term(k, c.clone());
        }
        e
    }

    /// Keeps only the terms whose index satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(usize) -> bool) -> ChevalleyElement {
        ChevalleyElement {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(**k))
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }
}
