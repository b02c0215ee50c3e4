//! Sparse linear combinations with exact coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::scalar::Scalar;

/// A finite linear combination `Σ c_k · k` with nonzero coefficients only.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

/// An element of a space with a flat basis indexed by `usize`.
pub type Vector = LinComb<usize>;

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, crate::scalar::one())
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut v = Self::zero();
        v.add_term(key, coeff);
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Scalar)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in terms {
            v.add_term(k, c);
        }
        v
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * coeff);
        }
    }

    pub fn scale(&self, coeff: &Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, coeff);
        out
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
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

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Applies a linear map given on basis keys.
    pub fn map_linear<L: Ord + Clone, F: FnMut(&K) -> LinComb<L>>(&self, mut f: F) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Keeps only the terms whose key satisfies `keep`.
    pub fn filter<F: FnMut(&K) -> bool>(&self, mut keep: F) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &crate::scalar::one());
        out
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-crate::scalar::one());
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&-crate::scalar::one())
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        -&self
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: Self) -> LinComb<K> {
        &self + &rhs
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: Self) -> LinComb<K> {
        &self - &rhs
    }
}

impl Vector {
    /// Dense coordinates of length `n`.
    pub fn to_dense(&self, n: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); n];
        for (k, c) in &self.terms {
            out[*k] = c.clone();
        }
        out
    }

    pub fn from_dense(coords: &[Scalar]) -> Self {
        coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn cancellation_prunes_terms() {
        let mut v = Vector::basis(3);
        v.add_term(3, int(-1));
        assert!(v.is_zero());
        let w = &Vector::term(1, int(2)) + &Vector::term(2, int(5));
        assert_eq!(w.len(), 2);
        assert_eq!((&w - &w), Vector::zero());
    }
}
