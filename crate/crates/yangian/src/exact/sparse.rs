//! Sparse linear algebra over abstract, orderable basis keys.
//!
//! Vectors map keys to scalars, matrices are column-major maps
//! `col -> (row -> scalar)`. No zero entries are ever stored, so equality is
//! structural and `is_zero` is exact.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::scalar::Scalar;
use super::ExactError;

/// Sparse vector over keys of type `K`; stores no zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseVec<K: Ord + Clone> {
    entries: BTreeMap<K, Scalar>,
}

impl<K: Ord + Clone> Default for SparseVec<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> SparseVec<K> {
    pub fn new() -> Self {
        SparseVec { entries: BTreeMap::new() }
    }

    pub fn unit(key: K) -> Self {
        let mut v = Self::new();
        v.add_to(key, &Scalar::one());
        v
    }

    pub fn from_entries<I: IntoIterator<Item = (K, Scalar)>>(it: I) -> Self {
        let mut v = Self::new();
        for (k, s) in it {
            v.add_to(k, &s);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &K) -> Option<&Scalar> {
        self.entries.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.entries.keys()
    }

    /// Adds `coeff` to the entry at `key`, dropping it when it cancels.
    pub fn add_to(&mut self, key: K, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.entries.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add_ref(coeff);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * rhs`.
    pub fn add_scaled(&mut self, rhs: &SparseVec<K>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, s) in rhs.iter() {
            self.add_to(k.clone(), &s.mul_ref(c));
        }
    }

    pub fn add(&self, rhs: &SparseVec<K>) -> SparseVec<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }

    pub fn sub(&self, rhs: &SparseVec<K>) -> SparseVec<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec<K> {
        let mut out = SparseVec::new();
        out.add_scaled(self, c);
        out
    }
}

/// Sparse matrix, column-major, over keys of type `K`.
///
/// A matrix may carry an explicit key domain; binary operations between
/// matrices with distinct declared domains are structural errors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMat<K: Ord + Clone> {
    cols: BTreeMap<K, SparseVec<K>>,
    domain: Option<Arc<BTreeSet<K>>>,
}

impl<K: Ord + Clone> SparseMat<K> {
    pub fn new() -> Self {
        SparseMat { cols: BTreeMap::new(), domain: None }
    }

    pub fn with_domain(domain: Arc<BTreeSet<K>>) -> Self {
        SparseMat { cols: BTreeMap::new(), domain: Some(domain) }
    }

    pub fn from_entries<I: IntoIterator<Item = ((K, K), Scalar)>>(it: I) -> Self {
        let mut m = Self::new();
        for ((row, col), s) in it {
            m.add_entry(row, col, &s);
        }
        m
    }

    pub fn domain(&self) -> Option<&Arc<BTreeSet<K>>> {
        self.domain.as_ref()
    }

    pub fn add_entry(&mut self, row: K, col: K, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        let c = self.cols.entry(col).or_default();
        c.add_to(row, coeff);
        // drop columns that cancelled away entirely
        self.cols.retain(|_, v| !v.is_zero());
    }

    pub fn col(&self, col: &K) -> Option<&SparseVec<K>> {
        self.cols.get(col)
    }

    pub fn cols(&self) -> impl Iterator<Item = (&K, &SparseVec<K>)> {
        self.cols.iter()
    }

    pub fn entry(&self, row: &K, col: &K) -> Option<&Scalar> {
        self.cols.get(col).and_then(|c| c.get(row))
    }

    fn check_domains(&self, rhs: &Self) -> Result<Option<Arc<BTreeSet<K>>>, ExactError> {
        match (&self.domain, &rhs.domain) {
            (Some(a), Some(b)) if a != b => Err(ExactError::KeyDomainMismatch),
            (Some(a), _) => Ok(Some(a.clone())),
            (_, b) => Ok(b.clone()),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ExactError> {
        let domain = self.check_domains(rhs)?;
        let mut out = self.clone();
        out.domain = domain;
        for (col, v) in rhs.cols() {
            for (row, s) in v.iter() {
                out.add_entry(row.clone(), col.clone(), s);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = SparseMat { cols: BTreeMap::new(), domain: self.domain.clone() };
        if c.is_zero() {
            return out;
        }
        for (col, v) in self.cols() {
            out.cols.insert(col.clone(), v.scale(c));
        }
        out
    }

    /// Applies the matrix to a vector.
    pub fn apply(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut out = SparseVec::new();
        for (k, c) in v.iter() {
            if let Some(col) = self.col(k) {
                out.add_scaled(col, c);
            }
        }
        out
    }

    /// Matrix product `self * rhs` (apply `rhs` first).
    pub fn mul(&self, rhs: &Self) -> Result<Self, ExactError> {
        let domain = self.check_domains(rhs)?;
        let mut out = SparseMat { cols: BTreeMap::new(), domain };
        for (col, v) in rhs.cols() {
            let image = self.apply(v);
            if !image.is_zero() {
                out.cols.insert(col.clone(), image);
            }
        }
        Ok(out)
    }

    /// `self * rhs - rhs * self`, exact.
    pub fn commutator(&self, rhs: &Self) -> Result<Self, ExactError> {
        let ab = self.mul(rhs)?;
        let ba = rhs.mul(self)?;
        ab.add(&ba.scale(&Scalar::from_int(-1)))
    }

    /// `self * rhs + rhs * self`, exact.
    pub fn anticommutator(&self, rhs: &Self) -> Result<Self, ExactError> {
        let ab = self.mul(rhs)?;
        let ba = rhs.mul(self)?;
        ab.add(&ba)
    }

    /// Exact zero test; on failure returns one nonzero `(row, col, value)` witness.
    pub fn is_zero_with_witness(&self) -> Result<(), (K, K, Scalar)> {
        for (col, v) in self.cols() {
            if let Some((row, s)) = v.iter().next() {
                return Err((row.clone(), col.clone(), s.clone()));
            }
        }
        Ok(())
    }
}

impl<K: Ord + Clone> Default for SparseMat<K> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::Param;

    fn e(row: usize, col: usize) -> SparseMat<usize> {
        SparseMat::from_entries([((row, col), Scalar::one())])
    }

    #[test]
    fn commutator_of_matrix_with_itself_vanishes() {
        let m = e(0, 1).add(&e(1, 0)).unwrap();
        let c = m.commutator(&m).unwrap();
        assert!(c.is_zero_with_witness().is_ok());
    }

    #[test]
    fn sl2_commutator() {
        // [E12, E21] = diag(1, -1)
        let c = e(0, 1).commutator(&e(1, 0)).unwrap();
        assert_eq!(c.entry(&0, &0), Some(&Scalar::one()));
        assert_eq!(c.entry(&1, &1), Some(&Scalar::from_int(-1)));
        assert!(c.entry(&0, &1).is_none());
    }

    #[test]
    fn anticommutator_of_cartan_with_raising_vanishes() {
        // {h, e} = 0 for h = diag(1,-1), e = E12 on the two-dimensional module
        let h = SparseMat::from_entries([
            ((0usize, 0usize), Scalar::one()),
            ((1, 1), Scalar::from_int(-1)),
        ]);
        let x = e(0, 1);
        let a = h.anticommutator(&x).unwrap();
        assert!(a.is_zero_with_witness().is_ok());
    }

    #[test]
    fn zero_witness_reports_parameter_difference() {
        let m = SparseMat::from_entries([(
            (0usize, 0usize),
            Scalar::param(Param::A).sub_ref(&Scalar::param(Param::B)),
        )]);
        let w = m.is_zero_with_witness().unwrap_err();
        assert_eq!(w.2.to_string(), "a - b");
        let cancelled = SparseMat::from_entries([(
            (0usize, 0usize),
            Scalar::param(Param::A).sub_ref(&Scalar::param(Param::A)),
        )]);
        assert!(cancelled.is_zero_with_witness().is_ok());
    }

    #[test]
    fn domain_mismatch_is_an_error() {
        let d1 = Arc::new(BTreeSet::from([0usize, 1]));
        let d2 = Arc::new(BTreeSet::from([0usize, 1, 2]));
        let mut a = SparseMat::with_domain(d1);
        a.add_entry(0, 1, &Scalar::one());
        let mut b = SparseMat::with_domain(d2);
        b.add_entry(1, 0, &Scalar::one());
        assert!(matches!(a.commutator(&b), Err(ExactError::KeyDomainMismatch)));
    }
}
