//! Graded operators on (tensor products of) weight modules, with exact
//! validity tracking for depth truncation.
//!
//! Every operator carries the set of basis depth tuples on which its columns
//! are exactly those of the untruncated module. Primitive generator actions
//! start with the obvious window (a lowering action is exact wherever its
//! image stays under the cap); sums intersect windows; products propagate
//! windows through the actual structural support of the inner factor. A
//! relation check is meaningful precisely on the resulting certified window,
//! and `inconclusive` is reported when that window is empty.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::exact::{Scalar, SparseVec};
use crate::rootdata::Weight;

use super::algebra::{LieAlgebra, LieElt};
use super::module::SingleSpace;
use super::LieError;

/// Per-factor depth tuple of a tensor basis vector.
pub type DepthTuple = Vec<u8>;

/// A tensor product of single weight modules (one factor = the module itself).
#[derive(Debug)]
pub struct Space {
    factors: Vec<Arc<SingleSpace>>,
    strides: Vec<usize>,
    dim: usize,
    depth_of: Vec<DepthTuple>,
    all_tuples: BTreeSet<DepthTuple>,
}

impl Space {
    pub fn new(factors: Vec<Arc<SingleSpace>>) -> Arc<Self> {
        assert!(!factors.is_empty());
        let alg = factors[0].alg();
        for f in &factors[1..] {
            assert!(Arc::ptr_eq(alg, f.alg()) , "tensor factors must share a realization");
        }
        let mut strides = vec![0usize; factors.len()];
        let mut dim = 1usize;
        for (f, fac) in factors.iter().enumerate().rev() {
            strides[f] = dim;
            dim *= fac.dim();
        }
        let mut depth_of = Vec::with_capacity(dim);
        for col in 0..dim {
            let mut t = Vec::with_capacity(factors.len());
            let mut rest = col;
            for (f, fac) in factors.iter().enumerate() {
                let idx = rest / strides[f];
                rest %= strides[f];
                t.push(fac.depth(idx) as u8);
            }
            depth_of.push(t);
        }
        let all_tuples: BTreeSet<DepthTuple> = depth_of.iter().cloned().collect();
        Arc::new(Space { factors, strides, dim, depth_of, all_tuples })
    }

    pub fn single(factor: Arc<SingleSpace>) -> Arc<Self> {
        Space::new(vec![factor])
    }

    pub fn alg(&self) -> &Arc<LieAlgebra> {
        self.factors[0].alg()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factors(&self) -> &[Arc<SingleSpace>] {
        &self.factors
    }

    pub fn depth_tuple(&self, col: usize) -> &DepthTuple {
        &self.depth_of[col]
    }

    pub fn all_tuples(&self) -> &BTreeSet<DepthTuple> {
        &self.all_tuples
    }

    /// Factor indices of a flat column.
    pub fn split(&self, col: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut rest = col;
        for f in 0..self.factors.len() {
            out.push(rest / self.strides[f]);
            rest %= self.strides[f];
        }
        out
    }

    pub fn fuse(&self, parts: &[usize]) -> usize {
        parts.iter().zip(&self.strides).map(|(i, s)| i * s).sum()
    }

    /// Weight of a flat basis vector: sum of the factor weights.
    pub fn weight(&self, col: usize) -> Weight {
        let parts = self.split(col);
        let mut w = self.factors[0].weight(parts[0]);
        for f in 1..self.factors.len() {
            w = w.add(&self.factors[f].weight(parts[f]));
        }
        w
    }

    pub fn label(&self, col: usize) -> String {
        let parts = self.split(col);
        let labels: Vec<String> = parts
            .iter()
            .zip(&self.factors)
            .map(|(i, f)| f.label(*i))
            .collect();
        labels.join(" ⊗ ")
    }

    /// Action of a homogeneous Lie element on one tensor factor (identity on
    /// the others).
    pub fn factor_op(self: &Arc<Self>, f: usize, x: &LieElt) -> Op {
        let alg = self.alg();
        let deg = alg.degree(x);
        let ht: i64 = deg.iter().sum();
        let mat = self.factors[f].act(x);
        let fac = &self.factors[f];
        // lowering actions on a truncated factor are exact only while the
        // image stays under the cap; everything else is exact everywhere
        let max_ok: i64 = if fac.truncated() && ht < 0 {
            fac.cap() as i64 + ht
        } else {
            fac.cap() as i64
        };
        let valid: BTreeSet<DepthTuple> = self
            .all_tuples
            .iter()
            .filter(|t| (t[f] as i64) <= max_ok)
            .cloned()
            .collect();
        let mut cols = vec![SparseVec::new(); self.dim];
        for (col, out) in cols.iter_mut().enumerate() {
            let parts = self.split(col);
            let src = parts[f];
            for (row_f, c) in mat[src].iter() {
                let mut rparts = parts.clone();
                rparts[f] = *row_f;
                out.add_to(self.fuse(&rparts), c);
            }
        }
        Op { space: self.clone(), cols, degree: deg, valid }
    }

    /// The Lie coproduct action `X ⊗ 1 ⊗ .. + .. + 1 ⊗ .. ⊗ X` over a set of
    /// factors (all factors when `block` is `None`).
    pub fn boxed_in(self: &Arc<Self>, block: &[usize], x: &LieElt) -> Op {
        let mut acc: Option<Op> = None;
        for &f in block {
            let term = self.factor_op(f, x);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        acc.expect("nonempty factor block")
    }

    pub fn boxed(self: &Arc<Self>, x: &LieElt) -> Op {
        let all: Vec<usize> = (0..self.factors.len()).collect();
        self.boxed_in(&all, x)
    }

    pub fn identity(self: &Arc<Self>) -> Op {
        let cols = (0..self.dim).map(SparseVec::unit).collect();
        Op {
            space: self.clone(),
            cols,
            degree: vec![0; self.alg().datum().nodes()],
            valid: self.all_tuples.clone(),
        }
    }

    pub fn zero_op(self: &Arc<Self>, degree: Vec<i64>) -> Op {
        Op {
            space: self.clone(),
            cols: vec![SparseVec::new(); self.dim],
            degree,
            valid: self.all_tuples.clone(),
        }
    }
}

/// Verdict of an exact zero test over a certified window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Exactly zero on a nonempty certified window of this many basis vectors.
    Pass { window: usize },
    /// A nonzero entry inside the certified window.
    Fail { row: String, col: String, value: String },
    /// Certified window is empty; the truncation cannot decide the identity.
    Inconclusive,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass { .. })
    }
}

/// A weight-homogeneous operator with truncation-validity metadata.
#[derive(Clone, Debug)]
pub struct Op {
    space: Arc<Space>,
    /// Column-major sparse matrix; columns outside `valid` may be skipped.
    cols: Vec<SparseVec<usize>>,
    degree: Vec<i64>,
    valid: BTreeSet<DepthTuple>,
}

impl Op {
    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn degree(&self) -> &[i64] {
        &self.degree
    }

    pub fn valid(&self) -> &BTreeSet<DepthTuple> {
        &self.valid
    }

    pub fn col(&self, j: usize) -> &SparseVec<usize> {
        &self.cols[j]
    }

    fn same_space(&self, rhs: &Op) {
        assert!(Arc::ptr_eq(&self.space, &rhs.space), "operators live on different spaces");
    }

    pub fn add(&self, rhs: &Op) -> Op {
        self.same_space(rhs);
        assert_eq!(self.degree, rhs.degree, "adding operators of different degree");
        let valid: BTreeSet<DepthTuple> = self.valid.intersection(&rhs.valid).cloned().collect();
        let cols = self
            .cols
            .iter()
            .zip(&rhs.cols)
            .map(|(a, b)| a.add(b))
            .collect();
        Op { space: self.space.clone(), cols, degree: self.degree.clone(), valid }
    }

    pub fn sub(&self, rhs: &Op) -> Op {
        self.add(&rhs.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Op {
        let cols = self.cols.iter().map(|v| v.scale(c)).collect();
        Op { space: self.space.clone(), cols, degree: self.degree.clone(), valid: self.valid.clone() }
    }

    /// Replaces the root-degree tag. Conjugation by reflection group
    /// elements moves an operator between root spaces; callers that know the
    /// image degree restore it here.
    pub fn with_degree(mut self, degree: Vec<i64>) -> Op {
        self.degree = degree;
        self
    }

    pub fn apply(&self, v: &SparseVec<usize>) -> SparseVec<usize> {
        let mut out = SparseVec::new();
        for (k, c) in v.iter() {
            out.add_scaled(&self.cols[*k], c);
        }
        out
    }

    /// `self ∘ rhs` (apply `rhs` first). Columns whose window is not
    /// certified are skipped; the result's window is the set of input depths
    /// where `rhs` is exact and every vector in the structural image of
    /// `rhs` lands where `self` is exact.
    pub fn mul(&self, rhs: &Op) -> Op {
        self.same_space(rhs);
        let degree: Vec<i64> = self.degree.iter().zip(&rhs.degree).map(|(a, b)| a + b).collect();
        let mut valid: BTreeSet<DepthTuple> = BTreeSet::new();
        'tuples: for t in &rhs.valid {
            for (col, cvec) in rhs.cols.iter().enumerate() {
                if self.space.depth_of[col] != *t {
                    continue;
                }
                for (row, _) in cvec.iter() {
                    if !self.valid.contains(&self.space.depth_of[*row]) {
                        continue 'tuples;
                    }
                }
            }
            valid.insert(t.clone());
        }
        let mut cols = vec![SparseVec::new(); self.space.dim];
        for (col, out) in cols.iter_mut().enumerate() {
            if !valid.contains(&self.space.depth_of[col]) {
                continue;
            }
            *out = self.apply(&rhs.cols[col]);
        }
        Op { space: self.space.clone(), cols, degree, valid }
    }

    pub fn commutator(&self, rhs: &Op) -> Op {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn anticommutator(&self, rhs: &Op) -> Op {
        self.mul(rhs).add(&rhs.mul(self))
    }

    /// Exact zero verdict over the certified window, with a labelled witness
    /// entry on failure.
    pub fn zero_verdict(&self) -> Verdict {
        if self.valid.is_empty() {
            return Verdict::Inconclusive;
        }
        let mut window = 0usize;
        for (col, v) in self.cols.iter().enumerate() {
            if !self.valid.contains(&self.space.depth_of[col]) {
                continue;
            }
            window += 1;
            if let Some((row, s)) = v.iter().next() {
                return Verdict::Fail {
                    row: self.space.label(*row),
                    col: self.space.label(col),
                    value: s.to_string(),
                };
            }
        }
        if window == 0 {
            Verdict::Inconclusive
        } else {
            Verdict::Pass { window }
        }
    }

    /// Structural equality of two operators over the intersection of their
    /// certified windows.
    pub fn equal_on_windows(&self, rhs: &Op) -> Verdict {
        self.sub(rhs).zero_verdict()
    }

    /// Exponential of a nilpotent operator; errors when no power vanishes
    /// within `max_iter` (for instance a lowering operator on a truncated
    /// module, which is never exactly nilpotent).
    pub fn exp_nilpotent(&self, max_iter: u32) -> Result<Op, LieError> {
        let mut acc = self.space.identity();
        let mut term = self.space.identity();
        let mut k = 1u64;
        loop {
            term = self.mul(&term).scale(&Scalar::from_frac(1, k as i64));
            if term.cols.iter().all(|c| c.is_zero()) {
                // keep the window restriction accumulated so far
                let valid: BTreeSet<DepthTuple> =
                    acc.valid.intersection(&term.valid).cloned().collect();
                acc.valid = valid;
                return Ok(acc);
            }
            acc = Op {
                space: acc.space.clone(),
                cols: acc.cols.iter().zip(&term.cols).map(|(a, b)| a.add(b)).collect(),
                degree: acc.degree.clone(),
                valid: acc.valid.intersection(&term.valid).cloned().collect(),
            };
            k += 1;
            if k > max_iter as u64 {
                return Err(LieError::NotNilpotent);
            }
        }
    }

    /// Observed displacement hull per factor: min/max of (row depth - column
    /// depth) over stored entries.
    pub fn displacement_hull(&self) -> Vec<(i64, i64)> {
        let nf = self.space.factors.len();
        let mut hull = vec![(0i64, 0i64); nf];
        for (col, v) in self.cols.iter().enumerate() {
            let tc = &self.space.depth_of[col];
            for (row, _) in v.iter() {
                let tr = &self.space.depth_of[*row];
                for f in 0..nf {
                    let d = tr[f] as i64 - tc[f] as i64;
                    hull[f].0 = hull[f].0.min(d);
                    hull[f].1 = hull[f].1.max(d);
                }
            }
        }
        hull
    }
}

/// Conservative chain certification in the sense of interval arithmetic on
/// depth displacements: the returned sub-window contains exactly the input
/// depths whose whole orbit under every prefix of the chain (applied right to
/// left) stays inside `[0, cap]` in every factor.
///
/// This is the coarse, displacement-hull discipline; the per-operator
/// `valid` sets refine it by looking at actual structural support.
pub fn window_check(chain: &[&Op], window: &[(i64, i64)]) -> Vec<(i64, i64)> {
    assert!(!chain.is_empty());
    let space = chain[0].space().clone();
    let nf = space.factors().len();
    let caps: Vec<i64> = space.factors().iter().map(|f| f.cap() as i64).collect();
    let mut lo = window.iter().map(|w| w.0).collect::<Vec<_>>();
    let mut hi = window.iter().map(|w| w.1).collect::<Vec<_>>();
    // prefix displacement hulls, rightmost operator applied first
    let mut pref = vec![(0i64, 0i64); nf];
    for op in chain.iter().rev() {
        let h = op.displacement_hull();
        for f in 0..nf {
            pref[f] = (pref[f].0 + h[f].0, pref[f].1 + h[f].1);
            // stay inside [0, cap] after this prefix
            lo[f] = lo[f].max(-pref[f].0);
            hi[f] = hi[f].min(caps[f] - pref[f].1);
        }
    }
    (0..nf).map(|f| (lo[f], hi[f])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Param;
    use crate::liemod::module::Verma;
    use crate::rootdata::AlgebraId;

    fn affine_space(cap: u32) -> Arc<Space> {
        let alg = LieAlgebra::new(AlgebraId::AffineA(2)).unwrap();
        let n = alg.nodes();
        let mut vals: Vec<Scalar> = (0..n).map(|i| Scalar::from_frac(i as i64 + 2, 3)).collect();
        vals.push(Scalar::param(Param::D1));
        let v = Verma::new(alg.clone(), Weight::new(vals), cap);
        Space::single(v)
    }

    #[test]
    fn identity_window_is_full() {
        let s = affine_space(3);
        let id = s.identity();
        let full: Vec<(i64, i64)> = vec![(0, 3)];
        assert_eq!(window_check(&[&id], &full), full);
    }

    #[test]
    fn displacement_interval_example() {
        // a chain whose first-factor displacement hull is [-2, +1] on cap 4
        // certifies first-factor inputs [2, 3]
        let alg = LieAlgebra::new(AlgebraId::AffineA(2)).unwrap();
        let n = alg.nodes();
        let mut vals: Vec<Scalar> = (0..n).map(|i| Scalar::from_frac(i as i64 + 2, 3)).collect();
        vals.push(Scalar::zero());
        let hw = Weight::new(vals);
        let v1 = Verma::new(alg.clone(), hw.clone(), 4);
        let v2 = Verma::new(alg.clone(), hw, 4);
        let s = Space::new(vec![v1, v2]);
        let e1 = s.factor_op(0, &alg.chevalley_plus(1));
        let f1 = s.factor_op(0, &alg.chevalley_minus(1));
        let e2 = s.factor_op(1, &alg.chevalley_plus(1));
        let f2 = s.factor_op(1, &alg.chevalley_minus(1));
        // degree-homogeneous sum with first-factor displacements {-2, +1}
        let mixed = e1.mul(&e1).mul(&f2.mul(&f2)).add(&f1.mul(&e2));
        assert_eq!(mixed.displacement_hull()[0], (-2, 1));
        let out = window_check(&[&mixed], &[(0, 4), (0, 4)]);
        assert_eq!(out[0], (2, 3));
    }

    #[test]
    fn lowering_validity_stops_at_cap() {
        let s = affine_space(3);
        let alg = s.alg().clone();
        let f = s.factor_op(0, &alg.chevalley_minus(0));
        assert!(f.valid().contains(&vec![2u8]));
        assert!(!f.valid().contains(&vec![3u8]));
        let e = s.factor_op(0, &alg.chevalley_plus(0));
        assert!(e.valid().contains(&vec![3u8]));
    }

    #[test]
    fn product_validity_follows_structural_support() {
        let s = affine_space(3);
        let alg = s.alg().clone();
        let f = s.factor_op(0, &alg.chevalley_minus(1));
        let e = s.factor_op(0, &alg.chevalley_plus(1));
        // raising then lowering is exact everywhere: the intermediate sits
        // strictly below the input depth
        let fe = f.mul(&e);
        assert_eq!(fe.valid().len(), s.all_tuples().len());
        // lowering then raising needs room at the top
        let ef = e.mul(&f);
        assert!(!ef.valid().contains(&vec![3u8]));
    }

    #[test]
    fn exp_of_lowering_on_truncated_module_is_inconclusive() {
        let s = affine_space(2);
        let alg = s.alg().clone();
        let f = s.factor_op(0, &alg.chevalley_minus(1));
        // powers of a lowering operator die structurally, but each power
        // shrinks the certified window; the limit window must come out empty
        let g = f.exp_nilpotent(16).unwrap();
        assert!(g.valid().is_empty());
    }

    #[test]
    fn tensor_of_highest_weights_sees_summed_cartan_action() {
        let alg = LieAlgebra::new(AlgebraId::FiniteA(2)).unwrap();
        let hw1 = Weight::new(vec![Scalar::from_int(1), Scalar::from_int(0)]);
        let hw2 = Weight::new(vec![Scalar::from_frac(1, 2), Scalar::from_int(3)]);
        let v1 = Verma::new(alg.clone(), hw1.clone(), 2);
        let v2 = Verma::new(alg.clone(), hw2.clone(), 2);
        let s = Space::new(vec![v1, v2]);
        for i in 0..2 {
            let h = s.boxed(&alg.cartan(i));
            let expect = hw1.values[i].add_ref(&hw2.values[i]);
            assert_eq!(h.col(0).get(&0), if expect.is_zero() { None } else { Some(&expect) });
        }
    }
}
