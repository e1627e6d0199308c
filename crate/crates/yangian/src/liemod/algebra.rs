//! Concrete Lie algebra realizations: trace-zero matrices for sl_m and the
//! loop realization of untwisted affine type A with central element and
//! derivation. One bracket engine serves both; the finite algebra is the
//! loop-degree-zero part without `c` and `d`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::rational::BigRational;
use num::traits::Zero;

use crate::exact::{Scalar, SparseVec};
use crate::rootdata::{rational_inverse, AlgebraId, Root, RootDatum, RootKind, Weight};

use super::LieError;

/// Basis element of the realization: matrix units and Cartan generators with
/// a loop degree, plus the canonical central element and the derivation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum LieKey {
    /// `E_{p,q} t^k` with `p != q`.
    E { p: u8, q: u8, k: i16 },
    /// `H_i t^k` with `H_i = E_{i,i} - E_{i+1,i+1}`.
    H { i: u8, k: i16 },
    /// Canonical central element.
    C,
    /// Degree derivation.
    D,
}

/// Element of the Lie algebra: finite linear combination of basis keys.
pub type LieElt = SparseVec<LieKey>;

/// A chosen basis vector of a root space, paired with its dual.
#[derive(Clone, Debug)]
pub struct RootVector {
    pub root: Root,
    /// Index within the root space basis (0 for real roots).
    pub index: usize,
    /// Basis vector of the root space for `+root`.
    pub plus: LieElt,
    /// Dual basis vector of the root space for `-root`, `(plus, minus) = 1`.
    pub minus: LieElt,
}

/// sl_m or its untwisted affinization, with bracket, invariant form,
/// Chevalley generators, and dual root-space bases.
#[derive(Debug)]
pub struct LieAlgebra {
    id: AlgebraId,
    m: usize,
    datum: Arc<RootDatum>,
    /// Inverse of the trace form Gram matrix on the finite Cartan basis,
    /// used for dual bases of imaginary root spaces.
    fin_cartan_inv: Vec<Vec<BigRational>>,
}

impl LieAlgebra {
    pub fn new(id: AlgebraId) -> Result<Arc<Self>, LieError> {
        if id.is_affine() && id.matrix_size() < 3 {
            return Err(LieError::UnsupportedAlgebra(id.name()));
        }
        let m = id.matrix_size();
        let datum = id.datum();
        let fin = m - 1;
        let gram: Vec<Vec<BigRational>> = (0..fin)
            .map(|i| {
                (0..fin)
                    .map(|j| {
                        let v: i64 = if i == j {
                            2
                        } else if i.abs_diff(j) == 1 {
                            -1
                        } else {
                            0
                        };
                        BigRational::from_integer(v.into())
                    })
                    .collect()
            })
            .collect();
        let fin_cartan_inv = rational_inverse(&gram).expect("finite Cartan matrix invertible");
        Ok(Arc::new(LieAlgebra { id, m, datum, fin_cartan_inv }))
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    /// Size of the underlying matrices.
    pub fn matrix_size(&self) -> usize {
        self.m
    }

    pub fn is_affine(&self) -> bool {
        self.id.is_affine()
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn nodes(&self) -> usize {
        self.datum.nodes()
    }

    fn check_key(&self, k: &LieKey) {
        match *k {
            LieKey::E { p, q, k } => {
                assert!(p != q && (p as usize) < self.m && (q as usize) < self.m);
                assert!(self.is_affine() || k == 0, "loop degree in a finite algebra");
            }
            LieKey::H { i, k } => {
                assert!((i as usize) < self.m - 1);
                assert!(self.is_affine() || k == 0, "loop degree in a finite algebra");
            }
            LieKey::C | LieKey::D => assert!(self.is_affine(), "c, d only exist in the affine algebra"),
        }
    }

    /// Root-lattice degree of a basis key, in simple-root coordinates of the
    /// datum (affine coordinates include the loop contribution).
    pub fn key_degree(&self, key: &LieKey) -> Vec<i64> {
        let n = self.datum.nodes();
        let mut out = vec![0i64; n];
        match *key {
            LieKey::E { p, q, k } => {
                // finite weight eps_p - eps_q = sum of simple roots between p and q
                let (p, q) = (p as usize, q as usize);
                let mut fin = vec![0i64; self.m - 1];
                if p < q {
                    for item in fin.iter_mut().take(q).skip(p) {
                        *item = 1;
                    }
                } else {
                    for item in fin.iter_mut().take(p).skip(q) {
                        *item = -1;
                    }
                }
                if self.is_affine() {
                    out[0] = k as i64;
                    for i in 0..self.m - 1 {
                        out[i + 1] = k as i64 + fin[i];
                    }
                } else {
                    out.copy_from_slice(&fin);
                }
            }
            LieKey::H { k, .. } => {
                if self.is_affine() {
                    for item in out.iter_mut() {
                        *item = k as i64;
                    }
                }
            }
            LieKey::C | LieKey::D => {}
        }
        out
    }

    /// Degree of a homogeneous element; panics on inhomogeneous input.
    pub fn degree(&self, x: &LieElt) -> Vec<i64> {
        let mut deg: Option<Vec<i64>> = None;
        for (k, _) in x.iter() {
            let d = self.key_degree(k);
            match &deg {
                None => deg = Some(d),
                Some(existing) => assert_eq!(existing, &d, "inhomogeneous Lie element"),
            }
        }
        deg.unwrap_or_else(|| vec![0; self.datum.nodes()])
    }

    /// Adds `coeff * (matrix unit E_{p,q} at loop degree k)` to `out`,
    /// expanding diagonal units via the deferred diagonal accumulator.
    fn add_unit(out: &mut LieElt, diag: &mut BTreeMap<i16, Vec<Scalar>>, m: usize, p: usize, q: usize, k: i16, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        if p != q {
            out.add_to(LieKey::E { p: p as u8, q: q as u8, k }, coeff);
        } else {
            let d = diag.entry(k).or_insert_with(|| vec![Scalar::zero(); m]);
            d[p] = d[p].add_ref(coeff);
        }
    }

    /// Flushes accumulated traceless diagonals into the `H_i` basis: a
    /// diagonal with entries `t_0..t_{m-1}` equals `sum_i (t_0+..+t_i) H_i`.
    fn flush_diag(out: &mut LieElt, diag: BTreeMap<i16, Vec<Scalar>>) {
        for (k, entries) in diag {
            let mut partial = Scalar::zero();
            for (i, e) in entries.iter().enumerate().take(entries.len() - 1) {
                partial = partial.add_ref(e);
                out.add_to(LieKey::H { i: i as u8, k }, &partial);
            }
            // tracelessness of brackets guarantees the full sum cancels
            let mut total = Scalar::zero();
            for e in &entries {
                total = total.add_ref(e);
            }
            assert!(total.is_zero(), "bracket produced a non-traceless diagonal");
        }
    }

    fn bracket_keys(&self, a: &LieKey, b: &LieKey) -> LieElt {
        let m = self.m;
        let mut out = LieElt::new();
        let mut diag: BTreeMap<i16, Vec<Scalar>> = BTreeMap::new();
        match (*a, *b) {
            (LieKey::E { p, q, k }, LieKey::E { p: r, q: s, k: l }) => {
                let (p, q, r, s) = (p as usize, q as usize, r as usize, s as usize);
                let one = Scalar::one();
                if q == r {
                    Self::add_unit(&mut out, &mut diag, m, p, s, k + l, &one);
                }
                if s == p {
                    Self::add_unit(&mut out, &mut diag, m, r, q, k + l, &Scalar::from_int(-1));
                }
                if self.is_affine() && k + l == 0 && k != 0 && q == r && s == p {
                    out.add_to(LieKey::C, &Scalar::from_int(k as i64));
                }
            }
            (LieKey::H { i, k }, LieKey::E { p, q, k: l }) => {
                let w = h_eigen(i as usize, p as usize, q as usize);
                out.add_to(LieKey::E { p, q, k: k + l }, &Scalar::from_int(w));
            }
            (LieKey::E { p, q, k }, LieKey::H { i, k: l }) => {
                let w = -h_eigen(i as usize, p as usize, q as usize);
                out.add_to(LieKey::E { p, q, k: k + l }, &Scalar::from_int(w));
            }
            (LieKey::H { i, k }, LieKey::H { i: j, k: l }) => {
                if self.is_affine() && k + l == 0 && k != 0 {
                    let tr = h_trace(i as usize, j as usize);
                    if tr != 0 {
                        out.add_to(LieKey::C, &Scalar::from_int(k as i64 * tr));
                    }
                }
            }
            (LieKey::D, LieKey::E { p, q, k }) => {
                out.add_to(LieKey::E { p, q, k }, &Scalar::from_int(k as i64));
            }
            (LieKey::E { p, q, k }, LieKey::D) => {
                out.add_to(LieKey::E { p, q, k }, &Scalar::from_int(-(k as i64)));
            }
            (LieKey::D, LieKey::H { i, k }) => {
                out.add_to(LieKey::H { i, k }, &Scalar::from_int(k as i64));
            }
            (LieKey::H { i, k }, LieKey::D) => {
                out.add_to(LieKey::H { i, k }, &Scalar::from_int(-(k as i64)));
            }
            (LieKey::C, _) | (_, LieKey::C) | (LieKey::D, LieKey::D) => {}
        }
        Self::flush_diag(&mut out, diag);
        out
    }

    /// Lie bracket, extended bilinearly.
    pub fn bracket(&self, x: &LieElt, y: &LieElt) -> LieElt {
        let mut out = LieElt::new();
        for (ka, ca) in x.iter() {
            self.check_key(ka);
            for (kb, cb) in y.iter() {
                self.check_key(kb);
                let b = self.bracket_keys(ka, kb);
                out.add_scaled(&b, &ca.mul_ref(cb));
            }
        }
        out
    }

    fn pair_keys(&self, a: &LieKey, b: &LieKey) -> Scalar {
        match (*a, *b) {
            (LieKey::E { p, q, k }, LieKey::E { p: r, q: s, k: l }) => {
                if k + l == 0 && q == r && s == p {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            }
            (LieKey::H { i, k }, LieKey::H { i: j, k: l }) => {
                if k + l == 0 {
                    Scalar::from_int(h_trace(i as usize, j as usize))
                } else {
                    Scalar::zero()
                }
            }
            (LieKey::C, LieKey::D) | (LieKey::D, LieKey::C) => Scalar::one(),
            _ => Scalar::zero(),
        }
    }

    /// Invariant bilinear form `(x t^k, y t^l) = delta_{k+l,0} tr(xy)`,
    /// extended by `(c, d) = 1` and `(c, c) = (d, d) = 0`.
    pub fn pair(&self, x: &LieElt, y: &LieElt) -> Scalar {
        let mut acc = Scalar::zero();
        for (ka, ca) in x.iter() {
            for (kb, cb) in y.iter() {
                let p = self.pair_keys(ka, kb);
                if !p.is_zero() {
                    acc = acc.add_ref(&p.mul_ref(ca).mul_ref(cb));
                }
            }
        }
        acc
    }

    /// Chevalley generator `x_i^+`.
    pub fn chevalley_plus(&self, node: usize) -> LieElt {
        if self.is_affine() {
            if node == 0 {
                LieElt::unit(LieKey::E { p: (self.m - 1) as u8, q: 0, k: 1 })
            } else {
                LieElt::unit(LieKey::E { p: (node - 1) as u8, q: node as u8, k: 0 })
            }
        } else {
            LieElt::unit(LieKey::E { p: node as u8, q: (node + 1) as u8, k: 0 })
        }
    }

    /// Chevalley generator `x_i^-`.
    pub fn chevalley_minus(&self, node: usize) -> LieElt {
        if self.is_affine() {
            if node == 0 {
                LieElt::unit(LieKey::E { p: 0, q: (self.m - 1) as u8, k: -1 })
            } else {
                LieElt::unit(LieKey::E { p: node as u8, q: (node - 1) as u8, k: 0 })
            }
        } else {
            LieElt::unit(LieKey::E { p: (node + 1) as u8, q: node as u8, k: 0 })
        }
    }

    /// Cartan generator `h_i = [x_i^+, x_i^-]`.
    pub fn cartan(&self, node: usize) -> LieElt {
        self.bracket(&self.chevalley_plus(node), &self.chevalley_minus(node))
    }

    /// Basis of the Cartan subalgebra matching the datum's weight
    /// coordinates: `h_0 .. h_{n-1}` and then `d` when affine.
    pub fn cartan_basis(&self, idx: usize) -> LieElt {
        let n = self.nodes();
        if idx < n {
            self.cartan(idx)
        } else if self.is_affine() && idx == n {
            LieElt::unit(LieKey::D)
        } else {
            panic!("Cartan basis index out of range");
        }
    }

    /// Evaluates a weight on an arbitrary Cartan element (combination of
    /// `H_i t^0`, `c`, `d`).
    pub fn weight_of_cartan(&self, w: &Weight, x: &LieElt) -> Scalar {
        let mut acc = Scalar::zero();
        for (k, c) in x.iter() {
            let v = match *k {
                LieKey::H { i, k: 0 } => {
                    if self.is_affine() {
                        w.values[i as usize + 1].clone()
                    } else {
                        w.values[i as usize].clone()
                    }
                }
                LieKey::C => {
                    // c = h_0 + h_1 + .. + h_{n-1} in type A affine
                    let mut s = Scalar::zero();
                    for j in 0..self.nodes() {
                        s = s.add_ref(&w.values[j]);
                    }
                    s
                }
                LieKey::D => w.values[self.nodes()].clone(),
                _ => panic!("not a Cartan element"),
            };
            acc = acc.add_ref(&v.mul_ref(c));
        }
        acc
    }

    /// Dual root-space bases for a positive root: real roots give the matrix
    /// unit pair, imaginary roots `k delta` give `{H_i t^k}` with the
    /// trace-form dual basis on the other side.
    pub fn root_vectors(&self, root: &Root) -> Vec<RootVector> {
        match root.kind {
            RootKind::Real => {
                let (p, q, k) = self.real_root_unit(&root.coords);
                vec![RootVector {
                    root: root.clone(),
                    index: 0,
                    plus: LieElt::unit(LieKey::E { p, q, k }),
                    minus: LieElt::unit(LieKey::E { p: q, q: p, k: -k }),
                }]
            }
            RootKind::Imaginary => {
                let k = root.coords[0] as i16;
                let fin = self.m - 1;
                (0..fin)
                    .map(|i| {
                        let plus = LieElt::unit(LieKey::H { i: i as u8, k });
                        let mut minus = LieElt::new();
                        for (j, inv) in self.fin_cartan_inv[i].iter().enumerate() {
                            if !inv.is_zero() {
                                minus.add_to(
                                    LieKey::H { i: j as u8, k: -k },
                                    &Scalar::from_rational(inv.clone()),
                                );
                            }
                        }
                        RootVector { root: root.clone(), index: i, plus, minus }
                    })
                    .collect()
            }
        }
    }

    /// Matrix unit data `(p, q, k)` for a positive real root.
    fn real_root_unit(&self, coords: &[i64]) -> (u8, u8, i16) {
        let (k, fin) = if self.is_affine() {
            let k = coords[0];
            let fin: Vec<i64> = (1..self.nodes()).map(|i| coords[i] - k).collect();
            (k, fin)
        } else {
            (0, coords.to_vec())
        };
        // eps-coordinates: v_t = fin_{t} - fin_{t-1} with fin_{-1} = fin_{m-1} = 0
        let mut p = None;
        let mut q = None;
        for t in 0..self.m {
            let prev = if t == 0 { 0 } else { fin[t - 1] };
            let cur = if t == self.m - 1 { 0 } else { fin[t] };
            match cur - prev {
                1 => p = Some(t),
                -1 => q = Some(t),
                0 => {}
                _ => panic!("not a real root of type A"),
            }
        }
        let (p, q) = (p.expect("real root"), q.expect("real root"));
        (p as u8, q as u8, k as i16)
    }
}

/// Eigenvalue of `ad(H_i)` on `E_{p,q}`.
fn h_eigen(i: usize, p: usize, q: usize) -> i64 {
    let at = |t: usize| -> i64 {
        if t == i {
            1
        } else if t == i + 1 {
            -1
        } else {
            0
        }
    };
    at(p) - at(q)
}

/// `tr(H_i H_j)` for the finite Cartan generators of sl_m.
fn h_trace(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootKind;

    fn affine3() -> Arc<LieAlgebra> {
        LieAlgebra::new(AlgebraId::AffineA(2)).unwrap()
    }

    fn finite3() -> Arc<LieAlgebra> {
        LieAlgebra::new(AlgebraId::FiniteA(2)).unwrap()
    }

    fn all_keys(alg: &LieAlgebra, k_range: std::ops::RangeInclusive<i16>) -> Vec<LieKey> {
        let m = alg.matrix_size();
        let mut keys = Vec::new();
        for k in k_range {
            if !alg.is_affine() && k != 0 {
                continue;
            }
            for p in 0..m {
                for q in 0..m {
                    if p != q {
                        keys.push(LieKey::E { p: p as u8, q: q as u8, k });
                    }
                }
            }
            for i in 0..m - 1 {
                keys.push(LieKey::H { i: i as u8, k });
            }
        }
        if alg.is_affine() {
            keys.push(LieKey::C);
            keys.push(LieKey::D);
        }
        keys
    }

    #[test]
    fn node_zero_cartan_is_central_minus_theta() {
        let alg = affine3();
        let h0 = alg.cartan(0);
        // h_0 = c - (H_0 + H_1)
        let mut expect = LieElt::unit(LieKey::C);
        expect.add_to(LieKey::H { i: 0, k: 0 }, &Scalar::from_int(-1));
        expect.add_to(LieKey::H { i: 1, k: 0 }, &Scalar::from_int(-1));
        assert_eq!(h0, expect);
        assert_eq!(alg.pair(&alg.chevalley_plus(0), &alg.chevalley_minus(0)), Scalar::one());
    }

    #[test]
    fn derivation_grades_by_loop_degree() {
        let alg = affine3();
        let d = LieElt::unit(LieKey::D);
        for i in 1..3 {
            assert!(alg.bracket(&d, &alg.chevalley_plus(i)).is_zero());
        }
        assert_eq!(alg.bracket(&d, &alg.chevalley_plus(0)), alg.chevalley_plus(0));
    }

    #[test]
    fn chevalley_normalization_every_node() {
        for alg in [finite3(), affine3(), LieAlgebra::new(AlgebraId::AffineA(3)).unwrap()] {
            for i in 0..alg.nodes() {
                let xp = alg.chevalley_plus(i);
                let xm = alg.chevalley_minus(i);
                assert_eq!(alg.pair(&xp, &xm), Scalar::one(), "node {i}");
                let h = alg.cartan(i);
                // [h_i, x_i^pm] = +-2 x_i^pm
                assert_eq!(alg.bracket(&h, &xp), xp.scale(&Scalar::from_int(2)));
                assert_eq!(alg.bracket(&h, &xm), xm.scale(&Scalar::from_int(-2)));
            }
        }
    }

    #[test]
    fn antisymmetry_and_jacobi_exhaustive_small() {
        let alg = affine3();
        let keys = all_keys(&alg, -1..=1);
        let elts: Vec<LieElt> = keys.iter().map(|k| LieElt::unit(*k)).collect();
        for x in &elts {
            for y in &elts {
                let xy = alg.bracket(x, y);
                let yx = alg.bracket(y, x);
                assert!(xy.add(&yx).is_zero(), "antisymmetry");
            }
        }
        // Jacobi on a deterministic sample of triples
        for (a, x) in elts.iter().enumerate() {
            for (b, y) in elts.iter().enumerate() {
                for (c, z) in elts.iter().enumerate() {
                    if (a + 2 * b + 3 * c) % 7 != 0 {
                        continue;
                    }
                    let j = alg
                        .bracket(x, &alg.bracket(y, z))
                        .add(&alg.bracket(y, &alg.bracket(z, x)))
                        .add(&alg.bracket(z, &alg.bracket(x, y)));
                    assert!(j.is_zero(), "jacobi failed");
                }
            }
        }
    }

    #[test]
    fn form_invariance_sampled() {
        let alg = affine3();
        let keys = all_keys(&alg, -1..=1);
        let elts: Vec<LieElt> = keys.iter().map(|k| LieElt::unit(*k)).collect();
        for (a, x) in elts.iter().enumerate() {
            for (b, y) in elts.iter().enumerate() {
                for (c, z) in elts.iter().enumerate() {
                    if (a + 3 * b + 5 * c) % 11 != 0 {
                        continue;
                    }
                    let lhs = alg.pair(&alg.bracket(x, y), z);
                    let rhs = alg.pair(y, &alg.bracket(x, z)).neg_ref();
                    assert_eq!(lhs, rhs, "invariance failed");
                }
            }
        }
    }

    #[test]
    fn jacobi_on_loop_triple() {
        let alg = affine3();
        let x = LieElt::unit(LieKey::E { p: 0, q: 1, k: 1 });
        let y = LieElt::unit(LieKey::E { p: 1, q: 0, k: -1 });
        let h = alg.cartan(1);
        let j = alg
            .bracket(&x, &alg.bracket(&y, &h))
            .add(&alg.bracket(&y, &alg.bracket(&h, &x)))
            .add(&alg.bracket(&h, &alg.bracket(&x, &y)));
        assert!(j.is_zero());
    }

    #[test]
    fn root_vector_duality_up_to_height_six() {
        for alg in [finite3(), affine3()] {
            let roots = alg.datum().positive_roots(6).unwrap();
            for r in &roots {
                let vecs = alg.root_vectors(r);
                assert_eq!(vecs.len(), r.multiplicity);
                for v in &vecs {
                    for w in &vecs {
                        let p = alg.pair(&v.plus, &w.minus);
                        let expect = if v.index == w.index { Scalar::one() } else { Scalar::zero() };
                        assert_eq!(p, expect, "duality for root {:?}", r.coords);
                    }
                    assert_eq!(alg.degree(&v.plus), r.coords);
                }
            }
        }
    }

    #[test]
    fn imaginary_root_spaces_have_finite_rank_dimension() {
        let alg = affine3();
        let roots = alg.datum().positive_roots(3).unwrap();
        let delta = roots.iter().find(|r| r.kind == RootKind::Imaginary).unwrap();
        assert_eq!(alg.root_vectors(delta).len(), 2);
    }
}
