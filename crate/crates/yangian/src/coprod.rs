//! Casimir operator series, the box map, and the coproduct assignment on
//! tensor modules.
//!
//! The half Casimir, full Casimir, and their commutators are realized as
//! height-indexed lazy operator series on a tensor space: evaluating on any
//! fixed vector touches finitely many heights because the raising side
//! eventually annihilates it. Coproduct images of level-one generators
//! follow the assignment on generators; optional mutations (dropping the
//! Cartan cross term, flipping the half-Casimir sign) exist solely as
//! negative controls for the verification suites.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num::traits::Zero;

use crate::exact::{Scalar, SparseVec};
use crate::liemod::{Op, Space};
use crate::rootdata::RootKind;
use crate::yangops::{generate_tower, EvalParams, LieOps, Sign, Tower, TowerBase};

/// Splitting of a tensor space's factors into a left and right block.
#[derive(Clone, Debug)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Bipartition {
    pub fn of_pair() -> Self {
        Bipartition { left: vec![0], right: vec![1] }
    }

    pub fn left_nested(nf: usize) -> Self {
        Bipartition { left: (0..nf - 1).collect(), right: vec![nf - 1] }
    }

    pub fn right_nested(nf: usize) -> Self {
        Bipartition { left: vec![0], right: (1..nf).collect() }
    }
}

/// `X ⊗ 1 + 1 ⊗ X` over all factors. Not an algebra homomorphism, but
/// compatible with brackets.
pub fn boxed(lie: &LieOps, x: &crate::liemod::LieElt) -> Op {
    lie.space().boxed(x)
}

/// Height-indexed lazy operator series with memoized pieces.
pub struct OperatorSeries {
    space: Arc<Space>,
    max_height: i64,
    degree: Vec<i64>,
    builder: Box<dyn Fn(i64) -> Op + Send + Sync>,
    pieces: Mutex<BTreeMap<i64, Arc<Op>>>,
}

impl OperatorSeries {
    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn max_height(&self) -> i64 {
        self.max_height
    }

    /// The height-h piece, materialized on first use.
    pub fn piece(&self, h: i64) -> Arc<Op> {
        if let Some(p) = self.pieces.lock().unwrap().get(&h) {
            return p.clone();
        }
        let op = Arc::new((self.builder)(h));
        self.pieces.lock().unwrap().insert(h, op.clone());
        op
    }

    /// Heights materialized so far, for locality instrumentation.
    pub fn materialized(&self) -> Vec<i64> {
        self.pieces.lock().unwrap().keys().cloned().collect()
    }

    /// Applies the series to a basis vector. Only heights up to the vector's
    /// raising budget are touched; returns the image and the largest height
    /// whose piece was materialized for this evaluation.
    pub fn apply_col(&self, col: usize, raising_budget: i64) -> (SparseVec<usize>, i64) {
        let mut out = SparseVec::new();
        let mut touched = 0;
        for h in 0..=self.max_height.min(raising_budget) {
            let piece = self.piece(h);
            out.add_scaled(piece.col(col), &Scalar::one());
            touched = h;
        }
        (out, touched)
    }

    /// Sum of all pieces up to the height bound.
    pub fn total(&self) -> Op {
        let mut acc = self.space.zero_op(self.degree.clone());
        for h in 0..=self.max_height {
            acc = acc.add(&self.piece(h));
        }
        acc
    }
}

/// Builds the half Casimir series on a bipartition: height 0 is the dual
/// Cartan contraction, height h sums `x_{-α} ⊗ x_α` over positive roots of
/// height h (with multiplicity bases).
pub fn omega_plus_series(lie: &LieOps, part: &Bipartition) -> OperatorSeries {
    omega_series(lie, part, false)
}

/// The transpose-half series `x_α ⊗ x_{-α}` (no Cartan term).
pub fn omega_minus_series(lie: &LieOps, part: &Bipartition) -> OperatorSeries {
    omega_series(lie, part, true)
}

fn omega_series(lie: &LieOps, part: &Bipartition, transposed: bool) -> OperatorSeries {
    let space = lie.space().clone();
    let alg = lie.alg().clone();
    let vectors = lie.vectors().to_vec();
    let part = part.clone();
    let degree = vec![0i64; alg.datum().nodes()];
    let deg0 = degree.clone();
    let builder = move |h: i64| -> Op {
        let mut acc = space.zero_op(deg0.clone());
        if h == 0 {
            if transposed {
                return acc;
            }
            let datum = alg.datum();
            let dim = datum.cartan_dim();
            let inv = datum.gram_inv();
            for k in 0..dim {
                for t in 0..dim {
                    if inv[k][t].is_zero() {
                        continue;
                    }
                    let lt = space.boxed_in(&part.left, &alg.cartan_basis(t));
                    let rt = space.boxed_in(&part.right, &alg.cartan_basis(k));
                    acc = acc.add(&lt.mul(&rt).scale(&Scalar::from_rational(inv[k][t].clone())));
                }
            }
            return acc;
        }
        for v in &vectors {
            if v.root.height != h {
                continue;
            }
            let (l, r) = if transposed { (&v.plus, &v.minus) } else { (&v.minus, &v.plus) };
            let lt = space.boxed_in(&part.left, l);
            let rt = space.boxed_in(&part.right, r);
            // the two block operators commute; applying the raising side
            // first keeps the certified window sharp (columns it kills are
            // exactly zero regardless of the lowering side's cap)
            acc = acc.add(&if transposed { rt.mul(&lt) } else { lt.mul(&rt) });
        }
        acc
    };
    OperatorSeries {
        space: lie.space().clone(),
        max_height: lie.height_bound(),
        degree,
        builder: Box::new(builder),
        pieces: Mutex::new(BTreeMap::new()),
    }
}

/// Materialized half Casimir up to the LieOps height bound.
pub fn omega_plus(lie: &LieOps, part: &Bipartition) -> Op {
    omega_plus_series(lie, part).total()
}

pub fn omega_minus(lie: &LieOps, part: &Bipartition) -> Op {
    omega_minus_series(lie, part).total()
}

/// Full Casimir `Ω = Ω_+ + Ω_-`.
pub fn omega(lie: &LieOps, part: &Bipartition) -> Op {
    omega_plus(lie, part).add(&omega_minus(lie, part))
}

/// Negative-control mutations of the coproduct assignment.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DeltaMutation {
    None,
    /// Drop the `h_{i0} ⊗ h_{i0}` cross term from the level-one Cartan image.
    DropCartanTerm,
    /// Flip the sign of the half-Casimir commutator term.
    FlipOmegaSign,
}

/// Coproduct images on a bipartitioned tensor space. Level-one images need
/// evaluation parameters for every factor; the pure-Lie images do not.
pub struct DeltaOps<'a> {
    pub lie: &'a LieOps,
    pub part: Bipartition,
    /// Evaluation parameters per factor, where available.
    pub evals: Option<Vec<EvalParams>>,
    pub mutation: DeltaMutation,
}

impl<'a> DeltaOps<'a> {
    pub fn new(lie: &'a LieOps, part: Bipartition, evals: Option<Vec<EvalParams>>) -> Self {
        DeltaOps { lie, part, evals, mutation: DeltaMutation::None }
    }

    pub fn with_mutation(mut self, m: DeltaMutation) -> Self {
        self.mutation = m;
        self
    }

    fn space(&self) -> &Arc<Space> {
        self.lie.space()
    }

    fn box_left(&self, x: &crate::liemod::LieElt) -> Op {
        self.space().boxed_in(&self.part.left, x)
    }

    /// Per-factor level-one Cartan generator summed over all factors.
    fn box_h1(&self, i: usize) -> Op {
        let evals = self.evals.as_ref().expect("level-one images need evaluation factors");
        let mut acc: Option<Op> = None;
        for (f, p) in evals.iter().enumerate() {
            let term = p.h_on(self.space(), f, i, 1);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        acc.unwrap()
    }

    fn box_x1(&self, sign: Sign, i: usize) -> Op {
        let evals = self.evals.as_ref().expect("level-one images need evaluation factors");
        let mut acc: Option<Op> = None;
        for (f, p) in evals.iter().enumerate() {
            let term = p.x_on(self.space(), f, sign, i, 1);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        acc.unwrap()
    }

    /// `Δ(h) = □(h)` for Cartan h, `Δ(x^±_{i0}) = □(x^±_{i0})`.
    pub fn level0_h(&self, i: usize) -> Op {
        boxed(self.lie, &self.lie.alg().cartan(i))
    }

    pub fn level0_x(&self, sign: Sign, i: usize) -> Op {
        let alg = self.lie.alg();
        let x = match sign {
            Sign::Plus => alg.chevalley_plus(i),
            Sign::Minus => alg.chevalley_minus(i),
        };
        boxed(self.lie, &x)
    }

    /// `Δ(h_{i1}) = □(h_{i1}) + h_{i0} ⊗ h_{i0} + [h_{i0} ⊗ 1, Ω_+]`.
    pub fn level1_h(&self, i: usize) -> Op {
        let alg = self.lie.alg();
        let hl = self.box_left(&alg.cartan(i));
        let hr = self.space().boxed_in(&self.part.right, &alg.cartan(i));
        let om = omega_plus(self.lie, &self.part);
        let mut acc = self.box_h1(i);
        if self.mutation != DeltaMutation::DropCartanTerm {
            acc = acc.add(&hl.mul(&hr));
        }
        let comm = hl.commutator(&om);
        let comm = if self.mutation == DeltaMutation::FlipOmegaSign {
            comm.scale(&Scalar::from_int(-1))
        } else {
            comm
        };
        acc.add(&comm)
    }

    /// `Δ(h~_{i1}) = □(h~_{i1}) + [h_{i0} ⊗ 1, Ω_+]`.
    pub fn level1_htilde(&self, i: usize) -> Op {
        let evals = self.evals.as_ref().expect("level-one images need evaluation factors");
        let mut acc: Option<Op> = None;
        for (f, p) in evals.iter().enumerate() {
            let h0 = p.h_on(self.space(), f, i, 0);
            let term = p
                .h_on(self.space(), f, i, 1)
                .sub(&h0.mul(&h0).scale(&Scalar::from_frac(1, 2)));
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        let alg = self.lie.alg();
        let hl = self.box_left(&alg.cartan(i));
        acc.unwrap().add(&hl.commutator(&omega_plus(self.lie, &self.part)))
    }

    /// `Δ(x^+_{i1}) = □(x^+_{i1}) - [1 ⊗ x^+_{i0}, Ω_+]` and the lowering
    /// twin `Δ(x^-_{i1}) = □(x^-_{i1}) + [x^-_{i0} ⊗ 1, Ω_+]`, both forced by
    /// pushing the level recursion through the level-0/1 images. The twin's
    /// sign matches the expansion
    /// `x^-_{i0} ⊗ h_{i0} + Σ [x^-_{i0}, x_{-α}^{(k)}] ⊗ x_α^{(k)}`.
    pub fn level1_x(&self, sign: Sign, i: usize) -> Op {
        let alg = self.lie.alg();
        let om = omega_plus(self.lie, &self.part);
        match sign {
            Sign::Plus => {
                let correction = self
                    .space()
                    .boxed_in(&self.part.right, &alg.chevalley_plus(i))
                    .commutator(&om);
                self.box_x1(sign, i).sub(&correction)
            }
            Sign::Minus => {
                let correction = self
                    .space()
                    .boxed_in(&self.part.left, &alg.chevalley_minus(i))
                    .commutator(&om);
                self.box_x1(sign, i).add(&correction)
            }
        }
    }

    /// `Δ(v~_i) = □(v~_i) - (1/2)[h_{i0} ⊗ 1, Ω_+ - Ω_-]`. Pure Lie.
    pub fn vtilde(&self, i: usize) -> Op {
        let alg = self.lie.alg();
        let hl = self.box_left(&alg.cartan(i));
        let diff = omega_plus(self.lie, &self.part).sub(&omega_minus(self.lie, &self.part));
        self.lie
            .boxed_vtilde(i)
            .sub(&hl.commutator(&diff).scale(&Scalar::from_frac(1, 2)))
    }

    /// `Δ(J(h_i)) = □(J(h_i)) + (1/2)[h_{i0} ⊗ 1, Ω]`.
    pub fn j_h(&self, i: usize) -> Op {
        let alg = self.lie.alg();
        let hl = self.box_left(&alg.cartan(i));
        let boxed_j = self.box_h1(i).add(&self.lie.boxed_v(i));
        boxed_j.add(&hl.commutator(&omega(self.lie, &self.part)).scale(&Scalar::from_frac(1, 2)))
    }

    /// Tower of coproduct images generated by the level recursion from the
    /// level-0 and level-1 images.
    pub fn tower(&self, rmax: usize) -> Tower {
        let nodes = self.lie.alg().nodes();
        let base = TowerBase {
            h0: (0..nodes).map(|i| self.level0_h(i)).collect(),
            h1: (0..nodes).map(|i| self.level1_h(i)).collect(),
            xp0: (0..nodes).map(|i| self.level0_x(Sign::Plus, i)).collect(),
            xm0: (0..nodes).map(|i| self.level0_x(Sign::Minus, i)).collect(),
        };
        generate_tower(self.lie.alg().datum(), base, rmax)
    }
}

/// `Δ(h~_{i1})` for an arbitrary block split, recursing into multi-factor
/// blocks with their left-nested bipartition. With `include_level1` the
/// per-factor `h~_{i1}` terms are included (finite type); without it only
/// the pure-Lie half-Casimir terms are built, which is exactly the part that
/// differs between bracketings.
pub fn delta_htilde_blocks(
    lie: &LieOps,
    left: &[usize],
    right: &[usize],
    evals: Option<&[EvalParams]>,
    i: usize,
) -> Op {
    let space = lie.space();
    let alg = lie.alg();
    let mut acc = {
        let hl = space.boxed_in(left, &alg.cartan(i));
        let part = Bipartition { left: left.to_vec(), right: right.to_vec() };
        hl.commutator(&omega_plus(lie, &part))
    };
    for block in [left, right] {
        if block.len() == 1 {
            if let Some(evals) = evals {
                let f = block[0];
                let h0 = evals[f].h_on(space, f, i, 0);
                let ht = evals[f]
                    .h_on(space, f, i, 1)
                    .sub(&h0.mul(&h0).scale(&Scalar::from_frac(1, 2)));
                acc = acc.add(&ht);
            }
        } else {
            let (bl, br) = block.split_at(block.len() - 1);
            acc = acc.add(&delta_htilde_blocks(lie, bl, br, evals, i));
        }
    }
    acc
}

/// The generalized Casimir operator on a single-factor space:
/// `2 ν^{-1}(ρ) + Σ_k u^k u_k + 2 Σ_{α>0} Σ_k x_{-α}^{(k)} x_α^{(k)}`.
pub fn generalized_casimir(lie: &LieOps) -> Op {
    let space = lie.space();
    assert_eq!(space.factors().len(), 1, "generalized Casimir is a single-module operator");
    let alg = lie.alg();
    let datum = alg.datum();
    let dim = datum.cartan_dim();
    let inv = datum.gram_inv();
    // 2 ν^{-1}(ρ): coordinates of ν^{-1}(ρ) in the Cartan basis are G^{-1} ρ
    let rho = datum.rho();
    let mut acc = space.zero_op(vec![0; datum.nodes()]);
    for t in 0..dim {
        let mut coeff = Scalar::zero();
        for k in 0..dim {
            coeff = coeff.add_ref(
                &Scalar::from_rational(inv[t][k].clone()).mul_ref(&rho.values[k]),
            );
        }
        if !coeff.is_zero() {
            acc = acc.add(
                &space
                    .factor_op(0, &alg.cartan_basis(t))
                    .scale(&coeff.mul_ref(&Scalar::from_int(2))),
            );
        }
    }
    // Σ_k u^k u_k
    for k in 0..dim {
        for t in 0..dim {
            if inv[k][t].is_zero() {
                continue;
            }
            let ut = space.factor_op(0, &alg.cartan_basis(t));
            let uk = space.factor_op(0, &alg.cartan_basis(k));
            acc = acc.add(&ut.mul(&uk).scale(&Scalar::from_rational(inv[k][t].clone())));
        }
    }
    // 2 Σ x_{-α} x_α
    for v in lie.vectors() {
        let lower = space.factor_op(0, &v.minus);
        let raise = space.factor_op(0, &v.plus);
        acc = acc.add(&lower.mul(&raise).scale(&Scalar::from_int(2)));
    }
    acc
}

/// The `k δ` contribution to `[h ⊗ 1, Ω_+]`, for the imaginary-dropout check.
pub fn omega_commutator_imaginary_part(lie: &LieOps, part: &Bipartition, i: usize) -> Op {
    let space = lie.space();
    let alg = lie.alg();
    let hl = space.boxed_in(&part.left, &alg.cartan(i));
    let mut acc = space.zero_op(vec![0; alg.datum().nodes()]);
    for v in lie.vectors() {
        if v.root.kind != RootKind::Imaginary {
            continue;
        }
        let lt = space.boxed_in(&part.left, &v.minus);
        let rt = space.boxed_in(&part.right, &v.plus);
        acc = acc.add(&hl.commutator(&lt.mul(&rt)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Param;
    use crate::liemod::algebra::LieAlgebra;
    use crate::liemod::{Verdict, Verma};
    use crate::rootdata::{AlgebraId, Weight};
    use crate::yangops::solve_eval_params;

    fn eval_pair() -> (Arc<Space>, LieOps, Vec<EvalParams>) {
        let alg = LieAlgebra::new(AlgebraId::FiniteA(2)).unwrap();
        let v1 = crate::liemod::VectorRep::new(alg.clone());
        let v2 = crate::liemod::VectorRep::new(alg.clone());
        let space = Space::new(vec![v1, v2]);
        let lie = LieOps::new(space.clone(), 4);
        let pa = solve_eval_params(3, &Scalar::param(Param::A)).unwrap();
        let pb = solve_eval_params(3, &Scalar::param(Param::B)).unwrap();
        (space, lie, vec![pa, pb])
    }

    fn verma_pair(cap: u32) -> (Arc<Space>, LieOps) {
        let alg = LieAlgebra::new(AlgebraId::AffineA(2)).unwrap();
        let mk = |d: Param, off: i64| {
            let mut vals: Vec<Scalar> =
                (0..3).map(|i| Scalar::from_frac(2 * i as i64 + off, 3)).collect();
            vals.push(Scalar::param(d));
            Weight::new(vals)
        };
        let v1 = Verma::new(alg.clone(), mk(Param::D1, 5), cap);
        let v2 = Verma::new(alg.clone(), mk(Param::D2, 7), cap);
        let space = Space::new(vec![v1, v2]);
        let lie = LieOps::new(space.clone(), cap as i64 + 2);
        (space, lie)
    }

    #[test]
    fn box_respects_brackets_but_not_products() {
        let (space, lie, _) = eval_pair();
        let alg = space.alg().clone();
        let xp = boxed(&lie, &alg.chevalley_plus(0));
        let xm = boxed(&lie, &alg.chevalley_minus(0));
        let h = boxed(&lie, &alg.cartan(0));
        assert!(xp.commutator(&xm).equal_on_windows(&h).passed());
        // box is not multiplicative: □(h_0^2) != □(h_0)^2, witnessed by an
        // off-diagonal-in-factors entry
        let h_sq_boxed = {
            let hh = alg.bracket(&alg.cartan(0), &alg.cartan(0));
            assert!(hh.is_zero());
            // build □(h^2) as the factorwise square summed over factors
            let h1 = space.factor_op(0, &alg.cartan(0));
            let h2 = space.factor_op(1, &alg.cartan(0));
            h1.mul(&h1).add(&h2.mul(&h2))
        };
        let squared = h.mul(&h);
        assert!(matches!(h_sq_boxed.equal_on_windows(&squared), Verdict::Fail { .. }));
    }

    #[test]
    fn omega_plus_on_highest_weight_pair_is_weight_pairing() {
        let (space, lie) = verma_pair(2);
        let om = omega_plus(&lie, &Bipartition::of_pair());
        let datum = space.alg().datum().clone();
        let l1 = space.factors()[0].hw().clone();
        let l2 = space.factors()[1].hw().clone();
        let expect = datum.weight_pairing(&l1, &l2);
        assert_eq!(om.col(0).get(&0).cloned().unwrap_or_else(Scalar::zero), expect);
        // no other contributions on the highest-weight pair
        assert_eq!(om.col(0).len(), 1);
    }

    #[test]
    fn omega_plus_is_basis_independent() {
        let (_, lie) = verma_pair(2);
        let part = Bipartition::of_pair();
        let om1 = omega_plus(&lie, &part);
        let alt = lie.alternate_basis();
        let om2 = omega_plus(&alt, &part);
        assert!(om1.equal_on_windows(&om2).passed());
    }

    #[test]
    fn omega_commutes_with_boxed_cartan() {
        let (space, lie) = verma_pair(2);
        let om = omega_plus(&lie, &Bipartition::of_pair());
        for k in 0..space.alg().datum().cartan_dim() {
            let h = boxed(&lie, &space.alg().cartan_basis(k));
            assert!(h.commutator(&om).zero_verdict().passed(), "basis {k}");
        }
    }

    #[test]
    fn series_locality_is_bounded_by_raising_budget() {
        let (space, lie) = verma_pair(3);
        let series = omega_plus_series(&lie, &Bipartition::of_pair());
        // pick a basis vector with small right-factor depth
        let col = (0..space.dim())
            .find(|&c| space.depth_tuple(c) == &vec![3u8, 1u8])
            .expect("basis vector with depths (3,1)");
        let (_, touched) = series.apply_col(col, 1);
        assert!(touched <= 1);
        let materialized = series.materialized();
        assert!(materialized.iter().all(|&h| h <= 1));
    }

    #[test]
    fn delta_level1_h_on_highest_weight_pair() {
        let (space, lie, evals) = eval_pair();
        let delta = DeltaOps::new(&lie, Bipartition::of_pair(), Some(evals.clone()));
        for i in 0..2 {
            let d = delta.level1_h(i);
            // on v ⊗ v: per-factor h_{i1} plus the λ(h_i) μ(h_i) cross term
            let l1 = space.factors()[0].weight(0).values[i].clone();
            let l2 = space.factors()[1].weight(0).values[i].clone();
            let h1a = evals[0].h_on(&space, 0, i, 1).col(0).get(&0).cloned().unwrap_or_else(Scalar::zero);
            let h1b = evals[1].h_on(&space, 1, i, 1).col(0).get(&0).cloned().unwrap_or_else(Scalar::zero);
            let expect = h1a.add_ref(&h1b).add_ref(&l1.mul_ref(&l2));
            assert_eq!(d.col(0).get(&0).cloned().unwrap_or_else(Scalar::zero), expect);
        }
    }

    #[test]
    fn delta_htilde_two_routes_agree() {
        let (_, lie, evals) = eval_pair();
        let delta = DeltaOps::new(&lie, Bipartition::of_pair(), Some(evals));
        for i in 0..2 {
            let direct = delta.level1_htilde(i);
            let via_h = {
                let dh0 = delta.level0_h(i);
                delta.level1_h(i).sub(&dh0.mul(&dh0).scale(&Scalar::from_frac(1, 2)))
            };
            assert!(direct.equal_on_windows(&via_h).passed(), "node {i}");
        }
    }

    #[test]
    fn delta_x1_matches_recursion_image() {
        let (_, lie, evals) = eval_pair();
        let delta = DeltaOps::new(&lie, Bipartition::of_pair(), Some(evals));
        let datum = lie.alg().datum().clone();
        for i in 0..2 {
            for sign in Sign::BOTH {
                let formula = delta.level1_x(sign, i);
                let rec = delta
                    .level1_htilde(i)
                    .commutator(&delta.level0_x(sign, i))
                    .scale(&Scalar::from_frac(sign.factor(), datum.bilin(i, i)));
                assert!(formula.equal_on_windows(&rec).passed(), "node {i} sign {}", sign.label());
            }
        }
    }

    #[test]
    fn generalized_casimir_commutes_and_has_expected_eigenvalue() {
        let alg = LieAlgebra::new(AlgebraId::AffineA(2)).unwrap();
        let mut vals: Vec<Scalar> = (0..3).map(|i| Scalar::from_frac(i as i64 + 1, 2)).collect();
        vals.push(Scalar::param(Param::D1));
        let hw = Weight::new(vals);
        let v = Verma::new(alg.clone(), hw.clone(), 3);
        let space = Space::single(v);
        let lie = LieOps::new(space.clone(), 5);
        let cas = generalized_casimir(&lie);
        for node in 0..3 {
            for x in [alg.chevalley_plus(node), alg.chevalley_minus(node)] {
                let g = space.factor_op(0, &x);
                let comm = cas.commutator(&g);
                assert!(comm.zero_verdict().passed(), "node {node}");
            }
        }
        // eigenvalue (λ + 2ρ, λ) on the highest-weight vector
        let datum = alg.datum().clone();
        let rho = datum.rho();
        let expect = datum.weight_pairing(&hw.add(&rho.scale(&Scalar::from_int(2))), &hw);
        assert_eq!(cas.col(0).get(&0).cloned().unwrap_or_else(Scalar::zero), expect);
    }

    #[test]
    fn finite_casimir_is_scalar_on_vector_rep() {
        let alg = LieAlgebra::new(AlgebraId::FiniteA(2)).unwrap();
        let space = Space::single(crate::liemod::VectorRep::new(alg.clone()));
        let lie = LieOps::new(space.clone(), 3);
        let cas = generalized_casimir(&lie);
        // (ω_1 + 2ρ, ω_1) = 8/3 for sl_3
        let expect = Scalar::from_frac(8, 3);
        for col in 0..space.dim() {
            assert_eq!(cas.col(col).get(&col), Some(&expect));
            assert_eq!(cas.col(col).len(), 1);
        }
    }

    #[test]
    fn imaginary_terms_drop_from_omega_commutator() {
        let (_, lie) = verma_pair(3);
        for i in 0..3 {
            let part = omega_commutator_imaginary_part(&lie, &Bipartition::of_pair(), i);
            assert!(part.zero_verdict().passed(), "node {i}");
        }
    }
}
