//! Weight modules: depth-truncated Verma modules built by PBW straightening,
//! and the vector representation of sl_m used by evaluation modules.
//!
//! Verma basis labels are ordered monomials in negative root-vector
//! generators applied to the highest-weight vector. The depth of a monomial
//! is the height of the total lowered weight; monomials pushed past the
//! depth cap are projected to zero. Generators are ordered by
//! (root height, root coordinates, root-space index).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::exact::{Scalar, SparseVec};
use crate::rootdata::Weight;

use super::algebra::{LieAlgebra, LieElt, RootVector};

/// Basis label of a Verma module: `[(generator id, power), ..]`, sorted by
/// generator id. The empty monomial is the highest-weight vector.
pub type Mono = Vec<(u32, u32)>;

/// Vector in the monomial basis.
pub type MonoVec = SparseVec<Mono>;

/// A single weight module: truncated Verma or the sl_m vector representation.
#[derive(Debug)]
pub enum SingleSpace {
    Verma(Verma),
    Vector(VectorRep),
}

impl SingleSpace {
    pub fn alg(&self) -> &Arc<LieAlgebra> {
        match self {
            SingleSpace::Verma(v) => &v.alg,
            SingleSpace::Vector(v) => &v.alg,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SingleSpace::Verma(v) => v.basis.len(),
            SingleSpace::Vector(v) => v.alg.matrix_size(),
        }
    }

    /// Depth cap: maximal depth carried by the basis.
    pub fn cap(&self) -> u32 {
        match self {
            SingleSpace::Verma(v) => v.cap,
            SingleSpace::Vector(v) => (v.alg.matrix_size() - 1) as u32,
        }
    }

    /// Whether depths beyond the cap were projected away (Verma) or the
    /// module is genuinely finite (vector representation).
    pub fn truncated(&self) -> bool {
        matches!(self, SingleSpace::Verma(_))
    }

    pub fn hw(&self) -> &Weight {
        match self {
            SingleSpace::Verma(v) => &v.hw,
            SingleSpace::Vector(v) => &v.hw,
        }
    }

    pub fn depth(&self, i: usize) -> u32 {
        match self {
            SingleSpace::Verma(v) => v.depths[i],
            SingleSpace::Vector(_) => i as u32,
        }
    }

    /// Root-lattice coordinates by which basis vector `i` sits below the
    /// highest weight.
    pub fn lowered(&self, i: usize) -> Vec<i64> {
        match self {
            SingleSpace::Verma(v) => v.lowered[i].clone(),
            SingleSpace::Vector(v) => {
                let n = v.alg.nodes();
                let mut c = vec![0i64; n];
                for item in c.iter_mut().take(i) {
                    *item = 1;
                }
                c
            }
        }
    }

    /// Weight of basis vector `i` on the Cartan basis.
    pub fn weight(&self, i: usize) -> Weight {
        let low = self.alg().datum().root_functional(&self.lowered(i));
        self.hw().sub(&low)
    }

    pub fn label(&self, i: usize) -> String {
        match self {
            SingleSpace::Verma(v) => {
                let m = &v.basis[i];
                if m.is_empty() {
                    "v".to_string()
                } else {
                    let parts: Vec<String> = m
                        .iter()
                        .map(|(g, e)| {
                            let root = &v.gens[*g as usize].root;
                            let idx = v.gens[*g as usize].index;
                            let base = format!("f{:?}", root.coords);
                            let base = if root.multiplicity > 1 { format!("{base}#{idx}") } else { base };
                            if *e == 1 {
                                base
                            } else {
                                format!("{base}^{e}")
                            }
                        })
                        .collect();
                    format!("{}·v", parts.join("·"))
                }
            }
            SingleSpace::Vector(_) => format!("e{}", i),
        }
    }

    /// Action matrix of a homogeneous Lie element, column-major. Cached.
    pub fn act(&self, x: &LieElt) -> Arc<Vec<SparseVec<usize>>> {
        let key: Vec<(super::algebra::LieKey, Scalar)> =
            x.iter().map(|(k, c)| (*k, c.clone())).collect();
        let cache = match self {
            SingleSpace::Verma(v) => &v.cache,
            SingleSpace::Vector(v) => &v.cache,
        };
        if let Some(hit) = cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let mat = Arc::new(match self {
            SingleSpace::Verma(v) => v.act_matrix(x),
            SingleSpace::Vector(v) => v.act_matrix(x),
        });
        cache.lock().unwrap().insert(key, mat.clone());
        mat
    }
}

type ActCache = Mutex<HashMap<Vec<(super::algebra::LieKey, Scalar)>, Arc<Vec<SparseVec<usize>>>>>;

/// Depth-truncated Verma module.
#[derive(Debug)]
pub struct Verma {
    alg: Arc<LieAlgebra>,
    hw: Weight,
    cap: u32,
    /// Negative root-vector generators in PBW order.
    gens: Vec<RootVector>,
    gen_height: Vec<u32>,
    /// Root coordinates -> (first generator id, multiplicity).
    by_root: BTreeMap<Vec<i64>, (usize, usize)>,
    basis: Vec<Mono>,
    index: HashMap<Mono, usize>,
    depths: Vec<u32>,
    lowered: Vec<Vec<i64>>,
    cache: ActCache,
}

impl Verma {
    /// Builds the truncated Verma with the given highest weight and depth cap.
    #[allow(clippy::new_ret_no_self)]
    pub fn new(alg: Arc<LieAlgebra>, hw: Weight, cap: u32) -> Arc<SingleSpace> {
        assert_eq!(hw.values.len(), alg.datum().cartan_dim(), "weight has wrong dimension");
        let roots = alg
            .datum()
            .positive_roots(cap as i64)
            .expect("supported root datum");
        let mut gens = Vec::new();
        let mut by_root = BTreeMap::new();
        for r in &roots {
            let vecs = alg.root_vectors(r);
            by_root.insert(r.coords.clone(), (gens.len(), vecs.len()));
            gens.extend(vecs);
        }
        let gen_height: Vec<u32> = gens.iter().map(|g| g.root.height as u32).collect();
        // enumerate monomials with total height <= cap
        let mut basis: Vec<Mono> = Vec::new();
        let mut stack: Vec<(Mono, usize, u32)> = vec![(Vec::new(), 0, 0)];
        while let Some((mono, next, used)) = stack.pop() {
            basis.push(mono.clone());
            for g in next..gens.len() {
                let h = gen_height[g];
                if used + h <= cap {
                    let mut m2 = mono.clone();
                    m2.push((g as u32, 1));
                    stack.push((m2, g + 1, used + h));
                }
            }
        }
        // expand powers: the enumeration above creates each generator at most
        // once per monomial; blow up powers by re-walking
        let mut full: Vec<Mono> = Vec::new();
        for m in basis {
            expand_powers(&gens, &gen_height, &m, 0, cap, &mut full);
        }
        let mut with_depth: Vec<(u32, Mono)> = full
            .into_iter()
            .map(|m| (mono_height(&gen_height, &m), m))
            .collect();
        with_depth.sort();
        with_depth.dedup();
        let basis: Vec<Mono> = with_depth.iter().map(|(_, m)| m.clone()).collect();
        let depths: Vec<u32> = with_depth.iter().map(|(d, _)| *d).collect();
        let lowered: Vec<Vec<i64>> = basis
            .iter()
            .map(|m| {
                let n = alg.datum().nodes();
                let mut c = vec![0i64; n];
                for (g, e) in m {
                    for (i, x) in gens[*g as usize].root.coords.iter().enumerate() {
                        c[i] += x * (*e as i64);
                    }
                }
                c
            })
            .collect();
        let index: HashMap<Mono, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Arc::new(SingleSpace::Verma(Verma {
            alg,
            hw,
            cap,
            gens,
            gen_height,
            by_root,
            basis,
            index,
            depths,
            lowered,
            cache: Mutex::new(HashMap::new()),
        }))
    }

    pub fn basis(&self) -> &[Mono] {
        &self.basis
    }

    pub fn gens(&self) -> &[RootVector] {
        &self.gens
    }

    fn mono_depth(&self, m: &Mono) -> u32 {
        mono_height(&self.gen_height, m)
    }

    /// Expands a homogeneous lowering element into the generator basis of its
    /// root space via the invariant form against the dual basis.
    fn to_neg_combo(&self, x: &LieElt) -> Vec<(usize, Scalar)> {
        let deg = self.alg.degree(x);
        let pos: Vec<i64> = deg.iter().map(|c| -c).collect();
        let Some(&(start, count)) = self.by_root.get(&pos) else {
            return Vec::new(); // beyond the truncation horizon
        };
        (start..start + count)
            .map(|g| (g, self.alg.pair(x, &self.gens[g].plus)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Left-multiplies a monomial by generator `g`, straightening into PBW
    /// order and projecting past-cap terms to zero.
    fn mul_gen(&self, g: usize, m: &Mono) -> MonoVec {
        if self.mono_depth(m) + self.gen_height[g] > self.cap {
            return MonoVec::new();
        }
        match m.first() {
            None => MonoVec::unit(vec![(g as u32, 1)]),
            Some(&(head, _)) if g as u32 <= head => {
                let mut out = m.clone();
                if out[0].0 == g as u32 {
                    out[0].1 += 1;
                } else {
                    out.insert(0, (g as u32, 1));
                }
                MonoVec::unit(out)
            }
            Some(&(head, _)) => {
                // F_g F_head rest = F_head (F_g rest) + [F_g, F_head] rest
                let rest = peel(m);
                let mut out = MonoVec::new();
                for (m2, c) in self.mul_gen(g, &rest).iter() {
                    out.add_scaled(&self.mul_gen(head as usize, m2), c);
                }
                let br = self
                    .alg
                    .bracket(&self.gens[g].minus, &self.gens[head as usize].minus);
                out.add_scaled(&self.act_elt_mono(&br, &rest), &Scalar::one());
                out
            }
        }
    }

    /// Action of a single basis key on a monomial.
    fn act_key_mono(&self, key: &super::algebra::LieKey, m: &Mono) -> MonoVec {
        let deg = self.alg.key_degree(key);
        let ht: i64 = deg.iter().sum();
        if ht == 0 {
            // Cartan: exact eigenvalue on the weight of the monomial
            let x = LieElt::unit(*key);
            let low = self.alg.datum().root_functional(&self.mono_lowered(m));
            let eigen = self
                .alg
                .weight_of_cartan(&self.hw, &x)
                .sub_ref(&self.alg.weight_of_cartan(&low, &x));
            return MonoVec::new().tap_add(m.clone(), &eigen);
        }
        if ht < 0 {
            if self.mono_depth(m) as i64 - ht > self.cap as i64 {
                return MonoVec::new();
            }
            let mut out = MonoVec::new();
            for (g, c) in self.to_neg_combo(&LieElt::unit(*key)) {
                out.add_scaled(&self.mul_gen(g, m), &c);
            }
            return out;
        }
        // raising
        match m.first() {
            None => MonoVec::new(),
            Some(&(head, _)) => {
                let rest = peel(m);
                let br = self
                    .alg
                    .bracket(&LieElt::unit(*key), &self.gens[head as usize].minus);
                let mut out = self.act_elt_mono(&br, &rest);
                for (m2, c) in self.act_key_mono(key, &rest).iter() {
                    out.add_scaled(&self.mul_gen(head as usize, m2), c);
                }
                out
            }
        }
    }

    fn act_elt_mono(&self, x: &LieElt, m: &Mono) -> MonoVec {
        let mut out = MonoVec::new();
        for (k, c) in x.iter() {
            out.add_scaled(&self.act_key_mono(k, m), c);
        }
        out
    }

    fn mono_lowered(&self, m: &Mono) -> Vec<i64> {
        let n = self.alg.datum().nodes();
        let mut c = vec![0i64; n];
        for (g, e) in m {
            for (i, x) in self.gens[*g as usize].root.coords.iter().enumerate() {
                c[i] += x * (*e as i64);
            }
        }
        c
    }

    fn act_matrix(&self, x: &LieElt) -> Vec<SparseVec<usize>> {
        let mut cols = Vec::with_capacity(self.basis.len());
        for m in &self.basis {
            let image = self.act_elt_mono(x, m);
            let mut col = SparseVec::new();
            for (mono, c) in image.iter() {
                let idx = *self.index.get(mono).expect("straightened monomial in basis");
                col.add_to(idx, c);
            }
            cols.push(col);
        }
        cols
    }
}

fn mono_height(gen_height: &[u32], m: &Mono) -> u32 {
    m.iter().map(|(g, e)| gen_height[*g as usize] * e).sum()
}

fn peel(m: &Mono) -> Mono {
    let mut rest = m.clone();
    if rest[0].1 > 1 {
        rest[0].1 -= 1;
    } else {
        rest.remove(0);
    }
    rest
}

fn expand_powers(gens: &[RootVector], gen_height: &[u32], template: &Mono, at: usize, cap: u32, out: &mut Vec<Mono>) {
    if at == template.len() {
        out.push(template.clone());
        return;
    }
    let mut m = template.clone();
    let _ = gens;
    loop {
        let total = mono_height(gen_height, &m);
        if total > cap {
            break;
        }
        expand_powers(gens, gen_height, &m, at + 1, cap, out);
        m[at].1 += 1;
    }
}

trait TapAdd {
    fn tap_add(self, m: Mono, c: &Scalar) -> Self;
}

impl TapAdd for MonoVec {
    fn tap_add(mut self, m: Mono, c: &Scalar) -> Self {
        self.add_to(m, c);
        self
    }
}

/// The vector representation of sl_m on basis `e_0 .. e_{m-1}` with highest
/// weight the first fundamental weight.
#[derive(Debug)]
pub struct VectorRep {
    alg: Arc<LieAlgebra>,
    hw: Weight,
    cache: ActCache,
}

impl VectorRep {
    #[allow(clippy::new_ret_no_self)]
    pub fn new(alg: Arc<LieAlgebra>) -> Arc<SingleSpace> {
        assert!(!alg.is_affine(), "vector representation is finite-type only");
        let n = alg.nodes();
        let mut vals = vec![Scalar::zero(); n];
        vals[0] = Scalar::one();
        Arc::new(SingleSpace::Vector(VectorRep {
            alg,
            hw: Weight::new(vals),
            cache: Mutex::new(HashMap::new()),
        }))
    }

    fn act_matrix(&self, x: &LieElt) -> Vec<SparseVec<usize>> {
        let m = self.alg.matrix_size();
        let mut cols = vec![SparseVec::new(); m];
        for (key, c) in x.iter() {
            match *key {
                super::algebra::LieKey::E { p, q, k } => {
                    assert_eq!(k, 0);
                    cols[q as usize].add_to(p as usize, c);
                }
                super::algebra::LieKey::H { i, k } => {
                    assert_eq!(k, 0);
                    let i = i as usize;
                    for (col, item) in cols.iter_mut().enumerate() {
                        let w = if col == i {
                            1
                        } else if col == i + 1 {
                            -1
                        } else {
                            0
                        };
                        if w != 0 {
                            item.add_to(col, &c.mul_ref(&Scalar::from_int(w)));
                        }
                    }
                }
                _ => panic!("c, d do not act on the vector representation"),
            }
        }
        cols
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Param;
    use crate::rootdata::AlgebraId;

    fn generic_weight(alg: &LieAlgebra, symbolic_d: bool) -> Weight {
        let n = alg.nodes();
        let mut vals: Vec<Scalar> = (0..n).map(|i| Scalar::from_frac(2 * i as i64 + 3, 2)).collect();
        if alg.is_affine() {
            vals.push(if symbolic_d { Scalar::param(Param::D1) } else { Scalar::zero() });
        }
        Weight::new(vals)
    }

    #[test]
    fn depth_zero_verma_is_one_dimensional() {
        let alg = LieAlgebra::new(AlgebraId::AffineA(2)).unwrap();
        let v = Verma::new(alg.clone(), generic_weight(&alg, true), 0);
        assert_eq!(v.dim(), 1);
        // x_i^+ kills the highest-weight vector; h acts by the weight
        for i in 0..3 {
            let xp = v.act(&alg.chevalley_plus(i));
            assert!(xp[0].is_zero());
            let h = v.act(&alg.cartan(i));
            assert_eq!(h[0].get(&0), Some(&v.hw().values[i]));
        }
    }

    #[test]
    fn rank_one_verma_identity_inside_sl3() {
        // x_1^+ x_1^- v = lambda(h_1) v
        let alg = LieAlgebra::new(AlgebraId::FiniteA(2)).unwrap();
        let hw = Weight::new(vec![Scalar::from_frac(5, 3), Scalar::from_int(2)]);
        let v = Verma::new(alg.clone(), hw.clone(), 2);
        let xm = v.act(&alg.chevalley_minus(0));
        let xp = v.act(&alg.chevalley_plus(0));
        // apply x_1^- then x_1^+ to the highest-weight vector (index 0)
        let lowered = &xm[0];
        let mut raised = SparseVec::new();
        for (r, c) in lowered.iter() {
            raised.add_scaled(&xp[*r], c);
        }
        assert_eq!(raised.get(&0), Some(&hw.values[0]));
    }

    #[test]
    fn affine_depth_dims_match_monomial_count_oracle() {
        let alg = LieAlgebra::new(AlgebraId::AffineA(2)).unwrap();
        let cap = 4u32;
        let v = Verma::new(alg.clone(), generic_weight(&alg, true), cap);
        // oracle: coefficient extraction from prod_g 1/(1 - q^{ht(g)}),
        // independent of the straightening engine
        let roots = alg.datum().positive_roots(cap as i64).unwrap();
        let mut heights = Vec::new();
        for r in &roots {
            for _ in 0..r.multiplicity {
                heights.push(r.height as usize);
            }
        }
        let mut series = vec![0u64; cap as usize + 1];
        series[0] = 1;
        for h in heights {
            for d in h..=cap as usize {
                series[d] += series[d - h];
            }
        }
        let mut got = vec![0u64; cap as usize + 1];
        for i in 0..v.dim() {
            got[v.depth(i) as usize] += 1;
        }
        assert_eq!(got, series);
        assert_eq!(got[0..4], [1, 3, 9, 21]);
    }

    #[test]
    fn verma_universal_property_on_window() {
        // [x_i^+, x_j^-] v = delta_ij h_i v on every basis vector whose depth
        // leaves room for the commutator chain
        let alg = LieAlgebra::new(AlgebraId::AffineA(2)).unwrap();
        let cap = 3u32;
        let v = Verma::new(alg.clone(), generic_weight(&alg, true), cap);
        for i in 0..3 {
            for j in 0..3 {
                let xp = v.act(&alg.chevalley_plus(i));
                let xm = v.act(&alg.chevalley_minus(j));
                let h = v.act(&alg.cartan(i));
                for col in 0..v.dim() {
                    if v.depth(col) + 1 > cap {
                        continue; // x_j^- escapes the truncation
                    }
                    let mut lhs = SparseVec::new();
                    for (r, c) in xm[col].iter() {
                        lhs.add_scaled(&xp[*r], c);
                    }
                    for (r, c) in xp[col].iter() {
                        lhs.add_scaled(&xm[*r], &c.neg_ref());
                    }
                    let rhs = if i == j { h[col].clone() } else { SparseVec::new() };
                    assert_eq!(lhs, rhs, "i={i} j={j} col={col}");
                }
            }
        }
    }

    #[test]
    fn generator_actions_are_weight_homogeneous() {
        let alg = LieAlgebra::new(AlgebraId::AffineA(2)).unwrap();
        let v = Verma::new(alg.clone(), generic_weight(&alg, false), 3);
        for node in 0..3 {
            for (x, sign) in [(alg.chevalley_plus(node), 1i64), (alg.chevalley_minus(node), -1)] {
                let deg = alg.degree(&x);
                let mat = v.act(&x);
                for col in 0..v.dim() {
                    for (row, _) in mat[col].iter() {
                        let diff: Vec<i64> = v
                            .lowered(col)
                            .iter()
                            .zip(v.lowered(*row).iter())
                            .map(|(a, b)| a - b)
                            .collect();
                        let expect: Vec<i64> = deg.iter().map(|d| d * sign * sign).collect();
                        assert_eq!(diff, expect);
                    }
                }
            }
        }
    }

    #[test]
    fn vector_rep_matches_matrix_units() {
        let alg = LieAlgebra::new(AlgebraId::FiniteA(2)).unwrap();
        let v = VectorRep::new(alg.clone());
        let xp = v.act(&alg.chevalley_plus(0));
        assert_eq!(xp[1].get(&0), Some(&Scalar::one()));
        assert!(xp[0].is_zero());
        assert_eq!(v.depth(2), 2);
    }
}
