//! Generalized Cartan matrices, root systems, and Weyl-group words.
//!
//! Covers classification of a GCM as finite/affine/indefinite, the invariant
//! bilinear form in the normalization where long roots have squared length 2,
//! positive-root enumeration with multiplicities for simply-laced finite and
//! untwisted affine types, height-descent reduced words for real roots, and
//! dual Coxeter data.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

use crate::exact::Scalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootDataError {
    #[error("not a generalized Cartan matrix: {0}")]
    InvalidGcm(String),
    #[error("matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("unsupported kind for this operation: {0}")]
    UnsupportedKind(String),
    #[error("operation requires a simply-laced root datum")]
    NotSimplyLaced,
    #[error("root is not a positive real root")]
    NotRealPositive,
    #[error("invalid reduced word")]
    InvalidWord,
    #[error("unknown algebra name: {0} (expected A<n> or A<n>affine, n >= 2)")]
    UnknownAlgebra(String),
}

/// Finite, affine, or indefinite type of a generalized Cartan matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixKind {
    Finite,
    Affine,
    Indefinite,
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixKind::Finite => write!(f, "finite"),
            MatrixKind::Affine => write!(f, "affine"),
            MatrixKind::Indefinite => write!(f, "indefinite"),
        }
    }
}

/// A validated generalized Cartan matrix together with its minimal symmetrizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gcm {
    n: usize,
    a: Vec<Vec<i64>>,
    sym: Vec<i64>,
}

impl Gcm {
    /// Validates the GCM axioms and computes the unique minimal positive
    /// integer symmetrizer `d` with `d_i a_ij = d_j a_ji`.
    pub fn new(a: Vec<Vec<i64>>) -> Result<Self, RootDataError> {
        let n = a.len();
        if n == 0 || a.iter().any(|row| row.len() != n) {
            return Err(RootDataError::InvalidGcm("matrix must be square and nonempty".into()));
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return Err(RootDataError::InvalidGcm(format!("a[{i}][{i}] != 2")));
            }
            for j in 0..n {
                if i != j {
                    if a[i][j] > 0 {
                        return Err(RootDataError::InvalidGcm(format!("a[{i}][{j}] > 0 off the diagonal")));
                    }
                    if (a[i][j] == 0) != (a[j][i] == 0) {
                        return Err(RootDataError::InvalidGcm(format!(
                            "zero pattern not symmetric at ({i},{j})"
                        )));
                    }
                }
            }
        }
        let sym = symmetrizer(&a).ok_or(RootDataError::NotSymmetrizable)?;
        Ok(Gcm { n, a, sym })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    pub fn is_simply_laced(&self) -> bool {
        self.sym.iter().all(|&d| d == 1) && self.a.iter().flatten().all(|&e| e >= -1 || e == 2)
    }

    /// Finite/affine/indefinite classification by principal minors.
    pub fn classify(&self) -> MatrixKind {
        let n = self.n;
        let mut all_positive = true;
        let mut proper_positive = true;
        let mut full_det_zero = false;
        for mask in 1u32..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let d = int_det(&self.a, &idx);
            let proper = idx.len() < n;
            if d <= BigInt::zero() {
                all_positive = false;
                if proper {
                    proper_positive = false;
                } else if d.is_zero() {
                    full_det_zero = true;
                }
            }
        }
        if all_positive {
            MatrixKind::Finite
        } else if proper_positive && full_det_zero {
            MatrixKind::Affine
        } else {
            MatrixKind::Indefinite
        }
    }
}

/// Solves `d_i a_ij = d_j a_ji` for the minimal positive integer vector.
fn symmetrizer(a: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = a.len();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    // propagate ratios along edges of the (assumed connected enough) diagram;
    // disconnected components each get an independent start at 1
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(BigRational::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                // d_i a_ij = d_j a_ji  =>  d_j = d_i a_ij / a_ji
                let dj = &di * BigRational::new(a[i][j].into(), a[j][i].into());
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(existing) => {
                        if *existing != dj {
                            return None;
                        }
                    }
                }
            }
        }
    }
    let vals: Vec<BigRational> = d.into_iter().map(|x| x.unwrap()).collect();
    // scale to integers and divide by the gcd
    let mut lcm = BigInt::one();
    for v in &vals {
        lcm = num::integer::lcm(lcm.clone(), v.denom().clone());
    }
    let ints: Vec<BigInt> = vals.iter().map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = num::integer::gcd(g.clone(), v.clone());
    }
    let out: Vec<i64> = ints
        .iter()
        .map(|v| {
            let q = v / &g;
            i64::try_from(&q).ok()
        })
        .collect::<Option<Vec<_>>>()?;
    if out.iter().any(|&x| x <= 0) {
        return None;
    }
    // verify
    for i in 0..n {
        for j in 0..n {
            if out[i] * a[i][j] != out[j] * a[j][i] {
                return None;
            }
        }
    }
    Some(out)
}

fn int_det(a: &[Vec<i64>], idx: &[usize]) -> BigInt {
    let k = idx.len();
    let mut m: Vec<Vec<BigRational>> = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| BigRational::from_integer(a[i][j].into())).collect())
        .collect();
    let mut det = BigRational::one();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            return BigInt::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..k {
            let f = &m[r][col] / &pv;
            if f.is_zero() {
                continue;
            }
            for c in col..k {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det.to_integer()
}

/// Real or imaginary root.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootKind {
    Real,
    Imaginary,
}

/// A positive root in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Root {
    pub coords: Vec<i64>,
    pub height: i64,
    pub kind: RootKind,
    pub multiplicity: usize,
}

/// Extra data carried by affine root data.
#[derive(Clone, Debug)]
pub struct AffineData {
    /// Coordinates of the basic imaginary root delta (the marks).
    pub delta: Vec<i64>,
    /// Dual marks (kernel of the transposed Cartan matrix, minimal positive).
    pub dual_marks: Vec<i64>,
    /// Dual Coxeter number, the sum of the dual marks.
    pub dual_coxeter: i64,
    /// Rank of the underlying finite subalgebra (dimension of each `kδ`
    /// root space in the loop realization).
    pub finite_rank: usize,
}

/// A reduced word expressing a positive real root from a terminal simple root.
///
/// Applying `s_{word[0]} .. s_{word[p-2]}` to the simple root `terminal`
/// reproduces `root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWordEntry {
    pub root: Root,
    pub word: Vec<usize>,
    pub terminal: usize,
}

/// Root datum: a classified GCM plus the invariant form on roots and on the
/// Cartan subalgebra, and affine extras where applicable.
#[derive(Clone, Debug)]
pub struct RootDatum {
    gcm: Gcm,
    kind: MatrixKind,
    /// (alpha_i, alpha_j) = d_i a_ij.
    bilin: Vec<Vec<i64>>,
    /// Dimension of the Cartan space: n nodes, plus the derivation if affine.
    cartan_dim: usize,
    gram: Vec<Vec<BigRational>>,
    gram_inv: Vec<Vec<BigRational>>,
    affine: Option<AffineData>,
}

impl RootDatum {
    pub fn new(gcm: Gcm) -> Result<Arc<Self>, RootDataError> {
        let kind = gcm.classify();
        let n = gcm.size();
        let bilin: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| gcm.symmetrizer()[i] * gcm.entry(i, j)).collect())
            .collect();
        let affine = if kind == MatrixKind::Affine {
            let delta = positive_integer_kernel(&gcm, false).ok_or(RootDataError::NotSymmetrizable)?;
            let dual_marks = positive_integer_kernel(&gcm, true).ok_or(RootDataError::NotSymmetrizable)?;
            let dual_coxeter = dual_marks.iter().sum();
            Some(AffineData { delta, dual_marks, dual_coxeter, finite_rank: n - 1 })
        } else {
            None
        };
        let cartan_dim = if affine.is_some() { n + 1 } else { n };
        // Gram matrix of the Cartan basis {alpha_i^vee} (+ derivation d when
        // affine): (h_i, h_j) = (alpha_i, alpha_j) in the simply-laced
        // normalization, (h_i, d) = delta_{i,0}, (d, d) = 0.
        let mut gram = vec![vec![BigRational::zero(); cartan_dim]; cartan_dim];
        for i in 0..n {
            for j in 0..n {
                gram[i][j] = BigRational::from_integer(bilin[i][j].into());
            }
        }
        if affine.is_some() {
            gram[0][n] = BigRational::one();
            gram[n][0] = BigRational::one();
        }
        let gram_inv = rational_inverse(&gram).ok_or_else(|| {
            RootDataError::UnsupportedKind("Cartan Gram matrix is singular".into())
        })?;
        Ok(Arc::new(RootDatum { gcm, kind, bilin, cartan_dim, gram, gram_inv, affine }))
    }

    pub fn gcm(&self) -> &Gcm {
        &self.gcm
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn nodes(&self) -> usize {
        self.gcm.size()
    }

    /// Dimension of the Cartan space underlying weights.
    pub fn cartan_dim(&self) -> usize {
        self.cartan_dim
    }

    pub fn is_affine(&self) -> bool {
        self.affine.is_some()
    }

    pub fn affine(&self) -> Option<&AffineData> {
        self.affine.as_ref()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.gcm.is_simply_laced()
    }

    /// (alpha_i, alpha_j), exact.
    pub fn bilin(&self, i: usize, j: usize) -> i64 {
        self.bilin[i][j]
    }

    /// (alpha, beta) for root-lattice vectors in simple-root coordinates.
    pub fn form_on_coords(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.nodes();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * b[j] * self.bilin[i][j];
            }
        }
        s
    }

    pub fn gram(&self) -> &Vec<Vec<BigRational>> {
        &self.gram
    }

    pub fn gram_inv(&self) -> &Vec<Vec<BigRational>> {
        &self.gram_inv
    }

    /// Simple reflection `s_i` on root-lattice coordinates.
    pub fn reflect(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let pairing: i64 = (0..self.nodes()).map(|j| self.gcm.entry(i, j) * v[j]).sum();
        let mut out = v.to_vec();
        out[i] -= pairing;
        out
    }

    fn is_delta_multiple(&self, v: &[i64]) -> Option<i64> {
        let aff = self.affine.as_ref()?;
        let k = v[0] / aff.delta[0];
        if k > 0 && (0..self.nodes()).all(|i| v[i] == k * aff.delta[i]) {
            Some(k)
        } else {
            None
        }
    }

    fn make_root(&self, coords: Vec<i64>) -> Root {
        let height = coords.iter().sum();
        match self.is_delta_multiple(&coords) {
            Some(_) => Root {
                coords,
                height,
                kind: RootKind::Imaginary,
                multiplicity: self.affine.as_ref().unwrap().finite_rank,
            },
            None => Root { coords, height, kind: RootKind::Real, multiplicity: 1 },
        }
    }

    /// All positive roots of height at most `h_max`, with multiplicities,
    /// sorted by (height, coordinates).
    ///
    /// Only finite and untwisted affine simply-laced types are supported: a
    /// lattice vector is a real root exactly when its squared length is 2,
    /// and the imaginary roots are the positive multiples of delta.
    pub fn positive_roots(&self, h_max: i64) -> Result<Vec<Root>, RootDataError> {
        if self.kind == MatrixKind::Indefinite {
            return Err(RootDataError::UnsupportedKind("indefinite".into()));
        }
        if !self.is_simply_laced() {
            return Err(RootDataError::NotSimplyLaced);
        }
        let n = self.nodes();
        let mut seen: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut c = vec![0i64; n];
            c[i] = 1;
            seen.insert(c.clone());
            frontier.push(c);
        }
        let mut height = 1i64;
        while height < h_max && !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for i in 0..n {
                    let mut c = v.clone();
                    c[i] += 1;
                    if seen.contains(&c) {
                        continue;
                    }
                    let is_root = self.form_on_coords(&c, &c) == 2 || self.is_delta_multiple(&c).is_some();
                    if is_root {
                        seen.insert(c.clone());
                        next.push(c);
                    }
                }
            }
            frontier = next;
            height += 1;
        }
        let mut roots: Vec<Root> = seen.into_iter().map(|c| self.make_root(c)).collect();
        roots.sort_by(|a, b| (a.height, &a.coords).cmp(&(b.height, &b.coords)));
        Ok(roots)
    }

    /// The complete finite positive root set (finite kind only).
    pub fn all_positive_roots(&self) -> Result<Vec<Root>, RootDataError> {
        if self.kind != MatrixKind::Finite {
            return Err(RootDataError::UnsupportedKind(self.kind.to_string()));
        }
        // heights are bounded by the number of positive roots
        let bound = (self.nodes() * self.nodes()) as i64 + 1;
        self.positive_roots(bound)
    }

    /// Height-descent reduced word for a positive real root. Ties between
    /// height-decreasing reflections are broken by smallest index.
    pub fn reduced_word(&self, root: &Root) -> Result<ReducedWordEntry, RootDataError> {
        if root.kind != RootKind::Real || root.height < 1 {
            return Err(RootDataError::NotRealPositive);
        }
        let mut word = Vec::new();
        let mut v = root.coords.clone();
        loop {
            if let Some(i) = (0..self.nodes()).find(|&i| v[i] != 0 && v.iter().enumerate().all(|(j, &c)| (j == i && c == 1) || (j != i && c == 0))) {
                return Ok(ReducedWordEntry { root: root.clone(), word, terminal: i });
            }
            let i = (0..self.nodes())
                .find(|&i| self.form_on_coords(&v, &unit(self.nodes(), i)) > 0)
                .ok_or(RootDataError::NotRealPositive)?;
            v = self.reflect(i, &v);
            word.push(i);
        }
    }

    /// Up to `cap` distinct reduced words for a positive real root, all of the
    /// same (minimal stored) length, by exploring every height-decreasing
    /// reflection at each step.
    pub fn reduced_words(&self, root: &Root, cap: usize) -> Result<Vec<ReducedWordEntry>, RootDataError> {
        if root.kind != RootKind::Real || root.height < 1 {
            return Err(RootDataError::NotRealPositive);
        }
        let mut out = Vec::new();
        let mut stack: Vec<(Vec<i64>, Vec<usize>)> = vec![(root.coords.clone(), Vec::new())];
        while let Some((v, word)) = stack.pop() {
            if out.len() >= cap {
                break;
            }
            if let Some(i) = (0..self.nodes()).find(|&i| v[i] == 1 && v.iter().sum::<i64>() == 1) {
                out.push(ReducedWordEntry { root: root.clone(), word, terminal: i });
                continue;
            }
            for i in (0..self.nodes()).rev() {
                if self.form_on_coords(&v, &unit(self.nodes(), i)) > 0 {
                    let mut w = word.clone();
                    w.push(i);
                    stack.push((self.reflect(i, &v), w));
                }
            }
        }
        out.sort_by(|a, b| (&a.word, a.terminal).cmp(&(&b.word, b.terminal)));
        out.dedup();
        Ok(out)
    }

    /// Replays a reduced word; returns the root coordinates it produces.
    pub fn replay_word(&self, entry: &ReducedWordEntry) -> Vec<i64> {
        let mut v = unit(self.nodes(), entry.terminal);
        for &i in entry.word.iter().rev() {
            v = self.reflect(i, &v);
        }
        v
    }

    /// Action of the word's Weyl element on the simple roots, as a matrix of
    /// coordinate images. Two reduced words represent the same element (are
    /// braid-equivalent) exactly when these agree, terminals included.
    pub fn word_weyl_action(&self, entry: &ReducedWordEntry) -> Vec<Vec<i64>> {
        (0..self.nodes())
            .map(|j| {
                let mut v = unit(self.nodes(), j);
                for &i in entry.word.iter().rev() {
                    v = self.reflect(i, &v);
                }
                v
            })
            .collect()
    }

    /// Dual Coxeter number. Affine: sum of dual marks. Finite simply-laced:
    /// sum of dual marks of the extended diagram, i.e. 1 + height of the
    /// highest root.
    pub fn dual_coxeter(&self) -> Result<i64, RootDataError> {
        match (&self.kind, &self.affine) {
            (MatrixKind::Affine, Some(aff)) => Ok(aff.dual_coxeter),
            (MatrixKind::Finite, _) => {
                let roots = self.all_positive_roots()?;
                let theta = roots.last().expect("nonempty root system");
                Ok(1 + theta.height)
            }
            _ => Err(RootDataError::UnsupportedKind(self.kind.to_string())),
        }
    }

    /// Verifies `sum_{alpha > 0} (alpha, alpha_i)(alpha, alpha_j) =
    /// h_vee (alpha_i, alpha_j)` over the full finite root set.
    pub fn killing_check(&self) -> Result<bool, RootDataError> {
        if self.kind != MatrixKind::Finite {
            return Err(RootDataError::UnsupportedKind(self.kind.to_string()));
        }
        let hv = self.dual_coxeter()?;
        let roots = self.all_positive_roots()?;
        let n = self.nodes();
        for i in 0..n {
            for j in 0..n {
                let lhs: i64 = roots
                    .iter()
                    .map(|r| {
                        self.form_on_coords(&r.coords, &unit(n, i)) * self.form_on_coords(&r.coords, &unit(n, j))
                    })
                    .sum();
                if lhs != hv * self.bilin(i, j) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Values of the functional `alpha` (a root-lattice vector) on the Cartan
    /// basis: `<alpha, h_i> = (alpha, alpha_i)` and, when affine,
    /// `<alpha, d> = alpha_0`.
    pub fn root_functional(&self, coords: &[i64]) -> Weight {
        let n = self.nodes();
        let mut vals: Vec<Scalar> = (0..n)
            .map(|i| Scalar::from_int(self.form_on_coords(coords, &unit(n, i))))
            .collect();
        if self.is_affine() {
            vals.push(Scalar::from_int(coords[0]));
        }
        Weight::new(vals)
    }

    /// Invariant pairing of two weights via the dual Cartan basis:
    /// `(lambda, mu) = sum_k lambda(u^k) mu(u_k)`.
    pub fn weight_pairing(&self, l: &Weight, m: &Weight) -> Scalar {
        let dim = self.cartan_dim;
        assert_eq!(l.values.len(), dim);
        assert_eq!(m.values.len(), dim);
        let mut acc = Scalar::zero();
        for k in 0..dim {
            for t in 0..dim {
                let g = &self.gram_inv[k][t];
                if g.is_zero() {
                    continue;
                }
                acc = acc.add_ref(&l.values[k].mul_ref(&m.values[t]).mul_ref(&Scalar::from_rational(g.clone())));
            }
        }
        acc
    }

    /// The Weyl-vector-like weight with value 1 on every `h_i` and 0 on `d`.
    pub fn rho(&self) -> Weight {
        let mut vals = vec![Scalar::one(); self.nodes()];
        if self.is_affine() {
            vals.push(Scalar::zero());
        }
        Weight::new(vals)
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; n];
    v[i] = 1;
    v
}

/// Minimal positive integer kernel vector of the GCM (or its transpose).
fn positive_integer_kernel(gcm: &Gcm, transpose: bool) -> Option<Vec<i64>> {
    let n = gcm.size();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = if transpose { gcm.entry(j, i) } else { gcm.entry(i, j) };
                    BigRational::from_integer(e.into())
                })
                .collect()
        })
        .collect();
    // Gaussian elimination to reduced row echelon form
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pv = m[row][col].clone();
        for c in 0..n {
            m[row][c] = &m[row][c] / &pv;
        }
        for r in 0..n {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..n {
                    let sub = &f * &m[row][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if row != n - 1 {
        return None; // kernel not one-dimensional
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut v = vec![BigRational::zero(); n];
    v[free] = BigRational::one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -m[r][free].clone();
    }
    let mut lcm = BigInt::one();
    for x in &v {
        lcm = num::integer::lcm(lcm.clone(), x.denom().clone());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = num::integer::gcd(g.clone(), x.clone());
    }
    let mut out: Vec<i64> = ints.iter().map(|x| i64::try_from(&(x / &g)).ok()).collect::<Option<Vec<_>>>()?;
    if out.iter().all(|&x| x <= 0) {
        for x in &mut out {
            *x = -*x;
        }
    }
    if out.iter().any(|&x| x <= 0) {
        return None;
    }
    Some(out)
}

/// Exact inverse of a rational matrix; `None` when singular.
pub(crate) fn rational_inverse(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        inv.swap(col, p);
        let pv = a[col][col].clone();
        for c in 0..n {
            a[col][c] = &a[col][c] / &pv;
            inv[col][c] = &inv[col][c] / &pv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let s1 = &f * &a[col][c];
                    a[r][c] -= s1;
                    let s2 = &f * &inv[col][c];
                    inv[r][c] -= s2;
                }
            }
        }
    }
    Some(inv)
}

/// A weight: exact values on the Cartan basis `{alpha_i^vee} (+ d)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight {
    pub values: Vec<Scalar>,
}

impl Weight {
    pub fn new(values: Vec<Scalar>) -> Self {
        Weight { values }
    }

    pub fn zero(dim: usize) -> Self {
        Weight { values: vec![Scalar::zero(); dim] }
    }

    pub fn add(&self, rhs: &Weight) -> Weight {
        Weight::new(
            self.values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Weight) -> Weight {
        Weight::new(
            self.values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Scalar) -> Weight {
        Weight::new(self.values.iter().map(|a| a.mul_ref(c)).collect())
    }
}

/// Supported algebra names: `A<n>` (finite sl_{n+1}) and `A<n>affine`
/// (untwisted affine A_n^{(1)}).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraId {
    /// Finite type A with `n` nodes, i.e. sl_{n+1}.
    FiniteA(usize),
    /// Affine type A_n^{(1)} with `n + 1` nodes, underlying sl_{n+1}.
    AffineA(usize),
}

impl AlgebraId {
    pub fn parse(name: &str) -> Result<Self, RootDataError> {
        let err = || RootDataError::UnknownAlgebra(name.to_string());
        if let Some(rest) = name.strip_prefix('A') {
            if let Some(num) = rest.strip_suffix("affine") {
                let n: usize = num.parse().map_err(|_| err())?;
                if n >= 2 {
                    return Ok(AlgebraId::AffineA(n));
                }
            } else if let Ok(n) = rest.parse::<usize>() {
                if n >= 2 {
                    return Ok(AlgebraId::FiniteA(n));
                }
            }
        }
        Err(err())
    }

    pub fn name(&self) -> String {
        match self {
            AlgebraId::FiniteA(n) => format!("A{n}"),
            AlgebraId::AffineA(n) => format!("A{n}affine"),
        }
    }

    /// Matrix size of the underlying sl_m.
    pub fn matrix_size(&self) -> usize {
        match self {
            AlgebraId::FiniteA(n) => n + 1,
            AlgebraId::AffineA(n) => n + 1,
        }
    }

    pub fn is_affine(&self) -> bool {
        matches!(self, AlgebraId::AffineA(_))
    }

    /// Builds the Cartan matrix for this algebra.
    pub fn gcm(&self) -> Gcm {
        match self {
            AlgebraId::FiniteA(n) => {
                let n = *n;
                let mut a = vec![vec![0i64; n]; n];
                for i in 0..n {
                    a[i][i] = 2;
                    if i + 1 < n {
                        a[i][i + 1] = -1;
                        a[i + 1][i] = -1;
                    }
                }
                Gcm::new(a).expect("valid finite type A matrix")
            }
            AlgebraId::AffineA(n) => {
                let m = n + 1;
                let mut a = vec![vec![0i64; m]; m];
                for i in 0..m {
                    a[i][i] = 2;
                    let j = (i + 1) % m;
                    a[i][j] += -1;
                    a[j][i] += -1;
                }
                Gcm::new(a).expect("valid affine type A matrix")
            }
        }
    }

    pub fn datum(&self) -> Arc<RootDatum> {
        RootDatum::new(self.gcm()).expect("type A root datum")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Arc<RootDatum> {
        AlgebraId::FiniteA(2).datum()
    }

    fn a2_affine() -> Arc<RootDatum> {
        AlgebraId::AffineA(2).datum()
    }

    #[test]
    fn classify_examples() {
        let g = Gcm::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(g.classify(), MatrixKind::Finite);
        assert_eq!(g.symmetrizer(), &[1, 1]);

        let g = Gcm::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(g.classify(), MatrixKind::Affine);
        assert_eq!(g.symmetrizer(), &[1, 1]);

        // det = 4 - 4 = 0 with positive proper minors: twisted affine
        let g = Gcm::new(vec![vec![2, -1], vec![-4, 2]]).unwrap();
        assert_eq!(g.classify(), MatrixKind::Affine);
        assert_eq!(g.symmetrizer(), &[4, 1]);

        // det = 4 - 5 = -1 < 0
        let g = Gcm::new(vec![vec![2, -1], vec![-5, 2]]).unwrap();
        assert_eq!(g.classify(), MatrixKind::Indefinite);
        assert_eq!(g.symmetrizer(), &[5, 1]);
    }

    #[test]
    fn gcm_axioms_are_enforced() {
        assert!(Gcm::new(vec![vec![1, 0], vec![0, 2]]).is_err());
        assert!(Gcm::new(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(Gcm::new(vec![vec![2, -1], vec![0, 2]]).is_err());
    }

    #[test]
    fn sl3_positive_roots() {
        let d = a2();
        let roots = d.positive_roots(3).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().all(|r| r.kind == RootKind::Real && r.multiplicity == 1));
        assert_eq!(roots.last().unwrap().coords, vec![1, 1]);
    }

    #[test]
    fn affine_a2_roots_contain_delta_with_multiplicity_two() {
        let d = a2_affine();
        let roots = d.positive_roots(3).unwrap();
        let delta: Vec<_> = roots.iter().filter(|r| r.kind == RootKind::Imaginary).collect();
        assert_eq!(delta.len(), 1);
        assert_eq!(delta[0].coords, vec![1, 1, 1]);
        assert_eq!(delta[0].multiplicity, 2);
    }

    #[test]
    fn height_one_roots_are_the_simple_roots() {
        for d in [a2(), a2_affine(), AlgebraId::FiniteA(3).datum()] {
            let roots = d.positive_roots(1).unwrap();
            assert_eq!(roots.len(), d.nodes());
            assert!(roots.iter().all(|r| r.height == 1 && r.multiplicity == 1));
        }
    }

    #[test]
    fn reduced_word_examples() {
        let d = a2();
        let roots = d.positive_roots(3).unwrap();
        let alpha1 = roots.iter().find(|r| r.coords == vec![1, 0]).unwrap();
        let w = d.reduced_word(alpha1).unwrap();
        assert!(w.word.is_empty());
        assert_eq!(w.terminal, 0);

        let theta = roots.last().unwrap();
        let w = d.reduced_word(theta).unwrap();
        assert_eq!(w.word, vec![0]);
        assert_eq!(w.terminal, 1);
        assert_eq!(d.replay_word(&w), theta.coords);
    }

    #[test]
    fn affine_reduced_word_replay() {
        let d = a2_affine();
        // alpha_1 + delta has coordinates (1, 2, 1)
        let roots = d.positive_roots(4).unwrap();
        let target: Vec<_> = roots.iter().filter(|r| r.coords == vec![1, 2, 1]).collect();
        assert_eq!(target.len(), 1);
        let w = d.reduced_word(target[0]).unwrap();
        assert!(w.word.len() >= 2);
        assert_eq!(d.replay_word(&w), target[0].coords);
    }

    #[test]
    fn reduced_word_replay_up_to_height_six() {
        for d in [a2(), AlgebraId::FiniteA(3).datum(), a2_affine()] {
            for r in d.positive_roots(6).unwrap() {
                if r.kind != RootKind::Real {
                    continue;
                }
                for w in d.reduced_words(&r, 6).unwrap() {
                    assert_eq!(d.replay_word(&w), r.coords, "replay failed for {:?}", r.coords);
                }
            }
        }
    }

    #[test]
    fn reflection_is_an_involution() {
        let d = a2_affine();
        for r in d.positive_roots(5).unwrap() {
            for i in 0..d.nodes() {
                assert_eq!(d.reflect(i, &d.reflect(i, &r.coords)), r.coords);
            }
        }
    }

    #[test]
    fn delta_is_orthogonal_to_all_simple_roots() {
        let d = a2_affine();
        let delta = &d.affine().unwrap().delta;
        for i in 0..d.nodes() {
            assert_eq!(d.form_on_coords(delta, &{
                let mut u = vec![0i64; d.nodes()];
                u[i] = 1;
                u
            }), 0);
        }
    }

    #[test]
    fn dual_coxeter_and_killing() {
        assert_eq!(a2().dual_coxeter().unwrap(), 3);
        assert_eq!(AlgebraId::FiniteA(3).datum().dual_coxeter().unwrap(), 4);
        assert_eq!(a2_affine().dual_coxeter().unwrap(), 3);
        assert_eq!(a2_affine().affine().unwrap().dual_marks, vec![1, 1, 1]);
        assert!(a2().killing_check().unwrap());
        assert!(AlgebraId::FiniteA(3).datum().killing_check().unwrap());
    }

    #[test]
    fn dual_basis_contraction_matches_form() {
        // sum_k (x, u^k)(u_k, y) = (x, y) for Cartan basis elements x, y
        for d in [a2(), a2_affine()] {
            let dim = d.cartan_dim();
            for x in 0..dim {
                for y in 0..dim {
                    // lambda = (x-th basis functional via gram row), etc.
                    let gx: Vec<Scalar> = (0..dim).map(|k| Scalar::from_rational(d.gram()[x][k].clone())).collect();
                    let gy: Vec<Scalar> = (0..dim).map(|k| Scalar::from_rational(d.gram()[y][k].clone())).collect();
                    let lhs = d.weight_pairing(&Weight::new(gx), &Weight::new(gy));
                    assert_eq!(lhs, Scalar::from_rational(d.gram()[x][y].clone()));
                }
            }
        }
    }

    #[test]
    fn algebra_names_parse() {
        assert_eq!(AlgebraId::parse("A3").unwrap(), AlgebraId::FiniteA(3));
        assert_eq!(AlgebraId::parse("A2affine").unwrap(), AlgebraId::AffineA(2));
        assert!(AlgebraId::parse("B2").is_err());
        assert!(AlgebraId::parse("A1affine").is_err());
    }
}
