//! Exact scalars: arbitrary-precision rationals and multivariate polynomials
//! over the rationals in a fixed, small set of named parameters.
//!
//! Canonical form invariants:
//! - rationals are always reduced (delegated to `num::BigRational`);
//! - polynomials store no zero coefficients and no duplicate monomials;
//! - a polynomial whose only monomial is constant collapses to `Scalar::Rat`.
//!
//! Equality and zero tests are therefore exact and structural. Division is
//! restricted to exactly divisible cases; nothing in this crate divides by a
//! parameter-dependent quantity.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use super::ExactError;

/// Named parameters available to the polynomial backend.
///
/// `A`, `B`, `C` are evaluation-module shift parameters, `Eps` is the second
/// Yangian parameter, and `D1`, `D2` hold symbolic derivation values of
/// highest weights on up to two tensor factors.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Param {
    A,
    B,
    C,
    Eps,
    D1,
    D2,
}

/// Number of declared parameters; monomial exponent vectors have this length.
pub const PARAM_COUNT: usize = 6;

impl Param {
    pub const ALL: [Param; PARAM_COUNT] = [Param::A, Param::B, Param::C, Param::Eps, Param::D1, Param::D2];

    pub fn index(self) -> usize {
        match self {
            Param::A => 0,
            Param::B => 1,
            Param::C => 2,
            Param::Eps => 3,
            Param::D1 => 4,
            Param::D2 => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::A => "a",
            Param::B => "b",
            Param::C => "c",
            Param::Eps => "eps",
            Param::D1 => "d1",
            Param::D2 => "d2",
        }
    }
}

type Exponents = [u8; PARAM_COUNT];

const CONST_MONO: Exponents = [0; PARAM_COUNT];

/// Multivariate polynomial over the rationals in the declared parameters.
///
/// Terms are kept in a sorted map keyed by exponent vector; no zero
/// coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly {
    terms: BTreeMap<Exponents, BigRational>,
}

impl Poly {
    fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    fn constant(c: BigRational) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(CONST_MONO, c);
        }
        p
    }

    fn var(p: Param) -> Self {
        let mut e = CONST_MONO;
        e[p.index()] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, BigRational::one());
        Poly { terms }
    }

    fn add_term(&mut self, expts: Exponents, coeff: &BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(expts).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&expts);
        }
    }

    fn add(&self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }

    fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    fn mul(&self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for k in 0..PARAM_COUNT {
                    e[k] = e[k].checked_add(eb[k]).expect("monomial degree overflow");
                }
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }

    fn is_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&CONST_MONO).cloned(),
            _ => None,
        }
    }

    /// Leading term in the lexicographic order on exponent vectors.
    fn leading(&self) -> Option<(&Exponents, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Exact multivariate division; `None` when `self` is not divisible.
    fn div_exact(&self, rhs: &Poly) -> Option<Poly> {
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        let (le, lc) = rhs.leading()?;
        while let Some((re, rc)) = rem.leading() {
            let mut qe = CONST_MONO;
            for k in 0..PARAM_COUNT {
                if re[k] < le[k] {
                    return None;
                }
                qe[k] = re[k] - le[k];
            }
            let qc = rc / lc;
            let mut t = Poly::zero();
            t.add_term(qe, &qc);
            quot = quot.add(&t);
            rem = rem.add(&t.mul(rhs).neg());
        }
        Some(quot)
    }

    /// Substitutes rational values for all parameters.
    fn eval(&self, values: &[BigRational; PARAM_COUNT]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for k in 0..PARAM_COUNT {
                for _ in 0..e[k] {
                    term *= &values[k];
                }
            }
            acc += term;
        }
        acc
    }
}

/// An exact scalar: a reduced rational or a canonical multivariate polynomial.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Poly(Poly),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q` as an exact rational; panics when `q == 0`.
    pub fn from_frac(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar::Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::Rat(r)
    }

    /// The parameter `p` as a degree-one polynomial scalar.
    pub fn param(p: Param) -> Self {
        Scalar::Poly(Poly::var(p))
    }

    /// Collapses constant polynomials back to the rational backend.
    fn canon(self) -> Self {
        match self {
            Scalar::Poly(p) => match p.is_constant() {
                Some(c) => Scalar::Rat(c),
                None => Scalar::Poly(p),
            },
            rat => rat,
        }
    }

    fn to_poly(&self) -> Poly {
        match self {
            Scalar::Rat(r) => Poly::constant(r.clone()),
            Scalar::Poly(p) => p.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Poly(p) => p.terms.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn add_ref(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => Scalar::Poly(self.to_poly().add(&rhs.to_poly())).canon(),
        }
    }

    pub fn sub_ref(&self, rhs: &Scalar) -> Scalar {
        self.add_ref(&rhs.neg_ref())
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Poly(p) => Scalar::Poly(p.neg()),
        }
    }

    pub fn mul_ref(&self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => Scalar::Poly(self.to_poly().mul(&rhs.to_poly())).canon(),
        }
    }

    /// Exact division. Fails on division by zero and on polynomial inputs
    /// that are not exactly divisible.
    pub fn div_exact(&self, rhs: &Scalar) -> Result<Scalar, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a / b)),
            (Scalar::Poly(p), Scalar::Rat(b)) => {
                let inv = Poly::constant(BigRational::one() / b);
                Ok(Scalar::Poly(p.mul(&inv)).canon())
            }
            (_, Scalar::Poly(q)) => self
                .to_poly()
                .div_exact(q)
                .map(|p| Scalar::Poly(p).canon())
                .ok_or(ExactError::NotDivisible),
        }
    }

    /// Substitutes rational values for every parameter.
    pub fn eval(&self, values: &[BigRational; PARAM_COUNT]) -> BigRational {
        match self {
            Scalar::Rat(r) => r.clone(),
            Scalar::Poly(p) => p.eval(values),
        }
    }

    /// Substitutes a single parameter, leaving the others symbolic.
    pub fn substitute(&self, param: Param, value: &Scalar) -> Scalar {
        match self {
            Scalar::Rat(_) => self.clone(),
            Scalar::Poly(p) => {
                let mut acc = Scalar::zero();
                for (e, c) in &p.terms {
                    let mut term = Scalar::Rat(c.clone());
                    for k in 0..PARAM_COUNT {
                        let base = if k == param.index() {
                            value.clone()
                        } else {
                            Scalar::param(Param::ALL[k])
                        };
                        for _ in 0..e[k] {
                            term = term.mul_ref(&base);
                        }
                    }
                    acc = acc.add_ref(&term);
                }
                acc
            }
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.add_ref(&rhs)
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = self.add_ref(&rhs);
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self.sub_ref(&rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.mul_ref(&rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", r),
            Scalar::Poly(p) => {
                let mut first = true;
                for (e, c) in p.terms.iter().rev() {
                    let neg = c.is_negative();
                    let mag = c.abs();
                    if first {
                        if neg {
                            write!(f, "-")?;
                        }
                        first = false;
                    } else if neg {
                        write!(f, " - ")?;
                    } else {
                        write!(f, " + ")?;
                    }
                    let vars: Vec<String> = (0..PARAM_COUNT)
                        .filter(|&k| e[k] > 0)
                        .map(|k| {
                            if e[k] == 1 {
                                Param::ALL[k].name().to_string()
                            } else {
                                format!("{}^{}", Param::ALL[k].name(), e[k])
                            }
                        })
                        .collect();
                    if vars.is_empty() {
                        write!(f, "{}", mag)?;
                    } else if mag.is_one() {
                        write!(f, "{}", vars.join("*"))?;
                    } else {
                        write!(f, "{}*{}", mag, vars.join("*"))?;
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}

/// Parses an exact rational from `p`, `-p`, or `p/q` notation.
pub fn parse_rational(s: &str) -> Result<BigRational, ExactError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| ExactError::BadRational(s.to_string()))?;
    let d = BigInt::from_str(den).map_err(|_| ExactError::BadRational(s.to_string()))?;
    if d.is_zero() {
        return Err(ExactError::BadRational(s.to_string()));
    }
    Ok(BigRational::new(n, d))
}
