//! Relation templates: each function assembles left-minus-right of one
//! relation as a graded operator whose exact zero verdict decides the case.

use crate::exact::Scalar;
use crate::liemod::Op;
use crate::rootdata::RootDatum;
use crate::yangops::{Sign, Tower};

fn half(c: i64) -> Scalar {
    Scalar::from_frac(c, 2)
}

/// `[h_{i,r}, h_{j,s}]`.
pub fn rel_hh(t: &Tower, i: usize, j: usize, r: usize, s: usize) -> Op {
    t.h(i, r).commutator(t.h(j, s))
}

/// `[h_{i,0}, x^±_{j,s}] - (±(α_i,α_j)) x^±_{j,s}`.
pub fn rel_hx(t: &Tower, d: &RootDatum, sign: Sign, i: usize, j: usize, s: usize) -> Op {
    let x = t.x(sign, j, s);
    t.h(i, 0)
        .commutator(x)
        .sub(&x.scale(&Scalar::from_int(sign.factor() * d.bilin(i, j))))
}

/// `[x^+_{i,r}, x^-_{j,s}] - δ_{ij} h_{i,r+s}`.
pub fn rel_xx(t: &Tower, i: usize, j: usize, r: usize, s: usize) -> Op {
    let lhs = t.x(Sign::Plus, i, r).commutator(t.x(Sign::Minus, j, s));
    if i == j {
        lhs.sub(t.h(i, r + s))
    } else {
        lhs
    }
}

/// `[h_{i,r+1}, x^±_{j,s}] - [h_{i,r}, x^±_{j,s+1}]
///   - (±(α_i,α_j)/2) {h_{i,r}, x^±_{j,s}}`.
pub fn rel_exhx(t: &Tower, d: &RootDatum, sign: Sign, i: usize, j: usize, r: usize, s: usize) -> Op {
    t.h(i, r + 1)
        .commutator(t.x(sign, j, s))
        .sub(&t.h(i, r).commutator(t.x(sign, j, s + 1)))
        .sub(
            &t.h(i, r)
                .anticommutator(t.x(sign, j, s))
                .scale(&half(sign.factor() * d.bilin(i, j))),
        )
}

/// `[x^±_{i,r+1}, x^±_{j,s}] - [x^±_{i,r}, x^±_{j,s+1}]
///   - (±(α_i,α_j)/2) {x^±_{i,r}, x^±_{j,s}}`.
pub fn rel_exxx(t: &Tower, d: &RootDatum, sign: Sign, i: usize, j: usize, r: usize, s: usize) -> Op {
    t.x(sign, i, r + 1)
        .commutator(t.x(sign, j, s))
        .sub(&t.x(sign, i, r).commutator(t.x(sign, j, s + 1)))
        .sub(
            &t.x(sign, i, r)
                .anticommutator(t.x(sign, j, s))
                .scale(&half(sign.factor() * d.bilin(i, j))),
        )
}

/// Symmetrized Serre residual: `Σ_{σ ∈ S_b} [x^±_{i,r_{σ(1)}},
/// [ .. [x^±_{i,r_{σ(b)}}, x^±_{j,s}] .. ]]` with `b = 1 - a_ij`.
pub fn rel_serre(t: &Tower, sign: Sign, i: usize, j: usize, rs: &[usize], s: usize) -> Op {
    let mut acc: Option<Op> = None;
    for perm in permutations(rs) {
        let mut term = t.x(sign, j, s).clone();
        for &r in perm.iter().rev() {
            term = t.x(sign, i, r).commutator(&term);
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.expect("b >= 1")
}

fn permutations(rs: &[usize]) -> Vec<Vec<usize>> {
    if rs.len() <= 1 {
        return vec![rs.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..rs.len() {
        let mut rest = rs.to_vec();
        let head = rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// `[h~_{i,1}, x^±_{j,0}] - (±(α_i,α_j)) x^±_{j,1}`.
pub fn rel_exhx2(t: &Tower, d: &RootDatum, sign: Sign, i: usize, j: usize) -> Op {
    t.htilde1(i)
        .commutator(t.x(sign, j, 0))
        .sub(&t.x(sign, j, 1).scale(&Scalar::from_int(sign.factor() * d.bilin(i, j))))
}

/// `[[h~_{i,1}, x^+_{i,1}], x^-_{i,1}] + [x^+_{i,1}, [h~_{i,1}, x^-_{i,1}]]`.
pub fn rel_hh2(t: &Tower, i: usize) -> Op {
    let ht = t.htilde1(i);
    ht.commutator(t.x(Sign::Plus, i, 1))
        .commutator(t.x(Sign::Minus, i, 1))
        .add(&t.x(Sign::Plus, i, 1).commutator(&ht.commutator(t.x(Sign::Minus, i, 1))))
}

/// `[h~_{i,2}, x^±_{j,0}] - (±(α_i,α_j)) x^±_{j,2} - (±(α_i,α_j)^3/12)
/// x^±_{j,0}`; `flip_tail` negates the degree-three term (negative control).
pub fn rel_hx2(t: &Tower, d: &RootDatum, sign: Sign, i: usize, j: usize, flip_tail: bool) -> Op {
    let c = d.bilin(i, j);
    let tail_sign = if flip_tail { -1 } else { 1 };
    t.htilde2(i)
        .commutator(t.x(sign, j, 0))
        .sub(&t.x(sign, j, 2).scale(&Scalar::from_int(sign.factor() * c)))
        .sub(
            &t.x(sign, j, 0)
                .scale(&Scalar::from_frac(tail_sign * sign.factor() * c * c * c, 12)),
        )
}

/// `[h_{j,1}, x^±_{i,1}] - ((α_i,α_j)/(α_i,α_i)) [h_{i,1}, x^±_{i,1}]
///   - (±(α_i,α_j)/2) ({h_{j,0}, x^±_{i,1}} - {h_{i,0}, x^±_{i,1}})`.
pub fn rel_l210(t: &Tower, d: &RootDatum, sign: Sign, i: usize, j: usize) -> Op {
    let x = t.x(sign, i, 1);
    t.h(j, 1)
        .commutator(x)
        .sub(
            &t.h(i, 1)
                .commutator(x)
                .scale(&Scalar::from_frac(d.bilin(i, j), d.bilin(i, i))),
        )
        .sub(
            &t.h(j, 0)
                .anticommutator(x)
                .sub(&t.h(i, 0).anticommutator(x))
                .scale(&half(sign.factor() * d.bilin(i, j))),
        )
}

/// The three equalities of the level-two cross relation:
/// `[x^+_{i,1}, x^-_{i,1}] = [x^+_{i,2}, x^-_{i,0}] = [x^+_{i,0}, x^-_{i,2}]
///   = h_{i,2}`; `variant` picks the left-hand side.
pub fn rel_l212(t: &Tower, i: usize, variant: usize) -> Op {
    let lhs = match variant {
        0 => t.x(Sign::Plus, i, 1).commutator(t.x(Sign::Minus, i, 1)),
        1 => t.x(Sign::Plus, i, 2).commutator(t.x(Sign::Minus, i, 0)),
        _ => t.x(Sign::Plus, i, 0).commutator(t.x(Sign::Minus, i, 2)),
    };
    lhs.sub(t.h(i, 2))
}
