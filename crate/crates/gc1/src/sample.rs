//! Seeded random generators for the property and self-test suites.
//!
//! All sampling is over exact rationals with small numerators and
//! denominators; the checks downstream are exact, so the samples only decide
//! which instances get exercised, never the verdict tolerance.

use alloc::vec::Vec;

use rand_core::RngCore;

use crate::characters::GenWeight;
use crate::conformal::{project, GcElement, SubalgebraTag};
use crate::diffops::{d0sigmabar_basis, dsigma_basis, DiffOp, GeneratorSet};
use crate::glinf::{classical_reflection, BandedMat, ClassicalFamily, Diagonal, JPoly, RmPoly};
use crate::poly::{BivarPoly, UnivarPoly};
use crate::rat::Rat;

fn below(rng: &mut impl RngCore, n: u64) -> u64 {
    rng.next_u64() % n
}

fn int_between(rng: &mut impl RngCore, lo: i64, hi: i64) -> i64 {
    lo + below(rng, (hi - lo + 1) as u64) as i64
}

/// A rational with numerator in `[-max_num, max_num]` and denominator in
/// `[1, max_den]`.
pub fn rat(rng: &mut impl RngCore, max_num: i64, max_den: i64) -> Rat {
    Rat::frac(int_between(rng, -max_num, max_num), int_between(rng, 1, max_den))
}

/// A nonzero rational.
pub fn rat_nonzero(rng: &mut impl RngCore, max_num: i64, max_den: i64) -> Rat {
    loop {
        let v = rat(rng, max_num, max_den);
        if !v.is_zero() {
            return v;
        }
    }
}

/// A sparse polynomial in `(∂, x)` of total degree at most `deg`.
pub fn bivar_poly(rng: &mut impl RngCore, deg: u32) -> BivarPoly {
    let mut p = BivarPoly::zero();
    let terms = 1 + below(rng, 4) as usize;
    for _ in 0..terms {
        let a = below(rng, deg as u64 + 1) as u32;
        let b = below(rng, (deg - a) as u64 + 1) as u32;
        p.add_term(a, b, rat(rng, 4, 3));
    }
    p
}

/// A random member of the tagged subalgebra, via the defining projection.
pub fn gc_member(rng: &mut impl RngCore, tag: SubalgebraTag, deg: u32) -> GcElement {
    loop {
        let raw = GcElement::new(bivar_poly(rng, deg));
        let candidate = match tag {
            SubalgebraTag::Gc1 => raw,
            _ => project(tag, &raw).expect("projection defined"),
        };
        if !candidate.is_zero() {
            return candidate;
        }
    }
}

/// A polynomial in one variable of degree at most `deg`.
pub fn univar_poly(rng: &mut impl RngCore, deg: u32) -> UnivarPoly {
    let mut p = UnivarPoly::zero();
    for e in 0..=deg {
        if below(rng, 2) == 0 {
            p.add_term(e as i64, rat(rng, 4, 3));
        }
    }
    if p.is_zero() {
        p.add_term(below(rng, deg as u64 + 1) as i64, Rat::one());
    }
    p
}

/// A differential operator supported on `|k| ≤ max_k` with coefficient
/// degrees at most `deg_f`.
pub fn diffop(rng: &mut impl RngCore, max_k: i64, deg_f: u32) -> DiffOp {
    let mut op = DiffOp::zero();
    let terms = 1 + below(rng, 3);
    for _ in 0..terms {
        let k = int_between(rng, -max_k, max_k);
        op = op.add(&DiffOp::tk_f(k, univar_poly(rng, deg_f)));
    }
    op
}

/// A random regular-at-origin operator: positive `t`-powers are free, the
/// `t^{−j}` components carry the vanishing enforcer.
pub fn dminus_op(rng: &mut impl RngCore, max_j: i64, deg_extra: u32) -> DiffOp {
    let mut op = DiffOp::zero();
    let terms = 1 + below(rng, 3);
    for _ in 0..terms {
        let k = int_between(rng, -max_j, max_j);
        if k >= 0 {
            op = op.add(&DiffOp::tk_f(k, univar_poly(rng, deg_extra)));
        } else {
            let gens = GeneratorSet::DMinus.raising_generators(-k, deg_extra);
            let pick = below(rng, gens.len() as u64) as usize;
            op = op.add(&gens[pick].scale(&rat_nonzero(rng, 3, 2)));
        }
    }
    op
}

/// A random element of the `−σ`-fixed subalgebra.
pub fn dsigma_op(rng: &mut impl RngCore, max_j: i64, max_l: u32) -> DiffOp {
    let mut op = DiffOp::zero();
    for _ in 0..1 + below(rng, 3) {
        let j = int_between(rng, -max_j, max_j);
        let l = below(rng, max_l as u64 + 1) as u32;
        op = op.add(&dsigma_basis(j, l).scale(&rat_nonzero(rng, 3, 2)));
    }
    op
}

/// A random element of the `−σ̄`-fixed constants-killing subalgebra.
pub fn d0sigmabar_op(rng: &mut impl RngCore, max_j: i64, max_l: u32) -> DiffOp {
    let mut op = DiffOp::zero();
    for _ in 0..1 + below(rng, 3) {
        let j = int_between(rng, -max_j, max_j);
        let l = below(rng, max_l as u64 + 1) as u32;
        op = op.add(&d0sigmabar_basis(j, l).scale(&rat_nonzero(rng, 3, 2)));
    }
    op
}

/// A random constants-killing operator.
pub fn d0_op(rng: &mut impl RngCore, max_k: i64, deg_f: u32) -> DiffOp {
    let mut op = DiffOp::zero();
    for _ in 0..1 + below(rng, 3) {
        let k = int_between(rng, -max_k, max_k);
        let f = UnivarPoly::var().mul(&univar_poly(rng, deg_f.saturating_sub(1)));
        op = op.add(&DiffOp::tk_f(k, f));
    }
    op
}

/// A random element of `R_m`.
pub fn rm_poly(rng: &mut impl RngCore, m: u32) -> RmPoly {
    RmPoly::from_coeffs((0..=m).map(|_| rat(rng, 3, 2)).collect())
}

/// A random entry polynomial in the column index.
pub fn j_poly(rng: &mut impl RngCore, m: u32, deg: u32) -> JPoly {
    let mut p = JPoly::zero(m);
    let mut pow = JPoly::constant(RmPoly::one(m));
    let jvar = JPoly::linear(RmPoly::zero(m), RmPoly::one(m));
    for _ in 0..=deg {
        if below(rng, 2) == 0 {
            p = p.add(&pow.scale_rm(&rm_poly(rng, m)));
        }
        pow = pow.mul(&jvar);
    }
    p
}

/// A random banded matrix: a few polynomial diagonals plus a few pointwise
/// corrections.
pub fn banded(rng: &mut impl RngCore, m: u32, max_off: i64, deg_j: u32) -> BandedMat {
    let mut out = BandedMat::zero(m);
    for _ in 0..1 + below(rng, 3) {
        let k = int_between(rng, -max_off, max_off);
        out = out.add(&BandedMat::from_diagonal(m, k, j_poly(rng, m, deg_j)));
    }
    for _ in 0..below(rng, 3) {
        let i = int_between(rng, -4, 4);
        let j = int_between(rng, -4, 4);
        out = out.add(&BandedMat::unit(m, i, j, rm_poly(rng, m)));
    }
    out
}

/// A random banded matrix with a genuinely two-ray diagonal.
pub fn banded_split(rng: &mut impl RngCore, m: u32, max_off: i64, deg_j: u32) -> BandedMat {
    let k = int_between(rng, -max_off, max_off);
    let plus = j_poly(rng, m, deg_j);
    let minus = j_poly(rng, m, deg_j);
    let theta = int_between(rng, -3, 3);
    let out = BandedMat::zero(m).with_diagonal(k, Diagonal::split(theta, plus, minus));
    out.add(&banded(rng, m, max_off, deg_j))
}

/// A random member of the chosen classical family: `A + S(A)` for random `A`
/// (the membership conditions carry their sign inside the reflection, so
/// members form its fixed space).
pub fn classical_member(
    rng: &mut impl RngCore,
    family: ClassicalFamily,
    m: u32,
    max_off: i64,
    deg_j: u32,
) -> BandedMat {
    let a = banded(rng, m, max_off, deg_j);
    a.add(&classical_reflection(family, &a))
}

/// A random weight: when `adversarial` it may violate integrality or
/// monotonicity; otherwise it is a genuine partition-shaped weight.
pub fn gen_weight(rng: &mut impl RngCore, adversarial: bool) -> GenWeight {
    let len = 1 + below(rng, 4) as usize;
    let mut labels: Vec<Rat> = Vec::new();
    if adversarial {
        for _ in 0..len {
            labels.push(match below(rng, 3) {
                0 => rat(rng, 4, 1),
                1 => rat(rng, 4, 3),
                _ => Rat::from_int(int_between(rng, 0, 4)),
            });
        }
    } else {
        let mut cur = int_between(rng, 0, 5);
        for _ in 0..len {
            labels.push(Rat::from_int(cur));
            cur -= int_between(rng, 0, cur.min(2).max(0));
        }
    }
    GenWeight::from_labels(&labels)
}
