//! The conformal algebra on `ℚ[∂, x]` and its infinite-rank subalgebras.
//!
//! Elements are polynomials `a(∂, x)`; the λ-bracket is the closed
//! substitution formula
//!
//! ```text
//! [a(∂,x) λ b(∂,x)] = a(−λ, λ+∂+x)·b(λ+∂, x) − b(λ+∂, −λ+x)·a(−λ, x)
//! ```
//!
//! Three families sit inside: the ideal of multiples of `x`, the
//! antisymmetric elements `a(∂,x) − a(∂,−∂−x)`, and the symmetrized multiples
//! `x·[a(∂,x) + a(∂,−∂−x)]`. Every element `x + α∂` generates a Virasoro
//! subalgebra.

use alloc::collections::BTreeMap;
use core::fmt;

use crate::poly::{Bindings, BivarPoly, LambdaPoly, UnivarPoly, Var};
use crate::rat::Rat;

/// An element `a(∂, x)` of the conformal algebra.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GcElement {
    poly: BivarPoly,
}

impl GcElement {
    pub fn new(poly: BivarPoly) -> Self {
        GcElement { poly }
    }

    pub fn zero() -> Self {
        GcElement::new(BivarPoly::zero())
    }

    pub fn one() -> Self {
        GcElement::new(BivarPoly::one())
    }

    pub fn x() -> Self {
        GcElement::new(BivarPoly::var_x())
    }

    pub fn del() -> Self {
        GcElement::new(BivarPoly::var_del())
    }

    /// The Virasoro generator `x + α∂`.
    pub fn virasoro(alpha: &Rat) -> Self {
        GcElement::new(BivarPoly::var_x().add(&BivarPoly::var_del().scale(alpha)))
    }

    pub fn poly(&self) -> &BivarPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        GcElement::new(self.poly.add(&other.poly))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        GcElement::new(self.poly.scale(c))
    }
}

impl fmt::Debug for GcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

impl fmt::Display for GcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Tags for the full algebra and its three distinguished subalgebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubalgebraTag {
    /// The full algebra `ℚ[∂, x]`.
    Gc1,
    /// `x·ℚ[∂, x]`.
    Gc1X,
    /// Antisymmetric elements `a(∂,x) − a(∂,−∂−x)`.
    Oc1,
    /// Symmetrized multiples `x·[a(∂,x) + a(∂,−∂−x)]`.
    Spc1,
}

impl SubalgebraTag {
    pub fn name(&self) -> &'static str {
        match self {
            SubalgebraTag::Gc1 => "gc1",
            SubalgebraTag::Gc1X => "gc1x",
            SubalgebraTag::Oc1 => "oc1",
            SubalgebraTag::Spc1 => "spc1",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConformalError {
    /// `project` is undefined for the full algebra.
    NoProjection,
    /// A closure check was fed an element outside the subalgebra.
    NotAMember { which: &'static str },
}

impl fmt::Display for ConformalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConformalError::NoProjection => write!(f, "no projection onto the full algebra"),
            ConformalError::NotAMember { which } => {
                write!(f, "{} argument is not a member of the subalgebra", which)
            }
        }
    }
}

fn lambda() -> LambdaPoly {
    LambdaPoly::var_lambda()
}

fn del() -> LambdaPoly {
    LambdaPoly::var_del()
}

fn xx() -> LambdaPoly {
    LambdaPoly::var_x()
}

/// The λ-bracket via the closed substitution formula.
pub fn lambda_bracket(a: &GcElement, b: &GcElement) -> LambdaPoly {
    // a(−λ, λ+∂+x) · b(λ+∂, x)
    let a1 = a
        .poly
        .substitute(
            &Bindings::new()
                .bind(Var::Del, lambda().neg())
                .bind(Var::X, lambda().add(&del()).add(&xx())),
        )
        .expect("full bindings");
    let b1 = b
        .poly
        .substitute(
            &Bindings::new()
                .bind(Var::Del, lambda().add(&del()))
                .bind(Var::X, xx()),
        )
        .expect("full bindings");
    // b(λ+∂, −λ+x) · a(−λ, x)
    let b2 = b
        .poly
        .substitute(
            &Bindings::new()
                .bind(Var::Del, lambda().add(&del()))
                .bind(Var::X, xx().sub(&lambda())),
        )
        .expect("full bindings");
    let a2 = a
        .poly
        .substitute(
            &Bindings::new()
                .bind(Var::Del, lambda().neg())
                .bind(Var::X, xx()),
        )
        .expect("full bindings");
    a1.mul(&b1).sub(&b2.mul(&a2))
}

/// True iff `L = x + α∂` satisfies `[L λ L] = (2λ + ∂)·L`.
pub fn virasoro_check(alpha: &Rat) -> bool {
    let l = GcElement::virasoro(alpha);
    let got = lambda_bracket(&l, &l);
    let two_lambda_del = lambda().scale(&Rat::from_int(2)).add(&del());
    let want = two_lambda_del.mul(&l.poly.to_lambda());
    got == want
}

/// Polynomials in `(λ, μ, ∂, x)`, used internally by the axiom checks.
type QuadPoly = BTreeMap<(u32, u32, u32, u32), Rat>;

fn quad_add(acc: &mut QuadPoly, key: (u32, u32, u32, u32), c: Rat) {
    if c.is_zero() {
        return;
    }
    let entry = acc.entry(key).or_insert_with(Rat::zero);
    *entry = &*entry + &c;
    if entry.is_zero() {
        acc.remove(&key);
    }
}

/// Accumulate `μ^k ·` (a λ-polynomial) into a quad accumulator, with `swap`
/// exchanging the roles of λ and μ.
fn quad_accumulate(acc: &mut QuadPoly, mu_deg: u32, p: &LambdaPoly, swap: bool, sign: i64) {
    let s = Rat::from_int(sign);
    for (l, a, b, c) in p.terms() {
        let key = if swap {
            (mu_deg, l, a, b)
        } else {
            (l, mu_deg, a, b)
        };
        quad_add(acc, key, &s * c);
    }
}

/// Conformal Jacobi identity checked exactly as a polynomial identity in
/// `(λ, μ, ∂, x)`:
///
/// ```text
/// [a λ [b μ c]] − [b μ [a λ c]] = [[a λ b] (λ+μ) c]
/// ```
pub fn check_jacobi(a: &GcElement, b: &GcElement, c: &GcElement) -> bool {
    let mut lhs: QuadPoly = BTreeMap::new();

    // [a λ [b μ c]]: inner bracket parameter plays the role of μ.
    for (mu_deg, inner) in lambda_bracket(b, c).lambda_coefficients() {
        let outer = lambda_bracket(a, &GcElement::new(inner));
        quad_accumulate(&mut lhs, mu_deg, &outer, false, 1);
    }
    // − [b μ [a λ c]]: inner parameter is λ, outer is μ.
    for (l_deg, inner) in lambda_bracket(a, c).lambda_coefficients() {
        let outer = lambda_bracket(b, &GcElement::new(inner));
        quad_accumulate(&mut lhs, l_deg, &outer, true, -1);
    }

    // [[a λ b] (λ+μ) c]: bracket each λ-coefficient with parameter ν, then
    // substitute ν ↦ λ+μ.
    let mut rhs: QuadPoly = BTreeMap::new();
    for (l_deg, coeff) in lambda_bracket(a, b).lambda_coefficients() {
        let nu_poly = lambda_bracket(&GcElement::new(coeff), c);
        for (nu, da, db, v) in nu_poly.terms() {
            // (λ+μ)^nu expanded binomially
            for k in 0..=nu {
                let coeff = Rat::binomial(nu, k) * v.clone();
                quad_add(&mut rhs, (l_deg + k, nu - k, da, db), coeff);
            }
        }
    }

    lhs == rhs
}

/// Image of `a` under the symmetrization defining the tagged subalgebra.
pub fn project(tag: SubalgebraTag, a: &GcElement) -> Result<GcElement, ConformalError> {
    let p = &a.poly;
    match tag {
        SubalgebraTag::Gc1 => Err(ConformalError::NoProjection),
        SubalgebraTag::Gc1X => Ok(GcElement::new(p.mul_x())),
        SubalgebraTag::Oc1 => Ok(GcElement::new(p.sub(&p.reflect_x()))),
        SubalgebraTag::Spc1 => Ok(GcElement::new(p.add(&p.reflect_x()).mul_x())),
    }
}

/// Exact membership predicate for the tagged subalgebra.
pub fn is_member(tag: SubalgebraTag, a: &GcElement) -> bool {
    let p = &a.poly;
    match tag {
        SubalgebraTag::Gc1 => true,
        SubalgebraTag::Gc1X => p.divisible_by_x(),
        SubalgebraTag::Oc1 => p.reflect_x() == p.neg(),
        SubalgebraTag::Spc1 => {
            if !p.divisible_by_x() {
                return false;
            }
            let q = p.div_x();
            q.reflect_x() == q
        }
    }
}

/// True iff the bracket of two members lands back in the subalgebra,
/// coefficient by coefficient in λ.
pub fn closure_check(
    tag: SubalgebraTag,
    a: &GcElement,
    b: &GcElement,
) -> Result<bool, ConformalError> {
    if !is_member(tag, a) {
        return Err(ConformalError::NotAMember { which: "first" });
    }
    if !is_member(tag, b) {
        return Err(ConformalError::NotAMember { which: "second" });
    }
    let br = lambda_bracket(a, b);
    Ok(br
        .lambda_coefficients()
        .values()
        .all(|p| is_member(tag, &GcElement::new(p.clone()))))
}

/// The α-twist: substitute `∂ ↦ ∂ + α` in an action value.
pub fn twist(p: &LambdaPoly, alpha: &Rat) -> LambdaPoly {
    p.shift_del(alpha)
}

/// An action of the conformal algebra on polynomials in `∂`: maps an element
/// and a vector `v(∂)` to a polynomial in `(λ, ∂)` (x-degree zero).
pub type ModuleAction = dyn Fn(&BivarPoly, &UnivarPoly) -> LambdaPoly;

/// The standard action on `ℚ[∂]`: `a(∂,x) λ v(∂) := a(−λ, λ+∂) · v(λ+∂)`.
pub fn cend_action(a: &BivarPoly, v: &UnivarPoly) -> LambdaPoly {
    let a_img = a
        .substitute(
            &Bindings::new()
                .bind(Var::Del, lambda().neg())
                .bind(Var::X, lambda().add(&del())),
        )
        .expect("full bindings");
    let mut v_img = LambdaPoly::zero();
    let shifted = lambda().add(&del());
    for (e, c) in v.terms() {
        assert!(e >= 0, "vector must be a polynomial in ∂");
        v_img = v_img.add(&shifted.pow(e as u32).scale(c));
    }
    a_img.mul(&v_img)
}

/// The zero action, useful as a trivial sanity input.
pub fn trivial_action(_a: &BivarPoly, _v: &UnivarPoly) -> LambdaPoly {
    LambdaPoly::zero()
}

/// Verify the conformal module identity for a candidate action:
///
/// ```text
/// [a λ b] (λ+μ) v = a λ (b μ v) − b μ (a λ v)
/// ```
///
/// exactly in `(λ, μ, ∂)`.
pub fn module_axiom_check(
    action: &ModuleAction,
    a: &GcElement,
    b: &GcElement,
    v: &UnivarPoly,
) -> bool {
    // Apply the action to a vector with μ-coefficients: treat each μ-degree
    // separately and collect (λ-deg within result, μ-deg carried along).
    let mut rhs: QuadPoly = BTreeMap::new();

    // a λ (b μ v): the inner action value is a polynomial in (μ, ∂).
    let inner = action(&b.poly, v);
    for (mu_deg, dv) in lambda_degree_split(&inner) {
        let outer = action(&a.poly, &dv);
        quad_accumulate(&mut rhs, mu_deg, &outer, false, 1);
    }
    // − b μ (a λ v)
    let inner = action(&a.poly, v);
    for (l_deg, dv) in lambda_degree_split(&inner) {
        let outer = action(&b.poly, &dv);
        quad_accumulate(&mut rhs, l_deg, &outer, true, -1);
    }

    // [a λ b] (λ+μ) v
    let mut lhs: QuadPoly = BTreeMap::new();
    for (l_deg, coeff) in lambda_bracket(a, b).lambda_coefficients() {
        let nu_poly = action(&coeff, v);
        for (nu, da, db, val) in nu_poly.terms() {
            assert!(db == 0, "action must not introduce x");
            for k in 0..=nu {
                let c = Rat::binomial(nu, k) * val.clone();
                quad_add(&mut lhs, (l_deg + k, nu - k, da, 0), c);
            }
        }
    }

    lhs == rhs
}

/// Split a polynomial in `(λ, ∂)` into `∂`-polynomials keyed by λ-degree.
/// Panics if the input involves `x`.
fn lambda_degree_split(p: &LambdaPoly) -> BTreeMap<u32, UnivarPoly> {
    let mut out: BTreeMap<u32, UnivarPoly> = BTreeMap::new();
    for (l, a, b, c) in p.terms() {
        assert!(b == 0, "expected a polynomial in (lambda, d) only");
        out.entry(l)
            .or_insert_with(UnivarPoly::zero)
            .add_term(a as i64, c.clone());
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn bracket_of_x_with_x() {
        // [x λ x] = (2λ+∂)x
        let got = lambda_bracket(&GcElement::x(), &GcElement::x());
        let want = lambda()
            .scale(&r(2))
            .add(&del())
            .mul(&LambdaPoly::var_x());
        assert_eq!(got, want);
    }

    #[test]
    fn bracket_of_constants_vanishes() {
        let got = lambda_bracket(&GcElement::one(), &GcElement::one());
        assert!(got.is_zero());
    }

    #[test]
    fn bracket_x_with_one() {
        // [x λ 1] = λ+∂
        let got = lambda_bracket(&GcElement::x(), &GcElement::one());
        assert_eq!(got, lambda().add(&del()));
    }

    #[test]
    fn virasoro_at_sample_points() {
        assert!(virasoro_check(&r(0)));
        assert!(virasoro_check(&Rat::frac(1, 2)));
        assert!(virasoro_check(&r(1)));
        assert!(virasoro_check(&r(-2)));
        assert!(virasoro_check(&Rat::frac(7, 3)));
    }

    #[test]
    fn jacobi_small_cases() {
        let x = GcElement::x();
        let one = GcElement::one();
        let x2 = GcElement::new(BivarPoly::monomial(0, 2, r(1)));
        let dx = GcElement::new(BivarPoly::monomial(1, 1, r(1)));
        assert!(check_jacobi(&x, &x, &x));
        assert!(check_jacobi(&one, &one, &one));
        assert!(check_jacobi(&x2, &dx, &x));
    }

    #[test]
    fn projections() {
        // antisymmetrization of x is ∂ + 2x
        let p = project(SubalgebraTag::Oc1, &GcElement::x()).unwrap();
        let want = BivarPoly::var_del().add(&BivarPoly::var_x().scale(&r(2)));
        assert_eq!(p.poly, want);

        // symmetrization of 1 into the symplectic family is 2x
        let p = project(SubalgebraTag::Spc1, &GcElement::one()).unwrap();
        assert_eq!(p.poly, BivarPoly::var_x().scale(&r(2)));

        // constants are symmetric, so they antisymmetrize to zero
        let p = project(SubalgebraTag::Oc1, &GcElement::one()).unwrap();
        assert!(p.is_zero());

        assert_eq!(
            project(SubalgebraTag::Gc1, &GcElement::x()),
            Err(ConformalError::NoProjection)
        );
    }

    #[test]
    fn membership() {
        let dp2x = GcElement::new(
            BivarPoly::var_del().add(&BivarPoly::var_x().scale(&r(2))),
        );
        assert!(is_member(SubalgebraTag::Oc1, &dp2x));
        assert!(!is_member(SubalgebraTag::Gc1X, &GcElement::del()));
        assert!(is_member(
            SubalgebraTag::Spc1,
            &GcElement::new(BivarPoly::var_x().scale(&r(2)))
        ));
    }

    #[test]
    fn closure_examples() {
        let x2 = GcElement::new(BivarPoly::monomial(0, 2, r(1)));
        let a = project(SubalgebraTag::Oc1, &GcElement::x()).unwrap();
        let b = project(SubalgebraTag::Oc1, &x2).unwrap();
        assert_eq!(closure_check(SubalgebraTag::Oc1, &a, &b), Ok(true));

        let a = GcElement::x();
        let b = GcElement::new(BivarPoly::monomial(0, 2, r(1)));
        assert_eq!(closure_check(SubalgebraTag::Gc1X, &a, &b), Ok(true));

        let a = project(SubalgebraTag::Spc1, &GcElement::one()).unwrap();
        let b = project(SubalgebraTag::Spc1, &x2).unwrap();
        assert_eq!(closure_check(SubalgebraTag::Spc1, &a, &b), Ok(true));

        assert!(closure_check(SubalgebraTag::Gc1X, &GcElement::del(), &a).is_err());
    }

    #[test]
    fn twist_examples() {
        let p = lambda().add(&del());
        assert_eq!(
            twist(&p, &r(1)),
            p.add(&LambdaPoly::one())
        );
        assert_eq!(twist(&p, &r(0)), p);

        // (2λ+∂)x twisted by 1/2 is (2λ+∂+1/2)x
        let p = lambda().scale(&r(2)).add(&del()).mul(&LambdaPoly::var_x());
        let want = lambda()
            .scale(&r(2))
            .add(&del())
            .add(&LambdaPoly::constant(Rat::frac(1, 2)))
            .mul(&LambdaPoly::var_x());
        assert_eq!(twist(&p, &Rat::frac(1, 2)), want);
    }

    #[test]
    fn module_axiom_trivial_action() {
        let x = GcElement::x();
        assert!(module_axiom_check(
            &trivial_action,
            &x,
            &x,
            &UnivarPoly::one()
        ));
    }

    #[test]
    fn module_axiom_standard_action() {
        let x = GcElement::x();
        let x2 = GcElement::new(BivarPoly::monomial(0, 2, r(1)));
        assert!(module_axiom_check(&cend_action, &x, &x, &UnivarPoly::one()));
        assert!(module_axiom_check(&cend_action, &x2, &x, &UnivarPoly::var()));
    }
}
