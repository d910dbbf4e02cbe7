//! Sparse exact polynomials.
//!
//! Three polynomial types cover every symbolic computation in the crate:
//!
//! - [`BivarPoly`] — polynomials `a(∂, x)`, the elements of the conformal
//!   algebra and its subalgebras;
//! - [`LambdaPoly`] — polynomials in `(λ, ∂, x)`, the values of λ-brackets;
//! - [`UnivarPoly`] — Laurent polynomials in a single formal variable, used
//!   for the `f(D)` parts of differential operators and for Laurent
//!   coefficients in the `f(t)(d/dt)^m` basis.
//!
//! All types store only nonzero coefficients, so equality is structural.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::rat::Rat;

/// Formal variables of the conformal-algebra polynomial rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Lambda,
    Del,
    X,
}

impl Var {
    pub fn name(&self) -> &'static str {
        match self {
            Var::Lambda => "lambda",
            Var::Del => "d",
            Var::X => "x",
        }
    }
}

/// Error raised by substitution when a variable has no binding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnboundVar(pub Var);

impl fmt::Display for UnboundVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unbound variable `{}`", self.0.name())
    }
}

/// Substitution targets for [`BivarPoly::substitute`] and
/// [`LambdaPoly::substitute`]. A `None` entry means the variable is unbound;
/// substituting a polynomial that uses an unbound variable is an error.
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    pub lambda: Option<LambdaPoly>,
    pub del: Option<LambdaPoly>,
    pub x: Option<LambdaPoly>,
}

impl Bindings {
    pub fn new() -> Self {
        Bindings::default()
    }

    pub fn bind(mut self, var: Var, image: LambdaPoly) -> Self {
        match var {
            Var::Lambda => self.lambda = Some(image),
            Var::Del => self.del = Some(image),
            Var::X => self.x = Some(image),
        }
        self
    }

    fn get(&self, var: Var) -> Option<&LambdaPoly> {
        match var {
            Var::Lambda => self.lambda.as_ref(),
            Var::Del => self.del.as_ref(),
            Var::X => self.x.as_ref(),
        }
    }
}

/// A sparse polynomial in `(∂, x)` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    /// `(deg_∂, deg_x) → coefficient`, no zero coefficients stored.
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = BivarPoly::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn one() -> Self {
        BivarPoly::constant(Rat::one())
    }

    /// The monomial `c · ∂^a x^b`.
    pub fn monomial(a: u32, b: u32, c: Rat) -> Self {
        let mut p = BivarPoly::zero();
        p.add_term(a, b, c);
        p
    }

    pub fn var_x() -> Self {
        BivarPoly::monomial(0, 1, Rat::one())
    }

    pub fn var_del() -> Self {
        BivarPoly::monomial(1, 0, Rat::one())
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(Rat::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rat {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rat)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    pub fn uses_del(&self) -> bool {
        self.terms.keys().any(|&(a, _)| a > 0)
    }

    pub fn uses_x(&self) -> bool {
        self.terms.keys().any(|&(_, b)| b > 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b, c) in other.terms() {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BivarPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, c * v)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BivarPoly::zero();
        for (a1, b1, c1) in self.terms() {
            for (a2, b2, c2) in other.terms() {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }

    /// True iff `x` divides the polynomial.
    pub fn divisible_by_x(&self) -> bool {
        self.terms.keys().all(|&(_, b)| b >= 1)
    }

    /// Divide by `x`; requires [`Self::divisible_by_x`].
    pub fn div_x(&self) -> Self {
        assert!(self.divisible_by_x(), "not divisible by x");
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a, b - 1), c.clone()))
                .collect(),
        }
    }

    /// Multiply by `x`.
    pub fn mul_x(&self) -> Self {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a, b + 1), c.clone()))
                .collect(),
        }
    }

    /// The image under `x ↦ −∂−x` (the symmetry defining `oc₁` and `spc₁`).
    pub fn reflect_x(&self) -> Self {
        let del = LambdaPoly::var_del();
        let x = LambdaPoly::var_x();
        let image = self
            .substitute(
                &Bindings::new()
                    .bind(Var::Del, del)
                    .bind(Var::X, x.neg().sub(&LambdaPoly::var_del())),
            )
            .expect("bindings cover both variables");
        image.to_bivar().expect("no lambda introduced")
    }

    /// Exact polynomial composition: replace every variable by its binding.
    pub fn substitute(&self, b: &Bindings) -> Result<LambdaPoly, UnboundVar> {
        if self.uses_del() && b.get(Var::Del).is_none() {
            return Err(UnboundVar(Var::Del));
        }
        if self.uses_x() && b.get(Var::X).is_none() {
            return Err(UnboundVar(Var::X));
        }
        let one = LambdaPoly::one();
        let del_img = b.get(Var::Del).unwrap_or(&one);
        let x_img = b.get(Var::X).unwrap_or(&one);
        let mut out = LambdaPoly::zero();
        let mut del_pows = PowerCache::new(del_img);
        let mut x_pows = PowerCache::new(x_img);
        for (a, bx, c) in self.terms() {
            let term = del_pows.get(a).mul(x_pows.get(bx)).scale(c);
            out = out.add(&term);
        }
        Ok(out)
    }

    /// View as a [`LambdaPoly`] with no λ-dependence.
    pub fn to_lambda(&self) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (a, b, c) in self.terms() {
            out.add_term(0, a, b, c.clone());
        }
        out
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl BivarPoly {
    pub fn render(&self) -> String {
        render_terms(self.terms.iter().map(|(&(a, b), c)| (smallvec3(0, a, b), c.clone())))
    }
}

/// A sparse polynomial in `(λ, ∂, x)` with rational coefficients; the value
/// type of λ-brackets.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LambdaPoly {
    /// `(deg_λ, deg_∂, deg_x) → coefficient`, no zero coefficients stored.
    terms: BTreeMap<(u32, u32, u32), Rat>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = LambdaPoly::zero();
        p.add_term(0, 0, 0, c);
        p
    }

    pub fn one() -> Self {
        LambdaPoly::constant(Rat::one())
    }

    pub fn monomial(l: u32, a: u32, b: u32, c: Rat) -> Self {
        let mut p = LambdaPoly::zero();
        p.add_term(l, a, b, c);
        p
    }

    pub fn var_lambda() -> Self {
        LambdaPoly::monomial(1, 0, 0, Rat::one())
    }

    pub fn var_del() -> Self {
        LambdaPoly::monomial(0, 1, 0, Rat::one())
    }

    pub fn var_x() -> Self {
        LambdaPoly::monomial(0, 0, 1, Rat::one())
    }

    pub fn add_term(&mut self, l: u32, a: u32, b: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((l, a, b)).or_insert_with(Rat::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&(l, a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, l: u32, a: u32, b: u32) -> Rat {
        self.terms
            .get(&(l, a, b))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, u32, &Rat)> {
        self.terms.iter().map(|(&(l, a, b), c)| (l, a, b, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, a, b, c) in other.terms() {
            out.add_term(l, a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LambdaPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return LambdaPoly::zero();
        }
        LambdaPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, c * v)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LambdaPoly::zero();
        for (l1, a1, b1, c1) in self.terms() {
            for (l2, a2, b2, c2) in other.terms() {
                out.add_term(l1 + l2, a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LambdaPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn uses_lambda(&self) -> bool {
        self.terms.keys().any(|&(l, _, _)| l > 0)
    }

    pub fn uses_del(&self) -> bool {
        self.terms.keys().any(|&(_, a, _)| a > 0)
    }

    pub fn uses_x(&self) -> bool {
        self.terms.keys().any(|&(_, _, b)| b > 0)
    }

    /// Exact composition with full bindings for every used variable.
    pub fn substitute(&self, b: &Bindings) -> Result<LambdaPoly, UnboundVar> {
        if self.uses_lambda() && b.get(Var::Lambda).is_none() {
            return Err(UnboundVar(Var::Lambda));
        }
        if self.uses_del() && b.get(Var::Del).is_none() {
            return Err(UnboundVar(Var::Del));
        }
        if self.uses_x() && b.get(Var::X).is_none() {
            return Err(UnboundVar(Var::X));
        }
        let one = LambdaPoly::one();
        let l_img = b.get(Var::Lambda).unwrap_or(&one);
        let d_img = b.get(Var::Del).unwrap_or(&one);
        let x_img = b.get(Var::X).unwrap_or(&one);
        let mut out = LambdaPoly::zero();
        let mut l_pows = PowerCache::new(l_img);
        let mut d_pows = PowerCache::new(d_img);
        let mut x_pows = PowerCache::new(x_img);
        for (l, a, bx, c) in self.terms() {
            let term = l_pows
                .get(l)
                .mul(d_pows.get(a))
                .mul(x_pows.get(bx))
                .scale(c);
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Substitute only `∂ ↦ ∂ + α`, leaving `λ` and `x` fixed.
    pub fn shift_del(&self, alpha: &Rat) -> LambdaPoly {
        let b = Bindings::new()
            .bind(Var::Lambda, LambdaPoly::var_lambda())
            .bind(Var::Del, LambdaPoly::var_del().add(&LambdaPoly::constant(alpha.clone())))
            .bind(Var::X, LambdaPoly::var_x());
        self.substitute(&b).expect("all variables bound")
    }

    /// Substitute only `λ ↦ −λ−∂` (conformal skew-symmetry involution).
    pub fn reflect_lambda(&self) -> LambdaPoly {
        let b = Bindings::new()
            .bind(
                Var::Lambda,
                LambdaPoly::var_lambda().neg().sub(&LambdaPoly::var_del()),
            )
            .bind(Var::Del, LambdaPoly::var_del())
            .bind(Var::X, LambdaPoly::var_x());
        self.substitute(&b).expect("all variables bound")
    }

    /// Coefficients as polynomials in `(∂, x)`, keyed by λ-degree.
    pub fn lambda_coefficients(&self) -> BTreeMap<u32, BivarPoly> {
        let mut out: BTreeMap<u32, BivarPoly> = BTreeMap::new();
        for (l, a, b, c) in self.terms() {
            out.entry(l)
                .or_insert_with(BivarPoly::zero)
                .add_term(a, b, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Downcast to a `(∂,x)`-polynomial if there is no λ-dependence.
    pub fn to_bivar(&self) -> Option<BivarPoly> {
        if self.uses_lambda() {
            return None;
        }
        let mut out = BivarPoly::zero();
        for (_, a, b, c) in self.terms() {
            out.add_term(a, b, c.clone());
        }
        Some(out)
    }

    pub fn render(&self) -> String {
        render_terms(self.terms.iter().map(|(&(l, a, b), c)| (smallvec3(l, a, b), c.clone())))
    }
}

impl fmt::Debug for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Memoized powers of a fixed polynomial, used by the substitution engine.
struct PowerCache<'a> {
    base: &'a LambdaPoly,
    pows: Vec<LambdaPoly>,
}

impl<'a> PowerCache<'a> {
    fn new(base: &'a LambdaPoly) -> Self {
        PowerCache {
            base,
            pows: alloc::vec![LambdaPoly::one()],
        }
    }

    fn get(&mut self, e: u32) -> &LambdaPoly {
        while self.pows.len() <= e as usize {
            let next = self.pows.last().unwrap().mul(self.base);
            self.pows.push(next);
        }
        &self.pows[e as usize]
    }
}

fn smallvec3(l: u32, a: u32, b: u32) -> [(u32, &'static str); 3] {
    [(l, "lambda"), (a, "d"), (b, "x")]
}

fn render_terms<I>(terms: I) -> String
where
    I: Iterator<Item = ([(u32, &'static str); 3], Rat)>,
{
    use core::fmt::Write;
    let mut parts: Vec<String> = Vec::new();
    for (vars, coeff) in terms {
        let mut body = String::new();
        for (deg, name) in vars.iter() {
            if *deg == 0 {
                continue;
            }
            if !body.is_empty() {
                body.push('*');
            }
            if *deg == 1 {
                body.push_str(name);
            } else {
                write!(body, "{}^{}", name, deg).unwrap();
            }
        }
        let piece = if body.is_empty() {
            alloc::format!("{}", coeff)
        } else if coeff.is_one() {
            body
        } else if (-&coeff).is_one() {
            alloc::format!("-{}", body)
        } else {
            alloc::format!("{}*{}", coeff, body)
        };
        parts.push(piece);
    }
    if parts.is_empty() {
        return String::from("0");
    }
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i == 0 {
            out.push_str(p);
        } else if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(p);
        }
    }
    out
}

/// A sparse Laurent polynomial in one formal variable.
///
/// Exponents may be negative; contexts that require a genuine polynomial
/// (the `f(D)` parts of differential operators) enforce non-negativity at
/// construction time via [`UnivarPoly::is_polynomial`].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UnivarPoly {
    terms: BTreeMap<i64, Rat>,
}

impl UnivarPoly {
    pub fn zero() -> Self {
        UnivarPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = UnivarPoly::zero();
        p.add_term(0, c);
        p
    }

    pub fn one() -> Self {
        UnivarPoly::constant(Rat::one())
    }

    /// The monomial `c · v^e`.
    pub fn monomial(e: i64, c: Rat) -> Self {
        let mut p = UnivarPoly::zero();
        p.add_term(e, c);
        p
    }

    pub fn var() -> Self {
        UnivarPoly::monomial(1, Rat::one())
    }

    pub fn add_term(&mut self, e: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&e| e >= 0)
    }

    pub fn coeff(&self, e: i64) -> Rat {
        self.terms.get(&e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UnivarPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return UnivarPoly::zero();
        }
        UnivarPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, c * v)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = UnivarPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UnivarPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in self.terms() {
            assert!(e >= 0, "cannot evaluate Laurent part at a point");
            acc = acc + c * &at.pow(e as u32);
        }
        acc
    }

    /// Compose with an affine argument: `f(v) ↦ f(s·v + c)` where `s = ±1`.
    /// Requires a genuine polynomial.
    pub fn compose_affine(&self, sign: i64, shift: &Rat) -> Self {
        assert!(sign == 1 || sign == -1);
        assert!(self.is_polynomial(), "affine composition needs a polynomial");
        let mut out = UnivarPoly::zero();
        for (e, c) in self.terms() {
            // (s·v + shift)^e expanded binomially
            for k in 0..=e as u32 {
                let coeff = Rat::binomial(e as u32, k)
                    * shift.pow(e as u32 - k)
                    * c.clone()
                    * if sign == -1 && k % 2 == 1 {
                        -Rat::one()
                    } else {
                        Rat::one()
                    };
                out.add_term(k as i64, coeff);
            }
        }
        out
    }

    /// Formal derivative (valid for Laurent polynomials).
    pub fn derivative(&self) -> Self {
        let mut out = UnivarPoly::zero();
        for (e, c) in self.terms() {
            if e != 0 {
                out.add_term(e - 1, c * &Rat::from_int(e));
            }
        }
        out
    }

    /// Multiply by the monomial `v^e`.
    pub fn shift_exp(&self, e: i64) -> Self {
        UnivarPoly {
            terms: self.terms.iter().map(|(&d, c)| (d + e, c.clone())).collect(),
        }
    }

    /// Coefficient of `v^{-1}` — the residue when the variable is `t`.
    pub fn residue(&self) -> Rat {
        self.coeff(-1)
    }

    pub fn render(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if *e == 0 {
                write!(out, "{}", mag).unwrap();
            } else {
                if !mag.is_one() {
                    write!(out, "{}*", mag).unwrap();
                }
                if *e == 1 {
                    out.push_str(var);
                } else {
                    write!(out, "{}^{}", var, e).unwrap();
                }
            }
        }
        out
    }
}

impl fmt::Debug for UnivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("v"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn substitute_identity_shaped() {
        // x under {x ↦ λ+∂+x} is λ+∂+x
        let p = BivarPoly::var_x();
        let img = LambdaPoly::var_lambda()
            .add(&LambdaPoly::var_del())
            .add(&LambdaPoly::var_x());
        let b = Bindings::new().bind(Var::X, img.clone());
        assert_eq!(p.substitute(&b).unwrap(), img);
    }

    #[test]
    fn substitute_square() {
        // x² under {x ↦ −λ+x} is λ² − 2λx + x²
        let p = BivarPoly::monomial(0, 2, r(1));
        let b = Bindings::new().bind(Var::X, LambdaPoly::var_x().sub(&LambdaPoly::var_lambda()));
        let got = p.substitute(&b).unwrap();
        let mut want = LambdaPoly::zero();
        want.add_term(2, 0, 0, r(1));
        want.add_term(1, 0, 1, r(-2));
        want.add_term(0, 0, 2, r(1));
        assert_eq!(got, want);
    }

    #[test]
    fn substitute_identity_bindings() {
        // ∂x under identity bindings is itself
        let p = BivarPoly::monomial(1, 1, r(1));
        let b = Bindings::new()
            .bind(Var::Del, LambdaPoly::var_del())
            .bind(Var::X, LambdaPoly::var_x());
        assert_eq!(p.substitute(&b).unwrap(), p.to_lambda());
    }

    #[test]
    fn substitute_unbound_errors() {
        let p = BivarPoly::monomial(1, 1, r(1));
        let b = Bindings::new().bind(Var::X, LambdaPoly::var_x());
        assert_eq!(p.substitute(&b), Err(UnboundVar(Var::Del)));
    }

    #[test]
    fn laurent_arithmetic() {
        let f = UnivarPoly::monomial(-1, r(1)).add(&UnivarPoly::var());
        let g = f.mul(&f);
        assert_eq!(g.coeff(-2), r(1));
        assert_eq!(g.coeff(0), r(2));
        assert_eq!(g.coeff(2), r(1));
        assert_eq!(f.derivative().coeff(-2), r(-1));
    }

    #[test]
    fn affine_composition() {
        // f(w) = w² composed with w ↦ -w + 1 gives w² - 2w + 1
        let f = UnivarPoly::monomial(2, r(1));
        let g = f.compose_affine(-1, &r(1));
        assert_eq!(g.coeff(2), r(1));
        assert_eq!(g.coeff(1), r(-2));
        assert_eq!(g.coeff(0), r(1));
    }
}
