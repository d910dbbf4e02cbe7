//! Regular differential operators on the punctured line.
//!
//! An operator is a finite sum `Σ_k t^k f_k(D)` with `D = t·d/dt` and
//! polynomial `f_k`, plus an optional central coefficient used in
//! centrally-extended contexts. The composition law
//!
//! ```text
//! t^k f(D) ∘ t^l g(D) = t^{k+l} f(D+l) g(D)
//! ```
//!
//! drives the bracket. A second basis `f(t)(d/dt)^m` ([`DdtForm`]) carries the
//! residue formula for the 2-cocycle and the anti-involution `σ` (`t ↦ t`,
//! `d/dt ↦ −d/dt`); the two bases convert exactly through falling factorials
//! `t^m (d/dt)^m = D(D−1)…(D−m+1)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::characters::{NegPartition, Partition};
use crate::poly::UnivarPoly;
use crate::rat::Rat;
use crate::series::XSeries;

/// A differential operator `Σ_k t^k f_k(D) + central·C`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DiffOp {
    /// `t`-exponent → polynomial in `D`; no zero polynomials stored.
    terms: BTreeMap<i64, UnivarPoly>,
    central: Rat,
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp::default()
    }

    /// The single term `t^k f(D)`. `f` must be a polynomial (no negative
    /// powers of `D`).
    pub fn tk_f(k: i64, f: UnivarPoly) -> Self {
        assert!(f.is_polynomial(), "f(D) must be a polynomial in D");
        let mut op = DiffOp::zero();
        if !f.is_zero() {
            op.terms.insert(k, f);
        }
        op
    }

    /// `t^k` as an operator.
    pub fn t_pow(k: i64) -> Self {
        DiffOp::tk_f(k, UnivarPoly::one())
    }

    /// `D^n` as an operator.
    pub fn d_pow(n: u32) -> Self {
        DiffOp::tk_f(0, UnivarPoly::monomial(n as i64, Rat::one()))
    }

    pub fn one() -> Self {
        DiffOp::t_pow(0)
    }

    /// The central element `c·C`.
    pub fn central(c: Rat) -> Self {
        DiffOp {
            terms: BTreeMap::new(),
            central: c,
        }
    }

    pub fn central_coeff(&self) -> &Rat {
        &self.central
    }

    pub fn has_central(&self) -> bool {
        !self.central.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.central.is_zero()
    }

    /// The operator part with the central coefficient dropped.
    pub fn op_part(&self) -> DiffOp {
        DiffOp {
            terms: self.terms.clone(),
            central: Rat::zero(),
        }
    }

    /// The coefficient polynomial of `t^k` (zero if absent).
    pub fn coeff_of_t(&self, k: i64) -> UnivarPoly {
        self.terms.get(&k).cloned().unwrap_or_else(UnivarPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &UnivarPoly)> {
        self.terms.iter().map(|(&k, f)| (k, f))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, f) in other.terms() {
            out.add_term(k, f.clone());
        }
        out.central = &out.central + &other.central;
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        DiffOp {
            terms: self.terms.iter().map(|(&k, f)| (k, f.neg())).collect(),
            central: -&self.central,
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return DiffOp::zero();
        }
        DiffOp {
            terms: self.terms.iter().map(|(&k, f)| (k, f.scale(c))).collect(),
            central: c * &self.central,
        }
    }

    fn add_term(&mut self, k: i64, f: UnivarPoly) {
        if f.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(UnivarPoly::zero);
        *entry = entry.add(&f);
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Associative composition of the operator parts (central parts ignored).
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = DiffOp::zero();
        for (k, f) in self.terms() {
            for (l, g) in other.terms() {
                // t^k f(D) t^l g(D) = t^{k+l} f(D+l) g(D)
                let shifted = f.compose_affine(1, &Rat::from_int(l));
                out.add_term(k + l, shifted.mul(g));
            }
        }
        out
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, f) in self.terms() {
            let fs = f.render("D");
            let piece = if k == 0 {
                fs
            } else {
                let tpow = if k == 1 {
                    String::from("t")
                } else {
                    alloc::format!("t^{}", k)
                };
                if fs == "1" {
                    tpow
                } else {
                    alloc::format!("{}*({})", tpow, fs)
                }
            };
            parts.push(piece);
        }
        if !self.central.is_zero() {
            parts.push(alloc::format!("{}*C", self.central));
        }
        parts.join(" + ")
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// An operator in the `f(t)(d/dt)^m` basis: order `m` → Laurent coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DdtForm {
    /// `(d/dt)`-order → Laurent polynomial in `t`.
    terms: BTreeMap<u32, UnivarPoly>,
}

impl DdtForm {
    pub fn zero() -> Self {
        DdtForm::default()
    }

    pub fn add_term(&mut self, m: u32, f: UnivarPoly) {
        if f.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(UnivarPoly::zero);
        *entry = entry.add(&f);
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &UnivarPoly)> {
        self.terms.iter().map(|(&m, f)| (m, f))
    }

    pub fn coeff(&self, m: u32) -> UnivarPoly {
        self.terms.get(&m).cloned().unwrap_or_else(UnivarPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Debug for DdtForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, g) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*(d/dt)^{}", g.render("t"), m)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Falling factorial `w(w−1)…(w−m+1)` as a polynomial.
pub fn falling_factorial(m: u32) -> UnivarPoly {
    let mut acc = UnivarPoly::one();
    for i in 0..m as i64 {
        acc = acc.mul(&UnivarPoly::var().sub(&UnivarPoly::constant(Rat::from_int(i))));
    }
    acc
}

/// Expand a polynomial in the falling factorial basis:
/// `f(w) = Σ_m c_m · w(w−1)…(w−m+1)` with `c_m = Δ^m f(0) / m!`.
fn falling_factorial_coeffs(f: &UnivarPoly) -> Vec<Rat> {
    assert!(f.is_polynomial());
    let deg = f.max_degree().unwrap_or(0).max(0) as usize;
    // forward differences of the value table f(0), f(1), ..., f(deg)
    let mut values: Vec<Rat> = (0..=deg)
        .map(|i| f.eval(&Rat::from_int(i as i64)))
        .collect();
    let mut out = Vec::with_capacity(deg + 1);
    for m in 0..=deg {
        out.push(&values[0] / &Rat::factorial(m as u32));
        for i in 0..deg - m {
            values[i] = &values[i + 1] - &values[i];
        }
        values.truncate(deg - m);
    }
    out
}

/// Exact basis change `t^k f(D) ↦ Σ_m c_m t^{k+m} (d/dt)^m`.
pub fn to_ddt_form(a: &DiffOp) -> DdtForm {
    let mut out = DdtForm::zero();
    for (k, f) in a.terms() {
        for (m, c) in falling_factorial_coeffs(f).into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out.add_term(m as u32, UnivarPoly::monomial(k + m as i64, c));
        }
    }
    out
}

/// Inverse basis change `f(t)(d/dt)^m ↦ Σ_i a_i t^{i−m} · D(D−1)…(D−m+1)`.
pub fn from_ddt_form(a: &DdtForm) -> DiffOp {
    let mut out = DiffOp::zero();
    for (m, f) in a.terms() {
        let pi = falling_factorial(m);
        for (i, c) in f.terms() {
            out.add_term(i - m as i64, pi.scale(c));
        }
    }
    out
}

/// The 2-cocycle on operators, evaluated by the residue formula in the
/// `f(t)(d/dt)^m` basis:
///
/// ```text
/// Ψ(f(t)(d/dt)^m, g(t)(d/dt)^n)
///     = m!·n!/(m+n+1)! · Res_0 dt f^{(n+1)}(t) g^{(m)}(t)
/// ```
///
/// The factorial normalization makes Ψ exactly the central term produced by
/// the banded-matrix embeddings (see `glinf::homomorphism_check`); the
/// two-route tests in this crate pin it down.
pub fn cocycle_psi(a: &DiffOp, b: &DiffOp) -> Rat {
    let fa = to_ddt_form(a);
    let fb = to_ddt_form(b);
    let mut acc = Rat::zero();
    for (m, f) in fa.terms() {
        for (n, g) in fb.terms() {
            let pref = Rat::factorial(m) * Rat::factorial(n) / Rat::factorial(m + n + 1);
            let mut df = f.clone();
            for _ in 0..n + 1 {
                df = df.derivative();
            }
            let mut dg = g.clone();
            for _ in 0..m {
                dg = dg.derivative();
            }
            acc = acc + pref * df.mul(&dg).residue();
        }
    }
    acc
}

/// Lie bracket `[a, b]`; when `with_central` is set the central coefficient
/// of the result is `Ψ(a, b)` (central parts of the inputs are central and
/// contribute nothing).
pub fn diffop_bracket(a: &DiffOp, b: &DiffOp, with_central: bool) -> DiffOp {
    let mut out = a.compose(b).sub(&b.compose(a));
    if with_central {
        out.central = cocycle_psi(a, b);
    }
    out
}

/// Split by principal degree (`deg t = −1`, `deg d/dt = 1`, so `t^k f(D)` has
/// degree `−k`). The central coefficient joins the degree-0 component.
pub fn graded_component(a: &DiffOp) -> BTreeMap<i64, DiffOp> {
    let mut out: BTreeMap<i64, DiffOp> = BTreeMap::new();
    for (k, f) in a.terms() {
        out.entry(-k)
            .or_insert_with(DiffOp::zero)
            .add_term(k, f.clone());
    }
    if !a.central.is_zero() {
        let entry = out.entry(0).or_insert_with(DiffOp::zero);
        entry.central = a.central.clone();
    }
    out
}

/// Membership in the subalgebra of operators regular at the origin: each
/// graded piece `t^{−j} f(D)` with `j ≥ 1` needs `f(0) = … = f(j−1) = 0`.
/// Central parts are not elements of the plain operator algebra.
pub fn in_dminus(a: &DiffOp) -> bool {
    if !a.central.is_zero() {
        return false;
    }
    a.terms().all(|(k, f)| {
        if k >= 0 {
            return true;
        }
        let j = -k;
        (0..j).all(|i| f.eval(&Rat::from_int(i)).is_zero())
    })
}

/// Membership in the subalgebra killing constants: `D` divides every `f_k`.
pub fn in_d0(a: &DiffOp) -> bool {
    if !a.central.is_zero() {
        return false;
    }
    a.terms().all(|(_, f)| f.eval(&Rat::zero()).is_zero())
}

/// The anti-involution `σ`: `t ↦ t`, `d/dt ↦ −d/dt`. Computed in the
/// `f(t)(d/dt)^m` basis by
/// `σ(f(t)(d/dt)^m) = (−1)^m Σ_i C(m,i) f^{(i)}(t) (d/dt)^{m−i}`
/// and converted back. The central coefficient is fixed.
pub fn sigma_apply(a: &DiffOp) -> DiffOp {
    let form = to_ddt_form(a);
    let mut out = DdtForm::zero();
    for (m, f) in form.terms() {
        let sign = if m % 2 == 0 { Rat::one() } else { -Rat::one() };
        let mut df = f.clone();
        for i in 0..=m {
            let coeff = &sign * &Rat::binomial(m, i);
            out.add_term(m - i, df.scale(&coeff));
            df = df.derivative();
        }
    }
    let mut res = from_ddt_form(&out);
    res.central = a.central.clone();
    res
}

/// Membership in the `−σ`-fixed subalgebra: `σ(a) = −a` on the operator part
/// (the central direction always belongs to the extended fixed subalgebra, so
/// a central coefficient does not obstruct membership).
pub fn in_dsigma(a: &DiffOp) -> bool {
    let op = a.op_part();
    sigma_apply(&op) == op.neg()
}

/// The parity form of the same predicate: each graded piece `t^k f(D)` must
/// be `t^k g(D + (k+1)/2)` with `g` odd.
pub fn in_dsigma_parity(a: &DiffOp) -> bool {
    a.terms().all(|(k, f)| {
        // g(w) = f(w − (k+1)/2); oddness: g(w) + g(−w) = 0
        let shift = -Rat::frac(k + 1, 2);
        let g = f.compose_affine(1, &shift);
        let g_neg = g.compose_affine(-1, &Rat::zero());
        g.add(&g_neg).is_zero()
    })
}

/// The anti-involution `σ̄` on the constants-killing subalgebra:
/// `σ̄(t^k D f(D)) = −t^k D f(−D−k)`.
///
/// Errors when the argument does not kill constants.
pub fn sigma_bar_apply(a: &DiffOp) -> Result<DiffOp, NotInD0> {
    if !in_d0(&a.op_part()) {
        return Err(NotInD0);
    }
    let mut out = DiffOp::zero();
    for (k, h) in a.terms() {
        // h(D) = D·f(D); f is h with every exponent lowered by one
        let mut f = UnivarPoly::zero();
        for (e, c) in h.terms() {
            debug_assert!(e >= 1);
            f.add_term(e - 1, c.clone());
        }
        // −D·f(−D−k)
        let reflected = f.compose_affine(-1, &Rat::from_int(-k));
        out.add_term(k, UnivarPoly::var().mul(&reflected).neg());
    }
    out.central = a.central.clone();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotInD0;

impl fmt::Display for NotInD0 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "operator does not kill constants")
    }
}

/// Membership in the `−σ̄`-fixed subalgebra of the constants-killing algebra.
pub fn in_d0sigmabar(a: &DiffOp) -> bool {
    let op = a.op_part();
    match sigma_bar_apply(&op) {
        Ok(img) => img == op.neg(),
        Err(NotInD0) => false,
    }
}

/// Parity form: each graded piece `t^k D f(D)` must be `t^k D g(D + k/2)`
/// with `g` even.
pub fn in_d0sigmabar_parity(a: &DiffOp) -> bool {
    a.terms().all(|(k, h)| {
        if !h.eval(&Rat::zero()).is_zero() {
            return false;
        }
        let mut f = UnivarPoly::zero();
        for (e, c) in h.terms() {
            f.add_term(e - 1, c.clone());
        }
        // g(w) = f(w − k/2); evenness: g(w) − g(−w) = 0
        let g = f.compose_affine(1, &-Rat::frac(k, 2));
        let g_neg = g.compose_affine(-1, &Rat::zero());
        g.sub(&g_neg).is_zero()
    })
}

/// Which eigenvalue convention a highest-weight series follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaVariant {
    /// `Δ_n = Σ_{j≥1} (−j)^n λ⁺_j + Σ_{j≤0} (−j)^n λ⁻_j`, all `n ≥ 0`.
    Plain,
    /// `Δ_n = Σ_{j≥1} (−j+1/2)^n λ⁺_j` for odd `n` only.
    Sigma,
}

/// Truncated generating series `Σ_n Δ_n x^n / n!` of highest-weight labels.
///
/// For [`DeltaVariant::Sigma`] the negative side must be empty and only odd
/// coefficients are populated. The odd-coefficient sums are evaluated
/// directly, so the result is the plain hyperbolic-sine profile without any
/// extra normalization in front.
pub fn delta_eigenvalues(
    lambda_plus: &Partition,
    lambda_minus: &NegPartition,
    variant: DeltaVariant,
    n: usize,
) -> XSeries {
    match variant {
        DeltaVariant::Plain => {
            let mut acc = XSeries::zero(n);
            for (j, lam) in lambda_plus.parts().iter().enumerate() {
                let a = Rat::from_int(-((j + 1) as i64));
                acc = acc.add(&XSeries::exp(&a, n).scale(&Rat::from_int(*lam as i64)));
            }
            for (j, lam) in lambda_minus.entries() {
                let a = Rat::from_int(-j);
                acc = acc.add(&XSeries::exp(&a, n).scale(&Rat::from_int(lam)));
            }
            acc
        }
        DeltaVariant::Sigma => {
            assert!(
                lambda_minus.is_empty(),
                "sigma variant takes no negative labels"
            );
            let mut acc = XSeries::zero(n);
            for k in (1..=n).step_by(2) {
                let mut delta = Rat::zero();
                for (j, lam) in lambda_plus.parts().iter().enumerate() {
                    let base = Rat::from_int(-((j + 1) as i64)) + Rat::frac(1, 2);
                    delta = delta + base.pow(k as u32) * Rat::from_int(*lam as i64);
                }
                acc.set_coeff(k, delta / Rat::factorial(k as u32));
            }
            acc
        }
    }
}

/// Basis element `t^j g(D + (j+1)/2)` of the `−σ`-fixed subalgebra, with
/// `g(w) = w^{2l+1}`.
pub fn dsigma_basis(j: i64, l: u32) -> DiffOp {
    let g = UnivarPoly::monomial((2 * l + 1) as i64, Rat::one());
    let f = g.compose_affine(1, &Rat::frac(j + 1, 2));
    DiffOp::tk_f(j, f)
}

/// Basis element `t^j D g(D + j/2)` of the `−σ̄`-fixed subalgebra, with
/// `g(w) = w^{2l}`.
pub fn d0sigmabar_basis(j: i64, l: u32) -> DiffOp {
    let g = UnivarPoly::monomial((2 * l) as i64, Rat::one());
    let f = UnivarPoly::var().mul(&g.compose_affine(1, &Rat::frac(j, 2)));
    DiffOp::tk_f(j, f)
}

/// The polynomial `w(w−1)…(w−(j−1))` whose roots enforce the vanishing
/// conditions on `t^{−j}`-components of operators regular at the origin.
fn vanishing_enforcer(j: i64) -> UnivarPoly {
    let mut acc = UnivarPoly::one();
    for s in 0..j {
        acc = acc.mul(&UnivarPoly::var().sub(&UnivarPoly::constant(Rat::from_int(s))));
    }
    acc
}

/// Families of principal-degree-raising generators used for cyclic span
/// computations. Degree `j ≥ 1` generators are the `t^{−j}`-components of the
/// respective subalgebra intersected with the regular-at-origin condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorSet {
    /// All regular-at-origin raising operators.
    DMinus,
    /// Those killing constants (same raising components as `DMinus`).
    D0Minus,
    /// The `−σ`-fixed raising operators.
    DSigmaMinus,
    /// The `−σ̄`-fixed, constants-killing raising operators.
    D0SigmaBarMinus,
}

impl GeneratorSet {
    pub fn name(&self) -> &'static str {
        match self {
            GeneratorSet::DMinus => "dminus",
            GeneratorSet::D0Minus => "d0minus",
            GeneratorSet::DSigmaMinus => "dsigma_minus",
            GeneratorSet::D0SigmaBarMinus => "d0sigmabar_minus",
        }
    }

    /// Degree-`j` raising generators with enough polynomial breadth to act
    /// faithfully on vectors whose `f`-arguments range over `max_points`
    /// consecutive integers.
    pub fn raising_generators(&self, j: i64, max_points: u32) -> Vec<DiffOp> {
        assert!(j >= 1);
        let enforcer = vanishing_enforcer(j);
        let mut out = Vec::new();
        match self {
            GeneratorSet::DMinus | GeneratorSet::D0Minus => {
                // t^{-j} · w(w−1)…(w−j+1) · w^l; the enforcer already kills
                // the constant term, so these lie in both families.
                for l in 0..=max_points as i64 {
                    let f = enforcer.mul(&UnivarPoly::monomial(l, Rat::one()));
                    out.push(DiffOp::tk_f(-j, f));
                }
            }
            GeneratorSet::DSigmaMinus => {
                // extra factor (w + (1−j)/2)^p, p even for odd j, odd for even j
                let base = UnivarPoly::var().add(&UnivarPoly::constant(Rat::frac(1 - j, 2)));
                let start = if j % 2 == 0 { 1 } else { 0 };
                for p in (start..=max_points).step_by(2) {
                    let f = enforcer.mul(&base.pow(p));
                    out.push(DiffOp::tk_f(-j, f));
                }
            }
            GeneratorSet::D0SigmaBarMinus => {
                // extra factor (w − j/2)^p, p even for odd j, odd for even j
                let base = UnivarPoly::var().sub(&UnivarPoly::constant(Rat::frac(j, 2)));
                let start = if j % 2 == 0 { 1 } else { 0 };
                for p in (start..=max_points).step_by(2) {
                    let f = enforcer.mul(&base.pow(p));
                    out.push(DiffOp::tk_f(-j, f));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn d() -> DiffOp {
        DiffOp::d_pow(1)
    }

    #[test]
    fn bracket_d_with_t() {
        // [D, t] = t
        let got = diffop_bracket(&d(), &DiffOp::t_pow(1), false);
        assert_eq!(got, DiffOp::t_pow(1));
    }

    #[test]
    fn bracket_t_with_tinv_central() {
        // [t, t⁻¹] = 0 + 1·C
        let got = diffop_bracket(&DiffOp::t_pow(1), &DiffOp::t_pow(-1), true);
        assert_eq!(got, DiffOp::central(r(1)));
    }

    #[test]
    fn bracket_d_with_d() {
        assert!(diffop_bracket(&d(), &d(), true).is_zero());
    }

    #[test]
    fn ddt_form_of_d() {
        // D = t·(d/dt)
        let form = to_ddt_form(&d());
        assert_eq!(form.coeff(1), UnivarPoly::monomial(1, r(1)));
        assert_eq!(form.coeff(0), UnivarPoly::zero());
    }

    #[test]
    fn ddt_form_falling_factorial() {
        // t⁻¹·(D²−D) = t·(d/dt)²
        let f = UnivarPoly::monomial(2, r(1)).sub(&UnivarPoly::monomial(1, r(1)));
        let a = DiffOp::tk_f(-1, f);
        let form = to_ddt_form(&a);
        assert_eq!(form.coeff(2), UnivarPoly::monomial(1, r(1)));
        assert_eq!(form.coeff(1), UnivarPoly::zero());
        assert_eq!(from_ddt_form(&form), a);
    }

    #[test]
    fn ddt_form_of_plain_power() {
        let a = DiffOp::t_pow(2);
        let form = to_ddt_form(&a);
        assert_eq!(form.coeff(0), UnivarPoly::monomial(2, r(1)));
        assert_eq!(from_ddt_form(&form), a);
    }

    #[test]
    fn cocycle_values() {
        assert_eq!(cocycle_psi(&DiffOp::t_pow(1), &DiffOp::t_pow(-1)), r(1));
        assert_eq!(cocycle_psi(&d(), &d()), r(0));
        assert_eq!(cocycle_psi(&DiffOp::t_pow(1), &DiffOp::t_pow(1)), r(0));
        // normalization pin: Ψ(t², t⁻²D) = 1
        let b = DiffOp::tk_f(-2, UnivarPoly::var());
        assert_eq!(cocycle_psi(&DiffOp::t_pow(2), &b), r(1));
    }

    #[test]
    fn grading() {
        let a = DiffOp::t_pow(1).add(&DiffOp::t_pow(-1));
        let parts = graded_component(&a);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&-1], DiffOp::t_pow(1));
        assert_eq!(parts[&1], DiffOp::t_pow(-1));

        let d2 = DiffOp::d_pow(2);
        let parts = graded_component(&d2);
        assert_eq!(parts[&0], d2);

        let a = DiffOp::tk_f(-2, UnivarPoly::var());
        let parts = graded_component(&a);
        assert!(parts.contains_key(&2));
    }

    #[test]
    fn dminus_membership() {
        assert!(in_dminus(&DiffOp::tk_f(-1, UnivarPoly::var())));
        assert!(!in_dminus(&DiffOp::t_pow(-1)));
        assert!(in_dminus(&DiffOp::tk_f(3, UnivarPoly::monomial(5, r(1)))));
    }

    #[test]
    fn d0_membership() {
        assert!(in_d0(&DiffOp::tk_f(2, UnivarPoly::var())));
        assert!(!in_d0(&DiffOp::t_pow(2)));
        let f = UnivarPoly::monomial(3, r(1)).sub(&UnivarPoly::var());
        assert!(in_d0(&DiffOp::tk_f(0, f)));
    }

    #[test]
    fn sigma_examples() {
        // t(D+1) is −σ-fixed: g(w) = w at t-exponent 1
        let f = UnivarPoly::var().add(&UnivarPoly::one());
        let a = DiffOp::tk_f(1, f);
        assert!(in_dsigma(&a));
        assert!(in_dsigma_parity(&a));

        // D is not, but D + 1/2 is
        assert!(!in_dsigma(&d()));
        let a = d().add(&DiffOp::tk_f(0, UnivarPoly::constant(Rat::frac(1, 2))));
        assert!(in_dsigma(&a));
        assert!(in_dsigma_parity(&a));

        // σ(t) = t, so t is not in the fixed subalgebra
        assert_eq!(sigma_apply(&DiffOp::t_pow(1)), DiffOp::t_pow(1));
        assert!(!in_dsigma(&DiffOp::t_pow(1)));
    }

    #[test]
    fn sigma_bar_examples() {
        // t²D is −σ̄-fixed (g = 1 even at t-exponent 2)
        let a = DiffOp::tk_f(2, UnivarPoly::var());
        assert_eq!(sigma_bar_apply(&a).unwrap(), a.neg());
        assert!(in_d0sigmabar(&a));
        assert!(in_d0sigmabar_parity(&a));

        // D² is not (g(w) = w odd), D³ is (g(w) = w² even)
        assert!(!in_d0sigmabar(&DiffOp::d_pow(2)));
        assert!(in_d0sigmabar(&DiffOp::d_pow(3)));
        assert!(in_d0sigmabar_parity(&DiffOp::d_pow(3)));

        // t does not kill constants
        assert!(sigma_bar_apply(&DiffOp::t_pow(1)).is_err());
        assert!(!in_d0sigmabar(&DiffOp::t_pow(1)));
    }

    #[test]
    fn delta_series_plain() {
        let lam = Partition::new(alloc::vec![1]).unwrap();
        let s = delta_eigenvalues(&lam, &NegPartition::empty(), DeltaVariant::Plain, 3);
        assert_eq!(s.coeff(0), r(1));
        assert_eq!(s.coeff(1), r(-1));
        assert_eq!(s.coeff(2), Rat::frac(1, 2));
        assert_eq!(s.coeff(3), Rat::frac(-1, 6));

        let s = delta_eigenvalues(
            &Partition::empty(),
            &NegPartition::empty(),
            DeltaVariant::Plain,
            3,
        );
        assert!(s.is_zero());
    }

    #[test]
    fn delta_series_sigma() {
        let lam = Partition::new(alloc::vec![1]).unwrap();
        let s = delta_eigenvalues(&lam, &NegPartition::empty(), DeltaVariant::Sigma, 3);
        assert_eq!(s.coeff(0), r(0));
        assert_eq!(s.coeff(1), Rat::frac(-1, 2));
        assert_eq!(s.coeff(2), r(0));
        assert_eq!(s.coeff(3), Rat::frac(-1, 48));
    }

    #[test]
    fn sigma_basis_elements_are_fixed() {
        for j in -3..=3 {
            for l in 0..3 {
                assert!(in_dsigma(&dsigma_basis(j, l)), "j={} l={}", j, l);
                assert!(in_d0sigmabar(&d0sigmabar_basis(j, l)), "j={} l={}", j, l);
            }
        }
    }

    #[test]
    fn raising_generators_are_members() {
        for j in 1..=4 {
            for g in GeneratorSet::DMinus.raising_generators(j, 6) {
                assert!(in_dminus(&g));
            }
            for g in GeneratorSet::DSigmaMinus.raising_generators(j, 6) {
                assert!(in_dminus(&g) && in_dsigma(&g), "j={}", j);
            }
            for g in GeneratorSet::D0SigmaBarMinus.raising_generators(j, 6) {
                assert!(in_dminus(&g) && in_d0sigmabar(&g), "j={}", j);
            }
            for g in GeneratorSet::D0Minus.raising_generators(j, 6) {
                assert!(in_dminus(&g) && in_d0(&g));
            }
        }
    }
}
