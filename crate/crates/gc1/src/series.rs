//! Truncated power series with exact coefficients.
//!
//! [`QSeries`] is the carrier for q-characters and growth data, [`XSeries`]
//! for generating series of highest-weight labels and the scalar corrections
//! of the lifted matrix embeddings. Both are dense vectors of rationals up to
//! an inclusive truncation order. Arithmetic between series of different
//! orders re-truncates to the smaller order; nothing ever extends silently.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::rat::Rat;

/// A power series in `q` truncated at an inclusive order `N`.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rat>,
}

impl QSeries {
    /// The zero series of order `n`.
    pub fn zero(n: usize) -> Self {
        QSeries {
            coeffs: alloc::vec![Rat::zero(); n + 1],
        }
    }

    pub fn one(n: usize) -> Self {
        let mut s = QSeries::zero(n);
        s.coeffs[0] = Rat::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty());
        QSeries { coeffs }
    }

    /// Truncation order (inclusive).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, i: usize, c: Rat) {
        assert!(i < self.coeffs.len());
        self.coeffs[i] = c;
    }

    /// Re-truncate to order `n` (must not exceed the current order).
    pub fn truncate(&self, n: usize) -> Self {
        assert!(n <= self.order(), "cannot extend a truncated series");
        QSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = QSeries::zero(n);
        for i in 0..=n {
            out.coeffs[i] = &self.coeffs[i] + &other.coeffs[i];
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = QSeries::zero(n);
        for i in 0..=n {
            out.coeffs[i] = &self.coeffs[i] - &other.coeffs[i];
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|v| c * v).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = QSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Option<Self> {
        if self.coeffs[0].is_zero() {
            return None;
        }
        let n = self.order();
        let c0_inv = self.coeffs[0].recip();
        let mut out = QSeries::zero(n);
        out.coeffs[0] = c0_inv.clone();
        for k in 1..=n {
            let mut acc = Rat::zero();
            for i in 1..=k {
                acc = acc + &self.coeffs[i] * &out.coeffs[k - i];
            }
            out.coeffs[k] = -(acc * c0_inv.clone());
        }
        Some(out)
    }

    /// The polynomial `1 − q^a` as a series of order `n` (`a ≥ 1`).
    pub fn one_minus_q_pow(a: usize, n: usize) -> Self {
        let mut s = QSeries::one(n);
        if a <= n {
            s.coeffs[a] = &s.coeffs[a] - &Rat::one();
        }
        s
    }

    /// The finite product `(1−q^a)(1−q^{a+1})…(1−q^{a+m−1})`.
    pub fn pochhammer(a_exp: usize, m: usize, n: usize) -> Self {
        let mut acc = QSeries::one(n);
        for i in 0..m {
            acc = acc.mul(&QSeries::one_minus_q_pow(a_exp + i, n));
        }
        acc
    }

    /// `1 / [(1−q^a)(1−q^{a+1})…(1−q^{a+m−1})]` truncated at `n`.
    ///
    /// Fails when `m > 0` and `a_exp == 0`: a factor would then have zero
    /// constant term and the product is not invertible as a power series.
    pub fn q_pochhammer_inv(a_exp: usize, m: usize, n: usize) -> Option<Self> {
        if m > 0 && a_exp == 0 {
            return None;
        }
        QSeries::pochhammer(a_exp, m, n).inverse()
    }

    /// `(1−q)^{-m}`.
    pub fn geometric_pow(m: usize, n: usize) -> Self {
        let geo = QSeries::one_minus_q_pow(1, n)
            .inverse()
            .expect("unit constant term");
        let mut acc = QSeries::one(n);
        for _ in 0..m {
            acc = acc.mul(&geo);
        }
        acc
    }

    /// Partial sums of coefficients: `Σ_{i≤k} c_i` for `k = 0..=order`.
    pub fn cumulative(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut acc = Rat::zero();
        for c in &self.coeffs {
            acc = acc + c.clone();
            out.push(acc.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl QSeries {
    pub fn render(&self) -> String {
        use core::fmt::Write;
        let mut out = String::from("[");
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            write!(out, "{}", c).unwrap();
        }
        out.push(']');
        out
    }
}

/// A power series in `x` truncated at an inclusive order `N`; coefficients
/// are of `x^n` (factorials already divided in).
#[derive(Clone, PartialEq, Eq)]
pub struct XSeries {
    coeffs: Vec<Rat>,
}

impl XSeries {
    pub fn zero(n: usize) -> Self {
        XSeries {
            coeffs: alloc::vec![Rat::zero(); n + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty());
        XSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn set_coeff(&mut self, i: usize, c: Rat) {
        assert!(i < self.coeffs.len());
        self.coeffs[i] = c;
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = XSeries::zero(n);
        for i in 0..=n {
            out.coeffs[i] = &self.coeffs[i] + &other.coeffs[i];
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        XSeries {
            coeffs: self.coeffs.iter().map(|v| c * v).collect(),
        }
    }

    /// Taylor series of `e^{a·x}`: coefficients `a^n / n!`.
    pub fn exp(a: &Rat, n: usize) -> Self {
        let mut out = XSeries::zero(n);
        let mut term = Rat::one();
        out.coeffs[0] = term.clone();
        for k in 1..=n {
            term = term * a.clone() / Rat::from_int(k as i64);
            out.coeffs[k] = term.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Debug for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use core::fmt::Write;
        let mut out = String::from("[");
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            write!(out, "{}", c).unwrap();
        }
        out.push(']');
        write!(f, "{}", out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn pochhammer_inverse_geometric() {
        // 1/(1−q) at order 4 is all ones
        let s = QSeries::q_pochhammer_inv(1, 1, 4).unwrap();
        assert_eq!(s.coeffs(), &[r(1), r(1), r(1), r(1), r(1)]);
    }

    #[test]
    fn pochhammer_inverse_two_factors() {
        // 1/((1−q)(1−q²)) = 1 + q + 2q² + 2q³
        let s = QSeries::q_pochhammer_inv(1, 2, 3).unwrap();
        assert_eq!(s.coeffs(), &[r(1), r(1), r(2), r(2)]);
    }

    #[test]
    fn pochhammer_empty_product() {
        let s = QSeries::q_pochhammer_inv(3, 0, 5).unwrap();
        assert_eq!(s, QSeries::one(5));
    }

    #[test]
    fn pochhammer_zero_exponent_not_invertible() {
        assert!(QSeries::q_pochhammer_inv(0, 1, 4).is_none());
    }

    #[test]
    fn mismatched_orders_truncate_to_min() {
        let a = QSeries::one(7);
        let b = QSeries::geometric_pow(1, 3);
        assert_eq!(a.mul(&b).order(), 3);
    }

    #[test]
    fn exp_series_values() {
        let e0 = XSeries::exp(&r(0), 3);
        assert_eq!(e0.coeff(0), r(1));
        assert_eq!(e0.coeff(1), r(0));
        let em1 = XSeries::exp(&r(-1), 3);
        assert_eq!(em1.coeff(2), Rat::frac(1, 2));
        assert_eq!(em1.coeff(3), Rat::frac(-1, 6));
        let eh = XSeries::exp(&Rat::frac(1, 2), 2);
        assert_eq!(eh.coeff(2), Rat::frac(1, 8));
    }
}
