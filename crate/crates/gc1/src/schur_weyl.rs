//! Tensor realizations of the finite-growth highest weight modules.
//!
//! The basic module `V` has basis `w_a = t^{−a} (a ≥ 1)` — the quotient of
//! Laurent polynomials by the polynomial part — and its partner `V′` has the
//! dual basis `w*_b = (t^b)^* (b ≥ 0)`. Regular-at-origin operators act on
//! `V` through `t^k f(D)·w_a = f(−a)·w_{a−k}` (terms landing in the quotient
//! vanish) and on `V′` by the negative-transpose rule
//! `t^k f(D)·w*_b = −f(b−k)·w*_{b−k}`.
//!
//! Highest weight vectors for a pair of partitions are column-antisymmetrized
//! tensors; cyclic spans under raising operators recover the graded
//! dimensions predicted by the character formulas, and the symmetric-group
//! multiplicity counts tie the whole tensor power together in a
//! product-formula identity.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::characters::{ch_lplus, NegPartition, Partition};
use crate::diffops::{in_dminus, DiffOp, GeneratorSet};
use crate::rat::Rat;
use crate::series::QSeries;

/// Basis tensor: indices of the `V`-slots (each `≥ 1`) followed by indices of
/// the `V′`-slots (each `≥ 0`).
type Key = Vec<i64>;

/// A vector in `T^M(V) ⊗ T^{N′}(V′)`, truncated by principal degree.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorVector {
    /// Number of `V` factors.
    m_plus: usize,
    /// Number of `V′` factors.
    n_minus: usize,
    /// Truncation degree (inclusive).
    trunc: usize,
    terms: BTreeMap<Key, Rat>,
    /// Set when some action result fell beyond the truncation degree and was
    /// dropped.
    truncated: bool,
}

/// Principal degree of a basis tensor.
fn key_degree(key: &[i64], m_plus: usize) -> usize {
    let mut d = 0usize;
    for (idx, &v) in key.iter().enumerate() {
        if idx < m_plus {
            d += (v - 1) as usize;
        } else {
            d += v as usize;
        }
    }
    d
}

impl TensorVector {
    pub fn zero(m_plus: usize, n_minus: usize, trunc: usize) -> Self {
        TensorVector {
            m_plus,
            n_minus,
            trunc,
            terms: BTreeMap::new(),
            truncated: false,
        }
    }

    pub fn basis(m_plus: usize, n_minus: usize, trunc: usize, key: Key) -> Self {
        assert_eq!(key.len(), m_plus + n_minus);
        let mut v = TensorVector::zero(m_plus, n_minus, trunc);
        v.add_term(key, Rat::one());
        v
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.m_plus, self.n_minus)
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn was_truncated(&self) -> bool {
        self.truncated
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &Rat)> {
        self.terms.iter()
    }

    fn add_term(&mut self, key: Key, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(key.len(), self.m_plus + self.n_minus);
        if key_degree(&key, self.m_plus) > self.trunc {
            self.truncated = true;
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Rat::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            let dead: Vec<Key> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        let mut out = self.clone();
        out.truncated |= other.truncated;
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            let mut z = TensorVector::zero(self.m_plus, self.n_minus, self.trunc);
            z.truncated = self.truncated;
            return z;
        }
        TensorVector {
            m_plus: self.m_plus,
            n_minus: self.n_minus,
            trunc: self.trunc,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), c * v)).collect(),
            truncated: self.truncated,
        }
    }

    /// If the vector is a scalar multiple of `other`, return the scalar.
    pub fn ratio_to(&self, other: &Self) -> Option<Rat> {
        if other.is_zero() {
            return if self.is_zero() { Some(Rat::zero()) } else { None };
        }
        let (k0, c0) = other.terms().next().unwrap();
        let mine = self.terms.get(k0)?;
        let ratio = mine / c0;
        if self == &other.scale(&ratio) {
            Some(ratio)
        } else {
            None
        }
    }

    /// Tensor-product concatenation of slot indices.
    pub fn outer(&self, other: &Self) -> Self {
        let mut out = TensorVector::zero(
            self.m_plus + other.m_plus,
            self.n_minus + other.n_minus,
            self.trunc.max(other.trunc),
        );
        assert!(
            self.n_minus == 0,
            "left factor must be pure positive-side for concatenation"
        );
        for (k1, c1) in self.terms() {
            for (k2, c2) in other.terms() {
                let mut key = Vec::with_capacity(k1.len() + k2.len());
                // V slots of both factors, then V′ slots
                key.extend_from_slice(&k1[..self.m_plus]);
                key.extend_from_slice(&k2[..other.m_plus]);
                key.extend_from_slice(&k2[other.m_plus..]);
                out.add_term(key, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*[", c)?;
            for (i, v) in k.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                if i < self.m_plus {
                    write!(f, "w{}", v)?;
                } else {
                    write!(f, "w*{}", v)?;
                }
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotRegular;

impl fmt::Display for NotRegular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "operator is not regular at the origin")
    }
}

/// Act on a tensor by the Leibniz rule, slot by slot. The operator must be
/// regular at the origin (so the dual side stays well defined). Terms pushed
/// beyond the truncation degree are dropped and flagged on the result.
pub fn act(op: &DiffOp, v: &TensorVector) -> Result<TensorVector, NotRegular> {
    if !in_dminus(op) {
        return Err(NotRegular);
    }
    let mut out = TensorVector::zero(v.m_plus, v.n_minus, v.trunc);
    out.truncated = v.truncated;
    for (key, coeff) in v.terms() {
        for slot in 0..key.len() {
            for (k, f) in op.terms() {
                let (new_idx, factor) = if slot < v.m_plus {
                    // w_a ↦ f(−a)·w_{a−k}, quotient kills a−k ≤ 0
                    let a = key[slot];
                    let target = a - k;
                    if target < 1 {
                        continue;
                    }
                    (target, f.eval(&Rat::from_int(-a)))
                } else {
                    // w*_b ↦ −f(b−k)·w*_{b−k}, dual dies below 0
                    let b = key[slot];
                    let target = b - k;
                    if target < 0 {
                        continue;
                    }
                    (target, -f.eval(&Rat::from_int(b - k)))
                };
                if factor.is_zero() {
                    continue;
                }
                let mut new_key = key.clone();
                new_key[slot] = new_idx;
                out.add_term(new_key, coeff * &factor);
            }
        }
    }
    Ok(out)
}

/// Antisymmetrized column `w_{lo} ∧ w_{lo+1} ∧ … ∧ w_{lo+h−1}` as a tensor
/// with `h` slots (positive side when `positive`, dual side otherwise).
fn column_tensor(h: usize, lo: i64, positive: bool, trunc: usize) -> TensorVector {
    let (mp, nm) = if positive { (h, 0) } else { (0, h) };
    let mut out = TensorVector::zero(mp, nm, trunc);
    let indices: Vec<i64> = (0..h as i64).map(|r| lo + r).collect();
    permute_signed(&indices, &mut |perm, sign| {
        out.add_term(perm.to_vec(), Rat::from_int(sign));
    });
    out
}

/// Enumerate all permutations of `items` with their signs.
fn permute_signed(items: &[i64], f: &mut impl FnMut(&[i64], i64)) {
    let mut arr: Vec<i64> = items.to_vec();
    let n = arr.len();
    // iterative Heap's algorithm, tracking parity
    let mut c = alloc::vec![0usize; n];
    let mut sign = 1i64;
    f(&arr, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                arr.swap(0, i);
            } else {
                arr.swap(c[i], i);
            }
            sign = -sign;
            f(&arr, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HwvError;

impl fmt::Display for HwvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "highest weight construction produced the zero vector")
    }
}

/// The highest weight vector of the module attached to `(λ⁺, λ⁻)` inside
/// `T^{|λ⁺|}(V) ⊗ T^{|λ⁻|}(V′)`: the product over columns of `λ⁺` of
/// `w_1 ∧ … ∧ w_h`, tensored with the product over columns of the mirror of
/// `λ⁻` of `w*_0 ∧ … ∧ w*_{h−1}`.
pub fn hwv_construct(
    lambda_plus: &Partition,
    lambda_minus: &NegPartition,
    trunc: usize,
) -> Result<TensorVector, HwvError> {
    let mut pos = TensorVector::basis(0, 0, trunc, Vec::new());
    for h in lambda_plus.conjugate().parts() {
        pos = pos.outer(&column_tensor(*h as usize, 1, true, trunc));
    }
    let mut out = pos;
    for h in lambda_minus.mirror().conjugate().parts() {
        out = out.outer(&column_tensor(*h as usize, 0, false, trunc));
    }
    if out.is_zero() {
        return Err(HwvError);
    }
    Ok(out)
}

/// Dimension of the irreducible symmetric-group module for `λ`, by the hook
/// length formula.
pub fn dim_u(lam: &Partition) -> u64 {
    if lam.is_empty() {
        return 1;
    }
    let conj = lam.conjugate();
    let mut hooks_product: u64 = 1;
    for (i, &row) in lam.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as u64 - j as u64 - 1;
            let leg = conj.part(j + 1) as u64 - i as u64 - 1;
            hooks_product *= arm + leg + 1;
        }
    }
    let mut fact: u64 = 1;
    for k in 2..=lam.size() {
        fact *= k;
    }
    fact / hooks_product
}

/// Graded dimensions of the span of the highest weight vector under repeated
/// application of the degree-raising generators of the chosen family, within
/// the window `0..=n`.
pub fn cyclic_span_dims(
    lambda_plus: &Partition,
    lambda_minus: &NegPartition,
    n: usize,
    gens: GeneratorSet,
) -> QSeries {
    // the highest weight vector sits at tensor degree n(λ⁺) + n(λ⁻*); the
    // module-degree window 0..=n therefore spans tensor degrees up to n+base
    let base = (lambda_plus.n_stat() + lambda_minus.mirror().n_stat()) as usize;
    let hwv = hwv_construct(lambda_plus, lambda_minus, n + base)
        .expect("valid partitions give a nonzero vector");
    // polynomial breadth: the f-arguments of slot actions range over at most
    // 3(n+base)+3 consecutive integers
    let breadth = (3 * (n + base) + 3) as u32;
    let has_dual = !lambda_minus.is_empty();
    let gens_by_degree: Vec<Vec<DiffOp>> = (1..=n as i64)
        .map(|j| {
            // a degree-j generator only sees its coefficient polynomial
            // through the values at the slot arguments reachable in the
            // window; drop generators whose value vectors add nothing
            let mut points: Vec<i64> = (1..=(n + base + 1) as i64).map(|a| -a).collect();
            if has_dual {
                points.extend(j..=j + (n + base) as i64);
            }
            dedup_by_values(gens.raising_generators(j, breadth), -j, &points)
        })
        .collect();

    // per-degree echelon bases
    let mut bases: Vec<Vec<BTreeMap<Key, Rat>>> = alloc::vec![Vec::new(); n + 1];
    let hwv_map: BTreeMap<Key, Rat> = hwv.terms().map(|(k, c)| (k.clone(), c.clone())).collect();
    bases[0].push(normalize(hwv_map));

    for d in 1..=n {
        for j in 1..=d {
            for g in &gens_by_degree[j - 1] {
                let lower: Vec<BTreeMap<Key, Rat>> = bases[d - j].clone();
                for row in lower {
                    let v = TensorVector {
                        m_plus: hwv.m_plus,
                        n_minus: hwv.n_minus,
                        trunc: n + base,
                        terms: row,
                        truncated: false,
                    };
                    let image = act(g, &v).expect("generators are regular");
                    let mut candidate: BTreeMap<Key, Rat> =
                        image.terms().map(|(k, c)| (k.clone(), c.clone())).collect();
                    reduce(&mut candidate, &bases[d]);
                    if !candidate.is_empty() {
                        bases[d].push(normalize(candidate));
                    }
                }
            }
        }
    }

    QSeries::from_coeffs(
        bases
            .iter()
            .map(|b| Rat::from_int(b.len() as i64))
            .collect(),
    )
}

/// Keep only generators whose value vectors on `points` extend the span of
/// the vectors kept so far. Every generator is a single `t^k f(D)` term; two
/// coefficient polynomials agreeing on all reachable arguments act
/// identically on the truncated window.
fn dedup_by_values(gens: Vec<DiffOp>, k: i64, points: &[i64]) -> Vec<DiffOp> {
    let mut kept: Vec<DiffOp> = Vec::new();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for g in gens {
        let f = g.coeff_of_t(k);
        let mut vals: Vec<Rat> = points.iter().map(|&p| f.eval(&Rat::from_int(p))).collect();
        // eliminate against kept rows (each normalized with leading 1)
        for row in &rows {
            let lead = row.iter().position(|c| !c.is_zero()).unwrap();
            if vals[lead].is_zero() {
                continue;
            }
            let factor = vals[lead].clone();
            for (v, r) in vals.iter_mut().zip(row) {
                *v = &*v - &(&factor * r);
            }
        }
        if let Some(lead) = vals.iter().position(|c| !c.is_zero()) {
            let inv = vals[lead].recip();
            for v in vals.iter_mut() {
                *v = &*v * &inv;
            }
            rows.push(vals);
            kept.push(g);
        }
        if rows.len() == points.len() {
            break;
        }
    }
    kept
}

fn pivot(v: &BTreeMap<Key, Rat>) -> Option<Key> {
    v.keys().next().cloned()
}

fn normalize(mut v: BTreeMap<Key, Rat>) -> BTreeMap<Key, Rat> {
    if let Some(p) = pivot(&v) {
        let lead = v[&p].clone();
        for val in v.values_mut() {
            *val = &*val / &lead;
        }
    }
    v
}

/// Reduce `v` against an echelon set of normalized rows.
fn reduce(v: &mut BTreeMap<Key, Rat>, rows: &[BTreeMap<Key, Rat>]) {
    for row in rows {
        let p = match pivot(row) {
            Some(p) => p,
            None => continue,
        };
        let coeff = match v.get(&p) {
            Some(c) => c.clone(),
            None => continue,
        };
        for (k, rv) in row {
            let cur = v.get(k).cloned().unwrap_or_else(Rat::zero);
            let next = &cur - &(&coeff * rv);
            if next.is_zero() {
                v.remove(k);
            } else {
                v.insert(k.clone(), next);
            }
        }
    }
}

/// Product-formula identity for the positive tensor power: summing the
/// characters of all weight-`M` components with their symmetric-group
/// multiplicities and grading offsets reproduces `(1−q)^{−M}`:
///
/// ```text
/// Σ_{|λ|=M} dim U_λ · q^{n(λ)} · ch(λ)  ==  (1−q)^{−M}   (mod q^{N+1})
/// ```
pub fn cauchy_check(m: u32, n: usize) -> bool {
    let mut lhs = QSeries::zero(n);
    for lam in Partition::all_of_size(m) {
        let offset = lam.n_stat() as usize;
        if offset > n {
            continue;
        }
        let ch = ch_lplus(&lam, n);
        let term = shift_series(&ch, offset).scale(&Rat::from_int(dim_u(&lam) as i64));
        lhs = lhs.add(&term);
    }
    lhs == QSeries::geometric_pow(m as usize, n)
}

/// Mixed two-sided version over pairs of partitions:
///
/// ```text
/// Σ dim U_{λ⁺} dim U_{λ⁻} q^{n(λ⁺)+n(λ⁻*)} ch⁺ ch⁻ == (1−q)^{−(M+N′)}
/// ```
pub fn mixed_cauchy_check(m: u32, n_prime: u32, n: usize) -> bool {
    let mut lhs = QSeries::zero(n);
    for lp in Partition::all_of_size(m) {
        for mirror in Partition::all_of_size(n_prime) {
            let offset = (lp.n_stat() + mirror.n_stat()) as usize;
            if offset > n {
                continue;
            }
            let mult = Rat::from_int((dim_u(&lp) * dim_u(&mirror)) as i64);
            let ch = ch_lplus(&lp, n).mul(&ch_lplus(&mirror, n));
            lhs = lhs.add(&shift_series(&ch, offset).scale(&mult));
        }
    }
    lhs == QSeries::geometric_pow((m + n_prime) as usize, n)
}

/// Multiply by `q^k`, dropping coefficients past the truncation order.
fn shift_series(s: &QSeries, k: usize) -> QSeries {
    let n = s.order();
    let mut out = QSeries::zero(n);
    for i in 0..=n {
        if i + k <= n {
            out.set_coeff(i + k, s.coeff(i));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffops::{delta_eigenvalues, DeltaVariant};
    use crate::poly::UnivarPoly;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn action_on_basis_vectors() {
        // D·w₁ = −w₁
        let v = TensorVector::basis(1, 0, 6, alloc::vec![1]);
        let dv = act(&DiffOp::d_pow(1), &v).unwrap();
        assert_eq!(dv, v.scale(&r(-1)));

        // t·w₁ dies in the quotient
        let tv = act(&DiffOp::t_pow(1), &v).unwrap();
        assert!(tv.is_zero());
        assert!(!tv.was_truncated());

        // t⁻¹D·w₁ = −w₂
        let op = DiffOp::tk_f(-1, UnivarPoly::var());
        let got = act(&op, &v).unwrap();
        assert_eq!(got, TensorVector::basis(1, 0, 6, alloc::vec![2]).scale(&r(-1)));

        // operators with poles at the origin are rejected
        assert_eq!(act(&DiffOp::t_pow(-1), &v), Err(NotRegular));
    }

    #[test]
    fn dual_action() {
        // on w*₀ everything of positive t-degree dies; D·w*₀ = 0
        let v = TensorVector::basis(0, 1, 6, alloc::vec![0]);
        assert!(act(&DiffOp::d_pow(1), &v).unwrap().is_zero());
        // the constant operator acts by −1 on the dual side
        let got = act(&DiffOp::one(), &v).unwrap();
        assert_eq!(got, v.scale(&r(-1)));
        // raising: t⁻¹D²·w*₀ = −f(1)w*₁ = −w*₁
        let op = DiffOp::tk_f(-1, UnivarPoly::monomial(2, r(1)));
        let got = act(&op, &v).unwrap();
        assert_eq!(got, TensorVector::basis(0, 1, 6, alloc::vec![1]).scale(&r(-1)));
    }

    #[test]
    fn truncation_flag() {
        let v = TensorVector::basis(1, 0, 2, alloc::vec![3]); // degree 2
        let op = DiffOp::tk_f(-1, UnivarPoly::monomial(3, r(1)));
        let got = act(&op, &v).unwrap();
        assert!(got.is_zero());
        assert!(got.was_truncated());
    }

    #[test]
    fn hwv_examples() {
        // single box: w₁
        let v = hwv_construct(&p(&[1]), &NegPartition::empty(), 6).unwrap();
        assert_eq!(v, TensorVector::basis(1, 0, 6, alloc::vec![1]));

        // column of height 2: w₁⊗w₂ − w₂⊗w₁
        let v = hwv_construct(&p(&[1, 1]), &NegPartition::empty(), 6).unwrap();
        let want = TensorVector::basis(2, 0, 6, alloc::vec![1, 2])
            .sub(&TensorVector::basis(2, 0, 6, alloc::vec![2, 1]));
        assert_eq!(v, want);

        // dual single box: w*₀
        let v = hwv_construct(&Partition::empty(), &NegPartition::omega_minus_one(), 6).unwrap();
        assert_eq!(v, TensorVector::basis(0, 1, 6, alloc::vec![0]));
    }

    #[test]
    fn hwv_is_annihilated_by_lowering() {
        for lam in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])] {
            let v = hwv_construct(&lam, &NegPartition::empty(), 8).unwrap();
            for mdeg in 1..=3i64 {
                for l in 0..=3u32 {
                    let op = DiffOp::tk_f(mdeg, UnivarPoly::monomial(l as i64, r(1)));
                    assert!(
                        act(&op, &v).unwrap().is_zero(),
                        "lowering failed for {:?}",
                        lam
                    );
                }
            }
        }
    }

    #[test]
    fn hwv_eigenvalues_match_delta() {
        for lam in [p(&[1]), p(&[1, 1]), p(&[2, 1])] {
            let v = hwv_construct(&lam, &NegPartition::empty(), 8).unwrap();
            let delta = delta_eigenvalues(&lam, &NegPartition::empty(), DeltaVariant::Plain, 4);
            for nn in 1..=4usize {
                let got = act(&DiffOp::d_pow(nn as u32), &v).unwrap();
                let want = delta.coeff(nn) * Rat::factorial(nn as u32);
                assert_eq!(got, v.scale(&want), "n = {} lam = {:?}", nn, lam);
            }
        }
        // dual side: the degree-0 label
        let v = hwv_construct(&Partition::empty(), &NegPartition::omega_minus_one(), 4).unwrap();
        let got = act(&DiffOp::d_pow(1), &v).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn shifted_eigenvalue_on_omega_one() {
        // (D + 1/2)·w₁ = −1/2·w₁
        let v = hwv_construct(&p(&[1]), &NegPartition::empty(), 4).unwrap();
        let op = DiffOp::d_pow(1).add(&DiffOp::tk_f(0, UnivarPoly::constant(Rat::frac(1, 2))));
        let got = act(&op, &v).unwrap();
        assert_eq!(got, v.scale(&Rat::frac(-1, 2)));
    }

    #[test]
    fn dim_u_values() {
        assert_eq!(dim_u(&p(&[3])), 1);
        assert_eq!(dim_u(&p(&[2, 1])), 2);
        assert_eq!(dim_u(&p(&[2, 2])), 2);
        assert_eq!(dim_u(&p(&[1, 1, 1])), 1);
        assert_eq!(dim_u(&p(&[3, 2])), 5);
    }

    #[test]
    fn span_of_single_box() {
        let dims = cyclic_span_dims(&p(&[1]), &NegPartition::empty(), 6, GeneratorSet::DMinus);
        assert_eq!(
            dims.coeffs(),
            &[r(1), r(1), r(1), r(1), r(1), r(1), r(1)]
        );
    }

    #[test]
    fn span_matches_characters() {
        for lam in [p(&[1, 1]), p(&[2])] {
            let dims = cyclic_span_dims(&lam, &NegPartition::empty(), 5, GeneratorSet::DMinus);
            let ch = ch_lplus(&lam, 5);
            assert_eq!(dims, ch, "span mismatch for {:?}", lam);
        }
    }

    #[test]
    fn span_under_restricted_generators() {
        let lam = p(&[1, 1]);
        let want = ch_lplus(&lam, 4);
        for gens in [
            GeneratorSet::DSigmaMinus,
            GeneratorSet::D0Minus,
            GeneratorSet::D0SigmaBarMinus,
        ] {
            let dims = cyclic_span_dims(&lam, &NegPartition::empty(), 4, gens);
            assert_eq!(dims, want, "restricted span mismatch for {:?}", gens);
        }
    }

    #[test]
    fn dual_span() {
        let dims = cyclic_span_dims(
            &Partition::empty(),
            &NegPartition::omega_minus_one(),
            5,
            GeneratorSet::DMinus,
        );
        assert_eq!(dims.coeffs(), &[r(1), r(1), r(1), r(1), r(1), r(1)]);
    }

    #[test]
    fn cauchy_small() {
        assert!(cauchy_check(1, 10));
        assert!(cauchy_check(2, 12));
        assert!(cauchy_check(4, 12));
    }

    #[test]
    fn mixed_cauchy_small() {
        assert!(mixed_cauchy_check(1, 0, 10));
        assert!(mixed_cauchy_check(0, 1, 10));
        assert!(mixed_cauchy_check(1, 1, 10));
    }
}
