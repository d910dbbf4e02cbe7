//! Partitions, weights, q-characters, and growth.
//!
//! The q-character of the irreducible highest weight module attached to a
//! partition is computed two independent ways: a closed product formula
//! (finite-type character divided by a tower of q-Pochhammer factors) and a
//! brute-force enumeration of semistandard tableaux. The B- and C-family
//! characters over the infinite-rank orthogonal/symplectic matrix algebras
//! come from the coroot product formula, again along two routes: telescoped
//! closed form and direct truncated product over the positive coroot lists.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::rat::Rat;
use crate::series::QSeries;

/// A partition: non-increasing positive integer parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from parts; trailing zeros are stripped, and the sequence must
    /// be non-increasing.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn d(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `n(λ) = Σ_i (i−1)·λ_i`.
    pub fn n_stat(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// Part at 1-based index `i` (zero when past the end).
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut out = Vec::with_capacity(cols);
        for c in 1..=cols {
            out.push(self.parts.iter().filter(|&&p| p as usize >= c).count() as u32);
        }
        Partition { parts: out }
    }

    /// All partitions of `m`, in lexicographically decreasing order.
    pub fn all_of_size(m: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            let hi = remaining.min(max_part);
            for p in (1..=hi).rev() {
                prefix.push(p);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m.max(1), &mut Vec::new(), &mut out);
        out
    }

    pub fn render(&self) -> String {
        use core::fmt::Write;
        if self.parts.is_empty() {
            return String::from("()");
        }
        let mut s = String::new();
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "{}", p).unwrap();
        }
        s
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render())
    }
}

/// A non-increasing, finitely supported sequence of non-positive integers
/// indexed by `j ≤ 0` — the negative-side highest weights. Stored through its
/// mirror partition `ν_i = −λ_{1−i}`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NegPartition {
    mirror: Partition,
}

impl NegPartition {
    pub fn empty() -> Self {
        NegPartition::default()
    }

    /// From the mirror partition: `ν = (−λ_0, −λ_{−1}, …)`.
    pub fn from_mirror(mirror: Partition) -> Self {
        NegPartition { mirror }
    }

    /// `ω₋₁ = (…, 0, −1)`: the single label `λ_0 = −1`.
    pub fn omega_minus_one() -> Self {
        NegPartition {
            mirror: Partition::new(alloc::vec![1]).unwrap(),
        }
    }

    pub fn mirror(&self) -> &Partition {
        &self.mirror
    }

    pub fn is_empty(&self) -> bool {
        self.mirror.is_empty()
    }

    /// Total size `|λ⁻| = Σ |λ_j|`.
    pub fn size(&self) -> u64 {
        self.mirror.size()
    }

    /// The nonzero entries as `(j, λ_j)` with `j ≤ 0` and `λ_j < 0`.
    pub fn entries(&self) -> Vec<(i64, i64)> {
        self.mirror
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| (-(i as i64), -(p as i64)))
            .collect()
    }

    /// Label at index `j ≤ 0`.
    pub fn entry(&self, j: i64) -> i64 {
        assert!(j <= 0);
        -(self.mirror.part((1 - j) as usize) as i64)
    }
}

impl fmt::Debug for NegPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "neg({:?})", self.mirror)
    }
}

/// A finitely supported rational weight for the positive-side matrix algebra:
/// labels `λ_i`, `i ≥ 1`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GenWeight {
    labels: BTreeMap<u32, Rat>,
}

impl GenWeight {
    pub fn new() -> Self {
        GenWeight::default()
    }

    pub fn set(mut self, i: u32, v: Rat) -> Self {
        assert!(i >= 1);
        if v.is_zero() {
            self.labels.remove(&i);
        } else {
            self.labels.insert(i, v);
        }
        self
    }

    pub fn from_labels(labels: &[Rat]) -> Self {
        let mut w = GenWeight::new();
        for (i, v) in labels.iter().enumerate() {
            if !v.is_zero() {
                w.labels.insert(i as u32 + 1, v.clone());
            }
        }
        w
    }

    pub fn label(&self, i: u32) -> Rat {
        self.labels.get(&i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn max_index(&self) -> u32 {
        self.labels.keys().next_back().copied().unwrap_or(0)
    }
}

/// Result of the exact growth classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Growth {
    Finite(u64),
    Infinite,
}

/// Exact growth of the irreducible highest weight module with weight `λ`:
/// `|λ|` when `λ` is a partition (integer, non-increasing, non-negative),
/// infinite otherwise.
pub fn growth_exact(w: &GenWeight) -> Growth {
    let top = w.max_index();
    let mut prev: Option<Rat> = None;
    let mut total: u64 = 0;
    for i in 1..=top {
        let v = w.label(i);
        if !v.is_integer() || v.is_negative() {
            return Growth::Infinite;
        }
        if let Some(p) = &prev {
            if &v > p {
                return Growth::Infinite;
            }
        }
        total += v.to_integer().unwrap() as u64;
        prev = Some(v);
    }
    Growth::Finite(total)
}

/// Doubling-slope growth estimate of a graded-dimension series: with
/// cumulative dimensions `S(k) = Σ_{i≤k} c_i`, returns
/// `log2( S(N) / S(⌊N/2⌋) )` at the truncation order `N`.
///
/// A series of polynomial growth degree `g` gives values near `g`; the
/// constant series gives exactly `0`.
pub fn growth_estimate(s: &QSeries) -> Rat {
    let n = s.order();
    if n == 0 {
        return Rat::zero();
    }
    let cum = s.cumulative();
    let full = cum[n].to_f64();
    let half = cum[n / 2].to_f64();
    if !(full > 0.0) || !(half > 0.0) {
        return Rat::zero();
    }
    let est = libm::log2(full / half);
    Rat::from_f64(est).unwrap_or_else(Rat::zero)
}

/// The q-character polynomial of the finite irreducible module of the
/// `d×d` matrix algebra with highest weight `λ̄` (padded with zeros to `d`),
/// truncated at order `n`:
///
/// ```text
/// ∏_{1≤i<j≤d} (1−q^{λ_i−λ_j+j−i}) / (1−q^{j−i})
/// ```
pub fn ch_finite_gl(lam: &Partition, d: usize, n: usize) -> QSeries {
    assert!(d >= lam.d(), "d must cover all parts");
    let mut num = QSeries::one(n);
    let mut den = QSeries::one(n);
    for i in 1..=d {
        for j in i + 1..=d {
            let lp = lam.part(i) as i64 - lam.part(j) as i64;
            if lp == 0 {
                continue;
            }
            let rho = (j - i) as i64;
            num = num.mul(&QSeries::one_minus_q_pow((lp + rho) as usize, n));
            den = den.mul(&QSeries::one_minus_q_pow(rho as usize, n));
        }
    }
    num.mul(&den.inverse().expect("unit constant term"))
}

/// Closed-form q-character of the irreducible highest weight module of the
/// positive-side infinite matrix algebra:
///
/// ```text
/// ch(λ) = ch_finite(λ̄) / ∏_{j=1}^{d} (1−q^j)(1−q^{j+1})…(1−q^{j+λ_{d−j+1}−1})
/// ```
pub fn ch_lplus(lam: &Partition, n: usize) -> QSeries {
    let d = lam.d();
    let mut den = QSeries::one(n);
    for j in 1..=d {
        let m = lam.part(d - j + 1) as usize;
        den = den.mul(&QSeries::pochhammer(j, m, n));
    }
    ch_finite_gl(lam, d, n).mul(&den.inverse().expect("unit constant term"))
}

/// Brute-force oracle for [`ch_lplus`]: enumerate semistandard tableaux of
/// shape `λ` with entries in `{1, 2, …}`, weight `q^{Σ(entry−1)}`, normalized
/// by `q^{n(λ)}` so the minimal tableau sits in degree 0.
pub fn ch_ssyt_oracle(lam: &Partition, n: usize) -> QSeries {
    let shape: Vec<usize> = lam.parts().iter().map(|&p| p as usize).collect();
    let mut counts = alloc::vec![0u64; n + 1];
    if shape.is_empty() {
        counts[0] = 1;
    } else {
        let rows = shape.len();
        let mut grid: Vec<Vec<u32>> = shape.iter().map(|&w| alloc::vec![0u32; w]).collect();
        // cells in row-major order
        let mut cells = Vec::new();
        for (r, &w) in shape.iter().enumerate() {
            for c in 0..w {
                cells.push((r, c));
            }
        }
        fn rec(
            cells: &[(usize, usize)],
            idx: usize,
            grid: &mut Vec<Vec<u32>>,
            norm_weight: usize,
            n: usize,
            rows: usize,
            counts: &mut [u64],
        ) {
            if idx == cells.len() {
                counts[norm_weight] += 1;
                return;
            }
            let (r, c) = cells[idx];
            let mut lo = r as u32 + 1; // column-strict forces entry ≥ row index
            if c > 0 {
                lo = lo.max(grid[r][c - 1]);
            }
            if r > 0 {
                lo = lo.max(grid[r - 1][c] + 1);
            }
            // normalized contribution of this cell is entry − 1 − r ≥ 0
            let budget = n - norm_weight;
            let hi = (r as u32 + 1) + budget as u32;
            let _ = rows;
            for e in lo..=hi {
                let contrib = (e as usize - 1) - r;
                if contrib > budget {
                    break;
                }
                grid[r][c] = e;
                rec(cells, idx + 1, grid, norm_weight + contrib, n, rows, counts);
            }
            grid[r][c] = 0;
        }
        rec(&cells, 0, &mut grid, 0, n, rows, &mut counts);
    }
    QSeries::from_coeffs(counts.into_iter().map(|c| Rat::from_int(c as i64)).collect())
}

/// The two infinite classical families with a closed character formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BCFamily {
    B,
    C,
}

impl BCFamily {
    pub fn name(&self) -> &'static str {
        match self {
            BCFamily::B => "B",
            BCFamily::C => "C",
        }
    }
}

/// A highest weight for the B- or C-family: labels `λ_i` (`i ≥ 1`) and
/// central charge `c`.
#[derive(Clone, PartialEq, Eq)]
pub struct BCWeight {
    pub family: BCFamily,
    labels: Vec<Rat>,
    pub c: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotDominant(pub String);

impl fmt::Display for NotDominant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "weight is not dominant integral: {}", self.0)
    }
}

impl BCWeight {
    pub fn new(family: BCFamily, labels: Vec<Rat>, c: Rat) -> Self {
        let mut labels = labels;
        while labels.last().map(|v| v.is_zero()).unwrap_or(false) {
            labels.pop();
        }
        BCWeight { family, labels, c }
    }

    /// Sum of fundamental weights: `marks` lists indices (0 allowed,
    /// repetitions allowed). Labels form the conjugate of the partition of
    /// positive marks; the central charge is `k + h/2` (B) or `k + h` (C)
    /// where `k` counts positive marks and `h` zero marks.
    pub fn from_fundamental_marks(family: BCFamily, marks: &[u32]) -> Self {
        let mut pos: Vec<u32> = marks.iter().copied().filter(|&m| m > 0).collect();
        pos.sort_unstable_by(|a, b| b.cmp(a));
        let h = (marks.len() - pos.len()) as i64;
        let k = pos.len() as i64;
        let conj = Partition::new(pos).expect("sorted decreasing").conjugate();
        let labels = conj
            .parts()
            .iter()
            .map(|&p| Rat::from_int(p as i64))
            .collect();
        let c = match family {
            BCFamily::B => Rat::from_int(k) + Rat::frac(h, 2),
            BCFamily::C => Rat::from_int(k + h),
        };
        BCWeight::new(family, labels, c)
    }

    pub fn label(&self, i: usize) -> Rat {
        if i == 0 || i > self.labels.len() {
            Rat::zero()
        } else {
            self.labels[i - 1].clone()
        }
    }

    pub fn labels(&self) -> &[Rat] {
        &self.labels
    }

    /// Pairing with the 0-th simple coroot: `2c−2λ₁` (B) or `c−λ₁` (C).
    pub fn alpha0_pairing(&self) -> Rat {
        match self.family {
            BCFamily::B => {
                (&self.c - &self.label(1)).scale_two()
            }
            BCFamily::C => &self.c - &self.label(1),
        }
    }

    /// Number of simple coroots with nonzero pairing (the 0-th included).
    pub fn nonzero_simple_pairings(&self) -> usize {
        let mut count = 0;
        if !self.alpha0_pairing().is_zero() {
            count += 1;
        }
        let top = self.labels.len();
        for i in 1..=top {
            if !(self.label(i) - self.label(i + 1)).is_zero() {
                count += 1;
            }
        }
        count
    }

    /// Validate dominance and return integer labels plus `n₁`.
    fn dominant_data(&self) -> Result<(Vec<i64>, i64), NotDominant> {
        let mut lam = Vec::with_capacity(self.labels.len());
        for (i, v) in self.labels.iter().enumerate() {
            match v.to_integer() {
                Some(x) if x >= 0 => lam.push(x),
                _ => {
                    return Err(NotDominant(alloc::format!(
                        "label {} = {} is not a non-negative integer",
                        i + 1,
                        v
                    )))
                }
            }
        }
        if lam.windows(2).any(|w| w[0] < w[1]) {
            return Err(NotDominant(String::from("labels are not non-increasing")));
        }
        let a0 = self.alpha0_pairing();
        match a0.to_integer() {
            Some(x) if x >= 0 => {}
            _ => {
                return Err(NotDominant(alloc::format!(
                    "pairing with the 0-th coroot is {}",
                    a0
                )))
            }
        }
        let n1 = lam.len() as i64;
        Ok((lam, n1))
    }

    /// `2c` as an integer (guaranteed by dominance for both families).
    fn two_c_int(&self) -> Result<i64, NotDominant> {
        let two_c = self.c.scale_two();
        two_c.to_integer().ok_or_else(|| {
            NotDominant(alloc::format!("2c = {} is not an integer", two_c))
        })
    }
}

impl Rat {
    fn scale_two(&self) -> Rat {
        self * &Rat::from_int(2)
    }
}

impl fmt::Debug for BCWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} c={}", self.family.name(), self.c)?;
        write!(f, " l=")?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

/// Single factor `(1−q^{lam+rho}) / (1−q^{rho})` accumulated into running
/// numerator/denominator products.
fn push_factor(num: &mut QSeries, den: &mut QSeries, lam: i64, rho: i64, n: usize) {
    debug_assert!(rho >= 1);
    debug_assert!(lam >= 0);
    if lam == 0 {
        return;
    }
    *num = num.mul(&QSeries::one_minus_q_pow((lam + rho) as usize, n));
    *den = den.mul(&QSeries::one_minus_q_pow(rho as usize, n));
}

/// Closed-form q-character for the B family, via the grouped coroot product:
/// the finite orthogonal block times telescoped q-Pochhammer towers.
pub fn ch_binf(w: &BCWeight, n: usize) -> Result<QSeries, NotDominant> {
    assert!(w.family == BCFamily::B);
    let (lam, n1) = w.dominant_data()?;
    let two_c = w.two_c_int()?;
    let part = |i: i64| -> i64 {
        if i >= 1 && i <= lam.len() as i64 {
            lam[(i - 1) as usize]
        } else {
            0
        }
    };

    let mut num = QSeries::one(n);
    let mut den = QSeries::one(n);
    // finite block: coroot families restricted to the rank-n₁ orthogonal
    // subalgebra
    for i in 0..=n1 - 1 {
        for j in i..=n1 - 1 {
            let lp = if i == 0 {
                two_c - part(1) - part(j + 1)
            } else {
                part(i) - part(j + 1)
            };
            push_factor(&mut num, &mut den, lp, j - i + 1, n);
        }
    }
    for i in 1..n1 {
        for j in i + 1..=n1 {
            let lp = two_c - part(i + 1) - part(j);
            push_factor(&mut num, &mut den, lp, i + j, n);
        }
    }
    // telescoped towers accumulate into the denominator; a single series
    // inversion at the end keeps the cost at one quadratic pass
    for jj in 1..=n1 {
        let m = part(n1 - jj + 1);
        den = den.mul(&QSeries::pochhammer(jj as usize, m as usize, n));
    }
    den = den.mul(&QSeries::pochhammer(
        (n1 + 1) as usize,
        (two_c - part(1)) as usize,
        n,
    ));
    for i in 1..=n1 {
        let m = two_c - part(i + 1);
        den = den.mul(&QSeries::pochhammer((n1 + i + 1) as usize, m as usize, n));
    }
    let mut i = n1 + 1;
    while 2 * i + 1 <= n as i64 {
        den = den.mul(&QSeries::pochhammer((2 * i + 1) as usize, two_c as usize, n));
        i += 1;
    }
    Ok(num.mul(&den.inverse().expect("unit constant term")))
}

/// Closed-form q-character for the C family: finite symplectic block times
/// telescoped towers.
pub fn ch_cinf(w: &BCWeight, n: usize) -> Result<QSeries, NotDominant> {
    assert!(w.family == BCFamily::C);
    let (lam, n1) = w.dominant_data()?;
    let c_int = (&w.c)
        .to_integer()
        .ok_or_else(|| NotDominant(alloc::format!("c = {} is not an integer", w.c)))?;
    let two_c = 2 * c_int;
    let part = |i: i64| -> i64 {
        if i >= 1 && i <= lam.len() as i64 {
            lam[(i - 1) as usize]
        } else {
            0
        }
    };

    let mut num = QSeries::one(n);
    let mut den = QSeries::one(n);
    // finite block: rank-n₁ symplectic subalgebra
    for i in 0..=n1 - 1 {
        for j in i..=n1 - 1 {
            let lp = if i == 0 {
                c_int - part(j + 1)
            } else {
                part(i) - part(j + 1)
            };
            push_factor(&mut num, &mut den, lp, j - i + 1, n);
        }
    }
    for i in 0..n1 {
        for j in i + 1..=n1 - 1 {
            let lp = two_c - part(i + 1) - part(j + 1);
            push_factor(&mut num, &mut den, lp, i + j + 2, n);
        }
    }
    for jj in 1..=n1 {
        let m = part(n1 - jj + 1);
        den = den.mul(&QSeries::pochhammer(jj as usize, m as usize, n));
    }
    den = den.mul(&QSeries::pochhammer((n1 + 1) as usize, c_int as usize, n));
    for i in 0..n1 {
        let m = two_c - part(i + 1);
        den = den.mul(&QSeries::pochhammer((n1 + i + 2) as usize, m as usize, n));
    }
    let mut i = n1;
    while 2 * i + 3 <= n as i64 {
        den = den.mul(&QSeries::pochhammer((2 * i + 3) as usize, two_c as usize, n));
        i += 1;
    }
    Ok(num.mul(&den.inverse().expect("unit constant term")))
}

/// Independent cross-check: the raw coroot product, factor by factor, with
/// factors lying entirely beyond the truncation order dropped.
pub fn ch_bc_coroot_oracle(w: &BCWeight, n: usize) -> Result<QSeries, NotDominant> {
    let (lam, n1) = w.dominant_data()?;
    let two_c = w.two_c_int()?;
    let part = |i: i64| -> i64 {
        if i >= 1 && i <= lam.len() as i64 {
            lam[(i - 1) as usize]
        } else {
            0
        }
    };
    let mut num = QSeries::one(n);
    let mut den = QSeries::one(n);
    match w.family {
        BCFamily::B => {
            // first family: i = 0, ρ = j+1
            for j in 0..n as i64 {
                let lp = two_c - part(1) - part(j + 1);
                push_factor(&mut num, &mut den, lp, j + 1, n);
            }
            // first family: 1 ≤ i ≤ n₁
            for i in 1..=n1 {
                for j in i..i + n as i64 {
                    let lp = part(i) - part(j + 1);
                    push_factor(&mut num, &mut den, lp, j - i + 1, n);
                }
            }
            // second family: 1 ≤ i < j, ρ = i+j
            for i in 1.. {
                if 2 * i + 1 > n as i64 {
                    break;
                }
                for j in i + 1..=(n as i64 - i) {
                    let lp = two_c - part(i + 1) - part(j);
                    push_factor(&mut num, &mut den, lp, i + j, n);
                }
            }
        }
        BCFamily::C => {
            let c_int = two_c / 2;
            for j in 0..n as i64 {
                let lp = c_int - part(j + 1);
                push_factor(&mut num, &mut den, lp, j + 1, n);
            }
            for i in 1..=n1 {
                for j in i..i + n as i64 {
                    let lp = part(i) - part(j + 1);
                    push_factor(&mut num, &mut den, lp, j - i + 1, n);
                }
            }
            // second family: 0 ≤ i < j, ρ = i+j+2
            for i in 0.. {
                if 2 * i + 3 > n as i64 {
                    break;
                }
                for j in i + 1..=(n as i64 - i - 2) {
                    let lp = two_c - part(i + 1) - part(j + 1);
                    push_factor(&mut num, &mut den, lp, i + j + 2, n);
                }
            }
        }
    }
    Ok(num.mul(&den.inverse().expect("unit constant term")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_invariants() {
        assert!(Partition::new(alloc::vec![1, 2]).is_none());
        assert_eq!(p(&[3, 1]).size(), 4);
        assert_eq!(p(&[3, 1]).n_stat(), 1);
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::all_of_size(5).len(), 7);
        assert_eq!(Partition::all_of_size(0).len(), 1);
    }

    #[test]
    fn finite_gl_characters() {
        assert_eq!(ch_finite_gl(&p(&[1]), 1, 5), QSeries::one(5));
        let s = ch_finite_gl(&p(&[2, 1]), 2, 5);
        assert_eq!(s.coeff(0), r(1));
        assert_eq!(s.coeff(1), r(1));
        assert_eq!(s.coeff(2), r(0));
        assert_eq!(ch_finite_gl(&p(&[1, 1]), 2, 5), QSeries::one(5));
    }

    #[test]
    fn lplus_characters() {
        let s = ch_lplus(&p(&[1]), 5);
        assert_eq!(s.coeffs(), &[r(1), r(1), r(1), r(1), r(1), r(1)]);
        let s = ch_lplus(&p(&[1, 1]), 4);
        assert_eq!(s.coeffs(), &[r(1), r(1), r(2), r(2), r(3)]);
        let s = ch_lplus(&Partition::empty(), 3);
        assert_eq!(s, QSeries::one(3));
    }

    #[test]
    fn ssyt_oracle_examples() {
        let s = ch_ssyt_oracle(&p(&[1]), 3);
        assert_eq!(s.coeffs(), &[r(1), r(1), r(1), r(1)]);
        let s = ch_ssyt_oracle(&p(&[2]), 3);
        assert_eq!(s.coeffs(), &[r(1), r(1), r(2), r(2)]);
        let s = ch_ssyt_oracle(&p(&[1, 1]), 3);
        assert_eq!(s.coeffs(), &[r(1), r(1), r(2), r(2)]);
    }

    #[test]
    fn oracle_matches_closed_form() {
        for m in 1..=4u32 {
            for lam in Partition::all_of_size(m) {
                assert_eq!(
                    ch_lplus(&lam, 8),
                    ch_ssyt_oracle(&lam, 8),
                    "mismatch at {:?}",
                    lam
                );
            }
        }
    }

    #[test]
    fn growth_exact_examples() {
        let w = GenWeight::from_labels(&[r(3), r(1)]);
        assert_eq!(growth_exact(&w), Growth::Finite(4));
        let w = GenWeight::from_labels(&[r(1), r(2)]);
        assert_eq!(growth_exact(&w), Growth::Infinite);
        let w = GenWeight::from_labels(&[Rat::frac(1, 2)]);
        assert_eq!(growth_exact(&w), Growth::Infinite);
        assert_eq!(growth_exact(&GenWeight::new()), Growth::Finite(0));
    }

    #[test]
    fn growth_estimate_constant_series() {
        assert_eq!(growth_estimate(&QSeries::one(50)), Rat::zero());
    }

    #[test]
    fn growth_estimate_tracks_degree() {
        let est = growth_estimate(&ch_lplus(&p(&[1]), 200)).to_f64();
        assert!((est - 1.0).abs() < 0.15, "est = {}", est);
        let est = growth_estimate(&ch_lplus(&p(&[2, 1]), 200)).to_f64();
        assert!((est - 3.0).abs() < 0.25, "est = {}", est);
    }

    #[test]
    fn fundamental_marks() {
        // single mark at 1 in family B: λ = (1), c = 1
        let w = BCWeight::from_fundamental_marks(BCFamily::B, &[1]);
        assert_eq!(w.label(1), r(1));
        assert_eq!(w.c, r(1));
        // Λ₀: c = 1/2 (B) or 1 (C)
        let w = BCWeight::from_fundamental_marks(BCFamily::B, &[0]);
        assert_eq!(w.c, Rat::frac(1, 2));
        let w = BCWeight::from_fundamental_marks(BCFamily::C, &[0]);
        assert_eq!(w.c, r(1));
        // Λ₂ conjugates to labels (1,1)
        let w = BCWeight::from_fundamental_marks(BCFamily::B, &[2]);
        assert_eq!(w.label(1), r(1));
        assert_eq!(w.label(2), r(1));
    }

    #[test]
    fn b_character_trivial_and_level_one() {
        let zero = BCWeight::new(BCFamily::B, alloc::vec![], r(0));
        let s = ch_binf(&zero, 6).unwrap();
        assert_eq!(s, QSeries::one(6));

        // first fundamental weight: q-coefficient is 1
        let w = BCWeight::from_fundamental_marks(BCFamily::B, &[1]);
        let s = ch_binf(&w, 8).unwrap();
        assert_eq!(s.coeff(0), r(1));
        assert_eq!(s.coeff(1), r(1));
        // (1,0,...) with c = 1 gives the full partition generating series
        assert_eq!(s.coeff(4), r(5));
        assert_eq!(s.coeff(8), r(22));
    }

    #[test]
    fn c_character_level_one() {
        let w = BCWeight::from_fundamental_marks(BCFamily::C, &[0]);
        let s = ch_cinf(&w, 8).unwrap();
        assert_eq!(s.coeff(0), r(1));
        assert_eq!(s.coeff(1), r(1));
    }

    #[test]
    fn closed_forms_match_coroot_oracle() {
        let weights = [
            alloc::vec![0u32],
            alloc::vec![1],
            alloc::vec![2],
            alloc::vec![1, 0],
            alloc::vec![0, 0],
        ];
        for marks in &weights {
            let w = BCWeight::from_fundamental_marks(BCFamily::B, marks);
            let lhs = ch_binf(&w, 10).unwrap();
            let rhs = ch_bc_coroot_oracle(&w, 10).unwrap();
            assert_eq!(lhs, rhs, "B mismatch at {:?}", w);

            let w = BCWeight::from_fundamental_marks(BCFamily::C, marks);
            let lhs = ch_cinf(&w, 10).unwrap();
            let rhs = ch_bc_coroot_oracle(&w, 10).unwrap();
            assert_eq!(lhs, rhs, "C mismatch at {:?}", w);
        }
    }

    #[test]
    fn q1_coefficient_counts_nonzero_pairings() {
        for marks in [alloc::vec![0u32], alloc::vec![1], alloc::vec![2, 0]] {
            for fam in [BCFamily::B, BCFamily::C] {
                let w = BCWeight::from_fundamental_marks(fam, &marks);
                let s = match fam {
                    BCFamily::B => ch_binf(&w, 6).unwrap(),
                    BCFamily::C => ch_cinf(&w, 6).unwrap(),
                };
                assert_eq!(
                    s.coeff(1),
                    r(w.nonzero_simple_pairings() as i64),
                    "family {:?} marks {:?}",
                    fam,
                    marks
                );
            }
        }
    }

    #[test]
    fn non_dominant_rejected() {
        let w = BCWeight::new(BCFamily::B, alloc::vec![Rat::frac(1, 2)], r(1));
        assert!(ch_binf(&w, 4).is_err());
        let w = BCWeight::new(BCFamily::C, alloc::vec![r(2)], r(1));
        assert!(ch_cinf(&w, 4).is_err());
    }
}
