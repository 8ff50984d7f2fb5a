//! Zeta-sums Σ_{N<n≤2N} n^{it}, the Weyl/van der Corput squaring step, and
//! the diagonal reindexing of finite double sums.

use alloc::vec::Vec;

use crate::sum::{exact_add, ComplexSum, ExactSum, NeumaierSum};
use crate::{Complex64, Error, Result};

#[inline]
fn n_pow_it(n: f64, t: f64) -> Complex64 {
    let (s, c) = libm::sincos(t * libm::log(n));
    Complex64::new(c, s)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZetaSumSpec {
    pub n: u64,
    pub t: f64,
    /// Optional weights w(n) for n = N+1, ..., 2N, in that order.
    pub weights: Option<Vec<f64>>,
}

impl ZetaSumSpec {
    pub fn new(n: u64, t: f64) -> Self {
        ZetaSumSpec { n, t, weights: None }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::domain("zeta-sum needs N >= 1"));
        }
        if !self.t.is_finite() {
            return Err(Error::domain("t must be finite"));
        }
        if let Some(w) = &self.weights {
            if w.len() as u64 != self.n {
                return Err(Error::domain("weight table must have exactly N entries (n = N+1..2N)"));
            }
            if w.iter().any(|x| !x.is_finite() || *x < 0.0) {
                return Err(Error::domain("weights must be finite and non-negative"));
            }
        }
        Ok(())
    }
}

/// Σ_{N<n≤2N} w(n) n^{it}, summed directly with compensation.
pub fn zeta_sum(spec: &ZetaSumSpec) -> Result<Complex64> {
    spec.validate()?;
    let mut acc = ComplexSum::new();
    for (j, n) in (spec.n + 1..=2 * spec.n).enumerate() {
        let w = spec.weights.as_ref().map_or(1.0, |w| w[j]);
        if spec.t == 0.0 {
            acc.add(Complex64::new(w, 0.0));
        } else {
            acc.add(n_pow_it(n as f64, spec.t) * w);
        }
    }
    Ok(acc.value())
}

/// Finitely supported non-negative weights w(n), n = start, start+1, ...
#[derive(Debug, Clone, PartialEq)]
pub struct WeightTable {
    pub start: u64,
    pub values: Vec<f64>,
}

impl WeightTable {
    /// The indicator of `[lo, hi]`.
    pub fn indicator(lo: u64, hi: u64) -> Result<Self> {
        if lo < 1 || hi < lo {
            return Err(Error::domain("indicator needs 1 <= lo <= hi"));
        }
        Ok(WeightTable {
            start: lo,
            values: alloc::vec![1.0; (hi - lo + 1) as usize],
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.start < 1 {
            return Err(Error::domain("weights must start at n >= 1"));
        }
        if self.values.iter().any(|x| !x.is_finite() || *x < 0.0) {
            return Err(Error::domain("weights must be finite and non-negative"));
        }
        Ok(())
    }

    pub fn mass(&self) -> f64 {
        self.values.iter().copied().collect::<NeumaierSum>().value()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.values.iter().enumerate().map(move |(j, w)| (self.start + j as u64, *w))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeylSquare {
    /// Σ_n w(n) |Σ_{0<m≤M} (m+n)^{it}|²
    pub total: f64,
    /// The m = m′ terms.
    pub diagonal: f64,
    /// The m ≠ m′ terms; the sum of `shifts`.
    pub off_diagonal: f64,
    /// `shifts[h-1]` collects the pairs with |m − m′| = h, for h = 1..M−1.
    pub shifts: Vec<f64>,
}

/// The squared sum after Cauchy's inequality, with the diagonal and the
/// per-shift off-diagonal parts reported separately. All three quantities
/// are built from the same unimodular values, so they agree up to rounding.
pub fn weyl_square(m: u64, t: f64, w: &WeightTable) -> Result<WeylSquare> {
    if m < 1 {
        return Err(Error::domain("weyl_square needs M >= 1"));
    }
    if !t.is_finite() {
        return Err(Error::domain("t must be finite"));
    }
    w.validate()?;
    let mm = m as usize;
    let mut total = NeumaierSum::new();
    let mut diagonal = NeumaierSum::new();
    let mut shifts = alloc::vec![NeumaierSum::new(); mm.saturating_sub(1)];
    let mut z = Vec::with_capacity(mm);
    for (n, wn) in w.iter() {
        if wn == 0.0 {
            continue;
        }
        z.clear();
        z.extend((1..=m).map(|j| n_pow_it((j + n) as f64, t)));
        let inner: ComplexSum = z.iter().copied().collect();
        total.add(wn * inner.value().norm_sqr());
        let diag: NeumaierSum = z.iter().map(|v| v.norm_sqr()).collect();
        diagonal.add(wn * diag.value());
        for h in 1..mm {
            let pairs: NeumaierSum = (0..mm - h).map(|j| 2.0 * (z[j] * z[j + h].conj()).re).collect();
            shifts[h - 1].add(wn * pairs.value());
        }
    }
    let shifts: Vec<f64> = shifts.iter().map(NeumaierSum::value).collect();
    let off_diagonal = shifts.iter().copied().collect::<NeumaierSum>().value();
    Ok(WeylSquare {
        total: total.value(),
        diagonal: diagonal.value(),
        off_diagonal,
        shifts,
    })
}

/// A finitely supported function f(m, n) on a rectangle of ℤ², zero outside.
#[derive(Debug, Clone, PartialEq)]
pub struct Table2<T> {
    pub m_start: i64,
    pub n_start: i64,
    pub rows: usize,
    pub cols: usize,
    /// Row-major: `data[(m − m_start) * cols + (n − n_start)]`.
    pub data: Vec<T>,
}

impl<T: ExactSum> Table2<T> {
    pub fn from_fn(m_start: i64, n_start: i64, rows: usize, cols: usize, mut f: impl FnMut(i64, i64) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(m_start + i as i64, n_start + j as i64));
            }
        }
        Table2 {
            m_start,
            n_start,
            rows,
            cols,
            data,
        }
    }

    pub fn get(&self, m: i64, n: i64) -> T {
        let i = m - self.m_start;
        let j = n - self.n_start;
        if i < 0 || j < 0 || i as usize >= self.rows || j as usize >= self.cols {
            T::ZERO
        } else {
            self.data[i as usize * self.cols + j as usize]
        }
    }

    fn validate(&self) -> Result<()> {
        if self.data.len() != self.rows * self.cols {
            return Err(Error::domain("table data length does not match its shape"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReindexReport<T> {
    /// Σ_m Σ_n f(m, n) in storage order.
    pub raw: T,
    /// (offset d, Σ_j f(j, j + d)) for every offset that meets the support.
    pub offsets: Vec<(i64, T)>,
    pub offset_nonneg: T,
    pub offset_neg: T,
    pub offset_total: T,
    pub diagonal: T,
    /// Σ_{m<n} f(m, n)
    pub above: T,
    /// Σ_{m<n} f(n, m)
    pub below: T,
    pub symmetric_total: T,
}

impl<T: ExactSum> ReindexReport<T> {
    pub fn routes_agree(&self) -> bool {
        self.raw == self.offset_total && self.raw == self.symmetric_total
    }
}

/// Rewrites Σ_m Σ_n f(m, n) by deviation from the axis m = n and totals it
/// three independent ways.
pub fn atkinson_reindex<T: ExactSum>(f: &Table2<T>) -> Result<ReindexReport<T>> {
    f.validate()?;
    const WHAT: &str = "atkinson_reindex";
    let mut raw = T::ZERO;
    for v in &f.data {
        raw = exact_add(raw, *v, WHAT)?;
    }
    if f.rows == 0 || f.cols == 0 {
        return Ok(ReindexReport {
            raw,
            offsets: Vec::new(),
            offset_nonneg: T::ZERO,
            offset_neg: T::ZERO,
            offset_total: T::ZERO,
            diagonal: T::ZERO,
            above: T::ZERO,
            below: T::ZERO,
            symmetric_total: T::ZERO,
        });
    }
    let m_lo = f.m_start;
    let m_hi = f.m_start + f.rows as i64 - 1;
    let n_lo = f.n_start;
    let n_hi = f.n_start + f.cols as i64 - 1;

    let mut offsets = Vec::new();
    let (mut nonneg, mut neg) = (T::ZERO, T::ZERO);
    for d in (n_lo - m_hi)..=(n_hi - m_lo) {
        let j_lo = m_lo.max(n_lo - d);
        let j_hi = m_hi.min(n_hi - d);
        let mut s = T::ZERO;
        for j in j_lo..=j_hi {
            s = exact_add(s, f.get(j, j + d), WHAT)?;
        }
        offsets.push((d, s));
        if d >= 0 {
            nonneg = exact_add(nonneg, s, WHAT)?;
        } else {
            neg = exact_add(neg, s, WHAT)?;
        }
    }
    let offset_total = exact_add(nonneg, neg, WHAT)?;

    let lo = m_lo.min(n_lo);
    let hi = m_hi.max(n_hi);
    let (mut diagonal, mut above, mut below) = (T::ZERO, T::ZERO, T::ZERO);
    for a in lo..=hi {
        diagonal = exact_add(diagonal, f.get(a, a), WHAT)?;
        for b in a + 1..=hi {
            above = exact_add(above, f.get(a, b), WHAT)?;
            below = exact_add(below, f.get(b, a), WHAT)?;
        }
    }
    let symmetric_total = exact_add(exact_add(diagonal, above, WHAT)?, below, WHAT)?;

    Ok(ReindexReport {
        raw,
        offsets,
        offset_nonneg: nonneg,
        offset_neg: neg,
        offset_total,
        diagonal,
        above,
        below,
        symmetric_total,
    })
}
