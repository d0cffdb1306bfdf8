//! Truncated formal power series in `u` with exact rational coefficients.
//!
//! Everything downstream of the cycle index is a computation in this ring:
//! products of per-polynomial factors, partition-weighted sums, and the
//! q-series identities. Infinite products whose factors all contribute at the
//! same low degree (such as `Π_{i≥1}(1 - u²/q^{2i-1})`) are computed exactly
//! through Euler's identity rather than by factor truncation.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::partitions::{partitions_of, Partition};
use crate::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series inversion requires a nonzero constant term")]
    NonUnitConstantTerm,
    #[error("infinite factor family keeps contributing below the truncation order")]
    DivergentFamily,
}

/// A power series truncated at a fixed order: coefficients of `u^0 .. u^order`.
///
/// Binary operations on mismatched orders truncate to the smaller one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> TruncatedSeries {
        Self::monomial(Rat::one(), 0, order)
    }

    /// `c·u^e` (zero if `e` exceeds the order).
    pub fn monomial(c: Rat, e: usize, order: usize) -> TruncatedSeries {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> TruncatedSeries {
        assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `u^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn truncated(&self, order: usize) -> TruncatedSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, Rat::zero());
        TruncatedSeries { coeffs }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] - &other.coeffs[k])
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, c: &Rat) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inv(&self) -> Result<TruncatedSeries, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::NonUnitConstantTerm);
        }
        let order = self.order();
        let c0inv = self.coeffs[0].recip();
        let mut out = vec![Rat::zero(); order + 1];
        out[0] = c0inv.clone();
        for k in 1..=order {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = -acc * &c0inv;
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Substitute `u ↦ u^d`, keeping the truncation order.
    pub fn substitute_power(&self, d: usize) -> TruncatedSeries {
        assert!(d >= 1);
        let order = self.order();
        let mut out = vec![Rat::zero(); order + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if let Some(slot) = out.get_mut(k * d) {
                *slot = c.clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// `self^n` by binary exponentiation.
    pub fn pow(&self, n: u64) -> TruncatedSeries {
        let mut result = TruncatedSeries::one(self.order());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Evaluate at a rational point (of the truncated polynomial).
    pub fn eval(&self, u: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        acc
    }
}

impl std::fmt::Display for TruncatedSeries {
    /// `c0 + c1 u + c2 u^2 + …` with rationals as `num/den`; zero terms are
    /// skipped (a zero series prints `0`).
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", crate::rat_str(c))?,
                1 => write!(f, "{} u", crate::rat_str(c))?,
                _ => write!(f, "{} u^{}", crate::rat_str(c), k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

const FACTOR_CONSUMPTION_CAP: usize = 100_000;

/// Exact product of factors `(1 + c·u^e)` up to the truncation order.
///
/// Factors must arrive with nondecreasing exponents; iteration stops at the
/// first exponent beyond the order, so infinite families are fine as long as
/// their exponents grow. A family that keeps producing exponents within the
/// order is rejected as divergent.
pub fn monomial_product<I>(factors: I, order: usize) -> Result<TruncatedSeries, SeriesError>
where
    I: IntoIterator<Item = (Rat, usize)>,
{
    let mut acc = TruncatedSeries::one(order);
    let mut consumed = 0usize;
    for (c, e) in factors {
        if e > order {
            break;
        }
        consumed += 1;
        if consumed > FACTOR_CONSUMPTION_CAP {
            return Err(SeriesError::DivergentFamily);
        }
        if c.is_zero() {
            continue;
        }
        // in-place multiply by (1 + c·u^e)
        if e == 0 {
            acc = acc.scale(&(Rat::one() + c));
        } else {
            let mut coeffs = acc.coeffs.clone();
            for k in (e..=order).rev() {
                let add = &acc.coeffs[k - e] * &c;
                coeffs[k] += add;
            }
            acc = TruncatedSeries { coeffs };
        }
    }
    Ok(acc)
}

/// `Π_{j≥0} (1 - s·r^j·u^e)` as an exact truncated series, via Euler's
/// identity `(t;r)_∞ = Σ_k (-1)^k r^{k(k-1)/2} t^k / ((1-r)⋯(1-r^k))`
/// with `t = s·u^e`. Needs `r^k ≠ 1` for every contributing `k ≥ 1`.
pub fn euler_product(s: &Rat, r: &Rat, e: usize, order: usize) -> TruncatedSeries {
    assert!(e >= 1);
    let mut coeffs = vec![Rat::zero(); order + 1];
    coeffs[0] = Rat::one();
    let mut s_pow = Rat::one(); // s^k
    let mut r_tri = Rat::one(); // r^{k(k-1)/2}
    let mut r_pow = Rat::one(); // r^k
    let mut poch = Rat::one(); // (1-r)(1-r^2)⋯(1-r^k)
    let mut k = 0usize;
    while (k + 1) * e <= order {
        k += 1;
        s_pow *= s;
        r_tri *= &r_pow; // multiply by r^{k-1}
        r_pow *= r;
        let factor = Rat::one() - &r_pow;
        assert!(!factor.is_zero(), "euler_product requires r^k != 1");
        poch *= factor;
        let mut term = &s_pow * &r_tri / &poch;
        if k % 2 == 1 {
            term = -term;
        }
        coeffs[k * e] = term;
    }
    TruncatedSeries { coeffs }
}

/// `Σ weight(λ)·u^{|λ|·step}` over partitions with `|λ|·step ≤ order`
/// passing the predicate.
pub fn partition_sum_series<P, W>(
    weight: W,
    pred: P,
    step: usize,
    order: usize,
) -> TruncatedSeries
where
    P: Fn(&Partition) -> bool,
    W: Fn(&Partition) -> Rat,
{
    assert!(step >= 1);
    let mut coeffs = vec![Rat::zero(); order + 1];
    let mut size = 0u64;
    while (size as usize) * step <= order {
        for lam in partitions_of(size) {
            if pred(&lam) {
                coeffs[size as usize * step] += weight(&lam);
            }
        }
        size += 1;
    }
    TruncatedSeries { coeffs }
}
