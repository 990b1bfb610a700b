//! Truncated formal power series `t^{offset}·Σ_{n=0}^{order} a_n tⁿ` with exact
//! rational coefficients and a rational exponent offset.
//!
//! The truncation order is part of the value. Arithmetic propagates the
//! smallest order of validity, so coefficients past it are never trusted.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::Error;
use crate::partition::partition_counts;
use crate::scalar::ExactScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "QSeriesRepr", into = "QSeriesRepr"))]
pub struct QSeries {
    offset: ExactScalar,
    coeffs: Vec<ExactScalar>,
}

impl QSeries {
    /// `coeffs` must hold `order + 1` entries; shorter input is zero-padded.
    pub fn new(offset: ExactScalar, order: usize, mut coeffs: Vec<ExactScalar>) -> Self {
        coeffs.resize(order + 1, ExactScalar::zero());
        QSeries { offset, coeffs }
    }

    pub fn from_integers(offset: ExactScalar, coeffs: &[i64]) -> Self {
        let order = coeffs.len().saturating_sub(1);
        QSeries::new(offset, order, coeffs.iter().map(|&c| ExactScalar::from(c)).collect())
    }

    /// The constant series `1` through `order`.
    pub fn one(order: usize) -> Self {
        Self::monomial(ExactScalar::zero(), 0, order)
    }

    /// `t^{offset}·t^{degree}` truncated at `order` (zero if `degree > order`).
    pub fn monomial(offset: ExactScalar, degree: usize, order: usize) -> Self {
        let mut coeffs = vec![ExactScalar::zero(); order + 1];
        if degree <= order {
            coeffs[degree] = ExactScalar::one();
        }
        QSeries { offset, coeffs }
    }

    pub fn offset(&self) -> &ExactScalar {
        &self.offset
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    /// Coefficient of `t^{offset + degree}`; `None` past the truncation order.
    pub fn coeff(&self, degree: usize) -> Option<&ExactScalar> {
        self.coeffs.get(degree)
    }

    /// Absolute exponent of the last trusted coefficient.
    pub fn end_exponent(&self) -> ExactScalar {
        &self.offset + ExactScalar::from(self.order() as i64)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        QSeries { offset: self.offset.clone(), coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn with_offset(mut self, offset: ExactScalar) -> Self {
        self.offset = offset;
        self
    }

    pub fn scale(&self, k: &ExactScalar) -> Self {
        QSeries { offset: self.offset.clone(), coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Lowest degree with a nonzero coefficient, within the trusted range.
    pub fn lowest_nonzero(&self) -> Option<(usize, &ExactScalar)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.lowest_nonzero().is_none()
    }

    /// Sum with offset alignment. The offsets must differ by an integer.
    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Result<Self, Error> {
        let shift = integer_shift(&self.offset, &other.offset)?;
        let (low, high, high_shift, high_is_other) =
            if shift >= 0 { (self, other, shift as usize, true) } else { (other, self, (-shift) as usize, false) };
        let end = (low.order()).min(high_shift.saturating_add(high.order()));
        let mut coeffs = Vec::with_capacity(end + 1);
        for d in 0..=end {
            let a = low.coeffs[d].clone();
            let b = if d >= high_shift { high.coeffs[d - high_shift].clone() } else { ExactScalar::zero() };
            // (self ± other) regardless of which one sits lower
            let (s, o) = if high_is_other { (a, b) } else { (b, a) };
            coeffs.push(if negate { s - o } else { s + o });
        }
        Ok(QSeries { offset: low.offset.clone(), coeffs })
    }

    /// True iff `self` and `other` agree coefficientwise over their common range.
    pub fn agrees_with(&self, other: &Self) -> Result<bool, Error> {
        Ok(self.sub(other)?.is_zero())
    }
}

fn integer_shift(a: &ExactScalar, b: &ExactScalar) -> Result<i64, Error> {
    let diff = b - a;
    diff.to_i64().ok_or_else(|| Error::IncommensurateOffsets(Box::new((a.clone(), b.clone()))))
}

/// Cauchy product; offsets add, orders take the minimum.
pub fn qs_mul(a: &QSeries, b: &QSeries) -> QSeries {
    let order = a.order().min(b.order());
    let mut coeffs = vec![ExactScalar::zero(); order + 1];
    for (i, ai) in a.coeffs[..=order].iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs[..=order - i].iter().enumerate() {
            if !bj.is_zero() {
                coeffs[i + j] += ai * bj;
            }
        }
    }
    QSeries { offset: &a.offset + &b.offset, coeffs }
}

/// `p(t) = ∏_{n≥1}(1 − tⁿ)^{−1}` through `order`.
pub fn qs_partition_generating(order: usize) -> QSeries {
    let coeffs = partition_counts(order).into_iter().map(|c| ExactScalar::from_integer(BigInt::from(c))).collect();
    QSeries { offset: ExactScalar::zero(), coeffs }
}

/// `Σ_{n∈ℤ} t^{n²}` through `order`.
pub fn qs_theta(order: usize) -> QSeries {
    let mut coeffs = vec![ExactScalar::zero(); order + 1];
    coeffs[0] = ExactScalar::one();
    let mut n = 1usize;
    while n * n <= order {
        coeffs[n * n] = ExactScalar::from(2);
        n += 1;
    }
    QSeries { offset: ExactScalar::zero(), coeffs }
}

/// Multiplicative inverse of a series with nonzero constant term.
pub fn qs_invert_unit(a: &QSeries) -> Result<QSeries, Error> {
    let a0_inv = a.coeffs[0].recip().map_err(|_| Error::NonUnitSeries)?;
    let order = a.order();
    let mut inv: Vec<ExactScalar> = Vec::with_capacity(order + 1);
    inv.push(a0_inv.clone());
    for n in 1..=order {
        let mut acc = ExactScalar::zero();
        for k in 1..=n {
            if !a.coeffs[k].is_zero() {
                acc += &a.coeffs[k] * &inv[n - k];
            }
        }
        inv.push(-(acc * &a0_inv));
    }
    Ok(QSeries { offset: -&a.offset, coeffs: inv })
}

#[cfg(feature = "serde")]
#[derive(serde::Serialize, serde::Deserialize)]
struct QSeriesRepr {
    offset: ExactScalar,
    order: usize,
    coeffs: Vec<ExactScalar>,
}

#[cfg(feature = "serde")]
impl From<QSeries> for QSeriesRepr {
    fn from(s: QSeries) -> Self {
        QSeriesRepr { order: s.order(), offset: s.offset, coeffs: s.coeffs }
    }
}

#[cfg(feature = "serde")]
impl TryFrom<QSeriesRepr> for QSeries {
    type Error = Error;
    fn try_from(r: QSeriesRepr) -> Result<Self, Error> {
        if r.coeffs.len() != r.order + 1 {
            return Err(Error::InvalidParameter(alloc::format!(
                "series of order {} needs {} coefficients, got {}",
                r.order,
                r.order + 1,
                r.coeffs.len()
            )));
        }
        Ok(QSeries { offset: r.offset, coeffs: r.coeffs })
    }
}
