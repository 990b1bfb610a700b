//! The unitary discrete series `c(m) = 1 − 6/((m+2)(m+3))`,
//! `h_{p,q}(m) = (((m+3)p − (m+2)q)² − 1) / (4(m+2)(m+3))`, and an exact
//! classifier for central-charge regimes.
//!
//! `m` starts at 1: the set `D` of discrete central charges lies in `[1/2, 1)`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::Error;
use crate::scalar::ExactScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DiscretePair {
    pub m: u64,
    pub p: u64,
    pub q: u64,
    pub c: ExactScalar,
    pub h: ExactScalar,
}

fn check_m(m: u64) -> Result<(), Error> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!("discrete series index m = {m} must be ≥ 1")));
    }
    Ok(())
}

pub fn discrete_c(m: u64) -> Result<ExactScalar, Error> {
    check_m(m)?;
    let denom = BigInt::from(m + 2) * BigInt::from(m + 3);
    Ok(ExactScalar::one() - ExactScalar::new(6, denom)?)
}

pub fn discrete_h(m: u64, p: u64, q: u64) -> Result<ExactScalar, Error> {
    check_m(m)?;
    if !(1 <= q && q <= p && p <= m + 1) {
        return Err(Error::InvalidParameter(format!("need 1 ≤ q ≤ p ≤ m + 1, got (m, p, q) = ({m}, {p}, {q})")));
    }
    let r = BigInt::from(m + 3) * BigInt::from(p) - BigInt::from(m + 2) * BigInt::from(q);
    let numer = &r * &r - BigInt::one();
    let denom = BigInt::from(4) * BigInt::from(m + 2) * BigInt::from(m + 3);
    ExactScalar::new(numer, denom)
}

/// All `(m+1)(m+2)/2` pairs for fixed `m`, in lexicographic `(p, q)` order.
pub fn enumerate_discrete_pairs(m: u64) -> Result<Vec<DiscretePair>, Error> {
    let c = discrete_c(m)?;
    let mut out = Vec::new();
    for p in 1..=m + 1 {
        for q in 1..=p {
            out.push(DiscretePair { m, p, q, c: c.clone(), h: discrete_h(m, p, q)? });
        }
    }
    Ok(out)
}

/// The `m ≥ 1` with `c = c(m)`, if any.
///
/// `c = c(m)` iff `(m+2)(m+3) = 6/(1−c)`; writing `N = 6/(1−c)` this needs
/// `N` to be an integer with `1 + 4N` a perfect square `(2m+5)²`.
pub fn discrete_index(c: &ExactScalar) -> Option<u64> {
    let gap = ExactScalar::one() - c;
    if !gap.is_positive() {
        return None;
    }
    let n = ExactScalar::from(6).checked_div(&gap).ok()?;
    if !n.is_integer() {
        return None;
    }
    let disc: BigInt = BigInt::one() + BigInt::from(4) * n.numer();
    let root = disc.sqrt();
    if &root * &root != disc {
        return None;
    }
    // root = 2m + 5
    let m = (root - BigInt::from(5)) / BigInt::from(2);
    if m.is_negative() {
        return None;
    }
    let m = m.to_u64()?;
    (m >= 1).then_some(m)
}

/// Whether the statistical dimension of lowest-weight sectors with
/// `h ≥ (c−1)/24` is settled by the theorems this classifier encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum DimensionStatus {
    /// `c ∈ (D+1) ∪ [2, ∞)`: infinite (quoted theorem, not computed).
    Infinite,
    /// `1 < c < 2` outside `D + 1`: finite or infinite is not decided here.
    Unknown,
    /// `c ≤ 1`: not covered by the infinite-dimension theorem.
    NotApplicable,
}

/// Exact membership tests for a central charge. The theorem flags are
/// metadata quoting proven results; nothing operator-algebraic is computed.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RegimeReport {
    pub c: ExactScalar,
    #[cfg_attr(feature = "serde", serde(rename = "in_D"))]
    pub in_d: bool,
    /// `m` with `c = c(m)`.
    pub d_witness: Option<u64>,
    #[cfg_attr(feature = "serde", serde(rename = "in_D_plus_1"))]
    pub in_d_plus_1: bool,
    /// `m` with `c − 1 = c(m)`.
    pub d_plus_1_witness: Option<u64>,
    pub in_geq2: bool,
    pub le_25: bool,
    pub allowed: bool,
    /// `(c − 1)/24`.
    pub h_threshold: ExactScalar,
    pub infdim_applicable: bool,
    pub cmax_applicable: bool,
    pub dimension_status: DimensionStatus,
    pub flag_provenance: &'static str,
}

pub fn classify_central_charge(c: &ExactScalar) -> RegimeReport {
    let one = ExactScalar::one();
    let d_witness = discrete_index(c);
    let d_plus_1_witness = discrete_index(&(c - &one));
    let in_d = d_witness.is_some();
    let in_d_plus_1 = d_plus_1_witness.is_some();
    let in_geq2 = *c >= ExactScalar::from(2);
    let le_25 = *c <= ExactScalar::from(25);
    let infdim_applicable = in_d_plus_1 || in_geq2;
    let dimension_status = if infdim_applicable {
        DimensionStatus::Infinite
    } else if *c > one {
        DimensionStatus::Unknown
    } else {
        DimensionStatus::NotApplicable
    };
    RegimeReport {
        c: c.clone(),
        in_d,
        d_witness,
        in_d_plus_1,
        d_plus_1_witness,
        in_geq2,
        le_25,
        allowed: in_d || *c >= one,
        h_threshold: (c - &one) * ExactScalar::ratio(1, 24),
        infdim_applicable,
        cmax_applicable: in_d_plus_1 || (in_geq2 && le_25),
        dimension_status,
        flag_provenance: "metadata: quoted theorem",
    }
}

/// `(c ≥ 1 ∧ h ≥ 0)` or `(c, h)` is a discrete-series pair.
pub fn is_allowed_pair(c: &ExactScalar, h: &ExactScalar) -> bool {
    if *c >= ExactScalar::one() {
        return !h.is_negative();
    }
    match discrete_index(c) {
        Some(m) => enumerate_discrete_pairs(m).map(|pairs| pairs.iter().any(|pair| pair.h == *h)).unwrap_or(false),
        None => false,
    }
}
