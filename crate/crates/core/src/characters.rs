//! Virasoro characters and multiplicity extraction by lowest-term peeling.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::Error;
use crate::partition::partition_counts;
use crate::qseries::{qs_mul, qs_partition_generating, qs_theta, QSeries};
use crate::scalar::ExactScalar;
use crate::verma::{gram_matrix, irreducible_level_dims, VermaParams};

/// `t^h·p(t)`: the graded dimension of the Verma module (independent of `c`).
pub fn char_verma(_c: &ExactScalar, h: &ExactScalar, order: usize) -> QSeries {
    qs_partition_generating(order).with_offset(h.clone())
}

/// `(t^{j²} − t^{(j+1)²})·p(t)`, the character of `L(1, j²)`; `order` counts
/// degrees above the leading exponent `j²`.
pub fn char_irreducible_c1(j: u64, order: usize) -> QSeries {
    let p = partition_counts(order);
    let gap = (2 * j + 1) as usize;
    let coeffs = (0..=order)
        .map(|n| {
            let mut c = BigInt::from(p[n].clone());
            if n >= gap {
                c -= BigInt::from(p[n - gap].clone());
            }
            ExactScalar::from_integer(c)
        })
        .collect();
    QSeries::new(ExactScalar::from((j * j) as i64), order, coeffs)
}

/// Compares `char_irreducible_c1(j)` with Gram ranks of `M(1, j²)` through
/// degree `cap`. Returns the first mismatching degree, if any.
pub fn validate_irreducible_c1(j: u64, cap: u32) -> Result<(), Error> {
    let params = VermaParams::new(ExactScalar::one(), ExactScalar::from((j * j) as i64));
    let dims = irreducible_level_dims(&params, cap);
    let chi = char_irreducible_c1(j, cap as usize);
    for (n, d) in dims.iter().enumerate() {
        if chi.coeff(n).and_then(ExactScalar::to_i64) != Some(*d as i64) {
            return Err(Error::InvalidParameter(format!(
                "closed-form c = 1 character for j = {j} disagrees with Gram rank {d} at degree {n}"
            )));
        }
    }
    Ok(())
}

/// `t^h·p(t)` after checking that every Gram matrix through `order` has full
/// rank, i.e. the Verma module has no null vectors there.
pub fn char_irreducible_generic(c: &ExactScalar, h: &ExactScalar, order: usize) -> Result<QSeries, Error> {
    char_irreducible_generic_checked(c, h, order, order as u32)
}

/// As [`char_irreducible_generic`], but the full-rank check only covers levels
/// up to `check_level` (Gram matrices grow like `p(n)`).
pub fn char_irreducible_generic_checked(
    c: &ExactScalar,
    h: &ExactScalar,
    order: usize,
    check_level: u32,
) -> Result<QSeries, Error> {
    let params = VermaParams::new(c.clone(), h.clone());
    for level in 0..=check_level.min(order as u32) {
        let gram = gram_matrix(&params, level);
        let rank = gram.rank();
        if rank < gram.dim() {
            return Err(Error::DegenerateGram { level: level as usize, rank, dim: gram.dim() });
        }
    }
    Ok(char_verma(c, h, order))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterFamily {
    pub c: ExactScalar,
    /// Sorted by lowest weight; each character has offset equal to its `h`.
    members: Vec<(ExactScalar, QSeries)>,
}

impl CharacterFamily {
    pub fn new(c: ExactScalar, mut members: Vec<(ExactScalar, QSeries)>) -> Result<Self, Error> {
        members.sort_by(|a, b| a.0.cmp(&b.0));
        for w in members.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidParameter(format!("duplicate lowest weight {}", w[0].0)));
            }
        }
        for (h, chi) in &members {
            if chi.offset() != h {
                return Err(Error::InvalidParameter(format!("character offset {} ≠ h = {h}", chi.offset())));
            }
            if chi.coeff(0).is_none_or(ExactScalar::is_zero) {
                return Err(Error::InvalidParameter(format!("character at h = {h} has no leading term")));
            }
        }
        Ok(CharacterFamily { c, members })
    }

    /// `{ch L(1, j²) : j² ≤ order}`, each trusted through absolute degree `order`.
    pub fn c1(order: usize) -> Self {
        let mut members = Vec::new();
        let mut j = 0u64;
        while (j * j) as usize <= order {
            members.push((ExactScalar::from((j * j) as i64), char_irreducible_c1(j, order - (j * j) as usize)));
            j += 1;
        }
        CharacterFamily { c: ExactScalar::one(), members }
    }

    pub fn members(&self) -> &[(ExactScalar, QSeries)] {
        &self.members
    }

    pub fn get(&self, h: &ExactScalar) -> Option<&QSeries> {
        self.members.binary_search_by(|m| m.0.cmp(h)).ok().map(|i| &self.members[i].1)
    }

    /// `Σ mult_i · ch_i`, starting from the zero series at `offset` of `order`.
    pub fn combine(
        &self,
        multiplicities: &[(ExactScalar, u64)],
        offset: &ExactScalar,
        order: usize,
    ) -> Result<QSeries, Error> {
        let mut acc = QSeries::new(offset.clone(), order, Vec::new());
        for (h, m) in multiplicities {
            let chi = self.get(h).ok_or_else(|| Error::UnknownConstituent(h.clone()))?;
            acc = acc.add(&chi.scale(&ExactScalar::from(*m as i64)))?;
        }
        Ok(acc)
    }
}

/// Greedy lowest-term peeling of `chi` (truncated at `order` degrees above its
/// offset) into non-negative integer multiples of family characters.
pub fn extract_multiplicities(
    chi: &QSeries,
    family: &CharacterFamily,
    order: usize,
) -> Result<Vec<(ExactScalar, u64)>, Error> {
    let mut rest = chi.truncate(order);
    let mut found = Vec::new();
    while let Some((degree, coeff)) = rest.lowest_nonzero() {
        let exponent = rest.offset() + ExactScalar::from(degree as i64);
        let member = family.get(&exponent).ok_or_else(|| Error::UnknownConstituent(exponent.clone()))?;
        let lead = member.coeff(0).expect("validated leading term");
        let mult = coeff.checked_div(lead)?;
        let count = match mult.to_i64() {
            Some(k) if k > 0 => k as u64,
            _ => return Err(Error::NotDecomposable { exponent: Box::new(exponent), coefficient: Box::new(mult) }),
        };
        rest = rest.sub(&member.scale(&mult))?;
        found.push((exponent, count));
    }
    Ok(found)
}

/// Outcome of the SU(2)₁ branching check at character level.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BranchingReport {
    pub identity: &'static str,
    #[cfg_attr(feature = "serde", serde(rename = "Jmax"))]
    pub jmax: u64,
    pub order: usize,
    /// `Σ_{j≤Jmax} (2j+1)(t^{j²} − t^{(j+1)²}) = Σ_{n∈ℤ} t^{n²}` through `order`.
    pub telescoping: bool,
    /// `(j², multiplicity)` recovered from `θ(t)·p(t)`.
    pub multiplicities: Vec<(u64, u64)>,
    /// `(j², 2j + 1)`: quoted values, not computed.
    pub statistical_dimensions: Vec<(u64, u64)>,
    pub pass: bool,
}

/// Checks the SU(2)₁ → Vir decomposition with multiplicities `2j + 1` at
/// character level. Requires `order < (jmax + 1)²`.
pub fn verify_su21_branching(jmax: u64, order: usize) -> Result<BranchingReport, Error> {
    if order as u64 >= (jmax + 1) * (jmax + 1) {
        return Err(Error::InvalidParameter(format!(
            "order {order} must be below (Jmax + 1)² = {}",
            (jmax + 1) * (jmax + 1)
        )));
    }
    let zero = ExactScalar::zero();
    let mut telescoped = QSeries::new(zero.clone(), order, Vec::new());
    for j in 0..=jmax {
        let weight = ExactScalar::from((2 * j + 1) as i64);
        let lo = (j * j) as usize;
        let hi = ((j + 1) * (j + 1)) as usize;
        let term =
            QSeries::monomial(zero.clone(), lo, order).sub(&QSeries::monomial(zero.clone(), hi, order))?.scale(&weight);
        telescoped = telescoped.add(&term)?;
    }
    let theta = qs_theta(order);
    let telescoping = telescoped == theta;

    let chi = qs_mul(&theta, &qs_partition_generating(order));
    let family = CharacterFamily::c1(order);
    let extracted = extract_multiplicities(&chi, &family, order)?;
    let multiplicities: Vec<(u64, u64)> = extracted
        .iter()
        .map(|(h, m)| (h.to_i64().and_then(|x| x.to_u64()).expect("c = 1 family weights are j²"), *m))
        .collect();
    let expected: Vec<(u64, u64)> =
        (0..=jmax).filter(|j| (j * j) as usize <= order).map(|j| (j * j, 2 * j + 1)).collect();
    Ok(BranchingReport {
        identity: "su21-branching",
        jmax,
        order,
        telescoping,
        pass: telescoping && multiplicities == expected,
        statistical_dimensions: expected,
        multiplicities,
    })
}
