//! The Verma module `M(c,h)` of the Virasoro algebra.
//!
//! Vectors are combinations of PBW monomials `L_{−λ₁}⋯L_{−λ_k}|h⟩` with
//! `λ₁ ≥ … ≥ λ_k`. The action of `L_n` is computed by straightening with
//!
//! ```text
//! [L_m, L_k] = (m − k) L_{m+k} + δ_{m+k,0} (m³ − m) c / 12,
//! L_k |h⟩ = 0 (k > 0),   L_0 |h⟩ = h |h⟩,
//! ```
//!
//! and the Shapovalov form is read off from `(L_n)† = L_{−n}` with
//! `⟨h|h⟩ = 1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::linalg::{self, PsdVerdict};
use crate::partition::{partitions_of, Partition};
use crate::scalar::{ExactScalar, GaussianScalar};
use crate::vector::GradedVector;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VermaParams {
    pub c: ExactScalar,
    pub h: ExactScalar,
}

impl VermaParams {
    pub fn new(c: ExactScalar, h: ExactScalar) -> Self {
        VermaParams { c, h }
    }
}

/// Memoized straightening engine for one `(c, h)`.
pub struct Straightener<'a> {
    params: &'a VermaParams,
    cache: BTreeMap<(i64, Partition), GradedVector>,
}

impl<'a> Straightener<'a> {
    pub fn new(params: &'a VermaParams) -> Self {
        Straightener { params, cache: BTreeMap::new() }
    }

    /// `L_n v`.
    pub fn apply(&mut self, n: i64, v: &GradedVector) -> GradedVector {
        let mut out = GradedVector::zero();
        for (mu, c) in v.terms() {
            let image = self.apply_monomial(n, mu);
            out.add_scaled(&image, c);
        }
        out
    }

    /// `L_{n_k}⋯L_{n_1} v`, applying `modes[0]` first.
    pub fn apply_sequence(&mut self, modes: &[i64], v: &GradedVector) -> GradedVector {
        modes.iter().fold(v.clone(), |acc, &n| self.apply(n, &acc))
    }

    fn apply_monomial(&mut self, n: i64, mu: &Partition) -> GradedVector {
        if n == 0 {
            let e = &self.params.h + ExactScalar::from(mu.level() as i64);
            return GradedVector::term(mu.clone(), GaussianScalar::real(e));
        }
        if n < 0 && mu.largest().is_none_or(|b| -n >= b as i64) {
            return GradedVector::basis(mu.with_part((-n) as u32));
        }
        if n > 0 && mu.is_empty() {
            return GradedVector::zero();
        }
        let key = (n, mu.clone());
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }

        let (b, rest) = mu.split_first().expect("non-empty monomial");
        let b = b as i64;
        let rest_v = GradedVector::basis(rest.clone());
        // L_n L_{-b} R = L_{-b} (L_n R) + [L_n, L_{-b}] R
        let inner = self.apply_monomial(n, &rest);
        let mut out = self.apply(-b, &inner);
        let bracket = self.apply_monomial(n - b, &rest);
        out.add_scaled(&bracket, &GaussianScalar::from(n + b));
        if n == b {
            let central = ExactScalar::from(n * n * n - n) * &self.params.c * ExactScalar::ratio(1, 12);
            out.add_scaled(&rest_v, &GaussianScalar::real(central));
        }

        self.cache.insert(key, out.clone());
        out
    }
}

/// The exact action of `L_n` on `v` in `M(c,h)`.
pub fn verma_apply(n: i64, v: &GradedVector, params: &VermaParams) -> GradedVector {
    Straightener::new(params).apply(n, v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GramMatrix {
    pub level: u32,
    pub basis: Vec<Partition>,
    pub entries: Vec<Vec<ExactScalar>>,
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn determinant(&self) -> ExactScalar {
        linalg::determinant(&self.entries)
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.entries)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }
}

/// `⟨L_{−μ}|h⟩, v⟩` for a monomial `μ`: apply `L_{μ₁}, …, L_{μ_k}` in turn and
/// read the coefficient of `|h⟩`.
fn pair_with_monomial(s: &mut Straightener<'_>, mu: &Partition, v: &GradedVector) -> GaussianScalar {
    let modes: Vec<i64> = mu.parts().iter().map(|&p| p as i64).collect();
    s.apply_sequence(&modes, v).coefficient(&Partition::empty())
}

/// The Shapovalov matrix at `level`, in the basis `partitions_of(level)`.
pub fn gram_matrix(params: &VermaParams, level: u32) -> GramMatrix {
    let basis = partitions_of(level);
    let mut s = Straightener::new(params);
    let n = basis.len();
    let mut entries = alloc::vec![alloc::vec![ExactScalar::zero(); n]; n];
    for (j, lam) in basis.iter().enumerate() {
        let v = GradedVector::basis(lam.clone());
        for (i, mu) in basis.iter().enumerate().take(j + 1) {
            let z = pair_with_monomial(&mut s, mu, &v);
            debug_assert!(z.is_real(), "Gram entries are real for rational (c, h)");
            entries[i][j] = z.re.clone();
            entries[j][i] = z.re;
        }
    }
    GramMatrix { level, basis, entries }
}

/// Like [`gram_matrix`] but computes every entry, including those below the
/// diagonal, so symmetry can be checked rather than assumed.
pub fn gram_matrix_full(params: &VermaParams, level: u32) -> (GramMatrix, bool) {
    let basis = partitions_of(level);
    let mut s = Straightener::new(params);
    let mut all_real = true;
    let entries = basis
        .iter()
        .map(|mu| {
            basis
                .iter()
                .map(|lam| {
                    let z = pair_with_monomial(&mut s, mu, &GradedVector::basis(lam.clone()));
                    all_real &= z.is_real();
                    z.re
                })
                .collect()
        })
        .collect();
    (GramMatrix { level, basis, entries }, all_real)
}

/// Exact positive-semidefiniteness test on a Gram matrix.
pub fn is_positive_semidefinite(m: &GramMatrix) -> PsdVerdict {
    linalg::is_positive_semidefinite(&m.entries)
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LevelSummary {
    pub level: u32,
    pub dim: usize,
    pub rank: usize,
    pub null_vectors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct UnitarityFailure {
    pub level: u32,
    /// Indefiniteness witness as a vector of the module.
    pub witness: GradedVector,
    /// `⟨w, w⟩ < 0`.
    pub norm: ExactScalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct UnitarityReport {
    pub c: ExactScalar,
    pub h: ExactScalar,
    pub max_level: u32,
    /// True iff every Gram matrix up to `max_level` is positive semidefinite.
    pub consistent: bool,
    pub levels: Vec<LevelSummary>,
    pub failure: Option<UnitarityFailure>,
}

/// Checks positivity of the Shapovalov form level by level, stopping at the
/// first indefinite level.
pub fn unitarity_scan(params: &VermaParams, max_level: u32) -> UnitarityReport {
    let mut levels = Vec::new();
    let mut failure = None;
    for level in 0..=max_level {
        let gram = gram_matrix(params, level);
        match is_positive_semidefinite(&gram) {
            PsdVerdict::Psd { rank, zero_pivots } => {
                levels.push(LevelSummary { level, dim: gram.dim(), rank, null_vectors: zero_pivots })
            }
            PsdVerdict::Indefinite { witness, value } => {
                let witness = gram.basis.iter().cloned().zip(witness.into_iter().map(GaussianScalar::real)).collect();
                failure = Some(UnitarityFailure { level, witness, norm: value });
                break;
            }
        }
    }
    UnitarityReport {
        c: params.c.clone(),
        h: params.h.clone(),
        max_level,
        consistent: failure.is_none(),
        levels,
        failure,
    }
}

/// Graded dimensions of the irreducible quotient `L(c,h)`: the rank of the
/// Gram matrix at each level `0..=max_level`.
pub fn irreducible_level_dims(params: &VermaParams, max_level: u32) -> Vec<usize> {
    (0..=max_level).map(|n| gram_matrix(params, n).rank()).collect()
}
