//! Finite linear combinations of partition-labelled monomials with
//! coefficients in ℚ(i).

use alloc::collections::btree_map::{self, BTreeMap};
use core::fmt;

use crate::partition::Partition;
use crate::scalar::{ExactScalar, GaussianScalar};

/// A vector in a lowest-weight module, stored sparsely. Zero coefficients are
/// never kept.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct GradedVector {
    terms: BTreeMap<Partition, GaussianScalar>,
}

impl GradedVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The monomial labelled by `mu` with coefficient 1.
    pub fn basis(mu: Partition) -> Self {
        Self::term(mu, GaussianScalar::one())
    }

    /// The lowest-weight vector (empty partition).
    pub fn vacuum() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn term(mu: Partition, coeff: GaussianScalar) -> Self {
        let mut v = Self::zero();
        v.add_term(mu, &coeff);
        v
    }

    pub fn add_term(&mut self, mu: Partition, coeff: &GaussianScalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += k·other`.
    pub fn add_scaled(&mut self, other: &GradedVector, k: &GaussianScalar) {
        if k.is_zero() {
            return;
        }
        for (mu, c) in &other.terms {
            self.add_term(mu.clone(), &(c * k));
        }
    }

    pub fn scaled(&self, k: &GaussianScalar) -> Self {
        let mut v = Self::zero();
        v.add_scaled(self, k);
        v
    }

    pub fn scaled_real(&self, k: &ExactScalar) -> Self {
        self.scaled(&GaussianScalar::real(k.clone()))
    }

    pub fn add(&self, other: &GradedVector) -> Self {
        let mut v = self.clone();
        v.add_scaled(other, &GaussianScalar::one());
        v
    }

    pub fn sub(&self, other: &GradedVector) -> Self {
        let mut v = self.clone();
        v.add_scaled(other, &-GaussianScalar::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mu: &Partition) -> GaussianScalar {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &GaussianScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common level of all terms, if the vector is homogeneous and nonzero.
    pub fn level(&self) -> Option<u32> {
        let mut levels = self.terms.keys().map(Partition::level);
        let first = levels.next()?;
        levels.all(|l| l == first).then_some(first)
    }

    /// Applies a linear map given on basis monomials.
    pub fn map_linear<F>(&self, mut f: F) -> GradedVector
    where
        F: FnMut(&Partition) -> GradedVector,
    {
        let mut out = GradedVector::zero();
        for (mu, c) in &self.terms {
            out.add_scaled(&f(mu), c);
        }
        out
    }
}

impl FromIterator<(Partition, GaussianScalar)> for GradedVector {
    fn from_iter<I: IntoIterator<Item = (Partition, GaussianScalar)>>(iter: I) -> Self {
        let mut v = GradedVector::zero();
        for (mu, c) in iter {
            v.add_term(mu, &c);
        }
        v
    }
}

impl fmt::Debug for GradedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (mu, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})·{mu:?}")?;
        }
        Ok(())
    }
}

#[cfg(feature = "serde")]
#[derive(serde::Serialize, serde::Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: GaussianScalar,
}

#[cfg(feature = "serde")]
impl serde::Serialize for GradedVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (mu, c) in &self.terms {
            seq.serialize_element(&TermRepr { partition: mu.clone(), coeff: c.clone() })?;
        }
        seq.end()
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for GradedVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = alloc::vec::Vec::<TermRepr>::deserialize(d)?;
        Ok(terms.into_iter().map(|t| (t.partition, t.coeff)).collect())
    }
}
