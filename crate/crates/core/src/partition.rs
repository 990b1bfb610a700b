//! Integer partitions, used as graded basis labels for Verma and Fock modules.
//!
//! A partition `[λ₁, …, λ_k]` with `λ₁ ≥ … ≥ λ_k ≥ 1` labels the monomial
//! `L_{−λ₁}⋯L_{−λ_k}|h⟩` (or `J_{−λ₁}⋯J_{−λ_k}Ω`). Weakly decreasing parts are
//! the normal form targeted by straightening.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from arbitrary positive parts, sorting them.
    pub fn from_parts(mut parts: Vec<u32>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn level(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    /// Inserts a part at its sorted position.
    pub fn with_part(&self, part: u32) -> Self {
        debug_assert!(part > 0);
        let mut parts = self.0.clone();
        let pos = parts.iter().position(|&p| p < part).unwrap_or(parts.len());
        parts.insert(pos, part);
        Partition(parts)
    }

    /// Removes one occurrence of `part`, if present.
    pub fn without_part(&self, part: u32) -> Option<Self> {
        let pos = self.0.iter().position(|&p| p == part)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// Splits off the largest part: `[λ₁, rest…]`.
    pub fn split_first(&self) -> Option<(u32, Partition)> {
        let (&first, rest) = self.0.split_first()?;
        Some((first, Partition(rest.to_vec())))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        let p = Partition::from_parts(parts.clone()).map_err(serde::de::Error::custom)?;
        if p.parts() != parts.as_slice() {
            return Err(serde::de::Error::custom("partition parts must be weakly decreasing"));
        }
        Ok(p)
    }
}

/// All partitions of `n`, in reverse lexicographic order on parts.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// The partition count `p(n)`; zero for negative `n`.
pub fn partition_count(n: i64) -> BigUint {
    if n < 0 {
        return BigUint::from(0u32);
    }
    partition_counts(n as usize).pop().unwrap()
}

/// `[p(0), …, p(n)]` via Euler's pentagonal recurrence.
pub fn partition_counts(n: usize) -> Vec<BigUint> {
    use num_bigint::BigInt;
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n as i64 {
        let mut acc = BigInt::from(0);
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += &p[(m - g1) as usize] * sign;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                acc += &p[(m - g2) as usize] * sign;
            }
        }
        p.push(acc);
    }
    p.into_iter().map(|x| x.to_biguint().expect("p(n) is non-negative")).collect()
}

/// `z_μ = ∏_k k^{m_k}·m_k!`, the Fock-space norm of `J_{−μ}Ω`.
pub fn symmetry_factor(mu: &Partition) -> BigUint {
    let mut z = BigUint::one();
    let parts = mu.parts();
    let mut i = 0;
    while i < parts.len() {
        let k = parts[i];
        let mut m = 0u32;
        while i < parts.len() && parts[i] == k {
            m += 1;
            i += 1;
            z *= BigUint::from(k) * BigUint::from(m);
        }
    }
    z
}
