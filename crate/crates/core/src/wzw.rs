//! Simple Lie algebra data and Sugawara central charges
//! `c(G_k) = dim(G)·k / (k + h∨)`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::discrete::{classify_central_charge, RegimeReport};
use crate::error::Error;
use crate::scalar::ExactScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Series {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Series {
    pub const ALL: [Series; 9] =
        [Series::A, Series::B, Series::C, Series::D, Series::E6, Series::E7, Series::E8, Series::F4, Series::G2];

    fn fixed_rank(self) -> Option<u32> {
        match self {
            Series::E6 => Some(6),
            Series::E7 => Some(7),
            Series::E8 => Some(8),
            Series::F4 => Some(4),
            Series::G2 => Some(2),
            _ => None,
        }
    }

    fn min_rank(self) -> u32 {
        match self {
            Series::A => 1,
            Series::B | Series::C => 2,
            Series::D => 3,
            s => s.fixed_rank().unwrap(),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E6 => "E6",
            Series::E7 => "E7",
            Series::E8 => "E8",
            Series::F4 => "F4",
            Series::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Series::ALL
            .into_iter()
            .find(|x| x.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown Lie algebra series {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SimpleLieAlgebra {
    pub series: Series,
    pub rank: u32,
    pub dim: u64,
    pub dual_coxeter: u64,
}

impl SimpleLieAlgebra {
    pub fn su(n: u32) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("SU({n}) is not simple")));
        }
        simple_lie_data(Series::A, n - 1)
    }

    pub fn is_su2(&self) -> bool {
        self.series == Series::A && self.rank == 1
    }
}

impl fmt::Display for SimpleLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.series {
            Series::A | Series::B | Series::C | Series::D => write!(f, "{}{}", self.series, self.rank),
            s => write!(f, "{s}"),
        }
    }
}

pub fn simple_lie_data(series: Series, rank: u32) -> Result<SimpleLieAlgebra, Error> {
    let legal = match series.fixed_rank() {
        Some(r) => rank == r,
        None => rank >= series.min_rank(),
    };
    if !legal {
        return Err(Error::IllegalLieAlgebra { series: series.to_string(), rank });
    }
    let n = rank as u64;
    let (dim, dual_coxeter) = match series {
        Series::A => (n * (n + 2), n + 1),
        Series::B => (n * (2 * n + 1), 2 * n - 1),
        Series::C => (n * (2 * n + 1), n + 1),
        Series::D => (n * (2 * n - 1), 2 * n - 2),
        Series::E6 => (78, 12),
        Series::E7 => (133, 18),
        Series::E8 => (248, 30),
        Series::F4 => (52, 9),
        Series::G2 => (14, 4),
    };
    Ok(SimpleLieAlgebra { series, rank, dim, dual_coxeter })
}

pub fn wzw_central_charge(g: &SimpleLieAlgebra, k: u64) -> Result<ExactScalar, Error> {
    if k < 1 {
        return Err(Error::InvalidParameter("level k must be ≥ 1".into()));
    }
    ExactScalar::new(g.dim * k, k + g.dual_coxeter)
}

/// `k(N² − 1)/(N + k)` for SU(N).
pub fn su_n_central_charge(n: u64, k: u64) -> ExactScalar {
    ExactScalar::ratio((k * (n * n - 1)) as i64, (n + k) as i64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct NoncompactRow {
    pub algebra: SimpleLieAlgebra,
    pub level: u64,
    pub c: ExactScalar,
    /// `rank ≤ c ≤ dim`.
    pub rank_bound: bool,
    /// `c ∈ (D+1) ∪ [2, ∞)`.
    pub in_infdim_regime: bool,
    /// `c ≤ 25`.
    pub c_le_25: bool,
    /// `G_k ≠ SU(2)_1` and `c ≤ 25`: maximally non-compact extension
    /// (quoted theorem, not computed).
    pub maximally_noncompact: bool,
    pub regime: RegimeReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct NoncompactScan {
    pub rows: Vec<NoncompactRow>,
    /// Entries with `c ∉ (D+1) ∪ [2, ∞)`.
    pub outside_regime: Vec<(SimpleLieAlgebra, u64)>,
    pub rank_bound_holds: bool,
}

pub fn scan_noncompact(catalog: &[(SimpleLieAlgebra, u64)]) -> Result<NoncompactScan, Error> {
    let mut rows = Vec::with_capacity(catalog.len());
    for &(algebra, level) in catalog {
        let c = wzw_central_charge(&algebra, level)?;
        let regime = classify_central_charge(&c);
        let rank_bound = ExactScalar::from(algebra.rank as i64) <= c && c <= ExactScalar::from(algebra.dim as i64);
        let in_infdim_regime = regime.infdim_applicable;
        let c_le_25 = regime.le_25;
        let maximally_noncompact = !(algebra.is_su2() && level == 1) && c_le_25;
        rows.push(NoncompactRow {
            algebra,
            level,
            c,
            rank_bound,
            in_infdim_regime,
            c_le_25,
            maximally_noncompact,
            regime,
        });
    }
    let outside_regime = rows.iter().filter(|r| !r.in_infdim_regime).map(|r| (r.algebra, r.level)).collect();
    let rank_bound_holds = rows.iter().all(|r| r.rank_bound);
    Ok(NoncompactScan { rows, outside_regime, rank_bound_holds })
}

/// Every simple Lie algebra of rank `≤ max_rank`, at every level `1..=max_level`.
pub fn full_catalog(max_rank: u32, max_level: u64) -> Vec<(SimpleLieAlgebra, u64)> {
    let mut out = Vec::new();
    for series in Series::ALL {
        for rank in 1..=max_rank {
            if let Ok(g) = simple_lie_data(series, rank) {
                for k in 1..=max_level {
                    out.push((g, k));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lie_data() {
        let su2 = simple_lie_data(Series::A, 1).unwrap();
        assert_eq!((su2.dim, su2.dual_coxeter), (3, 2));
        let su3 = simple_lie_data(Series::A, 2).unwrap();
        assert_eq!((su3.dim, su3.dual_coxeter), (8, 3));
        let e8 = simple_lie_data(Series::E8, 8).unwrap();
        assert_eq!((e8.dim, e8.dual_coxeter), (248, 30));
        assert_eq!(wzw_central_charge(&e8, 1).unwrap(), ExactScalar::from(8));
        for (s, r) in [(Series::A, 0), (Series::B, 1), (Series::C, 1), (Series::D, 2), (Series::E8, 7), (Series::G2, 3)]
        {
            assert!(simple_lie_data(s, r).is_err(), "{s}{r}");
        }
        assert_eq!("e6".parse::<Series>().unwrap(), Series::E6);
    }

    #[test]
    fn su2_values() {
        let su2 = SimpleLieAlgebra::su(2).unwrap();
        let c = |k| wzw_central_charge(&su2, k).unwrap();
        assert_eq!(c(1), ExactScalar::from(1));
        assert_eq!(c(2), ExactScalar::ratio(3, 2));
        assert_eq!(c(3), ExactScalar::ratio(9, 5));
        assert!(wzw_central_charge(&su2, 0).is_err());
    }

    #[test]
    fn su2_scan() {
        let su2 = SimpleLieAlgebra::su(2).unwrap();
        let catalog: Vec<_> = (1..=10).map(|k| (su2, k)).collect();
        let scan = scan_noncompact(&catalog).unwrap();
        assert_eq!(scan.outside_regime, [(su2, 1)]);
    }

    #[test]
    fn su_n_level_one() {
        let catalog: Vec<_> = (2..=27).map(|n| (SimpleLieAlgebra::su(n).unwrap(), 1)).collect();
        let scan = scan_noncompact(&catalog).unwrap();
        for (row, n) in scan.rows.iter().zip(2u64..) {
            assert_eq!(row.c, ExactScalar::from(n as i64 - 1));
            assert_eq!(row.c_le_25, n <= 26, "N = {n}");
            assert_eq!(row.maximally_noncompact, (3..=26).contains(&n), "N = {n}");
        }
    }

    #[test]
    fn su_n_formula_path() {
        for n in 2..=12u32 {
            let g = SimpleLieAlgebra::su(n).unwrap();
            for k in 1..=10 {
                assert_eq!(wzw_central_charge(&g, k).unwrap(), su_n_central_charge(n as u64, k));
            }
        }
    }
}
