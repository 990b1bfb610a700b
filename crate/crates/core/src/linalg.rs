//! Exact dense linear algebra over ℚ: determinant, rank, and a positive
//! semidefiniteness test for symmetric matrices that produces a witness on
//! failure.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::ExactScalar;

pub type Matrix = Vec<Vec<ExactScalar>>;

/// Result of [`is_positive_semidefinite`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsdVerdict {
    /// All pivots non-negative; `zero_pivots` null directions were found.
    Psd { rank: usize, zero_pivots: usize },
    /// `witnessᵀ·M·witness = value < 0`.
    Indefinite { witness: Vec<ExactScalar>, value: ExactScalar },
}

impl PsdVerdict {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdVerdict::Psd { .. })
    }
}

/// `xᵀ·M·x`.
pub fn quadratic_form(m: &[Vec<ExactScalar>], x: &[ExactScalar]) -> ExactScalar {
    let mut acc = ExactScalar::zero();
    for (i, row) in m.iter().enumerate() {
        if x[i].is_zero() {
            continue;
        }
        let mut r = ExactScalar::zero();
        for (j, mij) in row.iter().enumerate() {
            if !x[j].is_zero() && !mij.is_zero() {
                r += mij * &x[j];
            }
        }
        acc += &x[i] * &r;
    }
    acc
}

/// Symmetric elimination with diagonal pivoting.
///
/// A negative diagonal entry, or a zero diagonal entry with a nonzero entry in
/// its row, certifies indefiniteness; the certificate is lifted back through
/// the recorded pivots to a vector in the original coordinates.
pub fn is_positive_semidefinite(m: &[Vec<ExactScalar>]) -> PsdVerdict {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut active = vec![true; n];
    // (pivot index, pivot row restricted to indices active at that step)
    let mut steps: Vec<(usize, Vec<ExactScalar>)> = Vec::new();
    let mut rank = 0;
    let mut zero_pivots = 0;

    loop {
        let live: Vec<usize> = (0..n).filter(|&i| active[i]).collect();
        if live.is_empty() {
            return PsdVerdict::Psd { rank, zero_pivots };
        }

        if let Some(&i) = live.iter().find(|&&i| a[i][i].is_negative()) {
            let mut y = vec![ExactScalar::zero(); n];
            y[i] = ExactScalar::one();
            return indefinite(m, lift(y, &steps));
        }

        let mut dropped = false;
        for &i in &live {
            if !a[i][i].is_zero() {
                continue;
            }
            if let Some(&j) = live.iter().find(|&&j| j != i && !a[i][j].is_zero()) {
                // y = t·e_i + e_j with yᵀAy = 2t·a_ij + a_jj = −1
                let mut y = vec![ExactScalar::zero(); n];
                let two_aij = &a[i][j] + &a[i][j];
                let t = -(&a[j][j] + ExactScalar::one()).checked_div(&two_aij).expect("a_ij ≠ 0");
                y[i] = t;
                y[j] = ExactScalar::one();
                return indefinite(m, lift(y, &steps));
            }
            active[i] = false;
            zero_pivots += 1;
            dropped = true;
        }
        if dropped {
            continue;
        }

        let k = live[0];
        let pivot = a[k][k].clone();
        let mut row = vec![ExactScalar::zero(); n];
        for &j in &live {
            row[j] = a[k][j].clone();
        }
        active[k] = false;
        for &i in live.iter().filter(|&&i| i != k) {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].checked_div(&pivot).expect("positive pivot");
            for &j in live.iter().filter(|&&j| j != k) {
                if !row[j].is_zero() {
                    let delta = &factor * &row[j];
                    a[i][j] -= delta;
                }
            }
        }
        steps.push((k, row));
        rank += 1;
    }
}

fn lift(mut x: Vec<ExactScalar>, steps: &[(usize, Vec<ExactScalar>)]) -> Vec<ExactScalar> {
    for (k, row) in steps.iter().rev() {
        let mut s = ExactScalar::zero();
        for (j, r) in row.iter().enumerate() {
            if j != *k && !r.is_zero() && !x[j].is_zero() {
                s += r * &x[j];
            }
        }
        x[*k] = -s.checked_div(&row[*k]).expect("recorded pivot is nonzero");
    }
    x
}

fn indefinite(m: &[Vec<ExactScalar>], witness: Vec<ExactScalar>) -> PsdVerdict {
    let value = quadratic_form(m, &witness);
    debug_assert!(value.is_negative());
    PsdVerdict::Indefinite { witness, value }
}

/// Row echelon form by exact Gaussian elimination; returns (rank, determinant
/// when square).
fn eliminate(m: &[Vec<ExactScalar>]) -> (usize, ExactScalar) {
    let mut a: Matrix = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut det = ExactScalar::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            det = ExactScalar::zero();
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            det = -det;
        }
        let pivot = a[rank][col].clone();
        det *= &pivot;
        for r in rank + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].checked_div(&pivot).expect("nonzero pivot");
            let (top, bottom) = a.split_at_mut(r);
            for (x, y) in bottom[0][col..cols].iter_mut().zip(&top[rank][col..cols]) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        rank += 1;
    }
    if rows != cols {
        det = ExactScalar::zero();
    }
    (rank, det)
}

pub fn rank(m: &[Vec<ExactScalar>]) -> usize {
    eliminate(m).0
}

/// Determinant of a square matrix (1 for the empty matrix).
pub fn determinant(m: &[Vec<ExactScalar>]) -> ExactScalar {
    eliminate(m).1
}
