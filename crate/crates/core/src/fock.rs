//! The Fock space of the Heisenberg algebra `[J_n, J_m] = n δ_{n+m,0}` with
//! `J_0 = q`, and the oscillator Virasoro operators
//!
//! ```text
//! L_n = δ_{n,0} λ²/2 + ½ Σ_j :J_{−j} J_{j+n}: + iλn J_n
//! ```
//!
//! of central charge `1 + 12λ²` and lowest weight `(λ² + q²)/2`.
//!
//! A monomial `J_{−μ₁}⋯J_{−μ_k}Ω` is labelled by the partition `μ`. Operators
//! are never materialized as matrices; they act exactly on explicit vectors,
//! so no level truncation ever happens inside an action. The `max_level`
//! arguments of the verification routines only select which basis vectors
//! are tested.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::partition::{partitions_of, symmetry_factor, Partition};
use crate::qseries::{qs_partition_generating, QSeries};
use crate::scalar::{ExactScalar, GaussianScalar};
use crate::vector::GradedVector;

/// A vector in the charged Fock space; `Ω` is the empty partition.
pub type FockVector = GradedVector;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OscillatorParams {
    pub lambda: ExactScalar,
    pub q: ExactScalar,
}

impl OscillatorParams {
    pub fn new(lambda: ExactScalar, q: ExactScalar) -> Self {
        OscillatorParams { lambda, q }
    }

    /// `1 + 12λ²`.
    pub fn central_charge(&self) -> ExactScalar {
        ExactScalar::one() + ExactScalar::from(12) * &self.lambda * &self.lambda
    }

    /// `(λ² + q²)/2`.
    pub fn lowest_weight(&self) -> ExactScalar {
        (&self.lambda * &self.lambda + &self.q * &self.q) * ExactScalar::ratio(1, 2)
    }
}

/// `J^q_n` on a single monomial.
fn current_monomial(n: i64, q: &ExactScalar, mu: &Partition) -> FockVector {
    match n {
        0 => FockVector::term(mu.clone(), GaussianScalar::real(q.clone())),
        n if n < 0 => FockVector::basis(mu.with_part((-n) as u32)),
        n => {
            let part = n as u32;
            match mu.without_part(part) {
                Some(rest) => {
                    let k = n * mu.multiplicity(part) as i64;
                    FockVector::term(rest, GaussianScalar::from(k))
                }
                None => FockVector::zero(),
            }
        }
    }
}

/// The exact action of `J^q_n`.
pub fn fock_apply_current(n: i64, q: &ExactScalar, v: &FockVector) -> FockVector {
    v.map_linear(|mu| current_monomial(n, q, mu))
}

/// `⟨u, v⟩`, antilinear in `u`, with `⟨J_{−μ}Ω, J_{−ν}Ω⟩ = δ_{μν} z_μ`.
pub fn fock_inner(u: &FockVector, v: &FockVector) -> GaussianScalar {
    let mut acc = GaussianScalar::zero();
    for (mu, cu) in u.terms() {
        let cv = v.coefficient(mu);
        if cv.is_zero() {
            continue;
        }
        let z = ExactScalar::from_integer(num_bigint::BigInt::from(symmetry_factor(mu)));
        acc += &(&cu.conj() * &cv).scale(&z);
    }
    acc
}

fn oscillator_l_monomial(n: i64, params: &OscillatorParams, mu: &Partition) -> FockVector {
    let q = &params.q;
    let mut out = FockVector::zero();
    if n == 0 {
        let shift = &params.lambda * &params.lambda * ExactScalar::ratio(1, 2);
        out.add_term(mu.clone(), &GaussianScalar::real(shift));
    }
    // Normal-ordered pairs (l, r) with l + r = n, l ≤ r, r applied first.
    // Each unordered pair arises from two values of j, except l = r.
    let r_min = (n + 1).div_euclid(2);
    let r_max = (mu.largest().unwrap_or(0) as i64).max(0);
    let half = GaussianScalar::real(ExactScalar::ratio(1, 2));
    let mut r = r_min;
    while r <= r_max {
        let l = n - r;
        let right = current_monomial(r, q, mu);
        if !right.is_zero() {
            let pair = fock_apply_current(l, q, &right);
            if l == r {
                out.add_scaled(&pair, &half);
            } else {
                out.add_scaled(&pair, &GaussianScalar::one());
            }
        }
        r += 1;
    }
    if n != 0 && !params.lambda.is_zero() {
        let coeff = GaussianScalar::imag(&params.lambda * ExactScalar::from(n));
        out.add_scaled(&current_monomial(n, q, mu), &coeff);
    }
    out
}

/// The exact action of `L^{(λ,q)}_n`.
pub fn oscillator_l(n: i64, params: &OscillatorParams, v: &FockVector) -> FockVector {
    v.map_linear(|mu| oscillator_l_monomial(n, params, mu))
}

/// Basis vectors `J_{−μ}Ω` of every level `≤ max_level`.
pub fn basis_up_to(max_level: u32) -> Vec<Partition> {
    (0..=max_level).flat_map(partitions_of).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Counterexample {
    pub vector: FockVector,
    pub lhs: FockVector,
    pub rhs: FockVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BracketReport {
    pub n: i64,
    pub m: i64,
    pub lambda: ExactScalar,
    pub q: ExactScalar,
    pub central_charge: ExactScalar,
    pub max_level: u32,
    pub vectors_checked: usize,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

/// Checks `[L_n, L_m] = (n−m) L_{n+m} + δ_{n+m,0} (n³−n)/12 · (1+12λ²)` on
/// every basis vector of level `ℓ` with `ℓ + max(0,−n) + max(0,−m) ≤ max_level`.
pub fn verify_virasoro_bracket(n: i64, m: i64, params: &OscillatorParams, max_level: u32) -> BracketReport {
    let c = params.central_charge();
    let raise = (-n).max(0) + (-m).max(0);
    let top = max_level as i64 - raise;
    let mut checked = 0;
    let mut counterexample = None;
    if top >= 0 {
        for mu in basis_up_to(top as u32) {
            let v = FockVector::basis(mu);
            let lhs = oscillator_l(n, params, &oscillator_l(m, params, &v)).sub(&oscillator_l(
                m,
                params,
                &oscillator_l(n, params, &v),
            ));
            let mut rhs = oscillator_l(n + m, params, &v).scaled(&GaussianScalar::from(n - m));
            if n + m == 0 {
                let central = ExactScalar::from(n * n * n - n) * ExactScalar::ratio(1, 12) * &c;
                rhs.add_scaled(&v, &GaussianScalar::real(central));
            }
            checked += 1;
            if lhs != rhs {
                counterexample = Some(Counterexample { vector: v, lhs, rhs });
                break;
            }
        }
    }
    BracketReport {
        n,
        m,
        lambda: params.lambda.clone(),
        q: params.q.clone(),
        central_charge: c,
        max_level,
        vectors_checked: checked,
        pass: counterexample.is_none(),
        counterexample,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct HermiticityReport {
    pub n: i64,
    pub max_level: u32,
    pub pairs_checked: usize,
    pub pass: bool,
    /// `(ξ, ψ, ⟨ξ, L_n ψ⟩, ⟨L_{−n} ξ, ψ⟩)` for the first failing pair.
    pub counterexample: Option<(Partition, Partition, GaussianScalar, GaussianScalar)>,
}

/// Checks `⟨ξ, L_n ψ⟩ = ⟨L_{−n} ξ, ψ⟩` over all basis pairs of level `≤ max_level`.
pub fn verify_hermiticity(n: i64, params: &OscillatorParams, max_level: u32) -> HermiticityReport {
    let basis = basis_up_to(max_level);
    let mut checked = 0;
    let mut counterexample = None;
    'outer: for xi in &basis {
        let xi_v = FockVector::basis(xi.clone());
        let l_xi = oscillator_l(-n, params, &xi_v);
        for psi in &basis {
            let psi_v = FockVector::basis(psi.clone());
            let lhs = fock_inner(&xi_v, &oscillator_l(n, params, &psi_v));
            let rhs = fock_inner(&l_xi, &psi_v);
            checked += 1;
            if lhs != rhs {
                counterexample = Some((xi.clone(), psi.clone(), lhs, rhs));
                break 'outer;
            }
        }
    }
    HermiticityReport { n, max_level, pairs_checked: checked, pass: counterexample.is_none(), counterexample }
}

/// `Tr t^{L_0}` computed from the grading: `L_0` acts as `h + n` on the
/// `p(n)`-dimensional level `n`. Offset `h = (λ² + q²)/2`.
pub fn oscillator_character(params: &OscillatorParams, order: usize) -> QSeries {
    let h = params.lowest_weight();
    let coeffs = (0..=order as u32).map(|n| ExactScalar::from(partitions_of(n).len() as i64)).collect();
    QSeries::new(h, order, coeffs)
}

/// `t^h · p(t)`, the closed form the oscillator character is compared with.
pub fn oscillator_character_closed_form(params: &OscillatorParams, order: usize) -> QSeries {
    qs_partition_generating(order).with_offset(params.lowest_weight())
}

/// A finitely supported Fourier/Laurent polynomial `Σ f_n zⁿ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FourierPolynomial {
    coeffs: BTreeMap<i64, GaussianScalar>,
}

impl FourierPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_modes<I: IntoIterator<Item = (i64, GaussianScalar)>>(modes: I) -> Self {
        let mut f = Self::zero();
        for (n, c) in modes {
            f.add_mode(n, &c);
        }
        f
    }

    pub fn add_mode(&mut self, n: i64, c: &GaussianScalar) {
        let slot = self.coeffs.entry(n).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    /// Coefficient of `zⁿ` (the Fourier coefficient `f_n`).
    pub fn coeff(&self, n: i64) -> GaussianScalar {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    pub fn modes(&self) -> impl Iterator<Item = (i64, &GaussianScalar)> {
        self.coeffs.iter().map(|(&n, c)| (n, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut f = self.clone();
        for (n, c) in other.modes() {
            f.add_mode(n, c);
        }
        f
    }

    pub fn scaled(&self, k: &GaussianScalar) -> Self {
        Self::from_modes(self.modes().map(|(n, c)| (n, c * k)))
    }

    /// A real function on the circle: `f_{−n} = conj(f_n)`.
    pub fn is_real(&self) -> bool {
        self.modes().all(|(n, c)| self.coeff(-n) == c.conj())
    }
}

/// `T(f) v = Σ_n f_n L_n v`.
pub fn smear_virasoro(f: &FourierPolynomial, params: &OscillatorParams, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for (n, c) in f.modes() {
        out.add_scaled(&oscillator_l(n, params, v), c);
    }
    out
}

/// `J^q(u) v = Σ_n u_n J^q_n v`.
pub fn smear_current(u: &FourierPolynomial, q: &ExactScalar, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for (n, c) in u.modes() {
        out.add_scaled(&fock_apply_current(n, q, v), c);
    }
    out
}

/// `σ(u, v) = ½ Σ_n n u_n v_{−n}`, so that `[J(u), J(v)] = 2σ(u, v)`.
pub fn weyl_cocycle(u: &FourierPolynomial, v: &FourierPolynomial) -> GaussianScalar {
    let mut acc = GaussianScalar::zero();
    for (n, un) in u.modes() {
        let vm = v.coeff(-n);
        if !vm.is_zero() {
            acc += &(un * &vm).scale(&ExactScalar::from(n));
        }
    }
    acc.scale(&ExactScalar::ratio(1, 2))
}

/// `q·u_0`: the mode-level content of the charge-`q` automorphism,
/// `J^q(u) = J(u) + q u_0`.
pub fn bmt_phase(u: &FourierPolynomial, q: &ExactScalar) -> GaussianScalar {
    u.coeff(0).scale(q)
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Sl2Report {
    pub n: i64,
    pub central_charge: ExactScalar,
    pub max_level: u32,
    /// Solved from `[X_n, Y_n] Ω = in (L_0 + c_n) Ω`.
    pub c_n: Option<ExactScalar>,
    /// `(n² − 1) c / 24`.
    pub expected_c_n: ExactScalar,
    pub vectors_checked: usize,
    /// `[iL_0, X_n] = −n Y_n`
    pub relation_l0_x: bool,
    /// `[iL_0, Y_n] = n X_n`
    pub relation_l0_y: bool,
    /// `[X_n, Y_n] = in (L_0 + c_n)`
    pub relation_x_y: bool,
    pub pass: bool,
}

/// Builds `X_n = (L_{−n} − L_n)/2` and `Y_n = (L_n + L_{−n})/(2i)` and checks
/// the three sl(2) relations on every basis vector of level `ℓ` with
/// `ℓ + n ≤ max_level`.
pub fn sl2_triple_check(n: i64, params: &OscillatorParams, max_level: u32) -> Sl2Report {
    assert!(n >= 1, "sl(2) triples are indexed by n ≥ 1");
    let c = params.central_charge();
    let expected_c_n = ExactScalar::from(n * n - 1) * &c * ExactScalar::ratio(1, 24);
    let half = GaussianScalar::real(ExactScalar::ratio(1, 2));
    let minus_half_i = GaussianScalar::imag(ExactScalar::ratio(-1, 2));
    let i = GaussianScalar::i();
    let x = |v: &FockVector| oscillator_l(-n, params, v).sub(&oscillator_l(n, params, v)).scaled(&half);
    let y = |v: &FockVector| oscillator_l(n, params, v).add(&oscillator_l(-n, params, v)).scaled(&minus_half_i);
    let il0 = |v: &FockVector| oscillator_l(0, params, v).scaled(&i);
    let in_ = GaussianScalar::imag(ExactScalar::from(n));

    let mut report = Sl2Report {
        n,
        central_charge: c,
        max_level,
        c_n: None,
        expected_c_n,
        vectors_checked: 0,
        relation_l0_x: true,
        relation_l0_y: true,
        relation_x_y: true,
        pass: false,
    };
    let top = max_level as i64 - n;
    if top < 0 {
        report.relation_l0_x = false;
        report.relation_l0_y = false;
        report.relation_x_y = false;
        return report;
    }

    let omega = FockVector::vacuum();
    let xy_omega = x(&y(&omega)).sub(&y(&x(&omega)));
    let shifted =
        xy_omega.scaled(&GaussianScalar::one().checked_div(&in_).expect("n ≥ 1")).sub(&oscillator_l(0, params, &omega));
    let c_n = if shifted.terms().all(|(mu, _)| mu.is_empty()) {
        let coeff = shifted.coefficient(&Partition::empty());
        coeff.is_real().then_some(coeff.re)
    } else {
        None
    };
    let Some(c_n_value) = c_n.clone() else {
        report.relation_x_y = false;
        return report;
    };
    report.c_n = c_n;

    for mu in basis_up_to(top as u32) {
        let v = FockVector::basis(mu);
        report.vectors_checked += 1;
        let lhs1 = il0(&x(&v)).sub(&x(&il0(&v)));
        if lhs1 != y(&v).scaled(&GaussianScalar::from(-n)) {
            report.relation_l0_x = false;
        }
        let lhs2 = il0(&y(&v)).sub(&y(&il0(&v)));
        if lhs2 != x(&v).scaled(&GaussianScalar::from(n)) {
            report.relation_l0_y = false;
        }
        let lhs3 = x(&y(&v)).sub(&y(&x(&v)));
        let mut rhs3 = oscillator_l(0, params, &v);
        rhs3.add_scaled(&v, &GaussianScalar::real(c_n_value.clone()));
        if lhs3 != rhs3.scaled(&in_) {
            report.relation_x_y = false;
        }
    }
    report.pass = report.relation_l0_x
        && report.relation_l0_y
        && report.relation_x_y
        && report.c_n.as_ref() == Some(&report.expected_c_n);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactScalar {
        ExactScalar::ratio(n, d)
    }

    fn mono(parts: &[u32]) -> FockVector {
        FockVector::basis(Partition::from_parts(parts.to_vec()).unwrap())
    }

    #[test]
    fn currents() {
        let charge = q(2, 3);
        assert_eq!(fock_apply_current(0, &charge, &FockVector::vacuum()), FockVector::vacuum().scaled_real(&charge));
        assert_eq!(fock_apply_current(1, &charge, &mono(&[1])), FockVector::vacuum());
        assert!(fock_apply_current(2, &charge, &mono(&[1, 1])).is_zero());
        assert_eq!(fock_apply_current(1, &charge, &mono(&[2, 1, 1])), mono(&[2, 1]).scaled(&GaussianScalar::from(2)));
        assert_eq!(fock_apply_current(-3, &charge, &mono(&[2])), mono(&[3, 2]));
    }

    #[test]
    fn inner_products() {
        assert_eq!(fock_inner(&mono(&[1]), &mono(&[1])), GaussianScalar::one());
        assert_eq!(fock_inner(&mono(&[2]), &mono(&[2])), GaussianScalar::from(2));
        assert_eq!(fock_inner(&mono(&[1]), &mono(&[2])), GaussianScalar::zero());
        let i = GaussianScalar::i();
        let u = mono(&[1]).scaled(&i);
        // antilinear in the first slot
        assert_eq!(fock_inner(&u, &mono(&[1])), -GaussianScalar::i());
    }

    #[test]
    fn lowest_weight_action() {
        let p = OscillatorParams::new(q(1, 2), q(1, 3));
        let omega = FockVector::vacuum();
        assert_eq!(oscillator_l(0, &p, &omega), omega.scaled_real(&p.lowest_weight()));
        let expected = GaussianScalar::new(p.q.clone(), -p.lambda.clone());
        assert_eq!(oscillator_l(-1, &p, &omega), mono(&[1]).scaled(&expected));
        for n in 1..=4 {
            assert!(oscillator_l(n, &p, &omega).is_zero());
        }
    }

    #[test]
    fn l0_is_grading_shifted_by_h() {
        let p = OscillatorParams::new(q(1, 1), q(2, 1));
        for mu in basis_up_to(6) {
            let v = FockVector::basis(mu.clone());
            let e = p.lowest_weight() + ExactScalar::from(mu.level() as i64);
            assert_eq!(oscillator_l(0, &p, &v), v.scaled_real(&e));
        }
    }

    #[test]
    fn bracket_on_vacuum_at_c_4() {
        let p = OscillatorParams::new(q(1, 2), q(0, 1));
        assert_eq!(p.central_charge(), ExactScalar::from(4));
        let omega = FockVector::vacuum();
        let lhs = oscillator_l(2, &p, &oscillator_l(-2, &p, &omega));
        assert_eq!(lhs, omega.scaled_real(&q(5, 2)));
        let r = verify_virasoro_bracket(1, 1, &p, 4);
        assert!(r.pass);
        let r = verify_virasoro_bracket(1, -1, &OscillatorParams::new(q(1, 1), q(1, 3)), 4);
        assert!(r.pass && r.vectors_checked == 1 + 1 + 2 + 3);
    }

    #[test]
    fn smearing() {
        let p = OscillatorParams::new(q(1, 2), q(1, 3));
        let v = mono(&[2, 1]);
        let one = FourierPolynomial::from_modes([(0, GaussianScalar::one())]);
        assert_eq!(smear_virasoro(&one, &p, &v), oscillator_l(0, &p, &v));

        // −sin θ = (i/2) z − (i/2) z^{−1}
        let x =
            FourierPolynomial::from_modes([(1, GaussianScalar::imag(q(1, 2))), (-1, GaussianScalar::imag(q(-1, 2)))]);
        assert!(x.is_real());
        let expected = oscillator_l(1, &p, &v).sub(&oscillator_l(-1, &p, &v)).scaled(&GaussianScalar::imag(q(1, 2)));
        assert_eq!(smear_virasoro(&x, &p, &v), expected);

        let g = FourierPolynomial::from_modes([(2, GaussianScalar::from(3)), (0, GaussianScalar::from(-1))]);
        assert_eq!(smear_virasoro(&x.add(&g), &p, &v), smear_virasoro(&x, &p, &v).add(&smear_virasoro(&g, &p, &v)));
    }

    #[test]
    fn current_smearing_and_phase() {
        let charge = q(1, 2);
        let v = mono(&[1]);
        let c = FourierPolynomial::from_modes([(0, GaussianScalar::from(1))]);
        assert_eq!(smear_current(&c, &charge, &v), v.scaled_real(&charge));
        let pos = FourierPolynomial::from_modes([(1, GaussianScalar::from(1)), (3, GaussianScalar::from(2))]);
        assert!(smear_current(&pos, &charge, &FockVector::vacuum()).is_zero());

        assert_eq!(bmt_phase(&c, &ExactScalar::zero()), GaussianScalar::zero());
        let u = FourierPolynomial::from_modes([(0, GaussianScalar::from(3)), (2, GaussianScalar::i())]);
        assert_eq!(bmt_phase(&u, &q(1, 2)), GaussianScalar::real(q(3, 2)));
        let w = mono(&[2, 2]);
        assert_eq!(
            smear_current(&u, &charge, &w),
            smear_current(&u, &ExactScalar::zero(), &w).add(&w.scaled(&bmt_phase(&u, &charge)))
        );
    }

    #[test]
    fn cocycle_values() {
        // u = z + z⁻¹, v = i(z − z⁻¹): σ = ½(1·1·(−i) + (−1)·1·i) = −i
        let u = FourierPolynomial::from_modes([(1, GaussianScalar::one()), (-1, GaussianScalar::one())]);
        let v = FourierPolynomial::from_modes([(1, GaussianScalar::i()), (-1, -GaussianScalar::i())]);
        assert_eq!(weyl_cocycle(&u, &v), -GaussianScalar::i());
        assert_eq!(weyl_cocycle(&u, &u), GaussianScalar::zero());
    }

    #[test]
    fn sl2_c1_vanishes() {
        let p = OscillatorParams::new(q(1, 2), q(1, 3));
        let r = sl2_triple_check(1, &p, 5);
        assert_eq!(r.c_n, Some(ExactScalar::zero()));
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn character_closed_form() {
        let p = OscillatorParams::new(q(1, 2), q(0, 1));
        let chi = oscillator_character(&p, 5);
        assert_eq!(chi.offset(), &q(1, 8));
        assert_eq!(chi, QSeries::from_integers(q(1, 8), &[1, 1, 2, 3, 5, 7]));
        assert_eq!(chi, oscillator_character_closed_form(&p, 5));
        let flipped = OscillatorParams::new(q(1, 2), q(-2, 3));
        let unflipped = OscillatorParams::new(q(1, 2), q(2, 3));
        assert_eq!(oscillator_character(&flipped, 6), oscillator_character(&unflipped, 6));
    }
}
