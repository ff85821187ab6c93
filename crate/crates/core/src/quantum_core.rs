//! Direct quantum simulation of the protocol: the entangling gate `J(gamma)`,
//! application of the players' local unitaries, and expected payoffs from the
//! outcome probabilities of the final state.
//!
//! Basis ordering is fixed as `(CC, CD, DC, DD)` with the first index
//! belonging to Alice. All angles are radians.

use num_complex::Complex64;

use crate::error::{GameError, Result};
use crate::strategy_space::StrategyVec4;

pub type C64 = Complex64;

const UNITARY_TOL: f64 = 1e-12;
const NORM_TOL: f64 = 1e-9;

/// The four classical payoffs `(r, p, t, s)` with ordering `t > r > p > s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayoffTable {
    r: f64,
    p: f64,
    t: f64,
    s: f64,
}

impl PayoffTable {
    /// Build a table, rejecting any violation of `t > r > p > s` with a
    /// message naming the first broken inequality.
    pub fn new(r: f64, p: f64, t: f64, s: f64) -> Result<Self> {
        for v in [r, p, t, s] {
            if !v.is_finite() {
                return Err(GameError::InvalidTable("payoffs must be finite".into()));
            }
        }
        if t <= r {
            return Err(GameError::InvalidTable(format!(
                "requires t > r, got t={t} r={r}"
            )));
        }
        if r <= p {
            return Err(GameError::InvalidTable(format!(
                "requires r > p, got r={r} p={p}"
            )));
        }
        if p <= s {
            return Err(GameError::InvalidTable(format!(
                "requires p > s, got p={p} s={s}"
            )));
        }
        Ok(Self { r, p, t, s })
    }

    pub fn r(&self) -> f64 {
        self.r
    }
    pub fn p(&self) -> f64 {
        self.p
    }
    pub fn t(&self) -> f64 {
        self.t
    }
    pub fn s(&self) -> f64 {
        self.s
    }
}

/// Entanglement angle `gamma` in radians, restricted to `[0, pi/2]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Entanglement {
    gamma: f64,
}

impl Entanglement {
    pub fn new(gamma: f64) -> Result<Self> {
        if !gamma.is_finite() || !(0.0..=std::f64::consts::FRAC_PI_2).contains(&gamma) {
            return Err(GameError::Domain(format!(
                "gamma must lie in [0, pi/2], got {gamma}"
            )));
        }
        Ok(Self { gamma })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// State of the two-qubit game: amplitudes over `(CC, CD, DC, DD)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GameState {
    amps: [C64; 4],
}

impl GameState {
    pub fn new(amps: [C64; 4]) -> Result<Self> {
        let norm_sq: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(GameError::Validation(format!(
                "state norm^2 = {norm_sq}, expected 1"
            )));
        }
        Ok(Self { amps })
    }

    pub fn amplitudes(&self) -> &[C64; 4] {
        &self.amps
    }

    /// Outcome probabilities `(P_CC, P_CD, P_DC, P_DD)`.
    pub fn probabilities(&self) -> [f64; 4] {
        [
            self.amps[0].norm_sqr(),
            self.amps[1].norm_sqr(),
            self.amps[2].norm_sqr(),
            self.amps[3].norm_sqr(),
        ]
    }
}

/// A special-unitary 2x2 matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Unitary2 {
    m: [[C64; 2]; 2],
}

impl Unitary2 {
    pub fn new(m: [[C64; 2]; 2]) -> Result<Self> {
        // U U^dag = I
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = C64::new(0.0, 0.0);
                for k in 0..2 {
                    acc += m[i][k] * m[j][k].conj();
                }
                let expect = if i == j { 1.0 } else { 0.0 };
                if (acc - expect).norm() > UNITARY_TOL {
                    return Err(GameError::Validation(format!(
                        "matrix is not unitary: (U U^dag)[{i}][{j}] = {acc}"
                    )));
                }
            }
        }
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if (det - 1.0).norm() > UNITARY_TOL {
            return Err(GameError::Validation(format!(
                "matrix is not special unitary: det = {det}"
            )));
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &[[C64; 2]; 2] {
        &self.m
    }

    /// The identity, i.e. strategy `C`.
    pub fn cooperate() -> Self {
        let one = C64::new(1.0, 0.0);
        let zero = C64::new(0.0, 0.0);
        Self {
            m: [[one, zero], [zero, one]],
        }
    }

    /// `[[0, 1], [-1, 0]]`, i.e. strategy `D`.
    pub fn defect() -> Self {
        let zero = C64::new(0.0, 0.0);
        Self {
            m: [[zero, C64::new(1.0, 0.0)], [C64::new(-1.0, 0.0), zero]],
        }
    }
}

/// Expected payoffs `(payoff_a, payoff_b)` for one profile.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct PayoffPair {
    pub payoff_a: f64,
    pub payoff_b: f64,
}

/// The entangling gate `J = cos(gamma/2) C(x)C + i sin(gamma/2) D(x)D`,
/// returned as a row-major 4x4 matrix over `(CC, CD, DC, DD)`.
pub fn entangling_gate(gamma: Entanglement) -> [[C64; 4]; 4] {
    let c = C64::new((gamma.gamma() / 2.0).cos(), 0.0);
    let is = C64::new(0.0, (gamma.gamma() / 2.0).sin());
    let zero = C64::new(0.0, 0.0);
    // D(x)D is the antidiagonal (1, -1, -1, 1)
    [
        [c, zero, zero, is],
        [zero, c, -is, zero],
        [zero, -is, c, zero],
        [is, zero, zero, c],
    ]
}

fn kron2(a: &[[C64; 2]; 2], b: &[[C64; 2]; 2]) -> [[C64; 4]; 4] {
    let mut out = [[C64::new(0.0, 0.0); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

fn matvec4(m: &[[C64; 4]; 4], v: &[C64; 4]) -> [C64; 4] {
    let mut out = [C64::new(0.0, 0.0); 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i] += m[i][j] * v[j];
        }
    }
    out
}

fn adjoint4(m: &[[C64; 4]; 4]) -> [[C64; 4]; 4] {
    let mut out = [[C64::new(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = m[j][i].conj();
        }
    }
    out
}

/// Final state `J^dag (U_A (x) U_B) J |CC>` of the protocol.
pub fn final_state(u_a: &Unitary2, u_b: &Unitary2, gamma: Entanglement) -> GameState {
    let j = entangling_gate(gamma);
    let mut psi = [C64::new(0.0, 0.0); 4];
    psi[0] = C64::new(1.0, 0.0);
    let psi = matvec4(&j, &psi);
    let psi = matvec4(&kron2(u_a.matrix(), u_b.matrix()), &psi);
    let psi = matvec4(&adjoint4(&j), &psi);
    GameState::new(psi).expect("unitary evolution preserves the norm")
}

/// Final state from the closed-form amplitude polynomials in the strategy
/// vector components and `cos gamma`, `sin gamma`. Agrees with [`final_state`]
/// on outcome probabilities.
pub fn closed_form_final_state(
    u_a: &StrategyVec4,
    u_b: &StrategyVec4,
    gamma: Entanglement,
) -> GameState {
    let [a1, a2, a3, a4] = u_a.components();
    let [b1, b2, b3, b4] = u_b.components();
    let (sg, cg) = gamma.gamma().sin_cos();
    let amps = [
        C64::new(
            (a1 * b1 - a4 * b4) - (a3 * b2 + a2 * b3) * sg,
            (a4 * b1 + a1 * b4) * cg,
        ),
        C64::new(
            -(a1 * b3 + a4 * b2) + (a3 * b4 - a2 * b1) * sg,
            (a1 * b2 - a4 * b3) * cg,
        ),
        C64::new(
            -(a3 * b1 + a2 * b4) + (a4 * b3 - a1 * b2) * sg,
            (a2 * b1 - a3 * b4) * cg,
        ),
        C64::new(
            (a3 * b3 - a2 * b2) + (a4 * b1 + a1 * b4) * sg,
            -(a3 * b2 + a2 * b3) * cg,
        ),
    ];
    GameState::new(amps).expect("unit strategy vectors yield a normalized state")
}

/// Expected payoffs from the outcome probabilities:
/// `$_A = r P_CC + p P_DD + t P_DC + s P_CD`, with `t` and `s` swapped for Bob.
pub fn expected_payoffs(state: &GameState, table: &PayoffTable) -> Result<PayoffPair> {
    let probs = state.probabilities();
    let total: f64 = probs.iter().sum();
    if (total - 1.0).abs() > NORM_TOL {
        return Err(GameError::Validation(format!(
            "state is not normalized: total probability {total}"
        )));
    }
    let [p_cc, p_cd, p_dc, p_dd] = probs;
    Ok(PayoffPair {
        payoff_a: table.r() * p_cc + table.p() * p_dd + table.t() * p_dc + table.s() * p_cd,
        payoff_b: table.r() * p_cc + table.p() * p_dd + table.s() * p_dc + table.t() * p_cd,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, SQRT_2};

    fn table() -> PayoffTable {
        PayoffTable::new(3.0, 1.0, 5.0, 0.0).unwrap()
    }

    #[test]
    fn table_rejects_bad_ordering() {
        let err = PayoffTable::new(4.0, 3.0, 2.0, 1.0).unwrap_err();
        assert!(err.to_string().contains("t > r"), "{err}");
        assert!(PayoffTable::new(3.0, 3.0, 5.0, 0.0).is_err());
        assert!(PayoffTable::new(3.0, 1.0, 5.0, 1.0).is_err());
    }

    #[test]
    fn entanglement_range() {
        assert!(Entanglement::new(-0.1).is_err());
        assert!(Entanglement::new(FRAC_PI_2 + 0.1).is_err());
        assert!(Entanglement::new(0.0).is_ok());
        assert!(Entanglement::new(FRAC_PI_2).is_ok());
    }

    #[test]
    fn gate_at_zero_is_identity() {
        let j = entangling_gate(Entanglement::new(0.0).unwrap());
        for i in 0..4 {
            for k in 0..4 {
                let expect = if i == k { 1.0 } else { 0.0 };
                assert!((j[i][k] - expect).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn gate_at_max_entanglement() {
        let j = entangling_gate(Entanglement::new(FRAC_PI_2).unwrap());
        let w = 1.0 / SQRT_2;
        assert!((j[0][0] - C64::new(w, 0.0)).norm() < 1e-15);
        assert!((j[0][3] - C64::new(0.0, w)).norm() < 1e-15);
        assert!((j[1][2] - C64::new(0.0, -w)).norm() < 1e-15);
        assert!((j[3][0] - C64::new(0.0, w)).norm() < 1e-15);
    }

    #[test]
    fn gate_is_unitary() {
        let j = entangling_gate(Entanglement::new(0.3).unwrap());
        for i in 0..4 {
            for k in 0..4 {
                let mut acc = C64::new(0.0, 0.0);
                for l in 0..4 {
                    acc += j[i][l] * j[k][l].conj();
                }
                let expect = if i == k { 1.0 } else { 0.0 };
                assert!((acc - expect).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn cooperate_profile_returns_cc() {
        let state = final_state(
            &Unitary2::cooperate(),
            &Unitary2::cooperate(),
            Entanglement::new(1.1).unwrap(),
        );
        assert!((state.probabilities()[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn classical_defection_returns_dd() {
        let state = final_state(
            &Unitary2::defect(),
            &Unitary2::defect(),
            Entanglement::new(0.0).unwrap(),
        );
        assert!((state.amplitudes()[3].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn non_unitary_input_rejected() {
        let z = C64::new(0.0, 0.0);
        let m = [[C64::new(2.0, 0.0), z], [z, C64::new(0.5, 0.0)]];
        assert!(Unitary2::new(m).is_err());
        // unitary but det = -1
        let m = [[z, C64::new(1.0, 0.0)], [C64::new(1.0, 0.0), z]];
        assert!(Unitary2::new(m).is_err());
    }

    #[test]
    fn payoffs_on_basis_states() {
        let one = C64::new(1.0, 0.0);
        let zero = C64::new(0.0, 0.0);
        let cc = GameState::new([one, zero, zero, zero]).unwrap();
        let pay = expected_payoffs(&cc, &table()).unwrap();
        assert_eq!((pay.payoff_a, pay.payoff_b), (3.0, 3.0));

        let dc = GameState::new([zero, zero, one, zero]).unwrap();
        let pay = expected_payoffs(&dc, &table()).unwrap();
        assert_eq!((pay.payoff_a, pay.payoff_b), (5.0, 0.0));
    }

    #[test]
    fn payoff_of_uniform_superposition() {
        let h = C64::new(0.5, 0.0);
        let state = GameState::new([h, h, h, h]).unwrap();
        let pay = expected_payoffs(&state, &table()).unwrap();
        assert!((pay.payoff_a - 2.25).abs() < 1e-12);
        assert!((pay.payoff_b - 2.25).abs() < 1e-12);
    }

    #[test]
    fn unnormalized_state_rejected() {
        let h = C64::new(0.5, 0.0);
        assert!(GameState::new([h, h, h, C64::new(0.6, 0.0)]).is_err());
    }

    #[test]
    fn closed_form_identity_strategies() {
        let c = StrategyVec4::new(1.0, 0.0, 0.0, 0.0).unwrap();
        let state = closed_form_final_state(&c, &c, Entanglement::new(0.5).unwrap());
        assert!((state.probabilities()[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn closed_form_sigma_x_pair_at_zero_entanglement() {
        let u = StrategyVec4::new(0.0, 1.0, 0.0, 0.0).unwrap();
        let state = closed_form_final_state(&u, &u, Entanglement::new(0.0).unwrap());
        assert!((state.amplitudes()[3] - C64::new(-1.0, 0.0)).norm() < 1e-12);
        assert!((state.probabilities()[3] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn closed_form_matches_matrix_route() {
        use crate::strategy_space::unitary_from_vec4;
        let u_a = StrategyVec4::new(0.0, 0.0, 1.0, 0.0).unwrap();
        let u_b = StrategyVec4::new(0.0, 0.0, 0.0, 1.0).unwrap();
        let gamma = Entanglement::new(FRAC_PI_2).unwrap();
        let direct = final_state(&unitary_from_vec4(&u_a), &unitary_from_vec4(&u_b), gamma);
        let closed = closed_form_final_state(&u_a, &u_b, gamma);
        for (a, b) in direct
            .probabilities()
            .iter()
            .zip(closed.probabilities().iter())
        {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
