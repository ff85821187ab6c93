//! Eigen-analysis of response matrices and everything built on it: best
//! responses, Nash verification, the analytic entanglement thresholds, region
//! classification across `gamma`, and the dominance cycle above the full-space
//! boundary.
//!
//! The best response to a strategy `u` is the eigenvector of `P(u)` with the
//! maximal eigenvalue; that eigenvalue is the best achievable payoff. Regions
//! change where the two competing eigenvalues cross, which is what produces
//! the discontinuous payoff diagrams.

use serde::Serialize;

use crate::error::{GameError, Result};
use crate::payoff_tensor::{PayoffTensor, ResponseMatrix};
use crate::quantum_core::{Entanglement, PayoffTable};
use crate::strategy_space::canonicalize_slice;

const JACOBI_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 30;
/// Absolute tolerance for treating a gamma value as sitting on a threshold.
const BOUNDARY_TOL: f64 = 1e-12;
/// Nash re-verification tolerance for reported equilibria.
const NASH_TOL: f64 = 1e-9;

/// One eigenvalue with its canonicalized unit eigenvector.
#[derive(Debug, Clone, Serialize)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
}

/// The analytic entanglement thresholds of a payoff table.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Thresholds {
    /// Two-parameter space: `arcsin sqrt((p-s)/(t-s))`.
    pub gamma_th1: f64,
    /// Two-parameter space: `arcsin sqrt((t-r)/(t-s))`.
    pub gamma_th2: f64,
    /// Full space: `arcsin sqrt((p-s)/(p+t-r-s))`.
    pub gamma_b: f64,
}

/// Relation of `r + p` to `t + s`, which decides the shape of the middle
/// region in the two-parameter space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// `r + p < t + s`: transitional region between the thresholds.
    SumLess,
    /// `r + p = t + s`: single threshold, no middle region.
    SumEqual,
    /// `r + p > t + s`: coexistent region between the thresholds.
    SumGreater,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Regime::SumLess => write!(f, "r+p<t+s"),
            Regime::SumEqual => write!(f, "r+p=t+s"),
            Regime::SumGreater => write!(f, "r+p>t+s"),
        }
    }
}

/// Classification of the game at a fixed gamma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Region {
    Classical,
    Transitional,
    Coexistent,
    Quantum,
    InfiniteFamily,
    NoPureNE,
}

impl std::fmt::Display for Region {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Region::Classical => "classical",
            Region::Transitional => "transitional",
            Region::Coexistent => "coexistent",
            Region::Quantum => "quantum",
            Region::InfiniteFamily => "infinite-family",
            Region::NoPureNE => "no-pure-ne",
        };
        write!(f, "{s}")
    }
}

/// One verified equilibrium profile.
#[derive(Debug, Clone, Serialize)]
pub struct EquilibriumProfile {
    pub strategy_a: Vec<f64>,
    pub strategy_b: Vec<f64>,
    pub payoff_a: f64,
    pub payoff_b: f64,
    /// Sample parameter alpha for members of the infinite family.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family_parameter: Option<f64>,
}

/// Region, equilibria and thresholds at one gamma value.
#[derive(Debug, Clone, Serialize)]
pub struct RegionReport {
    pub gamma: f64,
    pub region: Region,
    /// True when gamma sits exactly on a threshold; the equilibria list is
    /// then the union of both adjacent regions.
    pub boundary: bool,
    pub equilibria: Vec<EquilibriumProfile>,
    pub thresholds: Thresholds,
    /// Symbolic description of the infinite equilibrium family, when present.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

/// Full spectrum of a symmetric matrix via cyclic Jacobi rotations,
/// ascending by eigenvalue, eigenvectors canonicalized.
pub fn eigen_symmetric(m: &ResponseMatrix) -> Result<Vec<EigenPair>> {
    let dim = m.dim();
    let mut a = [[0.0; 4]; 4];
    for i in 0..dim {
        for j in 0..dim {
            a[i][j] = m.entry(i, j);
        }
    }
    eigen_symmetric_matrix(dim, a)
}

/// Jacobi eigensolver on a raw `dim x dim` symmetric matrix (`dim <= 4`).
pub fn eigen_symmetric_matrix(dim: usize, mut a: [[f64; 4]; 4]) -> Result<Vec<EigenPair>> {
    assert!((1..=4).contains(&dim));
    for i in 0..dim {
        for j in (i + 1)..dim {
            if (a[i][j] - a[j][i]).abs() > 1e-12 {
                return Err(GameError::Validation(format!(
                    "matrix is not symmetric: a[{i}][{j}] = {} vs a[{j}][{i}] = {}",
                    a[i][j], a[j][i]
                )));
            }
        }
    }
    let mut v = [[0.0; 4]; 4];
    for (i, row) in v.iter_mut().enumerate().take(dim) {
        row[i] = 1.0;
    }
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..dim {
            for j in (i + 1)..dim {
                off += 2.0 * a[i][j] * a[i][j];
            }
        }
        if off.sqrt() < JACOBI_TOL {
            break;
        }
        for p in 0..dim {
            for q in (p + 1)..dim {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for i in 0..dim {
                    if i != p && i != q {
                        let aip = a[i][p];
                        let aiq = a[i][q];
                        a[i][p] = c * aip - s * aiq;
                        a[p][i] = a[i][p];
                        a[i][q] = s * aip + c * aiq;
                        a[q][i] = a[i][q];
                    }
                }
                for row in v.iter_mut().take(dim) {
                    let vip = row[p];
                    let viq = row[q];
                    row[p] = c * vip - s * viq;
                    row[q] = s * vip + c * viq;
                }
            }
        }
    }
    let mut pairs: Vec<EigenPair> = (0..dim)
        .map(|k| {
            let mut vector: Vec<f64> = (0..dim).map(|i| v[i][k]).collect();
            canonicalize_slice(&mut vector).expect("eigenvector has unit norm");
            EigenPair {
                value: a[k][k],
                vector,
            }
        })
        .collect();
    pairs.sort_by(|x, y| x.value.total_cmp(&y.value));
    Ok(pairs)
}

/// The maximal eigenpair of `P(u)`: the best response to `u` and the payoff
/// it achieves.
pub fn best_response(tensor: &PayoffTensor, u: &[f64]) -> Result<EigenPair> {
    let pairs = eigen_symmetric(&tensor.response_matrix(u)?)?;
    Ok(pairs.into_iter().last().expect("spectrum is nonempty"))
}

/// All eigenpairs within `tol` of the maximal eigenvalue; more than one entry
/// means the best response is degenerate and any unit vector in the span is
/// optimal.
pub fn best_response_space(tensor: &PayoffTensor, u: &[f64], tol: f64) -> Result<Vec<EigenPair>> {
    let pairs = eigen_symmetric(&tensor.response_matrix(u)?)?;
    let max = pairs.last().expect("spectrum is nonempty").value;
    Ok(pairs
        .into_iter()
        .filter(|p| p.value >= max - tol)
        .collect())
}

/// Mutual best response check: each payoff must reach the maximal eigenvalue
/// of the opponent's response matrix within `eps`.
pub fn is_nash(tensor: &PayoffTensor, u_a: &[f64], u_b: &[f64], eps: f64) -> Result<bool> {
    let m_b = tensor.response_matrix(u_b)?;
    let m_a = tensor.response_matrix(u_a)?;
    let payoff_a = m_b.quadratic_form(u_a)?;
    let payoff_b = m_a.quadratic_form(u_b)?;
    let max_a = eigen_symmetric(&m_b)?.last().unwrap().value;
    let max_b = eigen_symmetric(&m_a)?.last().unwrap().value;
    Ok(payoff_a >= max_a - eps && payoff_b >= max_b - eps)
}

/// Closed-form thresholds; always strictly inside `(0, pi/2)` for a valid
/// table.
pub fn thresholds(table: &PayoffTable) -> Thresholds {
    let (r, p, t, s) = (table.r(), table.p(), table.t(), table.s());
    Thresholds {
        gamma_th1: ((p - s) / (t - s)).sqrt().asin(),
        gamma_th2: ((t - r) / (t - s)).sqrt().asin(),
        gamma_b: ((p - s) / (p + t - r - s)).sqrt().asin(),
    }
}

/// Which side of `r + p = t + s` the table falls on.
pub fn regime(table: &PayoffTable) -> Regime {
    let diff = (table.r() + table.p()) - (table.t() + table.s());
    if diff.abs() <= 1e-12 {
        Regime::SumEqual
    } else if diff < 0.0 {
        Regime::SumLess
    } else {
        Regime::SumGreater
    }
}

fn profile(
    tensor: &PayoffTensor,
    u_a: Vec<f64>,
    u_b: Vec<f64>,
    family_parameter: Option<f64>,
) -> Result<EquilibriumProfile> {
    let pay = tensor.payoffs(&u_a, &u_b)?;
    if !is_nash(tensor, &u_a, &u_b, NASH_TOL)? {
        return Err(GameError::Inconsistent(format!(
            "classified profile {u_a:?} / {u_b:?} failed Nash verification"
        )));
    }
    Ok(EquilibriumProfile {
        strategy_a: u_a,
        strategy_b: u_b,
        payoff_a: pay.payoff_a,
        payoff_b: pay.payoff_b,
        family_parameter,
    })
}

/// Classify the two-parameter game at `gamma`.
///
/// A gamma exactly on a threshold is treated as belonging to both adjacent
/// regions: the report is flagged as `boundary` and lists the union of their
/// equilibria.
pub fn classify_region_twoparam(table: &PayoffTable, gamma: Entanglement) -> Result<RegionReport> {
    let th = thresholds(table);
    let g = gamma.gamma();
    let lo = th.gamma_th1.min(th.gamma_th2);
    let hi = th.gamma_th1.max(th.gamma_th2);
    let has_middle = hi - lo > BOUNDARY_TOL;
    let middle_region = if th.gamma_th1 < th.gamma_th2 {
        Region::Transitional
    } else {
        Region::Coexistent
    };
    let tensor = PayoffTensor::build_two_param(table, gamma);
    let d = vec![0.0, 1.0, 0.0];
    let q = vec![0.0, 0.0, 1.0];

    let on_lo = (g - lo).abs() <= BOUNDARY_TOL;
    let on_hi = (g - hi).abs() <= BOUNDARY_TOL;
    let boundary = on_lo || on_hi;

    // closure membership of each region, so boundary gammas pick up both sides
    let in_classical = g <= lo + BOUNDARY_TOL;
    let in_quantum = g >= hi - BOUNDARY_TOL;
    let in_middle = has_middle && g >= lo - BOUNDARY_TOL && g <= hi + BOUNDARY_TOL;

    let mut push_dd = in_classical;
    let mut push_qq = in_quantum;
    let mut push_asym = false;
    if in_middle {
        match middle_region {
            Region::Transitional => push_asym = true,
            _ => {
                push_dd = true;
                push_qq = true;
            }
        }
    }

    let mut equilibria = Vec::new();
    if push_dd {
        equilibria.push(profile(&tensor, d.clone(), d.clone(), None)?);
    }
    if push_asym {
        equilibria.push(profile(&tensor, d.clone(), q.clone(), None)?);
        equilibria.push(profile(&tensor, q.clone(), d.clone(), None)?);
    }
    if push_qq {
        equilibria.push(profile(&tensor, q.clone(), q.clone(), None)?);
    }

    let region = if g < lo - BOUNDARY_TOL {
        Region::Classical
    } else if g > hi + BOUNDARY_TOL {
        Region::Quantum
    } else if boundary {
        // on a threshold: label with the higher-gamma side
        if on_hi || !has_middle {
            Region::Quantum
        } else {
            middle_region
        }
    } else {
        middle_region
    };

    Ok(RegionReport {
        gamma: g,
        region,
        boundary,
        equilibria,
        thresholds: th,
        family: None,
    })
}

/// Alpha samples reported for the infinite equilibrium family.
pub const FAMILY_ALPHA_SAMPLES: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// One member of the infinite family: `{(0, a, b, 0), (0, b, a, 0)}` with
/// `a^2 + b^2 = 1`.
pub fn family_profile(alpha: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(GameError::Domain(format!(
            "alpha must lie in [0, 1], got {alpha}"
        )));
    }
    let beta = (1.0 - alpha * alpha).sqrt();
    Ok((vec![0.0, alpha, beta, 0.0], vec![0.0, beta, alpha, 0.0]))
}

/// Classify the full-unitary game at `gamma`: the infinite equilibrium family
/// below `gamma_b` (reported via sampled alpha values), no pure equilibrium
/// above it.
pub fn classify_region_full(table: &PayoffTable, gamma: Entanglement) -> Result<RegionReport> {
    let th = thresholds(table);
    let g = gamma.gamma();
    let boundary = (g - th.gamma_b).abs() <= BOUNDARY_TOL;
    if g > th.gamma_b + BOUNDARY_TOL {
        return Ok(RegionReport {
            gamma: g,
            region: Region::NoPureNE,
            boundary,
            equilibria: Vec::new(),
            thresholds: th,
            family: None,
        });
    }
    let tensor = PayoffTensor::build_full(table, gamma);
    let mut equilibria = Vec::new();
    for alpha in FAMILY_ALPHA_SAMPLES {
        let (u_a, u_b) = family_profile(alpha)?;
        equilibria.push(profile(&tensor, u_a, u_b, Some(alpha))?);
    }
    Ok(RegionReport {
        gamma: g,
        region: Region::InfiniteFamily,
        boundary,
        equilibria,
        thresholds: th,
        family: Some("{(0,a,b,0), (0,b,a,0)} for any a^2 + b^2 = 1".to_string()),
    })
}

/// Above `gamma_b` no strategy in the closed 4-cycle is ever a mutual best
/// response: each element strictly dominates its predecessor. Verifies the
/// cycle numerically and returns its four canonicalized strategies.
pub fn dominance_cycle(tensor: &PayoffTensor, alpha: f64) -> Result<Vec<Vec<f64>>> {
    if tensor.dim() != 4 {
        return Err(GameError::DimensionMismatch {
            expected: 4,
            got: tensor.dim(),
        });
    }
    if !(0.0..=1.0).contains(&alpha) {
        return Err(GameError::Domain(format!(
            "alpha must lie in [0, 1], got {alpha}"
        )));
    }
    let th = thresholds(tensor.table());
    if tensor.gamma().gamma() <= th.gamma_b {
        return Err(GameError::Domain(format!(
            "dominance cycle requires gamma > gamma_b = {}",
            th.gamma_b
        )));
    }
    let beta = (1.0 - alpha * alpha).sqrt();
    let cycle = [
        vec![0.0, alpha, beta, 0.0],
        vec![alpha, 0.0, 0.0, -beta],
        vec![0.0, beta, -alpha, 0.0],
        vec![beta, 0.0, 0.0, alpha],
    ];
    for step in 0..4 {
        let current = &cycle[step];
        let next = &cycle[(step + 1) % 4];
        let m = tensor.response_matrix(current)?;
        let max = eigen_symmetric(&m)?.last().unwrap().value;
        // `next` must span the maximal eigenspace of P(current)
        let mut residual = 0.0;
        for i in 0..4 {
            let mut row = 0.0;
            for j in 0..4 {
                row += m.entry(i, j) * next[j];
            }
            residual += (row - max * next[i]).powi(2);
        }
        let residual = residual.sqrt();
        let achieved = m.quadratic_form(next)?;
        if residual > 1e-9 || (achieved - max).abs() > 1e-9 {
            return Err(GameError::Inconsistent(format!(
                "dominance cycle broken at step {step}: residual {residual}, \
                 payoff gap {}",
                (achieved - max).abs()
            )));
        }
    }
    Ok(cycle
        .into_iter()
        .map(|mut v| {
            canonicalize_slice(&mut v).expect("cycle vectors are unit");
            v
        })
        .collect())
}
