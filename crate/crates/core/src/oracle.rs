//! Brute-force verification: grid search over the strategy sphere for best
//! responses, and an epsilon-Nash scan over all grid profile pairs.
//!
//! The oracle deliberately stays dumb: a deterministic spherical-coordinate
//! product grid, exhaustive evaluation, lexicographic tie-breaking. It is
//! used to cross-check the eigenvector method and the absence of pure
//! equilibria above the full-space boundary.

use rayon::prelude::*;

use crate::error::{GameError, Result};
use crate::payoff_tensor::PayoffTensor;
use crate::strategy_space::canonicalize_slice;

/// Scale constant for the scan tolerance: `eps = SCAN_EPS_SCALE / n^2`.
///
/// Calibrated so that at n = 24 the exact infinite-family profiles (which lie
/// on the grid) are accepted, while the smallest improvement deficit observed
/// anywhere above the boundary (~0.099 game units just past gamma_b for the
/// (3,1,5,0) table) stays well outside the tolerance.
pub const SCAN_EPS_SCALE: f64 = 10.0;

/// The scan tolerance matched to the covering radius of an `n`-point grid.
pub fn scan_eps(n: usize) -> f64 {
    SCAN_EPS_SCALE / (n * n) as f64
}

/// Deterministic grid of unit vectors on S^2 (dim 3) or S^3 (dim 4), built
/// from spherical-coordinate products with `n` steps per polar axis and `2n`
/// on the azimuthal axis. Points are canonicalized (first nonzero component
/// positive); polar duplicates are kept.
#[derive(Debug, Clone)]
pub struct SphereGrid {
    dim: usize,
    n: usize,
    points: Vec<Vec<f64>>,
}

impl SphereGrid {
    pub fn new(dim: usize, n: usize) -> Result<Self> {
        if dim != 3 && dim != 4 {
            return Err(GameError::Domain(format!(
                "grid dimension must be 3 or 4, got {dim}"
            )));
        }
        if n < 2 {
            return Err(GameError::Domain(format!(
                "grid resolution must be at least 2, got {n}"
            )));
        }
        let polar: Vec<f64> = (0..=n).map(|i| i as f64 * std::f64::consts::PI / n as f64).collect();
        let azimuth: Vec<f64> =
            (0..2 * n).map(|j| j as f64 * std::f64::consts::PI / n as f64).collect();
        let mut points = Vec::with_capacity(Self::expected_count(dim, n));
        if dim == 3 {
            for &p1 in &polar {
                for &p2 in &azimuth {
                    let mut v = vec![p1.cos(), p1.sin() * p2.cos(), p1.sin() * p2.sin()];
                    if canonicalize_slice(&mut v).is_ok() {
                        points.push(v);
                    }
                }
            }
        } else {
            for &p1 in &polar {
                for &p2 in &polar {
                    for &p3 in &azimuth {
                        let mut v = vec![
                            p1.cos(),
                            p1.sin() * p2.cos(),
                            p1.sin() * p2.sin() * p3.cos(),
                            p1.sin() * p2.sin() * p3.sin(),
                        ];
                        if canonicalize_slice(&mut v).is_ok() {
                            points.push(v);
                        }
                    }
                }
            }
        }
        debug_assert_eq!(points.len(), Self::expected_count(dim, n));
        Ok(Self { dim, n, points })
    }

    /// Declared point count: `(n+1) * 2n` for dim 3, `(n+1)^2 * 2n` for dim 4.
    pub fn expected_count(dim: usize, n: usize) -> usize {
        match dim {
            3 => (n + 1) * 2 * n,
            _ => (n + 1) * (n + 1) * 2 * n,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }
}

/// An epsilon-equilibrium profile found by the grid scan.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ScanProfile {
    pub strategy_a: Vec<f64>,
    pub strategy_b: Vec<f64>,
    pub payoff_a: f64,
    pub payoff_b: f64,
}

fn lex_less(a: &[f64], b: &[f64]) -> bool {
    for (x, y) in a.iter().zip(b.iter()) {
        if x < y {
            return true;
        }
        if x > y {
            return false;
        }
    }
    false
}

// Packed symmetric quadratic-form representation: for each point the upper
// triangle of v v^T, and for each response matrix the matching entries with
// off-diagonal weight 2, so a payoff is a single dot product.
struct Packed {
    len: usize,
    outer: Vec<f64>,    // per point: len entries of v_i v_j, i <= j
    weighted: Vec<f64>, // per point: len entries of P(u)_ij with weights
}

fn pack(tensor: &PayoffTensor, grid: &SphereGrid) -> Result<Packed> {
    let d = grid.dim();
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (i..d).map(move |j| (i, j)))
        .collect();
    let len = pairs.len();
    let mut outer = vec![0.0; grid.points().len() * len];
    let mut weighted = vec![0.0; grid.points().len() * len];
    for (pi, v) in grid.points().iter().enumerate() {
        let m = tensor.response_matrix(v)?;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            outer[pi * len + k] = v[i] * v[j];
            let w = if i == j { 1.0 } else { 2.0 };
            weighted[pi * len + k] = w * m.entry(i, j);
        }
    }
    Ok(Packed {
        len,
        outer,
        weighted,
    })
}

impl Packed {
    /// Payoff of grid point `a` against grid point `b`.
    fn payoff(&self, a: usize, b: usize) -> f64 {
        let oa = &self.outer[a * self.len..(a + 1) * self.len];
        let wb = &self.weighted[b * self.len..(b + 1) * self.len];
        oa.iter().zip(wb.iter()).map(|(x, y)| x * y).sum()
    }
}

/// Argmax of `v . P(u) . v^T` over the grid; ties broken toward the
/// lexicographically smaller vector so the result is order-independent.
pub fn grid_best_response(
    tensor: &PayoffTensor,
    u: &[f64],
    n: usize,
) -> Result<(Vec<f64>, f64)> {
    if n < 8 {
        return Err(GameError::Domain(format!(
            "oracle resolution must be at least 8, got {n}"
        )));
    }
    let grid = SphereGrid::new(tensor.dim(), n)?;
    let m = tensor.response_matrix(u)?;
    let mut best: Option<(&Vec<f64>, f64)> = None;
    for v in grid.points() {
        let pay = m.quadratic_form(v)?;
        best = match best {
            None => Some((v, pay)),
            Some((bv, bp)) => {
                if pay > bp || (pay == bp && lex_less(v, bv)) {
                    Some((v, pay))
                } else {
                    Some((bv, bp))
                }
            }
        };
    }
    let (v, pay) = best.expect("grid is nonempty");
    Ok((v.clone(), pay))
}

/// Exhaustive epsilon-Nash scan: all grid profile pairs where neither player
/// can improve by more than `eps` against any grid strategy. Results are
/// deduplicated by the canonical form of their quantized coordinates.
pub fn grid_nash_scan(tensor: &PayoffTensor, n: usize, eps: f64) -> Result<Vec<ScanProfile>> {
    if n < 8 {
        return Err(GameError::Domain(format!(
            "oracle resolution must be at least 8, got {n}"
        )));
    }
    if eps <= 0.0 {
        return Err(GameError::Domain(format!("eps must be positive, got {eps}")));
    }
    let grid = SphereGrid::new(tensor.dim(), n)?;
    let packed = pack(tensor, &grid)?;
    let count = grid.points().len();

    // best achievable payoff against each opponent, over the grid itself
    let best_vs: Vec<f64> = (0..count)
        .into_par_iter()
        .map(|b| {
            (0..count)
                .map(|a| packed.payoff(a, b))
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect();

    let mut found: Vec<(usize, usize)> = (0..count)
        .into_par_iter()
        .flat_map_iter(|b| {
            let packed = &packed;
            let best_vs = &best_vs;
            (0..count).filter_map(move |a| {
                if packed.payoff(a, b) >= best_vs[b] - eps
                    && packed.payoff(b, a) >= best_vs[a] - eps
                {
                    Some((a, b))
                } else {
                    None
                }
            })
        })
        .collect();
    found.sort_unstable();

    let quantize = |v: &[f64]| -> Vec<i64> {
        v.iter().map(|x| (x * 1e9).round() as i64).collect()
    };
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for (a, b) in found {
        let sa = &grid.points()[a];
        let sb = &grid.points()[b];
        if seen.insert((quantize(sa), quantize(sb))) {
            out.push(ScanProfile {
                strategy_a: sa.clone(),
                strategy_b: sb.clone(),
                payoff_a: packed.payoff(a, b),
                payoff_b: packed.payoff(b, a),
            });
        }
    }
    Ok(out)
}
