//! The symmetrized payoff tensor `$_{ij,kl}` at fixed entanglement, and its
//! contractions: the response matrix `P(u)` and payoffs as quadratic forms.
//!
//! Both players share one tensor (the game is symmetric under interchange of
//! the players). Entries are built analytically from the closed-form list of
//! nonzero elements; the state-vector simulation path is kept only as a
//! verification oracle in the tests.

use serde::Serialize;

use crate::error::{GameError, Result};
use crate::quantum_core::{Entanglement, PayoffPair, PayoffTable};

/// Dense symmetrized 4-index tensor, dimension 3 (two-parameter space) or 4
/// (full space).
#[derive(Debug, Clone)]
pub struct PayoffTensor {
    dim: usize,
    entries: Vec<f64>,
    gamma: Entanglement,
    table: PayoffTable,
}

/// One nonzero tensor element, 1-based indices as in `$_{ij,kl}`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TensorEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub value: f64,
}

/// Symmetric response matrix `P(u)` with `(P(u))_ij = sum_kl $_{ij,kl} u_k u_l`.
#[derive(Debug, Clone)]
pub struct ResponseMatrix {
    dim: usize,
    m: [[f64; 4]; 4],
    strategy: Vec<f64>,
}

impl ResponseMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The opponent strategy this matrix responds to.
    pub fn strategy(&self) -> &[f64] {
        &self.strategy
    }

    /// 0-based entry access.
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[i][j]
    }

    /// The payoff `v . P(u) . v^T` of playing `v` against the matrix's strategy.
    pub fn quadratic_form(&self, v: &[f64]) -> Result<f64> {
        if v.len() != self.dim {
            return Err(GameError::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        let mut acc = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc += v[i] * self.m[i][j] * v[j];
            }
        }
        Ok(acc)
    }
}

impl PayoffTensor {
    /// Full-space tensor (d = 4) from the closed-form nonzero elements.
    pub fn build_full(table: &PayoffTable, gamma: Entanglement) -> Self {
        let (r, p, t, s) = (table.r(), table.p(), table.t(), table.s());
        let sg = gamma.gamma().sin();
        let e = sg * sg;
        // Representative entries; each expands over the pair symmetry
        // $_{ij,kl} = $_{ji,kl} = $_{ij,lk}.
        let list: [(usize, usize, usize, usize, f64); 28] = [
            (1, 1, 1, 1, r),
            (4, 4, 4, 4, r),
            (1, 1, 3, 3, s),
            (4, 4, 2, 2, s),
            (2, 2, 2, 2, p),
            (3, 3, 3, 3, p),
            (2, 2, 4, 4, t),
            (3, 3, 1, 1, t),
            (1, 1, 2, 2, s + (t - s) * e),
            (4, 4, 3, 3, s + (t - s) * e),
            (1, 1, 4, 4, r + (p - r) * e),
            (4, 4, 1, 1, r + (p - r) * e),
            (2, 2, 1, 1, t + (s - t) * e),
            (3, 3, 4, 4, t + (s - t) * e),
            (2, 2, 3, 3, p + (r - p) * e),
            (3, 3, 2, 2, p + (r - p) * e),
            (1, 2, 1, 3, 0.5 * (s - r) * sg),
            (3, 4, 2, 4, -0.5 * (s - r) * sg),
            (1, 2, 2, 4, 0.5 * (t - p) * sg),
            (3, 4, 1, 3, -0.5 * (t - p) * sg),
            (1, 3, 1, 2, 0.5 * (t - r) * sg),
            (2, 4, 3, 4, -0.5 * (t - r) * sg),
            (1, 3, 3, 4, 0.5 * (p - s) * sg),
            (2, 4, 1, 2, -0.5 * (p - s) * sg),
            (1, 4, 1, 4, 0.5 * (p - r) * e),
            (2, 3, 2, 3, -0.5 * (p - r) * e),
            (1, 4, 2, 3, 0.5 * (s - t) * e),
            (2, 3, 1, 4, -0.5 * (s - t) * e),
        ];
        Self::from_representatives(4, &list, table, gamma)
    }

    /// Two-parameter tensor (d = 3): the full tensor with index-2 rows and
    /// columns removed and indices relabeled 3 -> 2, 4 -> 3.
    pub fn build_two_param(table: &PayoffTable, gamma: Entanglement) -> Self {
        let (r, p, t, s) = (table.r(), table.p(), table.t(), table.s());
        let sg = gamma.gamma().sin();
        let e = sg * sg;
        let list: [(usize, usize, usize, usize, f64); 12] = [
            (1, 1, 1, 1, r),
            (3, 3, 3, 3, r),
            (1, 1, 2, 2, s),
            (2, 2, 2, 2, p),
            (2, 2, 1, 1, t),
            (3, 3, 2, 2, s + (t - s) * e),
            (1, 1, 3, 3, r + (p - r) * e),
            (3, 3, 1, 1, r + (p - r) * e),
            (2, 2, 3, 3, t + (s - t) * e),
            (1, 3, 1, 3, 0.5 * (p - r) * e),
            (2, 3, 1, 2, 0.5 * (p - t) * sg),
            (1, 2, 2, 3, 0.5 * (p - s) * sg),
        ];
        Self::from_representatives(3, &list, table, gamma)
    }

    fn from_representatives(
        dim: usize,
        list: &[(usize, usize, usize, usize, f64)],
        table: &PayoffTable,
        gamma: Entanglement,
    ) -> Self {
        let mut entries = vec![0.0; dim * dim * dim * dim];
        let mut set = vec![false; dim * dim * dim * dim];
        let idx = |i: usize, j: usize, k: usize, l: usize| ((i * dim + j) * dim + k) * dim + l;
        for &(i, j, k, l, v) in list {
            let (i, j, k, l) = (i - 1, j - 1, k - 1, l - 1);
            for (a, b) in [(i, j), (j, i)] {
                for (c, d) in [(k, l), (l, k)] {
                    let n = idx(a, b, c, d);
                    // a representative may revisit its own orbit; conflicting
                    // values across orbits are a transcription bug
                    assert!(
                        !set[n] || entries[n] == v,
                        "tensor orbit collision at ({a},{b},{c},{d})"
                    );
                    entries[n] = v;
                    set[n] = true;
                }
            }
        }
        Self {
            dim,
            entries,
            gamma,
            table: *table,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gamma(&self) -> Entanglement {
        self.gamma
    }

    pub fn table(&self) -> &PayoffTable {
        &self.table
    }

    /// 1-based element access `$_{ij,kl}`.
    pub fn entry(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        assert!((1..=self.dim).contains(&i));
        assert!((1..=self.dim).contains(&j));
        assert!((1..=self.dim).contains(&k));
        assert!((1..=self.dim).contains(&l));
        let d = self.dim;
        self.entries[(((i - 1) * d + (j - 1)) * d + (k - 1)) * d + (l - 1)]
    }

    /// All nonzero elements in lexicographic `(i, j, k, l)` order, 1-based.
    pub fn nonzero_entries(&self) -> Vec<TensorEntry> {
        let mut out = Vec::new();
        for i in 1..=self.dim {
            for j in 1..=self.dim {
                for k in 1..=self.dim {
                    for l in 1..=self.dim {
                        let value = self.entry(i, j, k, l);
                        if value != 0.0 {
                            out.push(TensorEntry { i, j, k, l, value });
                        }
                    }
                }
            }
        }
        out
    }

    /// Contract the opponent strategy into the response matrix `P(u)`.
    pub fn response_matrix(&self, u: &[f64]) -> Result<ResponseMatrix> {
        if u.len() != self.dim {
            return Err(GameError::DimensionMismatch {
                expected: self.dim,
                got: u.len(),
            });
        }
        let d = self.dim;
        let mut m = [[0.0; 4]; 4];
        for i in 0..d {
            for j in i..d {
                let mut acc = 0.0;
                for k in 0..d {
                    for l in 0..d {
                        acc += self.entries[((i * d + j) * d + k) * d + l] * u[k] * u[l];
                    }
                }
                m[i][j] = acc;
                m[j][i] = acc;
            }
        }
        Ok(ResponseMatrix {
            dim: d,
            m,
            strategy: u.to_vec(),
        })
    }

    /// Payoffs `(u_a . P(u_b) . u_a^T, u_b . P(u_a) . u_b^T)`.
    pub fn payoffs(&self, u_a: &[f64], u_b: &[f64]) -> Result<PayoffPair> {
        let payoff_a = self.response_matrix(u_b)?.quadratic_form(u_a)?;
        let payoff_b = self.response_matrix(u_a)?.quadratic_form(u_b)?;
        Ok(PayoffPair { payoff_a, payoff_b })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6};

    fn table(r: f64, p: f64, t: f64, s: f64) -> PayoffTable {
        PayoffTable::new(r, p, t, s).unwrap()
    }

    fn gam(g: f64) -> Entanglement {
        Entanglement::new(g).unwrap()
    }

    #[test]
    fn full_tensor_constant_entries() {
        let t = PayoffTensor::build_full(&table(3.0, 1.0, 5.0, 0.0), gam(0.7));
        assert_eq!(t.entry(1, 1, 1, 1), 3.0);
        assert_eq!(t.entry(2, 2, 2, 2), 1.0);
        assert_eq!(t.entry(3, 3, 1, 1), 5.0);
    }

    #[test]
    fn full_tensor_entanglement_dependent_entries() {
        let t = PayoffTensor::build_full(&table(3.0, 1.0, 5.0, 0.0), gam(FRAC_PI_2));
        assert!((t.entry(1, 1, 2, 2) - 5.0).abs() < 1e-12);
        let t0 = PayoffTensor::build_full(&table(3.0, 1.0, 5.0, 0.0), gam(0.0));
        assert_eq!(t0.entry(1, 2, 1, 3), 0.0);
    }

    #[test]
    fn pair_symmetry_holds_everywhere() {
        let t = PayoffTensor::build_full(&table(3.0, 1.0, 5.0, 0.0), gam(0.9));
        for i in 1..=4 {
            for j in 1..=4 {
                for k in 1..=4 {
                    for l in 1..=4 {
                        assert_eq!(t.entry(i, j, k, l), t.entry(j, i, k, l));
                        assert_eq!(t.entry(i, j, k, l), t.entry(i, j, l, k));
                    }
                }
            }
        }
    }

    #[test]
    fn two_param_listed_entries() {
        let t = PayoffTensor::build_two_param(&table(3.0, 1.0, 5.0, 0.0), gam(FRAC_PI_2));
        // t + (s - t) sin^2 at pi/2
        assert!((t.entry(2, 2, 3, 3) - 0.0).abs() < 1e-12);
        let t = PayoffTensor::build_two_param(&table(3.0, 2.0, 5.0, 0.0), gam(FRAC_PI_6));
        assert!((t.entry(1, 2, 2, 3) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn two_param_is_restriction_of_full() {
        // delete index 2 of the full tensor, relabel 3 -> 2 and 4 -> 3
        let tb = table(3.0, 1.3, 4.2, 0.4);
        let g = gam(0.83);
        let full = PayoffTensor::build_full(&tb, g);
        let two = PayoffTensor::build_two_param(&tb, g);
        let map = [1usize, 3, 4];
        for i in 1..=3 {
            for j in 1..=3 {
                for k in 1..=3 {
                    for l in 1..=3 {
                        let expect = full.entry(map[i - 1], map[j - 1], map[k - 1], map[l - 1]);
                        assert!(
                            (two.entry(i, j, k, l) - expect).abs() < 1e-12,
                            "mismatch at ({i},{j},{k},{l})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn response_matrix_for_defect() {
        let tb = table(3.0, 1.0, 5.0, 0.0);
        let g = gam(0.6);
        let t = PayoffTensor::build_two_param(&tb, g);
        let p = t.response_matrix(&[0.0, 1.0, 0.0]).unwrap();
        let sin2 = g.gamma().sin().powi(2);
        let expect = [[0.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 5.0 * sin2]];
        for i in 0..3 {
            for j in 0..3 {
                assert!((p.entry(i, j) - expect[i][j]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn response_matrix_for_quantum_strategy() {
        let tb = table(3.0, 1.0, 5.0, 0.0);
        let g = gam(0.6);
        let t = PayoffTensor::build_two_param(&tb, g);
        let p = t.response_matrix(&[0.0, 0.0, 1.0]).unwrap();
        let sin2 = g.gamma().sin().powi(2);
        let diag = [3.0 - 2.0 * sin2, 5.0 - 5.0 * sin2, 3.0];
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { diag[i] } else { 0.0 };
                assert!((p.entry(i, j) - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn response_matrix_for_family_strategy() {
        // P((0, a, b, 0)) against the closed 4x4 form with eps = sin^2 gamma
        let (alpha, beta) = (0.6, 0.8);
        let tb = table(3.0, 1.0, 5.0, 0.0);
        let g = gam(0.4);
        let eps = g.gamma().sin().powi(2);
        let (r, p, t, s) = (3.0, 1.0, 5.0, 0.0);
        let full = PayoffTensor::build_full(&tb, g);
        let m = full.response_matrix(&[0.0, alpha, beta, 0.0]).unwrap();
        let ab = alpha * beta;
        let expect = [
            [s + (t - s) * alpha * alpha * eps, 0.0, 0.0, (s - t) * ab * eps],
            [0.0, p + (r - p) * beta * beta * eps, (r - p) * ab * eps, 0.0],
            [0.0, (r - p) * ab * eps, p + (r - p) * alpha * alpha * eps, 0.0],
            [(s - t) * ab * eps, 0.0, 0.0, s + (t - s) * beta * beta * eps],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert!(
                    (m.entry(i, j) - expect[i][j]).abs() < 1e-12,
                    "entry ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn payoffs_for_named_profiles() {
        let tb = table(3.0, 1.0, 5.0, 0.0);
        let t = PayoffTensor::build_two_param(&tb, gam(0.73));
        let d = [0.0, 1.0, 0.0];
        let q = [0.0, 0.0, 1.0];
        let pay = t.payoffs(&d, &d).unwrap();
        assert!((pay.payoff_a - 1.0).abs() < 1e-12);
        assert!((pay.payoff_b - 1.0).abs() < 1e-12);

        let t = PayoffTensor::build_two_param(&tb, gam(FRAC_PI_2));
        let pay = t.payoffs(&q, &d).unwrap();
        assert!((pay.payoff_a - 5.0).abs() < 1e-12);
        assert!(pay.payoff_b.abs() < 1e-12);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let t = PayoffTensor::build_two_param(&table(3.0, 1.0, 5.0, 0.0), gam(0.5));
        assert!(t.response_matrix(&[1.0, 0.0, 0.0, 0.0]).is_err());
        assert!(t.payoffs(&[1.0, 0.0, 0.0], &[1.0, 0.0, 0.0, 0.0]).is_err());
    }
}
