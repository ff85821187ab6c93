//! Analysis engine for the generalized quantum Prisoners' Dilemma.
//!
//! The game is the Eisert-style quantization of the Prisoners' Dilemma with
//! payoff table `t > r > p > s` and an entangling gate parameterized by an
//! angle `gamma` in `[0, pi/2]`. Payoffs can be computed two independent ways:
//! by direct state-vector simulation ([`quantum_core`]) and by contracting a
//! symmetrized payoff tensor ([`payoff_tensor`]). Best responses are maximal
//! eigenvectors of the response matrix `P(u)`, which makes Nash equilibria and
//! the entanglement thresholds computable in closed form ([`equilibrium`]).
//! A brute-force grid search over the strategy sphere ([`oracle`]) serves as
//! an independent check on the eigenvector method.

// index-based loops mirror the i/j/k/l tensor notation throughout
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod equilibrium;
pub mod error;
pub mod oracle;
pub mod payoff_tensor;
pub mod quantum_core;
pub mod strategy_space;

pub use error::{GameError, Result};
pub use quantum_core::{Entanglement, GameState, PayoffPair, PayoffTable, Unitary2};
pub use strategy_space::{StrategyAngles, StrategyVec3, StrategyVec4};
