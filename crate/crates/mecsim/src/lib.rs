//! A desk-scale laboratory for decentralized dynamic computation offloading
//! in a multi-user mobile-edge-computing (MEC) system.
//!
//! The crate simulates a slotted MEC uplink: stochastic task arrivals queue
//! in per-user buffers, channels evolve by a Gauss-Markov autoregressive
//! process, and a zero-forcing detector at the base station resolves the
//! multi-user SINR each slot. Per-user agents (continuous-action DDPG,
//! discrete-action DQN, and two greedy baselines) allocate local-execution
//! and offloading power to minimize a weighted power-plus-backlog cost.
//!
//! Module map:
//! - [`numerics`]: complex linear algebra for zero-forcing detection, seeded
//!   sampling, and the Ornstein-Uhlenbeck exploration process.
//! - [`nn`]: a minimal dense-network engine with Adam, target networks, and
//!   portable text checkpoints.
//! - [`env`]: the multi-user MEC world (channels, buffers, rewards).
//! - [`agents`]: the decision makers and the replay buffer.
//! - [`harness`]: training, evaluation, tradeoff sweeps, metric aggregation.
//! - [`cli`]: the `mecsim` command-line entry point.

pub mod agents;
pub mod cli;
pub mod env;
pub mod harness;
pub mod nn;
pub mod numerics;

use thiserror::Error;

/// Crate-wide error type. Variants map onto the CLI exit-code contract:
/// usage errors exit 1, validation errors 2, runtime errors 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular or ill-conditioned matrix: {0}")]
    Singular(String),
    #[error("input out of range: {0}")]
    OutOfRange(String),
    #[error("non-finite value encountered: {0}")]
    NonFinite(String),
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
    #[error("config error at `{path}`: {message}")]
    Config { path: String, message: String },
    #[error("{0}")]
    Runtime(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn config(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            path: path.into(),
            message: message.into(),
        }
    }

    /// Exit code for the CLI: 2 for validation failures, 3 for runtime ones.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config { .. } => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
