//! Safety-aware reinforcement learning on Life-rule gridworlds.
//!
//! The crate bundles everything needed to run distance-regularized co-training
//! experiments end to end:
//!
//! - [`grid`] — a seeded cellular-automaton world with an embedded agent,
//!   prune/append task rewards, and one-hot observations.
//! - [`levelgen`] — procedural still/dynamic level generation from a template
//!   library, plus the plain-text level format.
//! - [`safety`] — inaction-counterfactual rollouts, per-step impact penalties,
//!   and the post-episode side-effect score.
//! - [`autodiff`] / [`net`] — a small reverse-mode tape and the MLP
//!   policy/value network it differentiates, with portable checkpoints.
//! - [`ppo`] — rollout collection, GAE, and the clipped PPO loss.
//! - [`sarl`] — Jensen-Shannon and Sinkhorn action-distribution distances and
//!   the distance-regularized objective.
//! - [`eval`] — fixed-bank evaluation and champion-policy tracking.
//! - [`train`] — the co-training loop tying the above together.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats, and the CLI
//! live in the companion `sarl-cli` crate. Everything here is deterministic:
//! identical seeds produce identical trajectories, losses, and parameters.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod autodiff;
pub mod config;
pub mod eval;
pub mod grid;
pub mod levelgen;
pub mod net;
pub mod optim;
pub mod ppo;
pub mod rng;
pub mod safety;
pub mod sarl;
pub mod train;

pub use config::{Algorithm, LevelConfig, RunConfig};
pub use grid::{Action, Board, CellKind, StepOutcome};
pub use levelgen::{LevelSpec, TaskKind};
pub use net::{ActionDistribution, Arch, PolicyParams};
pub use ppo::{PpoConfig, Transition, TransitionBatch};
pub use sarl::{DistanceKind, DistanceResult, SarlConfig};
