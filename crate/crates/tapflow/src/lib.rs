//! Static traffic assignment toolkit: TNTP network ingestion, BPR network
//! loading, conventional equilibrium solvers (MSA, Frank-Wolfe), and a
//! multi-agent reinforcement-learning stack in which each agent routes the
//! demand of one origin-destination pair over a fixed candidate route set.
//!
//! The crate is organized bottom-up:
//!
//! - [`tntp`]: parsers for the TNTP net/trips/node text formats and the
//!   route-cache file.
//! - [`network`]: core domain types ([`network::Network`],
//!   [`network::DemandMatrix`], [`network::RouteSet`], [`network::FlowState`])
//!   and the route-proportion network loading.
//! - [`shortest`]: deterministic Dijkstra trees and Yen's k-shortest
//!   loopless paths.
//! - [`equilibrium`]: Beckmann objective, relative-gap metrics, and the MSA
//!   and Frank-Wolfe reference solvers.
//! - [`env`]: the episodic OD-router environment (observations, action
//!   pruning, local-gap rewards).
//! - [`mlp`]: a small f64 feedforward approximator with exact gradients and
//!   Adam updates.
//! - [`policy`]: Dirichlet and softmax-Gaussian action heads on the
//!   probability simplex.
//! - [`ppo`]: independent PPO training with shared parameters, rollout
//!   collection, GAE, and the evaluation protocol.
//!
//! Data-parallel inner loops (per-origin shortest paths, per-agent loading
//! and inference) run on rayon when the `parallel` feature is enabled
//! (default) and fall back to sequential execution otherwise. See
//! [`exec::Execution`] to select the mode per call.

pub mod env;
pub mod equilibrium;
pub mod error;
pub mod exec;
pub mod mlp;
pub mod network;
pub mod policy;
pub mod ppo;
pub mod shortest;
pub mod tntp;
pub mod util;

pub use error::{Error, Result};
