//! Sock-puppet audit workbench for "For You"-style recommender feeds.
//!
//! The crate bundles three things that are usually spread across a research
//! codebase:
//!
//! * a deterministic simulated short-video platform ([`recsys`]) with
//!   configurable personalization signals (follows, watch ratios, likes,
//!   locale, popularity) serving 30-post feed batches from a synthetic
//!   content catalog ([`catalog`]),
//! * a scenario runner ([`puppet`]) that executes paired active/control
//!   bot sessions in lockstep and records every served post, and
//! * the analysis pipeline ([`metrics`]) that measures feed divergence
//!   (Jaccard), popularity trends, entity reappearance and hashtag
//!   semantics (skip-gram embeddings), with noise baselining and
//!   level-shift correction.
//!
//! Because the platform is simulated, every personalization effect the
//! analysis reports has a known planted cause, which makes the whole
//! pipeline self-verifying: the acceptance suite checks that the analysis
//! recovers the planted signal ordering above calibrated noise.
//!
//! Start with the runnable examples (`cargo run --example full_audit`) or
//! the `fypaudit` binary (`generate`, `run`, `calibrate`, `analyze`,
//! `report` subcommands). Library entry points are [`catalog::Catalog`],
//! [`recsys::Platform`], [`puppet::run_scenario`] and the free functions
//! in [`metrics`].

pub mod catalog;
pub mod commands;
pub mod error;
pub mod metrics;
pub mod plot;
pub mod puppet;
pub mod recsys;
pub mod rng;
pub mod store;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
