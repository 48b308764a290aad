//! Load/solar forecasting with quantile regression forests plus an
//! activity-and-battery schedule optimizer for energy-and-peak-charge costs.
//!
//! The crate is organized around two halves that meet in the middle:
//!
//! * the forecasting stack ([`series`], [`features`], [`forest`]) turns raw
//!   15-minute traces into cleaned feature tables and fits a quantile
//!   regression forest whose leaves keep their training targets, so any
//!   conditional quantile can be read back out;
//! * the scheduling stack ([`schedmodel`], [`optimizer`]) models recurring
//!   and once-off activities, rooms, precedences and batteries, and runs a
//!   four-step MIP/MIQP pipeline (recurring MIP, once-off extension, battery
//!   dispatch under one of five strategies, cost-based branch selection) on
//!   top of a built-in branch-and-bound core.
//!
//! Everything is deterministic given a seed: bootstraps are keyed per tree,
//! branching rules are fixed, and time budgets are counted in nodes rather
//! than wall-clock seconds.
//!
//! With the `parallel` feature (on by default) the data-parallel inner loops
//! (tree growing, per-series table assembly, per-instance pipeline runs) use
//! rayon; without it they run sequentially with identical results.

pub mod error;
pub mod features;
pub mod forest;
pub mod optimizer;
pub mod par;
pub mod schedmodel;
pub mod seeding;
pub mod series;

pub use error::CoreError;
