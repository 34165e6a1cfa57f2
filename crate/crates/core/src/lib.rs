//! Energy-aware neural architecture search, desk scale.
//!
//! The crate covers the full loop for searching cell-based convolutional
//! architectures under joint energy/accuracy objectives without touching
//! real hardware:
//!
//! * [`arch_space`] — cell-based search space: enumeration, grid expansion,
//!   shape validation, embedding, and lowering to per-operator kernels.
//! * [`kernel_energy`] — compact MLP regressors that map kernel
//!   configurations to energy (mJ), plus ranking/regression metrics.
//! * [`transfer`] — few-shot adaptation of predictors to new devices:
//!   calibration-set selection, KL-based base-predictor selection,
//!   fine-tuning.
//! * [`naswot`] — training-free accuracy proxy from binary ReLU activation
//!   codes on a random-weight instantiation.
//! * [`pareto`] — multi-objective search: dominance, front maintenance,
//!   min-norm multi-gradient directions, candidate ranking, best-model
//!   selection.
//! * [`harness`] — a deterministic virtual device standing in for a phone
//!   plus external power monitor: hidden energy/accuracy oracles, 5 kHz
//!   power traces, event-synchronized energy recovery.
//! * [`pipeline`] — config-driven orchestration of the whole loop behind
//!   the `joulenas` CLI, with an append-only replayable run ledger.
//!
//! Everything is seed-deterministic: identical configs and seeds produce
//! byte-identical artifacts.

pub mod arch_space;
pub mod error;
pub mod harness;
pub mod kernel_energy;
pub(crate) mod linalg;
pub mod naswot;
pub mod pareto;
pub mod pipeline;
pub mod transfer;

pub use error::CoreError;
