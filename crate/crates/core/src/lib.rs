//! Simulation toolkit for crossbar compute-in-memory DNN accelerators.
//!
//! The crate is organized around the lifecycle of a model deployed on an
//! analog crossbar accelerator:
//!
//! - [`nn`]: a small dense network engine (the ideal, noise-free reference).
//! - [`crossbar`]: mapping weight matrices onto fixed-size conductance tiles
//!   with bit slicing, differential columns, and DAC/ADC quantization.
//! - [`noise`]: seeded samplers for every device non-ideality (thermal, shot,
//!   RTN, programming error, stuck-at faults, aggregate weight variation).
//! - [`analysis`]: Monte-Carlo output-change collection and Gaussian
//!   goodness-of-fit scoring.
//! - [`training`]: noise-injection training and robustness evaluation.
//! - [`ancode`]: AN-code error correction for integer accumulation.
//! - [`dataset`], [`config`], [`report`], [`experiment`]: the reproducible
//!   experiment harness behind the CLI.
//!
//! Everything that draws randomness does so through [`rng::derive_rng`], so
//! any experiment is a pure function of its config and one master seed.

pub mod analysis;
pub mod ancode;
pub mod config;
pub mod crossbar;
pub mod dataset;
pub mod error;
pub mod experiment;
pub mod nn;
pub mod noise;
pub mod report;
pub mod rng;
pub mod tensor;
pub mod training;

pub use error::{Error, Result};
pub use tensor::Tensor;
