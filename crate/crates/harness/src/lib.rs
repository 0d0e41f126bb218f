//! Experiment orchestration and reporting for the `bridgeburn` command.

pub mod experiments;
pub mod report;
pub mod stats;
