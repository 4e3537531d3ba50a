//! Envelope for machine-readable command output.

use serde::Serialize;
use wog::graph::InstanceDigest;

#[derive(Debug, Clone, Serialize)]
pub struct Report<T: Serialize> {
    pub command: String,
    pub input: InstanceDigest,
    pub result: T,
    pub timing_ms: u128,
    pub version: String,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &str, input: InstanceDigest, result: T, timing_ms: u128) -> Report<T> {
        Report {
            command: command.to_string(),
            input,
            result,
            timing_ms,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn print_json(&self) -> anyhow::Result<()> {
        println!("{}", serde_json::to_string_pretty(self)?);
        Ok(())
    }
}
