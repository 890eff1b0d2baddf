//! Record types and configuration handling for the `hsnum` command-line
//! tool, split out so integration tests can parse emitted records.

pub mod config;
pub mod record;
