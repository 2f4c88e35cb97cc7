//! Command-line surface and acceptance harness for `hilb-spine`.

pub mod acceptance;
pub mod commands;
pub mod report;
