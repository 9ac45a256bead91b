//! Command-line companion to `spst-core`: persistent table cache, JSON
//! formats, the expression language and the `spst` binary.

pub mod cli;
pub mod expr;
pub mod json;
pub mod session;
pub mod store;
pub mod tables;
pub mod verify;
