//! Companion crate to `lpq-core`: std-only concerns — numeric oracles
//! (eigenvalue and Aberth root finders), file/JSON formats, and the CLI.

pub mod formats;
pub mod oracle;
