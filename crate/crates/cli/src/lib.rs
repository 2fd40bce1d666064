//! Command-line front end for gradalg: the JSON document format and the
//! subcommands built on it.

pub mod bundle;
pub mod commands;
pub mod format;
