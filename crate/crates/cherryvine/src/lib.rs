//! Text formats, Graphviz output and the `cherryvine` command line on top of
//! `cherryvine-core`.

pub mod cli;
pub mod dot;
pub mod fixtures;
pub mod format;

pub use cli::{run, Outcome};
pub use format::{format, parse, parse_assignment, ErrorKind, ParseError, Structure};
