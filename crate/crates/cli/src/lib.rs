//! Library half of the `sgp-lab` command-line tool: argument parsing with position-annotated
//! errors, and command execution with distinct exit codes per failure class.

pub mod command;
pub mod run;

pub use command::{parse_args, parse_spec, Action, Command, Family, Format, Options, ParseError};
pub use run::{exit_code, run, ExitStatus};
