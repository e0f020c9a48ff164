//! Library side of the `qsep` binary: file format, reports and commands.

pub mod commands;
pub mod matrix_file;
pub mod report;
