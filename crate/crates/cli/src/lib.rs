//! Germ-file front end: parsing, subcommand dispatch and reports.

pub mod commands;
pub mod germfile;
pub mod report;

pub use commands::{apply_limit_overrides, exit_code, pair_subject, run, Command, Options};
pub use germfile::{parse_germ_file, GermFile};
pub use report::GermReport;

/// Exit status for a failed run: 2 for unreadable input, 3 when a resource cap
/// was hit, 1 otherwise.
pub fn error_exit_code(err: &anyhow::Error) -> i32 {
    if err.downcast_ref::<germforge::syntax::ParseError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<germforge::Error>() {
        Some(germforge::Error::ResourceLimit { .. }) => 3,
        _ => 1,
    }
}
