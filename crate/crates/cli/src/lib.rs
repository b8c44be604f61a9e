//! Library side of the `homhopf` command: input parsing, command dispatch and reports.

pub mod input;
pub mod report;
pub mod run;

pub use input::{parse_input, parse_input_str, Command, InputDocument, InputError, InputIssue, IssueKind};
pub use report::{parse_report, ReportDocument, Status};
pub use run::{exit_code, run, RunOptions};
