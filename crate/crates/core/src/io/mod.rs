//! File format, renderers and reports.

pub mod format;
pub mod render;
pub mod report;

pub use format::{parse_poset, DocumentError, ParseError, ParseErrorKind, PosetDocument};
pub use render::{export_dot, render_cell, render_table, TableFormat};
pub use report::{build_report, describe_witness, report_json, witness_labels, Report};
