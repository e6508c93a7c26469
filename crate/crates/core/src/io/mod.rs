//! Text formats: the `arg`/`att` framework grammar, ACH matrices as CSV, and
//! key/value reports.
//!
//! ```
//! use argvoi::io::{parse_framework, serialize_framework};
//!
//! let text = "arg(a,0.65).\narg(b).\natt(a,b).\n";
//! let fw = parse_framework(text).unwrap();
//! assert!(fw.is_probabilistic());
//! assert_eq!(serialize_framework(&fw), text);
//! ```

mod ach_csv;
mod document;
mod report;

pub use ach_csv::{parse_ach_csv, render_ach_csv};
pub use document::{
    format_probability, parse_bundle, parse_document, parse_framework, serialize_framework,
    Directive, FrameworkDocument,
};
pub use report::{render_report, Report};
