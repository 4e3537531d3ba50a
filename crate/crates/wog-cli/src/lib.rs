//! Library surface of the command-line tool: the on-disk graph format and
//! the report envelope, shared with the integration tests.

pub mod format;
pub mod report;
