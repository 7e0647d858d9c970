//! Request schemas, report types and the configuration-search machinery
//! behind the `cuspidal` binary.

pub mod report;
pub mod request;
pub mod search;
