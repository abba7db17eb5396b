//! Library surface of the `greenring` harness: the named verification
//! suites and their aggregation into a reproducible report.

pub mod suites;
