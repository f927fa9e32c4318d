//! File formats, threaded enumeration, reports and the command-line front end
//! for [`bdom_core`].

pub mod cli;
pub mod formats;
pub mod parallel;
pub mod report;
