//! Problem files, inline distributions and report rendering for the `lingdist` binary.

pub mod grammar;
pub mod problem_file;
pub mod report;
