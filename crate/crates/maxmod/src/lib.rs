//! File formats, reports, parallel campaigns and the command-line front end
//! for `maxmod-core`.

pub mod cli;
pub mod io;
pub mod parallel;
pub mod report;
pub mod sweep;

pub use maxmod_core as core;
