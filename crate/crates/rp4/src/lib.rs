//! File formats, parallel drivers and the `rp4` command line on top of
//! [`rp4_core`].

pub mod cli;
pub mod io;
pub mod parallel;

pub use rp4_core;
