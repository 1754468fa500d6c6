//! Graph files, report formats and the command-line driver around
//! [`fnm_core`].

pub mod cli;
pub mod io;
pub mod report;

use std::time::Instant;

pub use fnm_core;

/// Milliseconds since construction.
#[derive(Clone, Copy, Debug)]
pub struct StdClock(Instant);

impl StdClock {
    pub fn new() -> Self {
        StdClock(Instant::now())
    }
}

impl Default for StdClock {
    fn default() -> Self {
        Self::new()
    }
}

impl fnm_core::Clock for StdClock {
    fn now_millis(&self) -> u64 {
        self.0.elapsed().as_millis() as u64
    }
}
