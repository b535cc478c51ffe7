//! Presentation layer for the `beamsplit` executable: number formatting,
//! matrix-file parsing, and the sweep/bound-curve drivers that assemble CSV
//! rows from library calls. No numerical method lives here.

pub mod bounds;
pub mod format;
pub mod matrixfile;
pub mod sweep;
