//! Text formats and plumbing shared by the `moufang` binary and its tests.

pub mod format;
