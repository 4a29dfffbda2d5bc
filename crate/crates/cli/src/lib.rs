//! File formats shared by the `ghr` binary and its tests.

pub mod files;
