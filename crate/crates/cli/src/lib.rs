//! Library surface of the CLI crate: the output record and its renderings,
//! shared between the binary and its integration tests.

pub mod record;
