//! Document and configuration types shared by the `mubkit` binary and its
//! integration tests.

pub mod config;
pub mod doc;
