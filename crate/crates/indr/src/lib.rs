//! File formats, seeded corpora and the command-line front end for
//! [`indr_core`].

pub mod cli;
pub mod corpus;
pub mod format;
