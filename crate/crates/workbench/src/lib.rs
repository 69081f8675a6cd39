//! Command-line workbench over the core library: file formats, reports and
//! the corpus of explicit algebras.

pub mod cli;
pub mod corpus;
pub mod format;
pub mod report;
