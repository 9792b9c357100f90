//! Text formats, seeded corpora, the acceptance suite and the command line
//! for `uniformity-core`.

pub mod caps;
pub mod cli;
pub mod corpus;
pub mod parse;
pub mod verify;
