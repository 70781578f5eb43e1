//! Finite-state morphology for Sorani Kurdish in Latin script.
//!
//! The crate is layered bottom-up:
//!
//! * [`fst`]: unweighted transducers, their algebra and lookup;
//! * [`rules`]: a small transducer specification language (`.kfst`)
//!   compiled to [`fst::Transducer`]s, including context rewrite rules;
//! * [`lexicon`]: the tab-separated base-form lexicon;
//! * [`grammar`]: the Sorani inflection grammar, both as direct string
//!   functions and as a compiled analyzer/generator;
//! * [`cli`]: the command-line front end used by the `sorani-fst` binary.

pub mod cli;
pub mod fst;
pub mod grammar;
pub mod lexicon;
pub mod rules;
pub mod symbol;

pub use fst::{PairLabel, StringPair, Transducer};
pub use symbol::Symbol;
