//! Exhaustive checking of easy-hard specifications and Galois connections
//! over small universes of finite sequences.

pub mod catalog;
pub mod check;
pub mod cli;
pub mod combinators;
pub mod connections;
pub mod error;
pub mod model;
pub mod oracle;
pub mod orders;
pub mod report;

pub use check::{CheckOptions, DEFAULT_BUDGET};
pub use error::{CheckError, OracleError, ParseError, UniverseError};
pub use model::{Bounded, Elem, PairSeq, Pred, Seq, SeqList, SeqPair, Universe};
pub use report::{CheckReport, Value, Verdict, Witness};
