use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid element {0:?}: expected a non-negative integer below 256")]
    Element(String),
    #[error("invalid predicate {0:?}: expected a bitmask (decimal, 0b.. or 0x..)")]
    Pred(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniverseError {
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,
    #[error("alphabet size {0} exceeds the supported maximum of 64")]
    AlphabetTooLarge(usize),
}

/// Failure to run an exhaustive check to completion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("universe too large: {projected} projected relation evaluations exceed the budget of {budget}")]
    UniverseTooLarge { projected: u64, budget: u64 },
    #[error(
        "no counterexample for {target} within alphabet {alphabet_size}, max length {max_len}"
    )]
    NotFound {
        target: String,
        alphabet_size: usize,
        max_len: usize,
    },
    #[error("hard part undefined: {0}")]
    Oracle(#[from] OracleError),
    #[error("worker pool: {0}")]
    Pool(String),
}

/// The easy part of a specification does not single out a best candidate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no candidate satisfies the easy condition")]
    EmptyCandidates,
    #[error("no greatest candidate; incomparable maxima: {}", .maxima.join(" / "))]
    NoGreatest { maxima: Vec<String> },
}
