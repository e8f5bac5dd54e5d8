use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The word is a nontrivial power `w^k`, `k >= 2`.
    #[error("input is not primitive (it is a nontrivial power of a shorter word)")]
    NonPrimitive,

    /// One member of a multiset input is a nontrivial power.
    #[error("input string #{index} is not primitive")]
    NonPrimitiveInput { index: usize },

    #[error("input string #{index} is empty")]
    EmptyString { index: usize },

    /// The text contains the byte reserved for the `$` sentinel.
    #[error("text contains the sentinel byte 0x00 at position {position}")]
    SentinelPresent { position: usize },

    /// No iteration count up to the cap returns the text to itself.
    #[error("no iteration count k <= {max_k} restores the input")]
    NotFoundWithin { max_k: u64 },

    /// Two distinct positions produced ω-equal conjugates; only possible when
    /// the factorization handed to the oracle contains a repeated factor.
    #[error("conjugates at positions {first} and {second} are equal in omega-order")]
    DuplicateConjugate { first: usize, second: usize },
}
