use thiserror::Error;

/// A structure-constant table failing one of the Lie algebra axioms.
/// Indices are 0-based basis positions; the first violation found is reported.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("alternating axiom fails: c[{i}][{i}]^{k} != 0")]
    Alternating { i: usize, k: usize },
    #[error("antisymmetry fails at (i={i}, j={j}, k={k}): c[i][j]^k != -c[j][i]^k")]
    Antisymmetry { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails on basis triple (i={i}, j={j}, k={k})")]
    Jacobi { i: usize, j: usize, k: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("extension degree must be at least 1")]
    ZeroDegree,

    #[error("field order {q} exceeds cap {cap}")]
    FieldTooLarge { q: u128, cap: u64 },

    #[error("zero has no multiplicative inverse")]
    InverseOfZero,

    #[error("algebra has {actual} elements, exceeding cap {cap}")]
    TooManyElements { actual: u128, cap: u64 },

    #[error("ambient space has {actual} subspaces, exceeding cap {cap}")]
    TooManySubspaces { actual: u128, cap: u64 },

    #[error("operands belong to different fields")]
    MixedFields,

    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("subalgebra is not nilpotent")]
    NotNilpotent,

    #[error("subalgebra is not strongly self-centralizing")]
    NotSelfCentralizing,

    #[error("subalgebra lies inside nil(L) and yields no vertices")]
    InsideNil,

    #[error(transparent)]
    Validation(#[from] Violation),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code the command-line tool maps this error to.
    /// Caps exhausted is 3, everything else is an argument/input problem (2).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::FieldTooLarge { .. }
            | Error::TooManyElements { .. }
            | Error::TooManySubspaces { .. } => 3,
            _ => 2,
        }
    }
}
