use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{degree} is too large")]
    FieldTooLarge { p: u64, degree: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("malformed field designator `{0}`")]
    BadDesignator(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("value {value} is not an element of a field of order {order}")]
    ElementOutOfRange { value: u64, order: u32 },
    #[error("degree {sub} does not divide degree {degree}")]
    NotASubfield { sub: u32, degree: u32 },
    #[error("no element of order {n} in a field of order {order}")]
    NoRootOfUnity { n: u32, order: u32 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("vector of odd length {0} is not a symplectic vector")]
    OddLength(usize),

    #[error("enumeration needs {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("C2 is not contained in C1")]
    NotNested,
    #[error("entanglement {c} outside the admissible range {lo}..={hi}")]
    EntanglementOutOfRange { c: usize, lo: usize, hi: usize },
    #[error("set difference is empty, distance undefined")]
    Degenerate,
    #[error("field of order {0} is too small")]
    FieldTooSmall(u32),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: u32, q: u32 },
    #[error("exponent set is not a union of cyclotomic cosets")]
    NotCosetClosed,
    #[error("exponent {0} out of range")]
    ExponentOutOfRange(u32),
    #[error("index {index} out of range (at most {max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("no pair satisfies the threshold condition")]
    EmptyThresholdSet,
    #[error("corollary condition violated: {0}")]
    ConditionViolated(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
