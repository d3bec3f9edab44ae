use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("extension degree {n} outside supported range 1..={max}")]
    DegreeOutOfRange { n: u32, max: u32 },

    #[error("modulus {modulus:#x} is not an irreducible polynomial of degree {n}")]
    BadModulus { n: u32, modulus: u64 },

    #[error("inversion of zero")]
    ZeroInverse,

    #[error("{0} requires an even extension degree")]
    OddDegree(&'static str),

    #[error("element {value:#x} does not belong to F_2^{n}")]
    ForeignElement { n: u32, value: u64 },

    #[error("element is not in the embedded subfield")]
    NotInSubfield,

    #[error("invalid hex field element {0:?}")]
    ParseHex(String),

    #[error("moduli file line {line}: {reason}")]
    ModuliFile { line: usize, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("scale guard exceeded: {what} needs q = 2^{n}, limit is 2^{limit}")]
    ScaleGuard { what: &'static str, n: u32, limit: u32 },

    #[error("label {label} does not exist for {parity} degree")]
    ParityMismatch { label: &'static str, parity: &'static str },

    #[error("Weil polynomial {0} is not a supersingular threefold class")]
    NotInCatalog(String),

    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
