use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid generator name {0:?}")]
    InvalidGeneratorName(String),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("unknown generator {name:?} at offset {offset}")]
    UnknownGenerator { name: String, offset: usize },
    #[error("malformed exponent at offset {0}")]
    MalformedExponent(usize),
    #[error("unbalanced parentheses at offset {0}")]
    UnbalancedParentheses(usize),
    #[error("unexpected character {found:?} at offset {offset}")]
    UnexpectedCharacter { found: char, offset: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("presentation has {generators} generators but {relators} relators (deficiency one required)")]
    NotDeficiencyOne { generators: usize, relators: usize },
    #[error("presentation syntax error on line {line}: {message}")]
    PresentationSyntax { line: usize, message: String },
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("value at t = 1 is {0}, not +1 or -1")]
    NotAKnotPolynomial(String),
    #[error("polynomial is not palindromic")]
    NotPalindromic,
    #[error("polynomial span {0} is odd")]
    OddSpan(i64),
    #[error("abelianization has rank {0}, expected 1")]
    H1RankNotOne(usize),
    #[error("generator {0:?} has weight zero and cannot be the removed column")]
    ZeroWeightColumn(String),
    #[error("torus knot parameters {0} and {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("surgery slope has zero denominator")]
    ZeroDenominator,
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("residual {0:e} exceeds bound")]
    ResidualTooLarge(f64),
    #[error("malformed polynomial JSON: {0}")]
    PolynomialJson(String),
}

impl Error {
    /// Stable identifier used in machine-readable error lines.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidGeneratorName(_) => "InvalidGeneratorName",
            Error::DuplicateGenerator(_) => "DuplicateGenerator",
            Error::UnknownGenerator { .. } => "UnknownGenerator",
            Error::MalformedExponent(_) => "MalformedExponent",
            Error::UnbalancedParentheses(_) => "UnbalancedParentheses",
            Error::UnexpectedCharacter { .. } => "UnexpectedCharacter",
            Error::ExponentOverflow => "ExponentOverflow",
            Error::NotDeficiencyOne { .. } => "NotDeficiencyOne",
            Error::PresentationSyntax { .. } => "PresentationSyntax",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotDivisible => "NotDivisible",
            Error::NotAKnotPolynomial(_) => "NotAKnotPolynomial",
            Error::NotPalindromic => "NotPalindromic",
            Error::OddSpan(_) => "OddSpan",
            Error::H1RankNotOne(_) => "H1RankNotOne",
            Error::ZeroWeightColumn(_) => "ZeroWeightColumn",
            Error::NotCoprime(..) => "NotCoprime",
            Error::InvalidParameters(_) => "InvalidParameters",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::CertificationFailed(_) => "CertificationFailed",
            Error::ResidualTooLarge(_) => "ResidualTooLarge",
            Error::PolynomialJson(_) => "PolynomialJson",
        }
    }
}
