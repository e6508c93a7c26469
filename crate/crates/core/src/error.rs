use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument id `{0}`: ids are non-empty and use only letters, digits and `_`")]
    InvalidArgumentId(String),
    #[error("duplicate argument `{0}`")]
    DuplicateArgument(String),
    #[error("duplicate attack ({0},{1})")]
    DuplicateAttack(String, String),
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),
    #[error("attack ({0},{1}) refers to undeclared argument `{2}`")]
    DanglingAttack(String, String, String),
    #[error("bundle attack ({0},{1}) does not involve a new argument")]
    BundleAttackBetweenExisting(String, String),
    #[error("argument `{0}` already exists in the framework")]
    ArgumentCollision(String),
    #[error("probability {0} is outside (0,1]")]
    ProbabilityOutOfRange(f64),
    #[error("missing probability for {0}")]
    MissingProbability(String),
    #[error("{0}")]
    NotInducible(String),
    #[error(
        "exact evaluation needs {found} uncertain elements but the limit is {limit}; use Monte Carlo"
    )]
    ExactLimitExceeded { found: usize, limit: usize },
    #[error("Monte Carlo needs at least one sample")]
    NoSamples,
    #[error("utility `{utility}` cannot be used with a {framework} framework")]
    IncompatibleUtility {
        utility: &'static str,
        framework: &'static str,
    },
    #[error("utility `{0}` needs a target subset of the objective")]
    MissingTarget(&'static str),
    #[error("`{0}` is not in the objective extension")]
    NotInObjective(String),
    #[error("`{0}` is in the objective and objective arguments may not be removed")]
    ObjectiveRemoval(String),
    #[error("KL difference needs arguments in [0,1], got ({0}, {1})")]
    KlDomain(f64, f64),
    #[error("subset size bound must be at least 1")]
    InvalidSizeBound,
    #[error("ACH matrix needs at least one hypothesis")]
    NoHypotheses,
    #[error("malformed ACH matrix: {0}")]
    MatrixShape(String),
    #[error("invalid probability mapping: {0}")]
    InvalidMapping(String),
    #[error("no probability mapped for uncertainty label `{0}`")]
    UnmappedLabel(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("csv row {row}, column {column}: {message}")]
    Csv {
        row: usize,
        column: usize,
        message: String,
    },
}
