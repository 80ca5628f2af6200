//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    // --- data ingestion -------------------------------------------------
    #[error("missing column `{0}`")]
    MissingColumn(String),
    #[error("non-numeric value in column `{column}` at data row {row}")]
    NonNumericValue { column: String, row: usize },
    #[error("time {time} outside domain [0, {tau}] at data row {row}")]
    TimeOutOfDomain { time: f64, tau: f64, row: usize },
    #[error("outcome index {outcome} outside 1..={j_count} at data row {row}")]
    OutcomeOutOfRange {
        outcome: i64,
        j_count: usize,
        row: usize,
    },
    #[error("dataset contains no valid rows")]
    EmptyDataset,
    #[error("longitudinal and survival subject sets differ: {0}")]
    SubjectMismatch(String),
    #[error("subject {subject} has observation at t={time} after event/censoring time {survival_time}")]
    ObservationAfterEvent {
        subject: i64,
        time: f64,
        survival_time: f64,
    },
    #[error("invalid survival record for subject {subject}: {reason}")]
    InvalidSurvivalRecord { subject: i64, reason: String },

    // --- splines ---------------------------------------------------------
    #[error("Gram matrix is numerically singular (min eigenvalue {min_eig})")]
    SingularGram { min_eig: f64 },
    #[error("insufficient data for smoothing: {got} points, need at least {need}")]
    InsufficientData { got: usize, need: usize },
    #[error("invalid basis configuration: {0}")]
    InvalidBasis(String),

    // --- covariance -----------------------------------------------------
    #[error("no subject contributes an off-diagonal pair for surface ({j}, {j_prime})")]
    InsufficientPairs { j: usize, j_prime: usize },
    #[error("degenerate scaling solve: {0}")]
    DegenerateScaling(String),

    // --- score prediction -------------------------------------------------
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("marginal covariance of observations is singular for subject {subject}")]
    SingularMarginal { subject: usize },

    // --- survival ---------------------------------------------------------
    #[error("event time {0} not in the baseline-hazard jump set")]
    EventTimeNotInJumps(f64),
    #[error("empty risk set at event time {0}")]
    EmptyRiskSet(f64),
    #[error("observed information matrix is singular")]
    SingularInformation,
    #[error("no usable pairs for concordance")]
    NoUsablePairs,

    // --- MCEM --------------------------------------------------------------
    #[error("all importance weights degenerate for subject {subject}; survival hazard blow-up")]
    DegenerateWeights { subject: usize },
    #[error("zero denominator in scaling update for outcome {0}")]
    ZeroDenominator(usize),
    #[error("singular design in mean update")]
    SingularDesign,
    #[error("eigen coefficient inner loop diverged after {0} sweeps")]
    InnerLoopDivergence(usize),

    // --- selection ---------------------------------------------------------
    #[error("every grid cell failed to fit")]
    AllCellsFailed,

    // --- simulation ---------------------------------------------------------
    #[error("coefficient bundle not found at {0}")]
    MissingCoefficientBundle(String),
    #[error("invalid coefficient bundle: {0}")]
    InvalidCoefficientBundle(String),
    #[error("censoring target {target} unachievable: attainable range is [{lo:.4}, {hi:.4}]")]
    UnachievableCensoring { target: f64, lo: f64, hi: f64 },
    #[error("invalid simulation spec: {0}")]
    InvalidSimSpec(String),

    // --- plumbing -----------------------------------------------------------
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
