//! Error types shared across the toolkit.

use thiserror::Error;

/// Unified error type for panel construction, estimation, matching, and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("schema error: {0}")]
    Schema(String),

    #[error("validation error for firm {firm_id}, year {year}: {message}")]
    RowValidation {
        firm_id: String,
        year: i32,
        message: String,
    },

    #[error("integrity error: duplicate observation for firm {firm_id}, year {year}")]
    DuplicateObservation { firm_id: String, year: i32 },

    #[error("lookup error: {0}")]
    Lookup(String),

    #[error("undefined test: {0}")]
    UndefinedTest(String),

    #[error("degenerate test: {0}")]
    DegenerateTest(String),

    #[error("collinearity error: dropped terms {0:?}")]
    Collinearity(Vec<String>),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("identification error: {moments} moments for {params} parameters")]
    Identification { moments: usize, params: usize },

    #[error("estimation did not converge: best objective {objective:.3e} after {evaluations} evaluations")]
    NonConvergence { objective: f64, evaluations: usize },

    #[error("inference unreliable: {failed} of {total} bootstrap replicates failed")]
    InferenceUnreliable { failed: usize, total: usize },

    #[error("depreciation factor non-positive: firm {firm_id} has mean useful life {mean_life:.3} <= 2")]
    DepreciationFactorNonpositive { firm_id: String, mean_life: f64 },

    #[error("no overlap: no treated observation has a control in its exact-match cell")]
    NoOverlap,

    #[error("incomplete inputs: {0}")]
    IncompleteInputs(String),

    #[error("comparison error: {0}")]
    Comparison(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("dependency error: stage `{stage}` requires artifact `{artifact}`")]
    Dependency { stage: String, artifact: String },

    #[error("stage `{stage}` failed: {source}")]
    Stage {
        stage: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
