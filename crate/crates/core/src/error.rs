use thiserror::Error;

/// Errors shared across the forecasting and optimization stacks.
#[derive(Debug, Error)]
pub enum CoreError {
    /// Invalid configuration value (malformed peak window, bad parameter range).
    #[error("configuration error: {0}")]
    Config(String),

    /// Mismatched shapes or calendars between series/tables that must align.
    #[error("shape error: {0}")]
    Shape(String),

    /// A metric whose definition divides by zero on the given data.
    #[error("undefined metric: {0}")]
    UndefinedMetric(String),

    /// Feature assembly produced no usable rows.
    #[error("assembly error: {0}")]
    Assembly(String),

    /// Weather data does not cover the requested horizon plus lead/lag margin.
    #[error("coverage error: {0}")]
    Coverage(String),

    /// Forest fitting failed (empty table, invalid parameters).
    #[error("fit error: {0}")]
    Fit(String),

    /// Prediction row does not match the model's feature schema.
    #[error("prediction error: {0}")]
    Predict(String),

    /// Instance document failed validation (cycles, dangling ids, bad fields).
    #[error("validation error: {0}")]
    Validation(String),

    /// A referenced id does not exist.
    #[error("reference error: {0}")]
    Reference(String),

    /// Document parse failure (instance, schedule, series CSV).
    #[error("parse error: {0}")]
    Parse(String),

    /// The optimizer hit an infeasible problem where feasibility was required.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// A contract between caller and callee was broken (e.g. evaluating an
    /// invalid schedule).
    #[error("contract error: {0}")]
    Contract(String),

    /// Underlying I/O failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CoreError>;
