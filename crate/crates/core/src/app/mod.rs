//! Command implementations behind the `singres` binary. Each command
//! returns a serializable report; the binary prints it and writes it under
//! the configured output directory.

mod commands;
mod project3d;
mod verify;

pub use commands::{
    cmd_classify, cmd_germ_classify, cmd_point_classify, cmd_resultant, cmd_scan, ClassifyOutput, GermInput, GermOutput,
    PointInput, PointOutput, ResultantOutput, ScanKind, ScanOutput,
};
pub use project3d::{
    cmd_project3d, CurveScan, GridConfig, Project3dInput, Project3dOutput, Support3D, Support3DError, ProjectionVerdict,
};
pub use verify::{cmd_verify_suite, suite_items, Expectations, ItemResult, SuiteReport};

use serde::Serialize;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

/// Settings shared by every command; copied verbatim into each report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub tolerance: f64,
    pub n_max: u32,
    pub trials: usize,
    pub det_bound: usize,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            tolerance: crate::laurent::DEFAULT_TOL,
            n_max: 12,
            trials: 5,
            det_bound: crate::resultant::DEFAULT_SIZE_BOUND,
            out: None,
        }
    }
}

/// Failure classes with stable exit codes.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("suite failure: {0}")]
    SuiteFailed(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl AppError {
    /// 1 suite failure, 2 usage error, 3 degenerate input.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::SuiteFailed(_) => 1,
            AppError::Usage(_) | AppError::Io(_) => 2,
            AppError::Degenerate(_) => 3,
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    generated_at_unix: u64,
    config: &'a RunConfig,
    report: &'a T,
}

/// Writes `{command, generated_at_unix, config, report}` to
/// `<out>/<command>-<unix seconds>-<nanos>.json`; no-op without `out`.
pub fn write_report<T: Serialize>(command: &str, cfg: &RunConfig, report: &T) -> Result<Option<PathBuf>, AppError> {
    let Some(dir) = &cfg.out else { return Ok(None) };
    std::fs::create_dir_all(dir)?;
    let now = SystemTime::now().duration_since(UNIX_EPOCH).unwrap_or_default();
    let env = Envelope { command, generated_at_unix: now.as_secs(), config: cfg, report };
    let path = dir.join(format!("{command}-{}-{:09}.json", now.as_secs(), now.subsec_nanos()));
    std::fs::write(&path, serde_json::to_string_pretty(&env).map_err(|e| AppError::Usage(e.to_string()))?)?;
    Ok(Some(path))
}

/// Reads `text` as inline JSON when it starts with `{` or `[`, from stdin
/// for `-`, and as a file path otherwise.
pub fn read_json_arg(text: &str) -> Result<String, AppError> {
    let t = text.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(text.to_string());
    }
    if text == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(Path::new(text)).map_err(|e| AppError::Usage(format!("cannot read {text}: {e}")))
}

pub fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, AppError> {
    serde_json::from_str(text).map_err(|e| AppError::Usage(format!("malformed input: {e}")))
}
