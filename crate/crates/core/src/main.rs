use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use singres::app::{
    cmd_classify, cmd_germ_classify, cmd_point_classify, cmd_project3d, cmd_resultant, cmd_scan, cmd_verify_suite, parse_json,
    read_json_arg, suite_items, write_report, AppError, Expectations, GridConfig, Project3dInput, RunConfig, ScanKind,
};
use singres::{StratumLabel, SupportPair, SupportSet};
use std::path::PathBuf;
use std::process::ExitCode;

/// Singularities of univariate sparse resultants.
///
/// JSON arguments are accepted inline, as a file path, or as `-` for stdin.
/// Exit codes: 0 success, 1 suite failure, 2 usage error, 3 degenerate input.
#[derive(Parser)]
#[command(name = "singres", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Relative tolerance for floating-point decisions.
    #[arg(long, global = true, default_value_t = singres::laurent::DEFAULT_TOL)]
    tolerance: f64,
    /// Largest root-of-unity order used by scans.
    #[arg(long, global = true, default_value_t = 12)]
    n_max: u32,
    /// Samples per probe for majority-vote ranks.
    #[arg(long, global = true, default_value_t = 5)]
    trials: usize,
    /// Largest Sylvester size for symbolic determinants.
    #[arg(long, global = true, default_value_t = singres::resultant::DEFAULT_SIZE_BOUND)]
    det_bound: usize,
    /// Directory for timestamped JSON reports (and CSV grids).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

/// A support pair as `{"b1":[..],"b2":[..]}` or via `--b1`/`--b2`.
#[derive(Args)]
struct PairArgs {
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    b1: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    b2: Option<Vec<i64>>,
    /// JSON support pair.
    input: Option<String>,
}

impl PairArgs {
    fn pair(&self) -> Result<Option<SupportPair>, AppError> {
        match (&self.b1, &self.b2, &self.input) {
            (Some(a), Some(b), None) => {
                let s = |v: &[i64]| SupportSet::new(v.iter().copied()).map_err(|e| AppError::Usage(e.to_string()));
                SupportPair::new(s(a)?, s(b)?).map(Some).map_err(|e| AppError::Usage(e.to_string()))
            }
            (None, None, Some(j)) => parse_json(&read_json_arg(j)?).map(Some),
            (None, None, None) => Ok(None),
            _ => Err(AppError::Usage("give either --b1 and --b2, or one JSON support pair".into())),
        }
    }

    fn required(&self) -> Result<SupportPair, AppError> {
        self.pair()?.ok_or_else(|| AppError::Usage("a support pair is required".into()))
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the support conditions and the node verdict for a pair.
    Classify(PairArgs),
    /// Exact resultant polynomial in the coefficient variables f<b>, g<b>.
    Resultant(PairArgs),
    /// Local type of the resultant at a coefficient pair `{"f":..,"g":..}`.
    PointClassify { input: String },
    /// Classify a plane germ, or a 2-plane slice of a resultant.
    GermClassify { input: String },
    /// Run the built-in reproduction suite.
    #[command(name = "verify-paper")]
    Verify {
        /// Run only these items (repeatable).
        #[arg(long)]
        only: Vec<String>,
        /// JSON overriding expected values.
        #[arg(long)]
        expected: Option<String>,
        /// List the item names and exit.
        #[arg(long)]
        list: bool,
    },
    /// Classify the projections of a pair of 3D supports and scan |R| on a torus patch.
    Project3d {
        /// `{"a1":[[i,j,k],..],"a2":[..], "coeffs1":?, "coeffs2":?, "grid":?}`.
        input: String,
        /// CSV destination for the grid values.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        no_scan: bool,
        #[arg(long)]
        threshold: Option<f64>,
    },
    /// Exhaustive scans: minors | strata | codim.
    Scan {
        kind: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        b1: Option<Vec<i64>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        b2: Option<Vec<i64>>,
        /// Stratum label such as `N(1,1,1)` or `N_1^0(1)`.
        #[arg(long)]
        label: Option<String>,
        /// Minor scan: supports inside [0, spread].
        #[arg(long, default_value_t = 8)]
        spread: i64,
        /// Minor scan: support sizes.
        #[arg(long, value_delimiter = ',', default_value = "3,4")]
        sizes: Vec<usize>,
    },
}

/// Writes one line to stdout; a closed reader (e.g. `| head`) is not an error.
fn print_line(text: &str) -> Result<(), AppError> {
    use std::io::Write;
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(AppError::Io(e)),
        _ => Ok(()),
    }
}

fn emit<T: Serialize>(name: &str, cfg: &RunConfig, report: &T) -> Result<(), AppError> {
    let text = serde_json::to_string_pretty(report).map_err(|e| AppError::Usage(e.to_string()))?;
    print_line(&text)?;
    if let Some(p) = write_report(name, cfg, report)? {
        eprintln!("report written to {}", p.display());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), AppError> {
    let g = cli.global;
    if g.trials == 0 || g.det_bound == 0 || !(g.tolerance > 0.0) {
        return Err(AppError::Usage("--trials, --det-bound and --tolerance must be positive".into()));
    }
    let cfg = RunConfig { seed: g.seed, tolerance: g.tolerance, n_max: g.n_max, trials: g.trials, det_bound: g.det_bound, out: g.out };
    match cli.cmd {
        Cmd::Classify(a) => emit("classify", &cfg, &cmd_classify(&a.required()?)),
        Cmd::Resultant(a) => emit("resultant", &cfg, &cmd_resultant(&a.required()?, &cfg)?),
        Cmd::PointClassify { input } => {
            emit("point-classify", &cfg, &cmd_point_classify(&parse_json(&read_json_arg(&input)?)?, &cfg)?)
        }
        Cmd::GermClassify { input } => emit("germ-classify", &cfg, &cmd_germ_classify(&parse_json(&read_json_arg(&input)?)?, &cfg)?),
        Cmd::Verify { only, expected, list } => {
            if list {
                for i in suite_items() {
                    print_line(i)?;
                }
                return Ok(());
            }
            let exp: Expectations = match expected {
                Some(e) => parse_json(&read_json_arg(&e)?)?,
                None => Expectations::default(),
            };
            let report = cmd_verify_suite(&exp, &only, &cfg)?;
            for i in &report.items {
                eprintln!("{} {:<18} {:>8} ms  {}", if i.passed { "PASS" } else { "FAIL" }, i.item, i.wall_time_ms, i.message);
            }
            emit("verify-paper", &cfg, &report)?;
            if report.all_passed {
                Ok(())
            } else {
                Err(AppError::SuiteFailed(format!("failed items: {}", report.failed.join(", "))))
            }
        }
        Cmd::Project3d { input, csv, no_scan, threshold } => {
            let mut inp: Project3dInput = parse_json(&read_json_arg(&input)?)?;
            inp.no_scan |= no_scan;
            if let Some(t) = threshold {
                inp.grid.get_or_insert_with(GridConfig::default).threshold = t;
            }
            let out = cmd_project3d(&inp, cfg.seed)?;
            if let Some(scan) = &out.scan {
                let csv = csv.or_else(|| cfg.out.as_ref().map(|d| d.join(format!("project3d-seed{}.csv", cfg.seed))));
                if let Some(path) = csv {
                    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                        std::fs::create_dir_all(dir)?;
                    }
                    std::fs::write(&path, scan.to_csv())?;
                    eprintln!("grid written to {}", path.display());
                }
            }
            emit("project3d", &cfg, &out)
        }
        Cmd::Scan { kind, b1, b2, label, spread, sizes } => {
            let kind: ScanKind = kind.parse()?;
            let pair = PairArgs { b1, b2, input: None }.pair()?;
            let label = label.map(|l| StratumLabel::parse(&l)).transpose().map_err(|e| AppError::Usage(e.to_string()))?;
            emit("scan", &cfg, &cmd_scan(kind, spread, &sizes, pair.as_ref(), label.as_ref(), &cfg)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
