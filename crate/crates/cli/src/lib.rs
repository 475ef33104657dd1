//! `framekit` command line: load frames, prototypes and sampling configs,
//! run one computation, print a JSON report (or CSV rows).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

mod frame_cmd;
mod gabor_cmd;
mod input;
mod sample_cmd;

pub use input::{FilterEntry, FilterFile, SamplingConfig};

#[derive(Debug, Parser)]
#[command(name = "framekit", version, about = "Finite frames, Gabor systems and oversampled reconstruction")]
struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Report format. Matrix-valued results and sweeps also support csv.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficients of a signal and its reconstruction through a dual frame.
    FrameAnalyze {
        #[command(flatten)]
        frame: FrameInput,
        /// Signal vector file.
        #[arg(long)]
        signal: PathBuf,
        /// Dual frame file; the canonical dual when omitted.
        #[arg(long)]
        dual: Option<PathBuf>,
    },
    /// Optimal frame bounds.
    FrameBounds {
        #[command(flatten)]
        frame: FrameInput,
    },
    /// A dual frame from the left-inverse family.
    FrameDual {
        #[command(flatten)]
        frame: FrameInput,
        /// Free N×K parameter matrix; zero (canonical dual) when omitted.
        #[arg(long)]
        param: Option<PathBuf>,
    },
    /// The canonical tight frame S^{-1/2} g_k.
    FrameTighten {
        #[command(flatten)]
        frame: FrameInput,
    },
    /// Unitary dilation of a tight frame with bound 1.
    FrameNaimark {
        #[command(flatten)]
        frame: FrameInput,
    },
    /// Diagonal <g~_m, g_m> and exact/inexact classification.
    FrameExactness {
        #[command(flatten)]
        frame: FrameInput,
    },
    /// All vectors of a Gabor system.
    GaborBuild {
        #[command(flatten)]
        gabor: GaborArgs,
    },
    /// Dual prototype S^{-1} g and a structure check of the canonical dual.
    GaborDual {
        #[command(flatten)]
        gabor: GaborArgs,
    },
    /// Bounds, tightness, commutation and dual structure of a Gabor system.
    GaborCheck {
        #[command(flatten)]
        gabor: GaborArgs,
    },
    /// Sample a bandlimited signal and reconstruct it.
    SampleReconstruct {
        #[command(flatten)]
        sampling: SamplingArgs,
        /// Signal vector file of length N; a seeded random signal when omitted.
        #[arg(long)]
        signal: Option<PathBuf>,
    },
    /// Analytic and Monte Carlo noise MSE.
    SampleMse {
        #[command(flatten)]
        sampling: SamplingArgs,
    },
    /// MSE against oversampling over several periods.
    SampleSweep {
        #[command(flatten)]
        sampling: SamplingArgs,
        /// Comma-separated sampling periods.
        #[arg(long, value_delimiter = ',', required = true)]
        periods: Vec<usize>,
    },
}

#[derive(Debug, Args)]
struct FrameInput {
    /// Frame file: one frame vector per row (JSON matrix or .csv).
    #[arg(long)]
    input: PathBuf,
}

#[derive(Debug, Args)]
struct GaborArgs {
    /// delta, gaussian, boxcar, or a vector file.
    #[arg(long)]
    proto: String,
    /// Signal length M; required for named prototypes.
    #[arg(long)]
    n: Option<usize>,
    /// Time shift T.
    #[arg(long)]
    shift: usize,
    /// Number of modulations K.
    #[arg(long)]
    mods: usize,
}

#[derive(Debug, Args)]
struct SamplingArgs {
    /// Config JSON; flags given on the command line take precedence.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    band: Option<usize>,
    #[arg(long)]
    period: Option<usize>,
    #[arg(long)]
    sigma2: Option<f64>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// ideal, linear, raised-cosine, or a don't-care file.
    #[arg(long)]
    filter: Option<String>,
    /// Real Gaussian sample noise instead of complex.
    #[arg(long)]
    real_noise: bool,
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io { path: PathBuf, detail: String },
    Domain(framekit::Error),
}

impl From<framekit::Error> for CliError {
    fn from(e: framekit::Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io_error",
            CliError::Domain(e) => e.code(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    fn detail(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Io { path, detail } => format!("{}: {detail}", path.display()),
            CliError::Domain(e) => e.to_string(),
        }
    }
}

/// Rendered command output.
pub(crate) enum Report {
    Json(serde_json::Value),
    Csv(String),
}

pub(crate) type CmdResult = Result<Report, CliError>;

/// Runs one command. The report (or an error object) goes to `out`,
/// usage messages to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = dispatch(&cli).and_then(|report| emit(&cli, report, out));
    match result {
        Ok(()) => 0,
        Err(e) => {
            if let CliError::Usage(m) = &e {
                let _ = writeln!(err, "error: {m}");
            }
            let body = json!({"error": e.code(), "detail": e.detail()});
            let _ = out.write_all(framekit::io::to_report_string(&body).as_bytes());
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    let csv = match cli.format {
        Some(Format::Csv) => true,
        Some(Format::Json) => false,
        None => matches!(cli.command, Command::SampleSweep { .. }),
    };
    match &cli.command {
        Command::FrameAnalyze { frame, signal, dual } => {
            json_only(csv, "frame-analyze")?;
            frame_cmd::analyze(&frame.input, signal, dual.as_deref())
        }
        Command::FrameBounds { frame } => {
            json_only(csv, "frame-bounds")?;
            frame_cmd::bounds(&frame.input)
        }
        Command::FrameDual { frame, param } => frame_cmd::dual(&frame.input, param.as_deref(), csv),
        Command::FrameTighten { frame } => frame_cmd::tighten(&frame.input, csv),
        Command::FrameNaimark { frame } => {
            json_only(csv, "frame-naimark")?;
            frame_cmd::naimark(&frame.input)
        }
        Command::FrameExactness { frame } => {
            json_only(csv, "frame-exactness")?;
            frame_cmd::exactness(&frame.input)
        }
        Command::GaborBuild { gabor } => gabor_cmd::build(gabor, csv),
        Command::GaborDual { gabor } => {
            json_only(csv, "gabor-dual")?;
            gabor_cmd::dual(gabor)
        }
        Command::GaborCheck { gabor } => {
            json_only(csv, "gabor-check")?;
            gabor_cmd::check(gabor)
        }
        Command::SampleReconstruct { sampling, signal } => {
            json_only(csv, "sample-reconstruct")?;
            sample_cmd::reconstruct(sampling, signal.as_deref())
        }
        Command::SampleMse { sampling } => {
            json_only(csv, "sample-mse")?;
            sample_cmd::mse(sampling)
        }
        Command::SampleSweep { sampling, periods } => sample_cmd::sweep(sampling, periods, csv),
    }
}

fn json_only(csv: bool, verb: &str) -> Result<(), CliError> {
    if csv {
        return Err(CliError::Usage(format!("{verb} has no csv output")));
    }
    Ok(())
}

fn emit(cli: &Cli, report: Report, out: &mut dyn Write) -> Result<(), CliError> {
    let text = match report {
        Report::Json(v) => framekit::io::to_report_string(&v),
        Report::Csv(s) => s,
    };
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io {
            path: path.clone(),
            detail: e.to_string(),
        }),
        None => out.write_all(text.as_bytes()).map_err(|e| CliError::Io {
            path: "<stdout>".into(),
            detail: e.to_string(),
        }),
    }
}
