//! Command-line front end.
//!
//! Data goes to the output stream, diagnostics to the error stream.
//! Exit codes: 0 success, 1 computation or consistency failure, 2
//! usage, file, or expression errors.

mod zoo;

pub use zoo::{builtin_zoo, load_zoo_dir, verify_consistency, ModuleSpec, VerifyReport, ZooEntry};

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::estimate_gkdim;
use crate::calculus::{eval_construction, eval_to_json, parse_construction};
use crate::growth::{
    growth_sequence_with_cap, module_growth_sequence, tdeg_pool_estimate_with_opts, Frame,
    MonomialModule, DEFAULT_ROW_CAP,
};
use crate::presentation::{NCPoly, Presentation, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Settings shared by the classifying subcommands. The constructor
/// rejects windows the classifier cannot use and ranges too short to
/// test every difference order up to `max_degree`.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n_max: usize,
    pub window: usize,
    pub max_degree: usize,
    pub row_cap: usize,
    pub format: OutputFormat,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(
        n_max: usize,
        window: usize,
        max_degree: usize,
        row_cap: usize,
        format: OutputFormat,
        seed: u64,
    ) -> Result<RunConfig, String> {
        if window < 3 {
            return Err(format!("window must be at least 3, got {window}"));
        }
        if n_max < window + max_degree + 1 {
            return Err(format!(
                "n must be at least window + max-degree + 1 = {}, got {n_max}",
                window + max_degree + 1
            ));
        }
        if row_cap == 0 {
            return Err("row cap must be positive".into());
        }
        Ok(RunConfig {
            n_max,
            window,
            max_degree,
            row_cap,
            format,
            seed,
        })
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n_max: 10,
            window: 3,
            max_degree: 6,
            row_cap: DEFAULT_ROW_CAP,
            format: OutputFormat::Json,
            seed: 42,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "gklab",
    version,
    about = "Growth sequences and dimension estimates for finitely presented algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the growth sequence d_n = rank V^n for a frame V
    Growth {
        file: PathBuf,
        /// Comma-separated frame elements, e.g. "1,x,y"
        #[arg(long)]
        frame: String,
        #[arg(short = 'n', long = "n-max", value_name = "N")]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Classify a growth sequence into a dimension estimate
    Estimate {
        file: PathBuf,
        #[arg(long)]
        frame: String,
        #[arg(short = 'n', long = "n-max", value_name = "N")]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        window: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Enumerate and resolve rewriting ambiguities
    Confluence {
        file: PathBuf,
        /// Overlap-word degree cap; defaults to the exhaustive cap
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Check the ordered-pair straightening shape of the rules
    ValidatePbw { file: PathBuf },
    /// Growth of a cyclic monomial module over a quasi-commutative presentation
    ModuleGrowth {
        file: PathBuf,
        /// Comma-separated annihilating monomials (may be empty)
        #[arg(long, default_value = "")]
        annihilators: String,
        /// Comma-separated generating monomials
        #[arg(long)]
        gens: String,
        #[arg(long)]
        frame: String,
        #[arg(short = 'n', long = "n-max", value_name = "N")]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Pool-restricted transcendence-degree heuristic
    Tdeg {
        file: PathBuf,
        /// Semicolon-separated frames, each a comma-separated element list
        #[arg(long)]
        frames: String,
        /// Comma-separated candidate elements
        #[arg(long)]
        candidates: String,
        #[arg(short = 'n', long = "n-max", value_name = "N")]
        n_max: usize,
    },
    /// Evaluate a dimension bound for a construction expression
    Calculus { expr: String },
    /// Cross-check growth estimates against the symbolic calculus
    Verify {
        /// Directory of .zoo entries; defaults to the builtin zoo
        #[arg(long)]
        zoo: Option<PathBuf>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Computation(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Computation(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Computation(m) => m,
        }
    }
}

impl From<crate::growth::GrowthError> for Failure {
    fn from(e: crate::growth::GrowthError) -> Failure {
        Failure::Computation(e.to_string())
    }
}

impl From<crate::analysis::AnalysisError> for Failure {
    fn from(e: crate::analysis::AnalysisError) -> Failure {
        Failure::Computation(e.to_string())
    }
}

struct Output {
    stdout: String,
    code: i32,
}

impl Output {
    fn ok(stdout: String) -> Result<Output, Failure> {
        Ok(Output { stdout, code: 0 })
    }
}

/// Run one subcommand. `argv` includes the program name in position 0,
/// as handed over by the OS.
pub fn run_command<I, S, W, E>(argv: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match execute(cli.cmd) {
        Ok(output) => {
            let _ = write!(out, "{}", output.stdout);
            output.code
        }
        Err(f) => {
            let _ = writeln!(err, "gklab: {}", f.message());
            f.code()
        }
    }
}

fn execute(cmd: Cmd) -> Result<Output, Failure> {
    let row_cap = row_cap_from_env()?;
    match cmd {
        Cmd::Growth {
            file,
            frame,
            n_max,
            format,
        } => {
            let pres = read_presentation(&file)?;
            let frame = parse_frame(&pres, &frame)?;
            let seq = growth_sequence_with_cap(&pres, &frame, n_max, row_cap)?;
            Output::ok(render_sequence(&seq, format))
        }
        Cmd::Estimate {
            file,
            frame,
            n_max,
            window,
            max_degree,
        } => {
            let config = RunConfig::new(
                n_max,
                window,
                max_degree,
                row_cap,
                OutputFormat::Json,
                42,
            )
            .map_err(Failure::Usage)?;
            let pres = read_presentation(&file)?;
            let frame = parse_frame(&pres, &frame)?;
            let seq = growth_sequence_with_cap(&pres, &frame, config.n_max, config.row_cap)?;
            let est = estimate_gkdim(&seq, config.window, config.max_degree)?;
            Output::ok(format!("{}\n", est.to_json()))
        }
        Cmd::Confluence { file, max_degree } => {
            let pres = read_presentation(&file)?;
            let exhaustive = 2 * pres.max_rule_lhs_len().max(1) - 1;
            let cap = max_degree.unwrap_or(exhaustive);
            let ambiguities = pres.confluence_check(cap);
            let unresolved = ambiguities.iter().filter(|a| !a.resolved).count();
            let js = serde_json::json!({
                "max_overlap_degree": cap,
                "certified": pres.confluence_certified(),
                "unresolved": unresolved,
                "ambiguities": ambiguities.iter().map(|a| serde_json::json!({
                    "word": pres.render_word(&a.overlap_word),
                    "rule_a": a.rule_a,
                    "rule_b": a.rule_b,
                    "resolved": a.resolved,
                    "reduction_a": pres.render_poly(&a.reduction_a),
                    "reduction_b": pres.render_poly(&a.reduction_b),
                })).collect::<Vec<_>>(),
            });
            Output::ok(format!("{js}\n"))
        }
        Cmd::ValidatePbw { file } => {
            let pres = read_presentation(&file)?;
            let report = pres.validate_pbw_shape();
            let js = serde_json::json!({
                "pbw_shape": report.pbw_shape,
                "quasi_commutative": report.quasi_commutative,
                "bijective_constants": report.bijective_constants,
                "notes": report.notes,
            });
            Output::ok(format!("{js}\n"))
        }
        Cmd::ModuleGrowth {
            file,
            annihilators,
            gens,
            frame,
            n_max,
            format,
        } => {
            let pres = read_presentation(&file)?;
            let ann = parse_word_list(&pres, &annihilators, "annihilator")?;
            let gens = parse_word_list(&pres, &gens, "generator")?;
            let module = MonomialModule::new(&pres, ann, gens)?;
            let frame = parse_frame(&pres, &frame)?;
            let seq = module_growth_sequence(&pres, &module, &frame, n_max)?;
            Output::ok(render_sequence(&seq, format))
        }
        Cmd::Tdeg {
            file,
            frames,
            candidates,
            n_max,
        } => {
            let config =
                RunConfig::new(n_max, 3, 6, row_cap, OutputFormat::Json, 42).map_err(Failure::Usage)?;
            let pres = read_presentation(&file)?;
            let mut pool = Vec::new();
            for part in frames.split(';') {
                pool.push(parse_frame(&pres, part)?);
            }
            let cands = parse_poly_list(&pres, &candidates, "candidate")?;
            let report = tdeg_pool_estimate_with_opts(
                &pres,
                &pool,
                &cands,
                config.n_max,
                config.window,
                config.max_degree,
                config.row_cap,
            )?;
            Output::ok(format!("{}\n", report.to_json()))
        }
        Cmd::Calculus { expr } => {
            let parsed = parse_construction(&expr)
                .map_err(|e| Failure::Usage(format!("expression: {e}")))?;
            let (bound, trace) =
                eval_construction(&parsed).map_err(|e| Failure::Computation(e.to_string()))?;
            Output::ok(format!("{}\n", eval_to_json(&bound, &trace)))
        }
        Cmd::Verify { zoo, seed } => {
            let entries = match &zoo {
                Some(dir) => load_zoo_dir(dir).map_err(Failure::Usage)?,
                None => builtin_zoo(),
            };
            let config = RunConfig {
                row_cap,
                seed,
                ..RunConfig::default()
            };
            let mut stdout = String::new();
            let mut failed = 0usize;
            for entry in &entries {
                let report = verify_consistency(entry, &config);
                let tag = if report.passed { "PASS" } else { "FAIL" };
                if !report.passed {
                    failed += 1;
                }
                stdout.push_str(&format!("{tag} {}: {}\n", report.name, report.detail));
            }
            stdout.push_str(&format!(
                "{}/{} entries consistent\n",
                entries.len() - failed,
                entries.len()
            ));
            Ok(Output {
                stdout,
                code: if failed == 0 { 0 } else { 1 },
            })
        }
    }
}

fn row_cap_from_env() -> Result<usize, Failure> {
    match std::env::var("GKLAB_ROW_CAP") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(cap) if cap > 0 => Ok(cap),
            _ => Err(Failure::Usage(format!(
                "GKLAB_ROW_CAP must be a positive integer, got {v:?}"
            ))),
        },
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ROW_CAP),
        Err(e) => Err(Failure::Usage(format!("GKLAB_ROW_CAP: {e}"))),
    }
}

fn read_presentation(path: &Path) -> Result<Presentation, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Presentation::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn parse_poly_list(pres: &Presentation, text: &str, what: &str) -> Result<Vec<NCPoly>, Failure> {
    let mut polys = Vec::new();
    for (i, part) in text.split(',').enumerate() {
        if part.trim().is_empty() {
            return Err(Failure::Usage(format!("{what} {} is empty", i + 1)));
        }
        let p = pres
            .parse_poly(part)
            .map_err(|e| Failure::Usage(format!("{what} {}: {e}", i + 1)))?;
        polys.push(p);
    }
    Ok(polys)
}

fn parse_frame(pres: &Presentation, text: &str) -> Result<Frame, Failure> {
    let polys = parse_poly_list(pres, text, "frame element")?;
    Frame::new(pres, polys).map_err(Failure::from)
}

fn parse_word_list(pres: &Presentation, text: &str, what: &str) -> Result<Vec<Word>, Failure> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut words = Vec::new();
    for (i, part) in text.split(',').enumerate() {
        let w = pres
            .parse_word(part)
            .map_err(|e| Failure::Usage(format!("{what} {}: {e}", i + 1)))?;
        words.push(w);
    }
    Ok(words)
}

fn render_sequence(seq: &crate::growth::GrowthSequence, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => seq.to_csv(),
        OutputFormat::Json => format!("{}\n", seq.to_json()),
    }
}
