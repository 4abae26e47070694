//! `circlemap` command-line front end.
//!
//! Exit status: 0 on success, 1 on a failed verification or runtime error,
//! 2 when the input cannot be parsed, 3 when `--strict` is set and some
//! verdict is Inconclusive.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use circlemap::blaschke::HomotopyPath;
use circlemap::fourier::{spectrum, SampledCircleMap};
use circlemap::geometry::{embedding_report, find_star_center, random_starlike_embedding, starlike_analysis};
use circlemap::io::{read_curve, report_to_toml, write_spectrum, MapDescription};
use circlemap::poisson::{criterion_check, criterion_check_adaptive, CriterionReport, Verdict};
use circlemap::{verify, CircleMap, Complex64};

#[derive(Parser, Debug)]
#[command(name = "circlemap", version, about = "Rational circle homeomorphisms and circle embeddings")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Map description (TOML or JSON) or curve table (`.csv`).
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Grid size; for criterion checks omitting it selects adaptive refinement.
    #[arg(long, global = true)]
    grid: Option<usize>,

    #[arg(long, global = true, default_value_t = 16)]
    window: usize,

    #[arg(long, global = true)]
    steps: Option<usize>,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::ReportText)]
    format: Format,

    /// Treat Inconclusive verdicts as failures (exit status 3).
    #[arg(long, global = true)]
    strict: bool,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a Blaschke quotient is a circle homeomorphism.
    CheckHomeo,
    /// Fourier spectrum of a map or curve in the window `[-M, M]`.
    Fourier,
    /// Verdicts along the zero-scaling homotopy `t = 0, 1/K, ..., 1`.
    Homotopy,
    /// Embedding and starlikeness report for a curve, or a generated one.
    Starlike {
        #[arg(long, default_value_t = 3)]
        radial_degree: usize,
        #[arg(long, default_value_t = 2)]
        arg_degree: usize,
    },
    /// Verdict grid for `B(ζ)/ζ` with real zeros `a, b`.
    SweepDegree2,
    /// Run the reproduction suite.
    VerifyPaper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    ReportText,
    Delimited,
}

/// Command failure with its exit status.
#[derive(Debug)]
enum Failure {
    Parse(anyhow::Error),
    Failed(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Failed(_) => 1,
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Failed(e)
    }
}

impl From<circlemap::Error> for Failure {
    fn from(e: circlemap::Error) -> Self {
        Failure::Failed(e.into())
    }
}

/// What a command produced, besides its text.
#[derive(Default)]
struct Output {
    text: String,
    inconclusive: bool,
    failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out.text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            if out.failed {
                ExitCode::from(1)
            } else if out.inconclusive && cli.strict {
                eprintln!("error: inconclusive verdict under --strict");
                ExitCode::from(3)
            } else {
                if out.inconclusive {
                    eprintln!("warning: inconclusive verdict");
                }
                ExitCode::SUCCESS
            }
        }
        Err(failure) => {
            match &failure {
                Failure::Parse(e) | Failure::Failed(e) => eprintln!("error: {e:#}"),
            }
            ExitCode::from(failure.code())
        }
    }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::CheckHomeo => check_homeo(cli),
        Command::Fourier => fourier(cli),
        Command::Homotopy => homotopy(cli),
        Command::Starlike { radial_degree, arg_degree } => starlike(cli, *radial_degree, *arg_degree),
        Command::SweepDegree2 => sweep_degree2(cli),
        Command::VerifyPaper => Ok(verify_paper()),
    }
}

fn require_input(cli: &Cli) -> Result<&Path, Failure> {
    cli.input
        .as_deref()
        .ok_or_else(|| Failure::Parse(anyhow::anyhow!("--input is required for this command")))
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::Parse)
}

fn load_map(path: &Path) -> Result<CircleMap, Failure> {
    let text = read_text(path)?;
    MapDescription::parse(&text)
        .and_then(|d| d.to_map())
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(Failure::Parse)
}

fn is_curve(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"))
}

/// Curve samples from a table, or a map description sampled on `n` points.
fn load_samples(path: &Path, n: usize) -> Result<SampledCircleMap<f64>, Failure> {
    if is_curve(path) {
        let text = read_text(path)?;
        read_curve(text.as_bytes())
            .with_context(|| format!("parsing {}", path.display()))
            .map_err(Failure::Parse)
    } else {
        let f = load_map(path)?;
        Ok(SampledCircleMap::sample_map(|z| f.eval(z), n)?)
    }
}

fn positive(name: &str, value: usize) -> Result<usize, Failure> {
    if value == 0 {
        Err(Failure::Parse(anyhow::anyhow!("--{name} must be positive")))
    } else {
        Ok(value)
    }
}

fn check(f: &CircleMap, grid: Option<usize>) -> Result<CriterionReport<f64>, Failure> {
    Ok(match grid {
        Some(n) => criterion_check(f, n)?,
        None => criterion_check_adaptive(f),
    })
}

const REPORT_HEADER: &str = "verdict,margin_lower_bound,witness_angle,grid_size,lipschitz_bound,grid_minimum";

fn report_row(r: &CriterionReport<f64>) -> String {
    format!(
        "{},{},{},{},{},{}",
        r.verdict, r.margin_lower_bound, r.witness_angle, r.grid_size, r.lipschitz_bound, r.grid_minimum
    )
}

fn check_homeo(cli: &Cli) -> Result<Output, Failure> {
    let f = load_map(require_input(cli)?)?;
    let report = check(&f, cli.grid)?;
    let text = match cli.format {
        Format::ReportText => report_to_toml(&report),
        Format::Delimited => format!("{REPORT_HEADER}\n{}\n", report_row(&report)),
    };
    Ok(Output {
        text,
        inconclusive: report.verdict == Verdict::Inconclusive,
        failed: false,
    })
}

fn fourier(cli: &Cli) -> Result<Output, Failure> {
    let samples = load_samples(require_input(cli)?, cli.grid.unwrap_or(1024))?;
    let sp = spectrum(&samples, cli.window)?;
    let mut buf = Vec::new();
    write_spectrum(&sp, &mut buf)?;
    Ok(Output {
        text: String::from_utf8(buf).expect("csv output is utf-8"),
        ..Output::default()
    })
}

fn homotopy(cli: &Cli) -> Result<Output, Failure> {
    let f = load_map(require_input(cli)?)?;
    let steps = positive("steps", cli.steps.unwrap_or(10))?;
    let path = HomotopyPath::uniform(f, steps + 1)?;
    let reports = path
        .samples()
        .par_iter()
        .map(|g| check(g, cli.grid))
        .collect::<Result<Vec<_>, _>>()?;

    let mut text = String::new();
    match cli.format {
        Format::Delimited => {
            text.push_str("t,");
            text.push_str(REPORT_HEADER);
            text.push('\n');
            for (t, r) in path.times().iter().zip(&reports) {
                writeln!(text, "{t},{}", report_row(r)).unwrap();
            }
        }
        Format::ReportText => {
            for (t, r) in path.times().iter().zip(&reports) {
                writeln!(text, "# t = {t}\n{}", report_to_toml(r)).unwrap();
            }
        }
    }
    Ok(Output {
        text,
        inconclusive: reports.iter().any(|r| r.verdict == Verdict::Inconclusive),
        failed: false,
    })
}

fn starlike(cli: &Cli, radial_degree: usize, arg_degree: usize) -> Result<Output, Failure> {
    let (samples, center) = match &cli.input {
        Some(path) => {
            let samples = load_samples(path, cli.grid.unwrap_or(1024))?;
            let center = find_star_center(&samples);
            (samples, center)
        }
        None => {
            let (samples, profile) = random_starlike_embedding::<f64>(cli.seed, radial_degree, arg_degree);
            (samples, Some(profile.center))
        }
    };
    let probe = center.unwrap_or_else(|| {
        samples.values().iter().sum::<Complex64>() / samples.len() as f64
    });
    let embedding = embedding_report(&samples, probe);
    let analysis = starlike_analysis(&samples, probe)?;
    let oriented = if embedding.sense_preserving { samples.clone() } else { samples.reversed() };
    let sp = spectrum(&oriented, 1)?;
    let (plus, minus) = (sp.get(1).expect("in window"), sp.get(-1).expect("in window"));

    let fields: Vec<(&str, String)> = vec![
        ("injective", embedding.injective.to_string()),
        ("sense_preserving", embedding.sense_preserving.to_string()),
        ("winding_number_about_center", embedding.winding_number_about_center.to_string()),
        ("min_pairwise_gap", embedding.min_pairwise_gap.to_string()),
        ("starlike", (center.is_some() && analysis.starlike).to_string()),
        ("center_re", probe.re.to_string()),
        ("center_im", probe.im.to_string()),
        ("coefficient_plus_one_re", plus.re.to_string()),
        ("coefficient_plus_one_im", plus.im.to_string()),
        ("coefficient_minus_one_re", minus.re.to_string()),
        ("coefficient_minus_one_im", minus.im.to_string()),
    ];
    let text = match cli.format {
        Format::ReportText => fields.iter().map(|(k, v)| format!("{k} = {v}\n")).collect(),
        Format::Delimited => {
            let keys: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            let values: Vec<&str> = fields.iter().map(|(_, v)| v.as_str()).collect();
            format!("{}\n{}\n", keys.join(","), values.join(","))
        }
    };
    Ok(Output {
        text,
        ..Output::default()
    })
}

fn sweep_degree2(cli: &Cli) -> Result<Output, Failure> {
    let resolution = positive("steps", cli.steps.unwrap_or(verify::REGION_RESOLUTION))?;
    let grid = cli.grid.unwrap_or(verify::REGION_GRID);
    if grid < circlemap::poisson::MIN_GRID {
        return Err(circlemap::Error::BadResolution(grid).into());
    }
    let cells = verify::degree2_sweep(&verify::region_axis(resolution), grid);
    let mut text = String::from("a,b,closed_form,verdict,margin_lower_bound,boundary_distance\n");
    for c in &cells {
        writeln!(text, "{},{},{},{},{},{}", c.a, c.b, c.closed_form, c.verdict, c.margin, c.boundary_distance).unwrap();
    }
    let disagreements = cells
        .iter()
        .filter(|c| c.verdict != Verdict::Inconclusive && (c.verdict == Verdict::Homeo) != c.closed_form)
        .count();
    if disagreements > 0 {
        eprintln!("error: {disagreements} cells disagree with the closed form");
    }
    Ok(Output {
        text,
        inconclusive: cells.iter().any(|c| c.verdict == Verdict::Inconclusive),
        failed: disagreements > 0,
    })
}

fn verify_paper() -> Output {
    let outcomes = verify::run_all();
    let mut text = String::new();
    for o in &outcomes {
        writeln!(text, "{o}").unwrap();
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    writeln!(text, "{passed} of {} criteria passed", outcomes.len()).unwrap();
    Output {
        text,
        inconclusive: false,
        failed: passed != outcomes.len(),
    }
}
