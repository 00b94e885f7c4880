use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Parser, Subcommand, ValueEnum};
use lingdist::distribution::rank;
use lingdist::magdm::{solve, Violation};
use lingdist::{HierarchyContext, LinguisticScale};
use lingdist_cli::grammar::{format_dense, format_sparse, parse_distribution};
use lingdist_cli::problem_file::{self, InputError};
use lingdist_cli::report;

#[derive(Parser)]
#[command(name = "lingdist", version, about = "Multi-granular linguistic distribution assessments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full group decision pipeline on a problem file.
    Solve {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert a distribution between two granularities.
    Transform {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Inline distribution, e.g. `0.3@1,0.5@2,0.2@3`.
        #[arg(long, required_unless_present = "dist_file", conflicts_with = "dist_file")]
        dist: Option<String>,
        /// File holding an inline distribution.
        #[arg(long)]
        dist_file: Option<PathBuf>,
    },
    /// Rank distributions on one scale by expectation, then inaccuracy.
    Rank {
        #[arg(long)]
        scale: usize,
        /// One per assessment; named m1, m2, ... in order.
        #[arg(long = "dist", required = true)]
        dists: Vec<String>,
    },
    /// Check a problem file and list every violation.
    Validate { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

enum Failure {
    Input(anyhow::Error),
    Invalid(Vec<Violation>),
    Solve(anyhow::Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Invalid(violations) => Failure::Invalid(violations),
            other => Failure::Input(other.into()),
        }
    }
}

fn input<E: Into<anyhow::Error>>(e: E) -> Failure {
    Failure::Input(e.into())
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Input(anyhow!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_solve(path: &Path, format: Format, out: Option<&Path>) -> Result<(), Failure> {
    let problem = problem_file::load(path)?;
    let outcome = solve(&problem).map_err(|e| Failure::Solve(e.into()))?;
    let text = match format {
        Format::Table => report::render_table(&outcome),
        Format::Json => report::render_json(&outcome),
    };
    emit(&text, out)
}

fn cmd_transform(from: usize, to: usize, spec: &str) -> Result<(), Failure> {
    let source = LinguisticScale::new(from).map_err(input)?;
    let target = LinguisticScale::new(to).map_err(input)?;
    let m = parse_distribution(spec, &source).map_err(input)?;
    let ctx = HierarchyContext::new([source.clone(), target.clone()]).map_err(input)?;
    let result = ctx.transform(&m, &target).map_err(input)?;
    println!("from S^{from}: {m}");
    println!("to   S^{to}: {result}");
    println!("sparse: {}", format_sparse(&result));
    println!("vector: {}", format_dense(&result));
    Ok(())
}

fn cmd_rank(g: usize, specs: &[String]) -> Result<(), Failure> {
    let scale = LinguisticScale::new(g).map_err(input)?;
    let ms = specs
        .iter()
        .enumerate()
        .map(|(n, spec)| {
            parse_distribution(spec, &scale).map_err(|e| anyhow!("m{}: {e}", n + 1))
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(Failure::Input)?;
    let ranking = rank(&ms).map_err(input)?;
    let names: Vec<String> = (1..=ms.len()).map(|n| format!("m{n}")).collect();
    let w = names.last().map_or(0, String::len);
    for (name, m) in names.iter().zip(&ms) {
        println!(
            "{name:<w$}  E = {}  T = {:.4}  {m}",
            m.expectation(),
            m.inaccuracy()
        );
    }
    println!("ranking: {}", ranking.describe(&names));
    Ok(())
}

fn cmd_validate(path: &Path) -> Result<(), Failure> {
    problem_file::load(path)?;
    println!("{}: valid", path.display());
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve { path, format, out } => cmd_solve(&path, format, out.as_deref()),
        Command::Transform {
            from,
            to,
            dist,
            dist_file,
        } => {
            let spec = match (dist, dist_file) {
                (Some(spec), _) => spec,
                (None, Some(path)) => std::fs::read_to_string(&path).map_err(|e| {
                    Failure::Input(anyhow!("cannot read {}: {e}", path.display()))
                })?,
                (None, None) => unreachable!("clap requires one of the two"),
            };
            cmd_transform(from, to, &spec)
        }
        Command::Rank { scale, dists } => cmd_rank(scale, &dists),
        Command::Validate { path } => cmd_validate(&path),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Invalid(violations)) => {
            eprintln!("error: {} problem(s) found", violations.len());
            for v in &violations {
                eprintln!("  {v}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Solve(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
