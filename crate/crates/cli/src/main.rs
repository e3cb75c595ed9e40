use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use skew_core::catalog;
use skew_core::check::{check_setup, check_well_defined};
use skew_core::completion::{Nilpotency, TruncatedSeries, DEFAULT_ORDER};
use skew_core::config;
use skew_core::parser::{parse_element, print};
use skew_core::selftest::{self, SelftestConfig, DEFAULT_SEED};
use skew_core::series_file::{read_series, write_series};
use skew_core::{Error, Exec, Presentation};

#[derive(Parser, Debug)]
#[command(name = "skew", version, about = "Normal forms and truncated completions of iterated Ore extensions")]
struct Cli {
    /// Catalog algebra, e.g. `qmat2`, `kn2`, `qmat(3, lambda=2, p=[3,1/2,5])`.
    #[arg(short, long, global = true, default_value = "qmat2")]
    algebra: String,

    /// Presentation config file; overrides --algebra.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Truncation order.
    #[arg(short = 'N', long, global = true, default_value_t = DEFAULT_ORDER)]
    order: u32,

    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Run batch work on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print an expression in normal form.
    Normalize {
        expr: String,
        /// Drop terms above the truncation order.
        #[arg(long)]
        truncate: bool,
    },
    /// Invert a series with unit constant term, up to the truncation order.
    Invert {
        expr: String,
        /// Also write the inverse as a series file.
        #[arg(long)]
        write: Option<PathBuf>,
    },
    /// Multiply two series files of the same order.
    MulSeries { left: PathBuf, right: PathBuf },
    /// Check the well-definedness and filtration hypotheses.
    Check {
        /// Algebra spec or config path, in place of --algebra/--config.
        #[arg(value_name = "ALGEBRA")]
        target: Option<String>,
    },
    /// Iterate a derivation on a polynomial or series.
    Probe {
        #[command(subcommand)]
        kind: Probe,
    },
    /// Run the seeded acceptance suite.
    Selftest,
    /// Print the algebra as a presentation config.
    Export,
}

#[derive(Subcommand, Debug)]
enum Probe {
    /// Count steps until delta_level annihilates a polynomial.
    PolyNilpotency {
        #[arg(value_name = "ALGEBRA")]
        target: Option<String>,
        #[arg(long)]
        level: String,
        /// Polynomial to iterate on.
        #[arg(long)]
        expr: String,
        #[arg(short = 'K', long, default_value_t = 32)]
        bound: u32,
    },
    /// Report the degrees of delta_hat^k(f) for k = 1..K.
    SeriesNilpotency {
        #[arg(value_name = "ALGEBRA")]
        target: Option<String>,
        #[arg(long)]
        level: String,
        /// `geometric` (sum of powers of the first generator), `geometric:<gen>`,
        /// or an expression.
        #[arg(long, default_value = "geometric")]
        witness: String,
        #[arg(short = 'K', long, default_value_t = 8)]
        iterations: u32,
    },
}

enum Failure {
    Input(String),
    NonUnit(String),
    Check,
    Invariant,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonUnit(_) => Failure::NonUnit(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn load(cli: &Cli, positional: Option<&str>) -> Result<Presentation, Failure> {
    let path = match positional {
        Some(s) if std::path::Path::new(s).is_file() => Some(PathBuf::from(s)),
        Some(s) => return Ok(catalog::from_spec(s)?),
        None => cli.config.clone(),
    };
    match path {
        Some(path) => {
            let src = std::fs::read_to_string(&path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            Ok(config::from_toml(&src)?)
        }
        None => Ok(catalog::from_spec(&cli.algebra)?),
    }
}

fn algebra_label(cli: &Cli) -> String {
    match &cli.config {
        Some(path) => path.display().to_string(),
        None => cli.algebra.clone(),
    }
}

fn exec(cli: &Cli) -> Exec {
    if cli.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

fn level_index(p: &Presentation, name: &str) -> Result<usize, Failure> {
    p.index_of(name)
        .ok_or_else(|| Failure::Input(format!("unknown generator {name:?}")))
}

fn emit_series(cli: &Cli, p: &Presentation, f: &TruncatedSeries) {
    match cli.format {
        Format::Text => println!("{}", print(f.body(), p)),
        Format::Kv => {
            println!("order={}", f.order());
            println!("result={}", print(f.body(), p));
        }
    }
}

fn read_series_file(p: &Presentation, path: &PathBuf) -> Result<TruncatedSeries, Failure> {
    let src = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(read_series(&src, p)?.series)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Normalize { expr, truncate } => {
            let p = load(cli, None)?;
            let mut a = parse_element(expr, &p)?;
            if *truncate {
                a = p.series(&a, cli.order)?.into_body();
            }
            match cli.format {
                Format::Text => println!("{}", print(&a, &p)),
                Format::Kv => println!("result={}", print(&a, &p)),
            }
        }
        Command::Invert { expr, write } => {
            let p = load(cli, None)?;
            let f = p.series(&parse_element(expr, &p)?, cli.order)?;
            let g = p.ts_invert(&f)?;
            emit_series(cli, &p, &g);
            if let Some(path) = write {
                std::fs::write(path, write_series(&algebra_label(cli), &g))
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
        }
        Command::MulSeries { left, right } => {
            let p = load(cli, None)?;
            let f = read_series_file(&p, left)?;
            let g = read_series_file(&p, right)?;
            emit_series(cli, &p, &p.ts_mul_with(&f, &g, exec(cli))?);
        }
        Command::Check { target } => {
            let p = load(cli, target.as_deref())?;
            let mut report = check_well_defined(&p);
            report.extend(check_setup(&p));
            match cli.format {
                Format::Text => print!("{}", report.render_text()),
                Format::Kv => print!("{}", report.render_kv()),
            }
            if !report.passed() {
                return Err(Failure::Check);
            }
        }
        Command::Probe { kind } => probe(cli, kind)?,
        Command::Selftest => {
            let cfg = SelftestConfig {
                seed: cli.seed,
                order: cli.order,
                exec: exec(cli),
            };
            let results = selftest::run_all(&cfg);
            for r in &results {
                match cli.format {
                    Format::Text => println!("{r}"),
                    Format::Kv => println!("{}", r.kv_line()),
                }
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            match cli.format {
                Format::Text => println!("{} of {} criteria passed (seed {})", results.len() - failed, results.len(), cli.seed),
                Format::Kv => println!("selftest.result={}", if failed == 0 { "pass" } else { "fail" }),
            }
            if failed > 0 {
                return Err(Failure::Invariant);
            }
        }
        Command::Export => print!("{}", config::to_toml(&load(cli, None)?)),
    }
    Ok(())
}

fn probe(cli: &Cli, kind: &Probe) -> Result<(), Failure> {
    match kind {
        Probe::PolyNilpotency { target, level, expr, bound } => {
            let p = load(cli, target.as_deref())?;
            let l = level_index(&p, level)?;
            let a = parse_element(expr, &p)?;
            let res = p.poly_nilpotency_probe(l, &a, *bound)?;
            match (cli.format, res) {
                (Format::Text, Nilpotency::Nilpotent(k)) => println!("delta[{level}]^{k} annihilates {}", print(&a, &p)),
                (Format::Text, Nilpotency::NotNilpotentUpTo(k)) => println!("delta[{level}]^{k} is still nonzero"),
                (Format::Kv, Nilpotency::Nilpotent(k)) => println!("probe.nilpotent=true\nprobe.steps={k}"),
                (Format::Kv, Nilpotency::NotNilpotentUpTo(k)) => println!("probe.nilpotent=false\nprobe.steps={k}"),
            }
        }
        Probe::SeriesNilpotency { target, level, witness, iterations } => {
            let p = load(cli, target.as_deref())?;
            let l = level_index(&p, level)?;
            let f = match witness.strip_prefix("geometric") {
                Some("") => p.geometric_series(0, cli.order)?,
                Some(rest) if rest.starts_with(':') => p.geometric_series(level_index(&p, &rest[1..])?, cli.order)?,
                _ => p.series(&parse_element(witness, &p)?, cli.order)?,
            };
            let probe = p.series_nilpotency_probe(l, &f, *iterations)?;
            match cli.format {
                Format::Text => {
                    for (k, d) in probe.iterates.iter().enumerate() {
                        println!("delta_hat[{level}]^{}: min degree {d}", k + 1);
                    }
                    println!("{} of {} iterates nonzero at order {}", probe.nonzero_count(), probe.iterates.len(), probe.order);
                }
                Format::Kv => {
                    println!("probe.order={}", probe.order);
                    for (k, d) in probe.iterates.iter().enumerate() {
                        println!("probe.iterate.{}.min_degree={d}", k + 1);
                    }
                    println!("probe.nonzero={}", probe.nonzero_count());
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::NonUnit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Check) => ExitCode::from(4),
        Err(Failure::Invariant) => ExitCode::from(5),
    }
}
