//! Command-line front end: color, verify, cliques, gen, graph, render, bench.
//!
//! Exit codes: 0 success (or valid coloring), 1 invalid coloring from
//! `verify`, 2 any input error (message names the file and position).

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use b1epg::{
    clique_color, derive_graph, enumerate_cliques_repr, parse_coloring, parse_representation,
    random_instance, serialize_representation, sun3_instance, verify_coloring, CliqueKind,
    EpgRepresentation, GenParams, PathId,
};
use clap::{Parser, Subcommand, ValueEnum};

mod bench;
mod render;

#[derive(Parser)]
#[command(
    name = "b1epg",
    version,
    about = "Clique coloring of single-bend grid-path intersection graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PresetArg {
    Uniform,
    Clustered,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a 4-clique coloring and write it as JSON
    Color {
        /// Instance file, or "sun3" for the built-in fixture
        file: PathBuf,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring file against an instance
    Verify {
        file: PathBuf,
        coloring: PathBuf,
    },
    /// List maximal cliques, one per line, tagged edge or claw
    Cliques {
        file: PathBuf,
        /// Only report claw cliques
        #[arg(long)]
        claws: bool,
    },
    /// Generate a seeded random instance
    Gen {
        #[arg(long)]
        paths: usize,
        /// Grid as WxH (points per axis)
        #[arg(long, value_parser = parse_grid, default_value = "30x30")]
        grid: (i64, i64),
        /// Decimal or 0x-prefixed hex
        #[arg(long, value_parser = parse_seed, default_value = "1")]
        seed: u64,
        #[arg(long, value_enum, default_value_t = PresetArg::Uniform)]
        preset: PresetArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the intersection graph in DOT format
    Graph {
        file: PathBuf,
    },
    /// Render the grid and paths (optionally tinted by a coloring) as SVG
    Render {
        file: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Time the coloring pipeline over growing instance sizes
    Bench {
        /// Comma-separated path counts; k/m suffixes allowed
        #[arg(long, default_value = "1k,2k,4k,8k,16k", value_delimiter = ',')]
        sizes: Vec<String>,
        #[arg(long, value_parser = parse_seed, default_value = "7")]
        seed: u64,
    },
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let t = s.trim();
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse(),
    };
    parsed.map_err(|e| format!("invalid seed \"{s}\": {e}"))
}

fn parse_grid(s: &str) -> Result<(i64, i64), String> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("invalid grid \"{s}\", expected WxH"))?;
    let parse = |v: &str| -> Result<i64, String> {
        v.trim()
            .parse()
            .map_err(|e| format!("invalid grid \"{s}\": {e}"))
    };
    Ok((parse(w)?, parse(h)?))
}

fn load_instance(file: &Path) -> Result<EpgRepresentation> {
    if file.as_os_str() == "sun3" {
        return Ok(sun3_instance());
    }
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    parse_representation(&text).with_context(|| format!("{}", file.display()))
}

fn load_coloring(file: &Path) -> Result<BTreeMap<PathId, u8>> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    parse_coloring(&text).with_context(|| format!("{}", file.display()))
}

fn emit(output: Option<&PathBuf>, content: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, content).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{content}");
            if !content.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Color { file, output } => {
            let repr = load_instance(&file)?;
            let outcome = clique_color(&repr);
            emit(output.as_ref(), &outcome.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file, coloring } => {
            let repr = load_instance(&file)?;
            let colors = load_coloring(&coloring)?;
            let report = verify_coloring(&repr, &colors)?;
            if report.valid {
                println!(
                    "valid: {} cliques checked, class 4 independent: {}",
                    report.clique_count, report.class4_independent
                );
                Ok(ExitCode::SUCCESS)
            } else {
                for (clique, color) in &report.violations {
                    println!("monocolored {clique} color {color}");
                }
                if report.violations.is_empty() {
                    println!("invalid: colors outside 1..=4");
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Cliques { file, claws } => {
            let repr = load_instance(&file)?;
            let graph = derive_graph(&repr);
            for clique in enumerate_cliques_repr(&repr, &graph) {
                if claws && !matches!(clique.kind, CliqueKind::Claw(_)) {
                    continue;
                }
                println!("{clique}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            paths,
            grid,
            seed,
            preset,
            output,
        } => {
            let params = match preset {
                PresetArg::Uniform => GenParams::uniform(paths, grid.0, grid.1, seed),
                PresetArg::Clustered => GenParams::clustered(paths, grid.0, grid.1, seed),
            };
            let repr = random_instance(&params)?;
            emit(output.as_ref(), &serialize_representation(&repr))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Graph { file } => {
            let repr = load_instance(&file)?;
            print!("{}", derive_graph(&repr).to_dot());
            Ok(ExitCode::SUCCESS)
        }
        Command::Render {
            file,
            coloring,
            output,
        } => {
            let repr = load_instance(&file)?;
            let colors = coloring.as_deref().map(load_coloring).transpose()?;
            let svg = render::render_svg(&repr, colors.as_ref());
            fs::write(&output, svg).with_context(|| format!("writing {}", output.display()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { sizes, seed } => {
            let sizes = sizes
                .iter()
                .map(|s| bench::parse_size(s))
                .collect::<Result<Vec<_>>>()?;
            bench::run(&sizes, seed)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
