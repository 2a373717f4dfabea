use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use flipdist::bench::{self, BenchConfig, Mode};
use flipdist::dag::{build_dag, dot_export};
use flipdist::dual::{tree_to_triangulation, BinTree};
use flipdist::generate::{uniform, walk};
use flipdist::oracle::bfs_distance;
use flipdist::solver::leaf_bound;
use flipdist::{is_trivial, Instance, Solver, SolverOptions};

#[derive(Parser)]
#[command(
    name = "flipdist",
    version,
    about = "Exact flip distance between convex polygon triangulations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance: distance by default, yes/no when a budget is given.
    Solve {
        /// Instance file, `-` for stdin.
        file: PathBuf,
        /// Flip budget; overrides `k` in the file.
        #[arg(long)]
        k: Option<u32>,
        /// Print a shortest flip sequence, one `a b -> c d` line per flip.
        #[arg(long)]
        emit_sequence: bool,
        /// Write the witness dependency DAG in DOT format.
        #[arg(long, value_name = "FILE")]
        emit_dag: Option<PathBuf>,
        /// Print search counters as key=value lines.
        #[arg(long)]
        stats: bool,
        /// Largest budget tried per normalized part (default 2n).
        #[arg(long)]
        max_cap: Option<u32>,
    },
    /// Print the flip distance.
    Distance { file: PathBuf },
    /// Print the flip distance by breadth-first search (m <= 14).
    Oracle { file: PathBuf },
    /// Generate a random instance.
    Gen {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        seed: u64,
        /// Make the target a random walk of this many flips.
        #[arg(long, value_name = "STEPS")]
        walk: Option<u32>,
    },
    /// Convert two binary trees (one per line) into an instance.
    Convert {
        #[arg(long, value_name = "FILE")]
        trees: PathBuf,
    },
    /// Solve generated instances and write one CSV row per instance.
    Bench {
        /// Inclusive range of polygon sizes, e.g. `6..10`.
        #[arg(long, value_parser = parse_range)]
        m_range: (u32, u32),
        #[arg(long, default_value_t = 10)]
        samples: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path, `-` for stdout.
        #[arg(long, value_name = "OUT")]
        csv: PathBuf,
        /// Walk mode: targets are this many random flips from the start.
        #[arg(long, value_name = "STEPS")]
        walk: Option<u32>,
        /// Write 0 for time_ms so output is byte-reproducible.
        #[arg(long)]
        no_time: bool,
    },
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once("..").ok_or("expected A..B")?;
    let a = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let b = b
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|e| format!("{b}: {e}"))?;
    Ok((a, b))
}

/// A failure reported on stderr with exit code 2.
struct Fail(String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(e.to_string())
    }
}

fn read_input(path: &Path) -> Result<String, Fail> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Fail(format!("{}: {e}", path.display())))
    }
}

fn read_instance(path: &Path) -> Result<Instance, Fail> {
    Ok(Instance::parse(&read_input(path)?)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Fail(msg)) => {
            eprintln!("flipdist: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, Fail> {
    let mut out = io::stdout().lock();
    match cmd {
        Command::Solve {
            file,
            k,
            emit_sequence,
            emit_dag,
            stats,
            max_cap,
        } => {
            let inst = read_instance(&file)?;
            let solver = Solver::new(SolverOptions { max_cap });
            let budget = k.or(inst.k);
            let solution = match budget {
                Some(k) => solver.decide(&inst.init, &inst.target, k)?,
                None => Some(solver.solve(&inst.init, &inst.target)?),
            };
            match (budget, &solution) {
                (None, Some(sol)) => writeln!(out, "{}", sol.distance)?,
                (Some(_), Some(_)) => writeln!(out, "yes")?,
                (Some(_), None) => writeln!(out, "no")?,
                (None, None) => unreachable!("distance mode always answers"),
            }
            if let Some(sol) = &solution {
                if emit_sequence {
                    for f in &sol.witness.flips {
                        writeln!(
                            out,
                            "{} {} -> {} {}",
                            f.underlying.a, f.underlying.b, f.created.a, f.created.b
                        )?;
                    }
                }
                if let Some(path) = emit_dag {
                    fs::write(&path, dot_export(&build_dag(&sol.witness)?))
                        .map_err(|e| Fail(format!("{}: {e}", path.display())))?;
                }
            }
            if stats {
                match is_trivial(&inst.init, &inst.target)? {
                    Some(d) => writeln!(out, "trivial=true\ntrivial_distance={d}")?,
                    None => writeln!(out, "trivial=false")?,
                }
                if let Some(sol) = &solution {
                    let n = sol.normalized_n();
                    writeln!(out, "distance={}", sol.distance)?;
                    writeln!(out, "base_cost={}", sol.base_cost)?;
                    writeln!(out, "parts={}", sol.parts.len())?;
                    writeln!(out, "n={n}")?;
                    writeln!(out, "{}", sol.stats)?;
                    writeln!(
                        out,
                        "accepting_tree_leaves={}",
                        sol.accepting_stats().tree_leaves
                    )?;
                    writeln!(out, "bound={}", leaf_bound(n, sol.distance - sol.base_cost))?;
                }
            }
            Ok(if solution.is_some() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Distance { file } => {
            let inst = read_instance(&file)?;
            writeln!(
                out,
                "{}",
                Solver::default().solve(&inst.init, &inst.target)?.distance
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { file } => {
            let inst = read_instance(&file)?;
            writeln!(out, "{}", bfs_distance(&inst.init, &inst.target)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            m,
            seed,
            walk: steps,
        } => {
            if m < 3 {
                return Err(Fail(format!(
                    "a polygon needs at least 3 vertices, got {m}"
                )));
            }
            let init = uniform(m, seed);
            let target = match steps {
                Some(r) => walk(&init, r, seed),
                None => uniform(m, seed.wrapping_add(1)),
            };
            write!(out, "{}", Instance::new(init, target, None)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { trees } => {
            let text = read_input(&trees)?;
            let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
            if lines.len() != 2 {
                return Err(Fail(format!(
                    "expected two trees, one per line, got {}",
                    lines.len()
                )));
            }
            let init = tree_to_triangulation(&BinTree::parse(lines[0])?)?;
            let target = tree_to_triangulation(&BinTree::parse(lines[1])?)?;
            write!(out, "{}", Instance::new(init, target, None)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            m_range: (lo, hi),
            samples,
            seed,
            csv,
            walk: steps,
            no_time,
        } => {
            if lo <= hi && lo < 3 {
                return Err(Fail(format!(
                    "a polygon needs at least 3 vertices, got {lo}"
                )));
            }
            let cfg = BenchConfig {
                m_range: lo..=hi,
                samples,
                seed,
                mode: steps.map_or(Mode::Uniform, Mode::Walk),
                timing: !no_time,
            };
            let rows = bench::run(&cfg)?;
            if csv == Path::new("-") {
                bench::write_csv(&mut out, &rows)?;
            } else {
                let mut buf = Vec::new();
                bench::write_csv(&mut buf, &rows)?;
                fs::write(&csv, buf).map_err(|e| Fail(format!("{}: {e}", csv.display())))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
