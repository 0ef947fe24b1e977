use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use evenbeat::notation::parse_rhythm;
use evenbeat::oracle::{build_graph, verify_identities};
use evenbeat::{Error, OnsetRhythm};
use evenbeat_cli::{
    classify_line, corpus_rows, even_rhythm, render_corpus_table, render_even_csv,
    render_even_json, render_even_text, render_trace_csv, render_trace_json, render_trace_text,
    trace_rhythm,
};

const GRAPH_BUDGET: u64 = 5_000_000;

#[derive(Parser)]
#[command(
    name = "evenbeat",
    version,
    about = "Smooth cyclic rhythms by iterated neighbour averaging"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print every averaging step, then one full terminal period
    Trace {
        /// Rhythm as a binary string, onset list, or "i:" interval list
        rhythm: String,
        /// Pulse count; required for onset lists
        #[arg(long, value_name = "N")]
        pulses: Option<u32>,
        /// Step cap before the trace gives up
        #[arg(long, value_name = "K")]
        max_steps: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Iterate to the terminal cycle and print the settled rhythm
    Even {
        /// Rhythm as a binary string, onset list, or "i:" interval list
        rhythm: String,
        /// Pulse count; required for onset lists
        #[arg(long, value_name = "N")]
        pulses: Option<u32>,
        /// Step cap before the iteration gives up
        #[arg(long, value_name = "K")]
        max_steps: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classify an interval vector by its terminal behaviour
    Classify {
        /// Comma-separated intervals, e.g. "3,3,4,3,3" (an "i:" prefix is allowed)
        intervals: String,
    },
    /// Replay the algebraic identity suite and report every check
    Verify {
        /// Largest pulse count covered exhaustively (3 to 12)
        #[arg(long, value_name = "N", default_value_t = 10)]
        max_pulses: u32,
    },
    /// Emit the transition graph of the averaging step as Graphviz DOT
    Graph {
        /// Pulse count shared by all states
        #[arg(long, value_name = "N")]
        pulses: u32,
        /// Number of intervals per state
        #[arg(long, value_name = "n")]
        onsets: usize,
        /// Output file; stdout when omitted
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Print the bundled timelines and self-check their settling distances
    Corpus,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Display) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }

    fn invariant(message: impl Display) -> Self {
        Failure {
            code: 3,
            message: message.to_string(),
        }
    }

    fn io(message: impl Display) -> Self {
        Failure {
            code: 1,
            message: message.to_string(),
        }
    }
}

/// Library errors reached through well-formed arguments are invariant
/// failures; everything else means the input itself was bad.
fn lib_failure(err: Error) -> Failure {
    match err {
        Error::CapExceeded(_) => Failure::invariant(err),
        _ => Failure::usage(err),
    }
}

fn parse_input(rhythm: &str, pulses: Option<u32>) -> Result<OnsetRhythm, Failure> {
    parse_rhythm(rhythm, pulses).map_err(Failure::usage)
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Trace {
            rhythm,
            pulses,
            max_steps,
            format,
        } => {
            let rhythm = parse_input(&rhythm, pulses)?;
            let doc = trace_rhythm(&rhythm, max_steps).map_err(lib_failure)?;
            print!(
                "{}",
                match format {
                    Format::Text => render_trace_text(&doc),
                    Format::Csv => render_trace_csv(&doc),
                    Format::Json => render_trace_json(&doc),
                }
            );
            if doc.cap_hit {
                return Err(Failure::invariant(format!(
                    "orbit still transient after {} steps",
                    doc.distance_to_cycle
                )));
            }
            Ok(())
        }
        Command::Even {
            rhythm,
            pulses,
            max_steps,
            format,
        } => {
            let rhythm = parse_input(&rhythm, pulses)?;
            let report = even_rhythm(&rhythm, max_steps).map_err(lib_failure)?;
            print!(
                "{}",
                match format {
                    Format::Text => render_even_text(&report),
                    Format::Csv => render_even_csv(&report),
                    Format::Json => render_even_json(&report),
                }
            );
            Ok(())
        }
        Command::Classify { intervals } => {
            let body = intervals.trim();
            let body = body.strip_prefix("i:").unwrap_or(body);
            let entries = body
                .split(',')
                .map(|tok| tok.trim().parse::<i64>())
                .collect::<Result<Vec<i64>, _>>()
                .map_err(|_| Failure::usage(format!("not an interval list: \"{intervals}\"")))?;
            let line = classify_line(&entries).map_err(Failure::usage)?;
            println!("{line}");
            Ok(())
        }
        Command::Verify { max_pulses } => {
            if !(3..=12).contains(&max_pulses) {
                return Err(Failure::usage("--max-pulses must be between 3 and 12"));
            }
            let report = verify_identities(max_pulses);
            for check in &report.checks {
                match &check.failure {
                    None => println!("ok   {} ({} cases)", check.name, check.cases),
                    Some(witness) => {
                        println!("FAIL {} ({} cases): {witness}", check.name, check.cases)
                    }
                }
            }
            let failed = report.checks.iter().filter(|c| !c.passed()).count();
            if failed > 0 {
                Err(Failure::invariant(format!(
                    "{failed} of {} identity checks failed",
                    report.checks.len()
                )))
            } else {
                println!(
                    "all {} identity checks passed (pulse counts up to {max_pulses})",
                    report.checks.len()
                );
                Ok(())
            }
        }
        Command::Graph { pulses, onsets, out } => {
            let graph = build_graph(pulses, onsets, GRAPH_BUDGET).map_err(Failure::usage)?;
            let dot = graph.to_dot();
            match out {
                Some(path) => std::fs::write(&path, dot)
                    .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display()))),
                None => {
                    print!("{dot}");
                    Ok(())
                }
            }
        }
        Command::Corpus => {
            let rows = corpus_rows();
            print!("{}", render_corpus_table(&rows));
            let mismatched: Vec<&str> = rows
                .iter()
                .filter(|r| r.distance != r.expected)
                .map(|r| r.name)
                .collect();
            if mismatched.is_empty() {
                Ok(())
            } else {
                Err(Failure::invariant(format!(
                    "settling distance self-check failed for: {}",
                    mismatched.join(", ")
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
