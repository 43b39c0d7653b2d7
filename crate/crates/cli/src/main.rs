//! Batch experiment driver: exact Cayley-graph diameters for transposition
//! trees, the closed-form diameter bounds, and sorting-word analysis, as
//! reproducible reports (text, JSON, or CSV).

mod render;
mod report;

use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cayley_trees::bounds::PairPolicy;
use cayley_trees::perm::Permutation;
use cayley_trees::tree::parse_pair_list;

use report::{CliError, Options};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    /// Aligned key-value text for humans.
    Text,
    /// One pretty-printed JSON document.
    Json,
    /// Comma-separated rows (tabular commands only).
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PolicyArg {
    /// Smallest diametral pair by (min, max).
    Lex,
    /// Pair whose removal keeps the subtree diameter largest.
    Maxdiam,
    /// Pair whose removal shrinks the subtree diameter most.
    Mindiam,
}

impl From<PolicyArg> for PairPolicy {
    fn from(p: PolicyArg) -> PairPolicy {
        match p {
            PolicyArg::Lex => PairPolicy::Lex,
            PolicyArg::Maxdiam => PairPolicy::MaxSubtreeDiameter,
            PolicyArg::Mindiam => PairPolicy::MinSubtreeDiameter,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "cayley-trees",
    version,
    about = "Exact diameters and diameter bounds for Cayley graphs of transposition trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Directory for reusable distance-table dumps.
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    /// Cap on n for exact computations (BFS diameter, f(T) sweep); at most 11.
    #[arg(long, global = true, default_value_t = 10, value_name = "N")]
    max_n: usize,

    /// Diametral-pair selection rule for the reported run.
    #[arg(long, global = true, value_enum, default_value_t = PolicyArg::Lex)]
    policy: PolicyArg,
}

#[derive(Subcommand)]
enum Command {
    /// Full bound-vs-diameter report for one tree (fixture name or edge list).
    Analyze {
        /// Fixture name (t1, t2, theorem6-5v, theorem6-7v, path-N, star-N,
        /// caterpillar-N) or `[n=<int>;]i-j,i-j,...`.
        tree: String,
    },
    /// Bound-sharpness statistics over all non-isomorphic trees per n.
    Table1 {
        /// Smallest n (at least 5).
        n_min: usize,
        /// Largest n (at most 9).
        n_max: usize,
    },
    /// The two-leaf caterpillar whose bound gap grows with n.
    Caterpillar {
        /// Number of vertices (at least 5).
        n: usize,
    },
    /// Scan all trees up to n_max for estimate anomalies.
    Conjectures {
        /// Largest n to scan (at most 9).
        n_max: usize,
    },
    /// Sort one permutation by tree swaps and compare with the exact distance.
    Sort {
        /// Fixture name or edge list.
        tree: String,
        /// One-line `[3,5,1,4,2]` or cycles `(1,3)(2,5)`.
        permutation: String,
        /// Also replay this word (pair list `i-j,i-j,...`) move by move.
        #[arg(long, value_name = "WORD")]
        replay: Option<String>,
    },
    /// List all non-isomorphic trees on n vertices (2 ≤ n ≤ 10).
    EnumerateTrees {
        /// Number of vertices.
        n: usize,
    },
}

fn emit<T: Serialize>(
    format: FormatArg,
    value: &T,
    text: String,
    csv: Option<String>,
) -> Result<String, CliError> {
    match format {
        FormatArg::Json => {
            Ok(serde_json::to_string_pretty(value).expect("reports contain only plain data"))
        }
        FormatArg::Text => Ok(text),
        FormatArg::Csv => csv.ok_or_else(|| {
            CliError::Validation(
                "--format csv is only available for table1 and enumerate-trees".into(),
            )
        }),
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let opts = Options {
        max_n: cli.max_n,
        policy: cli.policy.into(),
        cache_dir: cli.cache_dir.clone(),
    };
    opts.validate()?;
    match &cli.command {
        Command::Analyze { tree } => {
            let t = report::resolve_tree(tree)?;
            let r = report::analyze(&t, &opts)?;
            emit(cli.format, &r, render::tree_report_text(&r), None)
        }
        Command::Table1 { n_min, n_max } => {
            let r = report::table1(*n_min, *n_max, &opts)?;
            emit(
                cli.format,
                &r,
                render::table1_text(&r),
                Some(render::table1_csv(&r)),
            )
        }
        Command::Caterpillar { n } => {
            let r = report::caterpillar(*n, &opts)?;
            emit(cli.format, &r, render::caterpillar_text(&r), None)
        }
        Command::Conjectures { n_max } => {
            let r = report::conjectures(*n_max, &opts)?;
            emit(cli.format, &r, render::conjectures_text(&r), None)
        }
        Command::Sort {
            tree,
            permutation,
            replay,
        } => {
            let t = report::resolve_tree(tree)?;
            let p = Permutation::parse_with_n(permutation, t.order())?;
            let word = replay
                .as_deref()
                .map(parse_pair_list)
                .transpose()
                .map_err(|e| CliError::Validation(format!("--replay: {e}")))?;
            let r = report::sort(&t, &p, word.as_deref(), &opts)?;
            emit(cli.format, &r, render::sort_text(&r), None)
        }
        Command::EnumerateTrees { n } => {
            let r = report::enumerate(*n)?;
            emit(
                cli.format,
                &r,
                render::enumeration_text(&r),
                Some(render::enumeration_csv(&r)),
            )
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; anything else is a
            // usage problem and exits like any other validation error.
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            process::exit(code);
        }
    };
    match run(cli) {
        Ok(output) => {
            use std::io::Write;
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            if let Err(e) = writeln!(lock, "{output}").and_then(|()| lock.flush()) {
                // a closed pipe (e.g. `| head`) is not an error
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    process::exit(1);
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            process::exit(e.exit_code());
        }
    }
}
