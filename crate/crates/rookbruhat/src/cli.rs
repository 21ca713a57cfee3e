//! Command-line dispatcher.
//!
//! Exit codes: `0` success, `1` usage or input error, `2` the order
//! implementations (or the length oracle) disagree.

use std::fmt::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rookbruhat_core::element::enumerate;
use rookbruhat_core::length::{breakdown, coinversions, length};
use rookbruhat_core::oracle::{left_span, meet_dim, right_span};
use rookbruhat_core::order::{covers_of, deodhar_leq, deodhar_leq_gamma, ppr_leq};
use rookbruhat_core::OneLine;

use crate::export::{export_dot, export_json};
use crate::files::read_elements;
use crate::hasse::build_hasse_par;
use crate::verify::{verify, Mode, MAX_SAMPLED_N};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "rookbruhat", version, about = "Bruhat-Chevalley order on the rook monoid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Length of an element with every quantity it is built from
    Len {
        element: Option<String>,
        /// Element file, one element per line
        #[arg(long, conflicts_with = "element")]
        file: Option<PathBuf>,
    },
    /// Compare two elements under all order implementations
    Cmp { x: String, y: String },
    /// Elements covering the given one
    Covers { element: String },
    /// Orbit dimensions by exact rank computation
    Oracle { element: String },
    /// Hasse diagram of R_n
    Hasse {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Cross-check the order, covers and lengths on R_n
    Verify {
        n: usize,
        /// Check K random pairs instead of all pairs
        #[arg(long, value_name = "K")]
        sampled: Option<usize>,
        #[arg(long, value_name = "S", default_value_t = 0)]
        seed: u64,
        /// Machine-readable report
        #[arg(long)]
        json: bool,
    },
    /// List every element of R_n in lexicographic order
    Enum { n: usize },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dot,
    Json,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl ToString) -> Self {
        Self { code: EXIT_USAGE, stdout: String::new(), stderr: msg.to_string() }
    }
}

/// Runs one command line; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(rendered)
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(msg) => Outcome::usage(format!("error: {msg}\n")),
    }
}

fn parse(text: &str) -> Result<OneLine, String> {
    text.parse::<OneLine>().map_err(|e| format!("`{text}`: {e}"))
}

fn joined<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|t| t.to_string()).collect::<Vec<_>>().join(sep)
}

fn write_breakdown(out: &mut String, x: &OneLine) {
    let b = breakdown(x);
    let pairs = joined(coinversions(x).pairs.iter().map(|(i, j)| format!("({i},{j})")), " ");
    writeln!(out, "element: {x}").unwrap();
    writeln!(out, "n: {}", x.n()).unwrap();
    writeln!(out, "rank: {}", x.rank().0).unwrap();
    writeln!(out, "star_weights: {}", joined(&b.star_weights, ",")).unwrap();
    writeln!(out, "star_sum: {}", b.star_sum).unwrap();
    writeln!(out, "coinversion_pairs: {pairs}").unwrap();
    writeln!(out, "coinv: {}", b.coinv).unwrap();
    writeln!(out, "length: {}", b.length).unwrap();
    writeln!(out, "dim_bx: {}", b.dim_bx).unwrap();
    writeln!(out, "dim_xb: {}", b.dim_xb).unwrap();
    writeln!(out, "dim_meet: {}", b.dim_meet).unwrap();
}

fn dispatch(command: Command) -> Result<Outcome, String> {
    let mut out = String::new();
    match command {
        Command::Len { element, file } => {
            let elements = match (element, file) {
                (Some(text), None) => vec![parse(&text)?],
                (None, Some(path)) => read_elements(&path).map_err(|e| e.to_string())?,
                _ => return Err("len needs an element or --file".into()),
            };
            for (k, x) in elements.iter().enumerate() {
                if k > 0 {
                    out.push('\n');
                }
                write_breakdown(&mut out, x);
            }
        }
        Command::Cmp { x, y } => {
            let (x, y) = (parse(&x)?, parse(&y)?);
            if x.n() != y.n() {
                return Err(format!("size mismatch: {} vs {}", x.n(), y.n()));
            }
            let d = deodhar_leq(&x, &y).map_err(|e| e.to_string())?;
            let g = deodhar_leq_gamma(&x, &y).map_err(|e| e.to_string())?;
            let p = ppr_leq(&x, &y).map_err(|e| e.to_string())?;
            writeln!(out, "x: {x}").unwrap();
            writeln!(out, "y: {y}").unwrap();
            writeln!(out, "length_x: {}", length(&x)).unwrap();
            writeln!(out, "length_y: {}", length(&y)).unwrap();
            writeln!(out, "deodhar: {d}").unwrap();
            writeln!(out, "gamma: {g}").unwrap();
            writeln!(out, "ppr: {p}").unwrap();
            let agree = d == g && g == p;
            writeln!(out, "agree: {agree}").unwrap();
            if !agree {
                return Ok(Outcome { code: EXIT_MISMATCH, stdout: out, stderr: String::new() });
            }
        }
        Command::Covers { element } => {
            let x = parse(&element)?;
            for y in covers_of(&x) {
                writeln!(out, "{y}").unwrap();
            }
        }
        Command::Oracle { element } => {
            let x = parse(&element)?;
            let (l, r) = (left_span(&x), right_span(&x));
            let meet = meet_dim(&l, &r).map_err(|e| e.to_string())?;
            writeln!(out, "element: {x}").unwrap();
            writeln!(out, "left_rank: {}", l.rank).unwrap();
            writeln!(out, "right_rank: {}", r.rank).unwrap();
            writeln!(out, "meet_dim: {meet}").unwrap();
            writeln!(out, "length: {}", l.rank + r.rank - meet).unwrap();
        }
        Command::Hasse { n, format } => {
            let h = build_hasse_par(n).map_err(|e| e.to_string())?;
            out = match format {
                Format::Dot => export_dot(&h),
                Format::Json => export_json(&h) + "\n",
            };
        }
        Command::Verify { n, sampled, seed, json } => {
            let mode = match sampled {
                Some(count) => Mode::Sampled { count, seed },
                None => Mode::default_for(n, seed),
            };
            if n > MAX_SAMPLED_N {
                return Err(format!("verify supports n <= {MAX_SAMPLED_N}"));
            }
            let report = verify(n, mode).map_err(|e| e.to_string())?;
            if json {
                out = report.to_json() + "\n";
            } else {
                writeln!(out, "{report}").unwrap();
            }
            if !report.passed() {
                return Ok(Outcome { code: EXIT_MISMATCH, stdout: out, stderr: String::new() });
            }
        }
        Command::Enum { n } => {
            for x in enumerate(n).map_err(|e| e.to_string())? {
                writeln!(out, "{x}").unwrap();
            }
        }
    }
    Ok(Outcome::ok(out))
}
