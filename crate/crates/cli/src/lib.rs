//! The `coxchar` command line.
//!
//! Exit codes: 0 on success, 1 when the input is well formed but names
//! something that does not exist (or a verification fails), 2 on usage and
//! parse errors.

pub mod render;
pub mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use coxchar_core::fourier::{self, GroupData};
use coxchar_core::symbols::{d_family_labels, family_size, z_set};
use coxchar_core::{
    cox_value, d_epsilon_via_fourier, d_family_symbols, exponent_table, fourier_matrix, m_gamma,
    omega, parse_label, LabelError, Member, WeylType,
};

use render::{render, table_rows, OutputFormat};
use verify::{OracleFamily, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ABSENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const LABEL_HELP: &str = "\
Labels:
  A_n      a partition of n+1 as comma-separated parts: 4,1,1
  B_n      alpha|beta with '-' for the empty partition: 2,1|-  or  -|1,1,2
  D_n      unordered pair alpha|beta, either order; equal halves need a
           split suffix '+' or '-': 2|2+
  G2..E8   d,e with an optional ' or '' mark: 4096,12  1,3'  1,3''

Parts may be given in any order. Values are printed in u = q with
half-integer powers written u^(k/2).

Conventions:
  Type A  the non-zero values sit on the hooks (k,1^(n+1-k)), with value
          (-1)^(n+1+k) u^(k-1).
  Type B  (-,(n)) is the trivial character and ((1^n),-) the sign
          character; the last generator is the short simple root.";

#[derive(Debug, Parser)]
#[command(
    name = "coxchar",
    version,
    about = "Hecke algebra character values on Coxeter elements",
    after_help = LABEL_HELP
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every character value for a Weyl type
    Table {
        /// A4, B5, D6, G2, F4, E6, E7, E8, ...
        weyl_type: WeylType,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Only rows with a non-zero value
        #[arg(long)]
        nonzero: bool,
    },
    /// Print the value of one character
    #[command(after_help = LABEL_HELP)]
    Value {
        weyl_type: WeylType,
        #[arg(allow_hyphen_values = true)]
        label: String,
    },
    /// Print the (vexp, a) table linking eigenvalue size and degree exponent
    Exponents { weyl_type: WeylType },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest rank to sweep
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
        /// Restrict oracle and relations suites to one family
        #[arg(long = "type", value_enum, ignore_case = true)]
        family: Option<OracleFamily>,
        /// Restrict oracle and relations suites to one rank
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Show the four-element type-D family for n and k
    Dfamily { n: u32, k: u32 },
    /// Show the Fourier matrix of a small group
    Fourier {
        /// Bundled group: trivial, z2, klein4, s3
        #[arg(long, default_value = "z2", conflicts_with = "group_fixture")]
        group: String,
        /// Read the group from a fixture file instead
        #[arg(long)]
        group_fixture: Option<PathBuf>,
        /// Treat the family as exceptional when computing omega
        #[arg(long)]
        exceptional: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        stderr.push('\n');
        Self {
            stdout: String::new(),
            stderr,
            code,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                Output::ok(text)
            } else {
                Output {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_USAGE,
                }
            }
        }
    }
}

pub fn execute(cmd: Command) -> Output {
    match cmd {
        Command::Table {
            weyl_type,
            format,
            nonzero,
        } => Output::ok(render(&table_rows(weyl_type, nonzero), format)),
        Command::Value { weyl_type, label } => value(weyl_type, &label),
        Command::Exponents { weyl_type } => {
            let mut out = String::from("vexp  a\n");
            for (vexp, a) in exponent_table(weyl_type) {
                let _ = writeln!(out, "{vexp:<4}  {a}");
            }
            Output::ok(out)
        }
        Command::Verify {
            suite,
            max_rank,
            family,
            rank,
        } => {
            let opts = verify::Options {
                max_rank,
                family,
                rank,
            };
            match verify::run(suite, &opts) {
                Ok(report) => Output {
                    stdout: report.render(),
                    stderr: String::new(),
                    code: if report.passed() {
                        EXIT_OK
                    } else {
                        EXIT_ABSENT
                    },
                },
                Err(e) => Output::fail(EXIT_USAGE, e),
            }
        }
        Command::Dfamily { n, k } => dfamily(n, k),
        Command::Fourier {
            group,
            group_fixture,
            exceptional,
        } => {
            let g = match group_fixture {
                Some(path) => GroupData::from_file(&path).map_err(|e| e.to_string()),
                None => fourier::bundled(&group).ok_or_else(|| format!("unknown group {group:?}")),
            };
            match g {
                Ok(g) => Output::ok(fourier_report(&g, exceptional)),
                Err(e) => Output::fail(EXIT_USAGE, e),
            }
        }
    }
}

fn value(t: WeylType, label: &str) -> Output {
    let label = match parse_label(t, label) {
        Ok(l) => l,
        Err(e @ LabelError::NotForType { .. }) => return Output::fail(EXIT_ABSENT, e.to_string()),
        Err(e) => return Output::fail(EXIT_USAGE, e.to_string()),
    };
    match cox_value(t, &label) {
        Ok(v) => Output::ok(format!("{v}\n")),
        Err(e) => Output::fail(EXIT_ABSENT, e.to_string()),
    }
}

fn dfamily(n: u32, k: u32) -> Output {
    let fam = match d_family_symbols(n, k) {
        Ok(f) => f,
        Err(e) => return Output::fail(EXIT_USAGE, e.to_string()),
    };
    let (l1, l2) = d_family_labels(n, k).expect("range already checked");
    let t = WeylType::d(n as usize).expect("n >= 4");
    let x1 = fam.symbol(Member::X1);
    let z: Vec<String> = z_set(x1).iter().map(u32::to_string).collect();
    let mut out = format!("D{n}, k = {k}, m = {}\n", fam.m);
    for which in Member::ALL {
        let _ = writeln!(out, "{which} = {}", fam.symbol(which));
    }
    let _ = writeln!(out, "Z = {{{}}}", z.join(","));
    match family_size(x1) {
        Ok(s) => {
            let _ = writeln!(out, "family size = {s}");
        }
        Err(e) => return Output::fail(EXIT_USAGE, e.to_string()),
    }
    for (which, label) in [(Member::X1, l1), (Member::X2, l2)] {
        let eps = d_epsilon_via_fourier(n, k, which).expect("range already checked");
        let closed = cox_value(t, &label).expect("D label");
        let _ = writeln!(
            out,
            "eps({which}) = {eps:+}  {label} -> {closed} (closed form eps {:+})",
            closed.epsilon()
        );
    }
    Output::ok(out)
}

fn fourier_report(g: &GroupData, exceptional: bool) -> String {
    let classes = m_gamma(g);
    let matrix = fourier_matrix(g);
    let mut out = format!(
        "{} (order {}), |M| = {}\n",
        g.name(),
        g.order(),
        classes.len()
    );
    let names: Vec<String> = classes.iter().map(ToString::to_string).collect();
    let cells: Vec<Vec<String>> = matrix
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let width = cells
        .iter()
        .flatten()
        .chain(&names)
        .map(String::len)
        .max()
        .unwrap_or(1);
    let _ = write!(out, "{:width$}", "");
    for n in &names {
        let _ = write!(out, "  {n:>width$}");
    }
    out.push('\n');
    for (n, row) in names.iter().zip(&cells) {
        let _ = write!(out, "{n:width$}");
        for c in row {
            let _ = write!(out, "  {c:>width$}");
        }
        out.push('\n');
    }
    for (c, n) in classes.iter().zip(&names) {
        if let Ok(w) = omega(*c, g, exceptional) {
            let _ = writeln!(out, "omega{n} = {w}");
        }
    }
    out
}
