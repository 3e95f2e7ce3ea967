//! Command-line surface. Exit codes: 0 success, 1 verification failure,
//! 2 input error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::atlas::{self, classify};
use crate::error::Error;
use crate::format::GroupFile;
use crate::graded::{collapse, disjoint_union, format_column, mirror, reverse_component, Grading2x};
use crate::hfunction::{h_from_alexander, AlexanderPolynomial};
use crate::surgery::{
    chain_matrix, h1_order, solve_framing_constraint, zero_surgery_matrix, IntMatrix,
    SurgeryMatrix,
};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hfl", version, about = "Link Floer homology calculator and atlas")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the table of genus-one nearly fibered links (pipeline values).
    Table,
    /// Rebuild the table, validate the catalog and print the discrepancy report.
    Verify,
    /// Classify the group in a group file.
    Classify { path: PathBuf },
    /// List catalog entries.
    Catalog,
    /// Write a catalog entry as a group file.
    Export {
        name: String,
        /// Export the collapsed group even when multi-graded data exists.
        #[arg(long)]
        collapsed: bool,
    },
    /// Collapse a multi-graded group.
    Collapse { path: PathBuf },
    /// Group of the mirror image (collapsed groups only).
    Mirror { path: PathBuf },
    /// Group of the split union of two links (collapsed groups only).
    Union { left: PathBuf, right: PathBuf },
    /// Reverse the orientation of one component of a multi-graded group.
    Reverse {
        path: PathBuf,
        /// 1-based component index.
        #[arg(long)]
        component: usize,
        /// Linking number of the component with the rest, in the input link.
        #[arg(long, allow_negative_numbers = true)]
        lk: i64,
    },
    /// h-function of an L-space knot from its Alexander polynomial, e.g. "-1:1,-1,1".
    Hfunc {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Surgery homology computations.
    Surgery {
        #[command(subcommand)]
        op: SurgeryOp,
    },
}

#[derive(Debug, Subcommand)]
pub enum SurgeryOp {
    /// The 4x4 slam-dunk chain matrix with end framings a and b.
    Chain {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
    },
    /// The zero-surgery linking matrix of a 2-component link.
    Zero {
        #[arg(allow_negative_numbers = true)]
        lk: i64,
    },
    /// All (p, q) in range with |4(p+1)(q+1) - 1| = target.
    Solve {
        #[arg(long)]
        target: u64,
        #[arg(long)]
        range: i64,
    },
    /// Exact determinant of a matrix like "0,2;2,0".
    Det {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Invariant factors of a matrix.
    Snf {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Order of H_1 presented by a symmetric matrix.
    Order {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
}

enum Failure {
    Input(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_group(path: &Path) -> Result<GroupFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    text.parse::<GroupFile>()
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_collapsed(path: &Path) -> Result<crate::CollapsedGroup, Failure> {
    match read_group(path)? {
        GroupFile::Collapsed(g) => Ok(g),
        GroupFile::MultiGraded(_) => Err(Failure::Input(format!(
            "{}: expected a collapsed group; run `hfl collapse` first",
            path.display()
        ))),
    }
}

fn read_multigraded(path: &Path) -> Result<crate::MultiGradedGroup, Failure> {
    match read_group(path)? {
        GroupFile::MultiGraded(g) => Ok(g),
        GroupFile::Collapsed(_) => {
            Err(Failure::Input(format!("{}: expected a multi-graded group", path.display())))
        }
    }
}

pub fn table_text() -> String {
    let columns: Vec<Grading2x> = (-1..=1).map(Grading2x::from_int).collect();
    let mut out = String::from("HFL_d(L)[s] | s=-1 | s=0 | s=1\n");
    for row in atlas::rebuild_table().rows {
        let cells: Vec<String> = columns.iter().map(|&s| format_column(&row.pipeline.column(s))).collect();
        out.push_str(&format!("{} | {}\n", row.name, cells.join(" | ")));
    }
    out
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    let mut emit = |text: String| {
        // stdout failures (closed pipe) are not input errors
        let _ = out.write_all(text.as_bytes());
    };
    match command {
        Command::Table => emit(table_text()),
        Command::Verify => {
            let outcome = verify::verify();
            emit(format!("{outcome}\n"));
            if !outcome.passed() {
                return Err(Failure::Verify);
            }
        }
        Command::Classify { path } => {
            let group = match read_group(&path)? {
                GroupFile::Collapsed(g) => g,
                GroupFile::MultiGraded(m) => collapse(&m)?,
            };
            emit(format!("{}\n", classify(&group)?));
        }
        Command::Catalog => {
            let mut text = String::new();
            for e in atlas::catalog() {
                text.push_str(&format!(
                    "{} | n={} | genus={} | fibered={} | nearly_fibered={} | {} | {}\n",
                    e.name,
                    e.n,
                    e.big_genus,
                    e.fibered,
                    e.nearly_fibered,
                    e.provenance,
                    e.collapsed
                ));
            }
            emit(text);
        }
        Command::Export { name, collapsed } => {
            let entry = atlas::find(&name)
                .ok_or_else(|| Failure::Input(format!("no catalog entry named {name:?}")))?;
            let file = match (&entry.multigraded, collapsed) {
                (Some(m), false) => GroupFile::from(m.clone()),
                _ => GroupFile::from(entry.collapsed.clone()),
            };
            emit(format!("# {}\n{file}", entry.name));
        }
        Command::Collapse { path } => {
            let m = read_multigraded(&path)?;
            emit(GroupFile::from(collapse(&m)?).to_string());
        }
        Command::Mirror { path } => {
            let g = read_collapsed(&path)?;
            emit(GroupFile::from(mirror(&g)).to_string());
        }
        Command::Union { left, right } => {
            let (a, b) = (read_collapsed(&left)?, read_collapsed(&right)?);
            emit(GroupFile::from(disjoint_union(&a, &b)).to_string());
        }
        Command::Reverse { path, component, lk } => {
            let m = read_multigraded(&path)?;
            emit(GroupFile::from(reverse_component(&m, component, lk)?).to_string());
        }
        Command::Hfunc { poly } => {
            let poly: AlexanderPolynomial = poly.parse()?;
            emit(format!("{}\n", h_from_alexander(&poly)?));
        }
        Command::Surgery { op } => match op {
            SurgeryOp::Chain { a, b } => emit(format!("{}\n", chain_matrix(a, b))),
            SurgeryOp::Zero { lk } => emit(format!("{}\n", zero_surgery_matrix(lk))),
            SurgeryOp::Solve { target, range } => {
                let sols: Vec<String> = solve_framing_constraint(target, range)
                    .into_iter()
                    .rev()
                    .map(|(p, q)| format!("({p},{q})"))
                    .collect();
                emit(format!("{}\n", sols.join(" ")));
            }
            SurgeryOp::Det { matrix } => {
                let m: IntMatrix = matrix.parse()?;
                emit(format!("{}\n", m.determinant()));
            }
            SurgeryOp::Snf { matrix } => {
                let m: IntMatrix = matrix.parse()?;
                let f: Vec<String> = m.invariant_factors().iter().map(ToString::to_string).collect();
                emit(format!("{}\n", f.join(" ")));
            }
            SurgeryOp::Order { matrix } => {
                let m: SurgeryMatrix = matrix.parse()?;
                emit(format!("{}\n", h1_order(&m)));
            }
        },
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are not errors
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INPUT_ERROR;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT_ERROR
        }
    }
}
