//! `htscope` command line.
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage or parse error,
//! 3 operation error. Commands that produce a model write it in canonical
//! `.ht` form to stdout, or to `--out FILE`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::axioms;
use crate::digest::structural_digest;
use crate::error::Error;
use crate::model::{Hypernetwork, Identifier, View};
use crate::ops::{self, BinaryOp};
use crate::scope;
use crate::text;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OPERATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "htscope",
    version,
    about = "Validate, project and transform .ht hypernetwork models"
)]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a model against the structural axioms.
    Validate { file: PathBuf },
    /// Extract the view of one boundary tag.
    Project {
        file: PathBuf,
        #[arg(long, value_name = "TAG")]
        boundary: Identifier,
    },
    /// Apply a structural operator, optionally scoped to a boundary.
    #[command(subcommand)]
    Op(OpCommand),
    /// Compare the views of several boundaries over one model.
    Views {
        #[arg(value_parser = ["intersect", "union"])]
        mode: String,
        file: PathBuf,
        #[arg(long, value_name = "TAG1,TAG2", value_delimiter = ',', required = true)]
        boundaries: Vec<Identifier>,
    },
    /// Rewrite a model in canonical form.
    Fmt { file: PathBuf },
    /// Print the structural digest of a model.
    Digest { file: PathBuf },
}

#[derive(Debug, Args)]
struct Scope {
    /// Apply the operator to the views of this tag.
    #[arg(long, value_name = "TAG")]
    boundary: Option<Identifier>,
}

#[derive(Debug, Subcommand)]
enum OpCommand {
    Merge {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        scope: Scope,
    },
    Meet {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        scope: Scope,
    },
    Difference {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        scope: Scope,
    },
    Prune {
        file: PathBuf,
        #[arg(long, value_name = "A,B,...", value_delimiter = ',', required = true)]
        elements: Vec<Identifier>,
        #[command(flatten)]
        scope: Scope,
    },
    Split {
        file: PathBuf,
        #[arg(long, value_name = "A,B,...", value_delimiter = ',', required = true)]
        closure: Vec<Identifier>,
        #[command(flatten)]
        scope: Scope,
    },
}

enum Failure {
    Usage(String),
    Operation(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            other => Failure::Operation(other),
        }
    }
}

enum Outcome {
    Model(Hypernetwork),
    Text(String),
    Report(axioms::ValidationReport),
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };

    let outcome = match execute(cli.command) {
        Ok(outcome) => outcome,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Operation(e)) => {
            let _ = writeln!(stderr, "error[{}]: {e}", e.code());
            return EXIT_OPERATION;
        }
    };

    let (body, code) = match outcome {
        Outcome::Model(h) => (text::serialize(&h), EXIT_OK),
        Outcome::Text(s) => (s, EXIT_OK),
        Outcome::Report(r) => {
            let code = if r.is_valid() { EXIT_OK } else { EXIT_INVALID };
            (r.render(), code)
        }
    };
    let written = match &cli.out {
        Some(path) => {
            std::fs::write(path, &body).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => stdout
            .write_all(body.as_bytes())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return EXIT_OPERATION;
    }
    code
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Hypernetwork, Failure> {
    text::parse(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn binary(op: BinaryOp, left: &Path, right: &Path, scope: Scope) -> Result<Outcome, Failure> {
    let (h1, h2) = (load(left)?, load(right)?);
    let result = match scope.boundary {
        Some(b) => scope::scoped_apply(op, &h1, &h2, &b)?.into_content(),
        None => op.apply(&h1, &h2)?,
    };
    Ok(Outcome::Model(result))
}

fn execute(command: Command) -> Result<Outcome, Failure> {
    Ok(match command {
        Command::Validate { file } => {
            let parts = text::parse_unchecked(&read(&file)?)
                .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            Outcome::Report(axioms::validate_parts(&parts))
        }
        Command::Project { file, boundary } => {
            Outcome::Model(scope::project(&load(&file)?, &boundary).into_content())
        }
        Command::Op(op) => match op {
            OpCommand::Merge { left, right, scope } => {
                binary(BinaryOp::Merge, &left, &right, scope)?
            }
            OpCommand::Meet { left, right, scope } => binary(BinaryOp::Meet, &left, &right, scope)?,
            OpCommand::Difference { left, right, scope } => {
                binary(BinaryOp::Difference, &left, &right, scope)?
            }
            OpCommand::Prune {
                file,
                elements,
                scope,
            } => {
                let h = load(&file)?;
                Outcome::Model(match scope.boundary {
                    Some(b) => scope::scoped_prune(&h, &elements, &b)?.into_content(),
                    None => ops::prune(&h, &elements)?,
                })
            }
            OpCommand::Split {
                file,
                closure,
                scope,
            } => {
                let h = load(&file)?;
                Outcome::Model(match scope.boundary {
                    Some(b) => scope::scoped_split(&h, &closure, &b)?.into_content(),
                    None => ops::split(&h, &closure)?,
                })
            }
        },
        Command::Views {
            mode,
            file,
            boundaries,
        } => {
            if boundaries.len() < 2 {
                return Err(Failure::Usage(
                    "--boundaries needs at least two tags".into(),
                ));
            }
            let h = load(&file)?;
            let combine = if mode == "intersect" {
                scope::view_intersect
            } else {
                scope::view_union
            };
            let mut views = boundaries.iter().map(|b| scope::project(&h, b));
            let first = views.next().expect("at least two boundaries");
            let combined = views.try_fold(first, |acc, v: View| combine(&acc, &v))?;
            Outcome::Model(combined.into_content())
        }
        Command::Fmt { file } => Outcome::Model(load(&file)?),
        Command::Digest { file } => {
            Outcome::Text(format!("{}\n", structural_digest(&load(&file)?)))
        }
    })
}
