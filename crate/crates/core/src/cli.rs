//! The `bpair` command line: every operation as a subcommand reading and
//! writing the text formats of [`crate::format`].
//!
//! Exit codes: 0 on success, 1 when an input pair fails validation, 2 for
//! usage and parse errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::format::{parse, render, serialize, Document, Format};
use crate::geometry::Point;
use crate::gridset::{GridSet, Window};
use crate::layers::trace;
use crate::lifted::{lift_interpolate, lift_restrict};
use crate::oracle::{random_set, Density};
use crate::pairs::{reconstruct, validate, BoundaryPair};
use crate::transfer::{interpolate, restrict, GridRatio};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "bpair",
    version,
    about = "Boundary pairs of digital images on nested grids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Io {
    /// Input file; standard input when omitted.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Output file; standard output when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Output format. Defaults to ascii for m=2 and coords otherwise.
    #[arg(long, short)]
    format: Option<Format>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Boundary pair (inner boundary, first outer layer) of a set.
    Trace(Io),
    /// The set whose trace is the given pair.
    Reconstruct(Io),
    /// Check the boundary-pair axioms; exit 1 if any fails.
    Validate(Io),
    /// Coarse points within half a coarse step of a fine set.
    Restrict {
        #[command(flatten)]
        io: Io,
        /// Ratio n >= 2 between the coarse and the fine grid spacing.
        #[arg(long, short = 'n')]
        ratio: i64,
    },
    /// Fine points within half a coarse step of a coarse set.
    Interpolate {
        #[command(flatten)]
        io: Io,
        /// Ratio n >= 2 between the coarse and the fine grid spacing.
        #[arg(long, short = 'n')]
        ratio: i64,
    },
    /// Restriction applied directly to the boundary pair of a fine set.
    LiftRestrict {
        #[command(flatten)]
        io: Io,
        /// Ratio n >= 2 between the coarse and the fine grid spacing.
        #[arg(long, short = 'n')]
        ratio: i64,
    },
    /// Interpolation applied directly to the boundary pair of a coarse set.
    LiftInterpolate {
        #[command(flatten)]
        io: Io,
        /// Ratio n >= 2 between the coarse and the fine grid spacing.
        #[arg(long, short = 'n')]
        ratio: i64,
    },
    /// Draw a set or pair in fine units with a one-step margin.
    Render {
        #[command(flatten)]
        io: Io,
        /// Mark empty points of the document's grid with `+`.
        #[arg(long)]
        guides: bool,
    },
    /// A random finite set inside a window.
    Random {
        /// Output file; standard output when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long, short)]
        format: Option<Format>,
        /// `LO:HI` corners such as `0,0:15,15`, or sizes such as `16x16`
        /// starting at the origin.
        #[arg(long)]
        window: String,
        /// Probability of keeping each grid point, as `p/q` or a decimal.
        #[arg(long)]
        density: Density,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        spacing: i64,
    },
}

/// An error together with the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidPair(report) => Failure {
                code: EXIT_INVALID,
                message: report.to_string(),
            },
            other => Failure {
                code: EXIT_USAGE,
                message: format!("error: {other}\n"),
            },
        }
    }
}

/// Runs the command line with the given arguments (including the program
/// name) and returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = stderr.write_all(f.message.as_bytes());
            f.code
        }
    }
}

fn read_input(io: &Io, stdin: &mut dyn Read) -> std::result::Result<Document, Failure> {
    let text = match &io.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::usage(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::usage(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    Ok(parse(&text)?)
}

fn write_output(
    text: &str,
    output: &Option<PathBuf>,
    stdout: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    let written = match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::usage(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Error::usage(format!("cannot write standard output: {e}"))),
    };
    Ok(written?)
}

fn emit(
    doc: &Document,
    format: Option<Format>,
    output: &Option<PathBuf>,
    stdout: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    let format = format.unwrap_or(if doc.dim() == 2 {
        Format::Ascii
    } else {
        Format::Coords
    });
    write_output(&serialize(doc, format)?, output, stdout)
}

fn want_set(doc: Document, command: &str) -> Result<GridSet> {
    match doc {
        Document::Set(s) => Ok(s),
        Document::Pair(_) => Err(Error::usage(format!(
            "{command} expects a gridset document"
        ))),
    }
}

fn want_pair(doc: Document, command: &str) -> Result<BoundaryPair> {
    match doc {
        Document::Pair(p) => Ok(p),
        Document::Set(_) => Err(Error::usage(format!(
            "{command} expects a gridpair document"
        ))),
    }
}

fn execute(
    command: Command,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> std::result::Result<i32, Failure> {
    let (io, result): (Io, Document) = match command {
        Command::Trace(io) => {
            let m = want_set(read_input(&io, stdin)?, "trace")?;
            let pair = trace(&m)?;
            (io, pair.into())
        }
        Command::Reconstruct(io) => {
            let pair = want_pair(read_input(&io, stdin)?, "reconstruct")?;
            let m = reconstruct(&pair)?;
            (io, m.into())
        }
        Command::Validate(io) => {
            let pair = want_pair(read_input(&io, stdin)?, "validate")?;
            let report = validate(&pair);
            write_output(&report.to_string(), &io.output, stdout)?;
            return Ok(if report.is_valid() {
                EXIT_OK
            } else {
                EXIT_INVALID
            });
        }
        Command::Restrict { io, ratio } => {
            let m = want_set(read_input(&io, stdin)?, "restrict")?;
            let out = restrict(&m, GridRatio::new(ratio)?)?;
            (io, out.into())
        }
        Command::Interpolate { io, ratio } => {
            let m = want_set(read_input(&io, stdin)?, "interpolate")?;
            let out = interpolate(&m, GridRatio::new(ratio)?)?;
            (io, out.into())
        }
        Command::LiftRestrict { io, ratio } => {
            let pair = want_pair(read_input(&io, stdin)?, "lift-restrict")?;
            let out = lift_restrict(&pair, GridRatio::new(ratio)?)?;
            (io, out.into())
        }
        Command::LiftInterpolate { io, ratio } => {
            let pair = want_pair(read_input(&io, stdin)?, "lift-interpolate")?;
            let out = lift_interpolate(&pair, GridRatio::new(ratio)?)?;
            (io, out.into())
        }
        Command::Render { io, guides } => {
            let doc = read_input(&io, stdin)?;
            write_output(&render(&doc, guides)?, &io.output, stdout)?;
            return Ok(EXIT_OK);
        }
        Command::Random {
            output,
            format,
            window,
            density,
            seed,
            spacing,
        } => {
            let w = parse_window(&window)?;
            let m = random_set(&w, density, seed, spacing)?;
            emit(&m.into(), format, &output, stdout)?;
            return Ok(EXIT_OK);
        }
    };
    emit(&result, io.format, &io.output, stdout)?;
    Ok(EXIT_OK)
}

/// `LO:HI` with comma-separated corners, or `AxBx...` sizes from the origin.
fn parse_window(text: &str) -> Result<Window> {
    let bad = || {
        Error::usage(format!(
            "cannot parse window `{text}`, expected LO:HI or AxB"
        ))
    };
    let ints = |s: &str, sep: char| -> Result<Vec<i64>> {
        s.split(sep)
            .map(|t| t.trim().parse().map_err(|_| bad()))
            .collect()
    };
    let (lo, hi) = match text.split_once(':') {
        Some((lo, hi)) => (ints(lo, ',')?, ints(hi, ',')?),
        None => {
            let sizes = ints(text, 'x')?;
            if sizes.iter().any(|&n| n < 1) {
                return Err(bad());
            }
            (vec![0; sizes.len()], sizes.iter().map(|n| n - 1).collect())
        }
    };
    if lo.len() != hi.len() {
        return Err(bad());
    }
    Window::new(Point::new(&lo), Point::new(&hi))
}
