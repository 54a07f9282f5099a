//! Command-line front end: `count`, `enumerate`, `matrix`, `rank`, `unrank`
//! and `verify`.
//!
//! Exit codes are 0 on success, 1 on a domain error (invalid selection,
//! rank out of range, verification mismatch) and 2 on a usage error.

use std::fmt;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::counting::{count_mode, LacParams};
use crate::enumeration::{enumerate, rank, unrank, Alphabet, Mode, Selection};
use crate::error::LacError;
use crate::natural::Natural;
use crate::oracle::oracle_enumerate;
use crate::tensor::{build_tensor, matrix_cells, DEFAULT_CELL_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lac",
    version,
    about = "Count, enumerate, rank and unrank lists, arrangements, combinations and permutations"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,

    /// Number of objects; may be omitted when --alphabet is given.
    #[arg(long = "n")]
    pub n: Option<usize>,

    /// Selection length; defaults to n in permutation mode.
    #[arg(long = "p")]
    pub p: Option<usize>,

    /// Comma-separated symbols; defaults to a, b, c, ... (x0, x1, ... beyond 26).
    #[arg(long)]
    pub alphabet: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form size of a family.
    Count(FamilyArgs),
    /// Selections of a family in lexicographic order.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        /// Maximum number of selections to print; 0 means unlimited.
        #[arg(long, default_value_t = 1000)]
        limit: u64,
    },
    /// The n-by-n grid of pairs with forbidden cells blanked.
    Matrix {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(long)]
        alphabet: Option<String>,
        /// Maximum number of cells to materialize.
        #[arg(long, default_value_t = DEFAULT_CELL_CAP)]
        cap: u64,
    },
    /// Position of a selection in its family.
    Rank {
        #[command(flatten)]
        family: FamilyArgs,
        /// Selection text, either concatenated symbols ("ab") or comma-separated ("a,b").
        selection: String,
    },
    /// Selection at a position of its family.
    Unrank {
        #[command(flatten)]
        family: FamilyArgs,
        rank: String,
    },
    /// Check the enumerators against the brute-force oracle.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_p: usize,
    },
}

/// Machine-readable result of a command. Counts and ranks are decimal text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub mode: String,
    pub n: usize,
    pub p: usize,
    pub count: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub items: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<String>,
}

impl OutputRecord {
    fn new(mode: Mode, params: LacParams, count: &Natural) -> Self {
        OutputRecord {
            mode: mode.to_string(),
            n: params.n,
            p: params.p,
            count: count.to_string(),
            items: None,
            matrix: None,
            rank: None,
        }
    }

    /// Single-line JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("record serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Lac(LacError),
    Verify(Mismatch),
    Io(io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Lac(e) => match e {
                LacError::InvalidSelection { .. } | LacError::RankOutOfRange { .. } => EXIT_DOMAIN,
                _ => EXIT_USAGE,
            },
            CliError::Verify(_) => EXIT_DOMAIN,
            CliError::Io(_) => EXIT_DOMAIN,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Lac(e) => match e {
                LacError::InvalidSelection { .. } => write!(f, "invalid selection: {e}"),
                LacError::RankOutOfRange { .. } => write!(f, "rank out of range: {e}"),
                _ => write!(f, "usage error: {e}"),
            },
            CliError::Verify(m) => write!(f, "verification failed: {m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<LacError> for CliError {
    fn from(e: LacError) -> Self {
        CliError::Lac(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => CliError::Io(io),
            other => CliError::Io(io::Error::other(format!("{other:?}"))),
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                let _ = writeln!(err, "\n{}", usage_line());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{text}");
            return EXIT_OK;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            if matches!(e, CliError::Usage(_)) {
                let _ = writeln!(err, "{}", usage_line());
            }
            e.exit_code()
        }
    }
}

fn usage_line() -> &'static str {
    "usage: lac <count|enumerate|matrix|rank|unrank|verify> --mode <list|arrangement|combination|permutation> --n <int> --p <int> [--alphabet a,b,...] [--format text|json|csv]"
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Count(family) => cmd_count(family, format, out),
        Command::Enumerate { family, limit } => cmd_enumerate(family, *limit, format, out),
        Command::Matrix {
            mode,
            n,
            alphabet,
            cap,
        } => cmd_matrix(*mode, *n, alphabet.as_deref(), *cap, format, out),
        Command::Rank { family, selection } => cmd_rank(family, selection, format, out),
        Command::Unrank { family, rank } => cmd_unrank(family, rank, format, out),
        Command::Verify { max_n, max_p } => cmd_verify(*max_n, *max_p, out),
    }
}

fn resolve_alphabet(n: Option<usize>, alphabet: Option<&str>) -> Result<Alphabet, CliError> {
    match (n, alphabet) {
        (None, None) => Err(CliError::Usage("--n or --alphabet is required".into())),
        (Some(n), None) => Ok(Alphabet::default_for(n)),
        (n, Some(text)) => {
            let symbols: Vec<&str> = if text.is_empty() {
                Vec::new()
            } else {
                text.split(',').map(str::trim).collect()
            };
            let alphabet = Alphabet::new(symbols)?;
            match n {
                Some(n) if n != alphabet.len() => Err(CliError::Usage(format!(
                    "--n {n} does not match the {} symbols of --alphabet",
                    alphabet.len()
                ))),
                _ => Ok(alphabet),
            }
        }
    }
}

fn resolve_family(family: &FamilyArgs) -> Result<(Alphabet, LacParams), CliError> {
    let alphabet = resolve_alphabet(family.n, family.alphabet.as_deref())?;
    let n = alphabet.len();
    let p = match (family.p, family.mode) {
        (Some(p), _) => p,
        (None, Mode::Permutation) => n,
        (None, _) => return Err(CliError::Usage("--p is required".into())),
    };
    if family.mode == Mode::Permutation && p != n {
        return Err(LacError::PermutationLengthMismatch { n, p }.into());
    }
    Ok((alphabet, LacParams::new(n, p)))
}

fn cmd_count(family: &FamilyArgs, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let (_, params) = resolve_family(family)?;
    let count = count_mode(params, family.mode)?;
    let record = OutputRecord::new(family.mode, params, &count);
    match format {
        Format::Text => writeln!(out, "{count}")?,
        Format::Json => out.write_all(record.to_json().as_bytes())?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["mode", "n", "p", "count"])?;
            w.write_record([
                record.mode.as_str(),
                &record.n.to_string(),
                &record.p.to_string(),
                &record.count,
            ])?;
            w.flush()?;
        }
    }
    Ok(())
}

fn cmd_enumerate(
    family: &FamilyArgs,
    limit: u64,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (alphabet, params) = resolve_family(family)?;
    let count = count_mode(params, family.mode)?;
    let stream = enumerate(&alphabet, params.p, family.mode)?;
    let take = if limit == 0 {
        usize::MAX
    } else {
        usize::try_from(limit).unwrap_or(usize::MAX)
    };
    let mut items = stream.take(take).map(|s| s.render(&alphabet));
    match format {
        Format::Text => {
            let mut w = io::BufWriter::new(out);
            for item in items {
                writeln!(w, "{item}")?;
            }
            w.flush()?;
        }
        Format::Json => {
            let mut record = OutputRecord::new(family.mode, params, &count);
            record.items = Some(items.collect());
            out.write_all(record.to_json().as_bytes())?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["rank", "selection"])?;
            for (pos, item) in items.by_ref().enumerate() {
                w.write_record([pos.to_string(), item])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn cmd_matrix(
    mode: Mode,
    n: Option<usize>,
    alphabet: Option<&str>,
    cap: u64,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let alphabet = resolve_alphabet(n, alphabet)?;
    let params = LacParams::new(alphabet.len(), 2);
    let count = count_mode(params, mode)?;
    let tensor = build_tensor(&alphabet, 2, mode, cap)?;
    let cells = matrix_cells(&tensor)?;
    let rows: Vec<String> = cells.iter().map(|row| row.join(" ")).collect();
    match format {
        Format::Text => {
            for row in &rows {
                writeln!(out, "{row}")?;
            }
        }
        Format::Json => {
            let mut record = OutputRecord::new(mode, params, &count);
            record.matrix = Some(rows);
            out.write_all(record.to_json().as_bytes())?;
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
            for row in &cells {
                w.write_record(row)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn write_rank_record(
    record: OutputRecord,
    format: Format,
    print_rank: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let position = record.rank.clone().unwrap_or_default();
    let text = record
        .items
        .as_ref()
        .and_then(|i| i.first().cloned())
        .unwrap_or_default();
    match format {
        Format::Text if print_rank => writeln!(out, "{position}")?,
        Format::Text => writeln!(out, "{text}")?,
        Format::Json => out.write_all(record.to_json().as_bytes())?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["mode", "n", "p", "rank", "selection"])?;
            w.write_record([
                record.mode,
                record.n.to_string(),
                record.p.to_string(),
                position,
                text,
            ])?;
            w.flush()?;
        }
    }
    Ok(())
}

fn cmd_rank(
    family: &FamilyArgs,
    text: &str,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (alphabet, params) = resolve_family(family)?;
    let indices =
        alphabet
            .parse_indices(text, params.p)
            .map_err(|reason| LacError::InvalidSelection {
                mode: family.mode,
                reason,
            })?;
    if indices.len() != params.p {
        return Err(LacError::InvalidSelection {
            mode: family.mode,
            reason: format!("expected {} symbols, got {}", params.p, indices.len()),
        }
        .into());
    }
    let selection = Selection::new(indices, family.mode, params.n)?;
    let position = rank(&selection, &alphabet)?;
    let count = count_mode(params, family.mode)?;
    let mut record = OutputRecord::new(family.mode, params, &count);
    record.rank = Some(position.to_string());
    record.items = Some(vec![selection.render(&alphabet)]);
    write_rank_record(record, format, true, out)
}

fn cmd_unrank(
    family: &FamilyArgs,
    text: &str,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (alphabet, params) = resolve_family(family)?;
    let position: Natural = text
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{text:?} is not a nonnegative integer")))?;
    let selection = unrank(&position, &alphabet, params.p, family.mode)?;
    let count = count_mode(params, family.mode)?;
    let mut record = OutputRecord::new(family.mode, params, &count);
    record.rank = Some(position.to_string());
    record.items = Some(vec![selection.render(&alphabet)]);
    write_rank_record(record, format, false, out)
}

/// First disagreement between the production enumerator and the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub p: usize,
    pub mode: Mode,
    /// Position of the first differing element (or of the missing tail).
    pub rank: Natural,
    pub detail: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} p={} mode={} first divergent rank {}: {}",
            self.n, self.p, self.mode, self.rank, self.detail
        )
    }
}

/// Per-mode tallies of a successful verification run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifySummary {
    /// `(mode, cases, selections compared)` in [`Mode::ALL`] order.
    pub rows: Vec<(Mode, usize, u64)>,
}

impl VerifySummary {
    pub fn cases(&self) -> usize {
        self.rows.iter().map(|r| r.1).sum()
    }
}

#[derive(Debug)]
pub enum VerifyError {
    Mismatch(Mismatch),
    Lac(LacError),
}

pub type Stream<'a> = Box<dyn Iterator<Item = Selection> + 'a>;

/// Compares the production enumerator with the oracle over every
/// `n <= max_n`, `p <= max_p` and mode.
pub fn verify(max_n: usize, max_p: usize) -> Result<VerifySummary, VerifyError> {
    verify_with(max_n, max_p, |alphabet, p, mode| {
        enumerate(alphabet, p, mode).map(|s| Box::new(s) as Stream)
    })
}

/// [`verify`] with the production side supplied by the caller.
pub fn verify_with<F>(
    max_n: usize,
    max_p: usize,
    production: F,
) -> Result<VerifySummary, VerifyError>
where
    F: for<'a> Fn(&'a Alphabet, usize, Mode) -> crate::Result<Stream<'a>>,
{
    // the largest case bounds the whole grid
    let largest = Alphabet::default_for(max_n);
    if let Err(e @ LacError::CapExceeded { .. }) = oracle_enumerate(&largest, max_p, Mode::List) {
        return Err(VerifyError::Lac(e));
    }
    let mut summary = VerifySummary {
        rows: Mode::ALL.iter().map(|&m| (m, 0, 0)).collect(),
    };
    for n in 0..=max_n {
        let alphabet = Alphabet::default_for(n);
        for p in 0..=max_p {
            for (slot, &mode) in Mode::ALL.iter().enumerate() {
                let mismatch = |rank: u64, detail: String| {
                    VerifyError::Mismatch(Mismatch {
                        n,
                        p,
                        mode,
                        rank: Natural::from(rank),
                        detail,
                    })
                };
                let expected = count_mode(LacParams::new(n, p), mode);
                let prod = production(&alphabet, p, mode);
                let oracle = oracle_enumerate(&alphabet, p, mode);
                let compared = match (prod, oracle, expected) {
                    (Err(a), Err(b), Err(c)) if a == b && b == c => 0,
                    (_, Err(e @ LacError::CapExceeded { .. }), _) => {
                        return Err(VerifyError::Lac(e))
                    }
                    (Ok(prod), Ok(oracle), Ok(expected)) => {
                        let mut prod = prod.fuse();
                        let mut oracle = oracle.fuse();
                        let mut pos = 0u64;
                        loop {
                            match (prod.next(), oracle.next()) {
                                (None, None) => break,
                                (Some(a), Some(b)) if a == b => pos += 1,
                                (a, b) => {
                                    let show = |s: Option<Selection>| {
                                        s.map_or("<end>".to_string(), |s| {
                                            format!("{:?}", s.indices())
                                        })
                                    };
                                    return Err(mismatch(
                                        pos,
                                        format!("enumerate {} vs oracle {}", show(a), show(b)),
                                    ));
                                }
                            }
                        }
                        if Natural::from(pos) != expected {
                            return Err(mismatch(
                                pos,
                                format!("stream length {pos} vs closed-form count {expected}"),
                            ));
                        }
                        pos
                    }
                    (a, b, c) => {
                        let describe = |r: Result<(), LacError>| match r {
                            Ok(()) => "ok".to_string(),
                            Err(e) => e.to_string(),
                        };
                        return Err(mismatch(
                            0,
                            format!(
                                "enumerate {} / oracle {} / count {}",
                                describe(a.map(drop)),
                                describe(b.map(drop)),
                                describe(c.map(drop))
                            ),
                        ));
                    }
                };
                summary.rows[slot].1 += 1;
                summary.rows[slot].2 += compared;
            }
        }
    }
    Ok(summary)
}

/// Writes the summary table (or the mismatch) and returns the exit code.
pub fn report_verify(
    result: Result<VerifySummary, VerifyError>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match result {
        Ok(summary) => {
            let _ = write_summary(&summary, out);
            EXIT_OK
        }
        Err(VerifyError::Mismatch(m)) => {
            let _ = writeln!(err, "verification failed: {m}");
            EXIT_DOMAIN
        }
        Err(VerifyError::Lac(e)) => {
            let _ = writeln!(err, "usage error: {e}");
            EXIT_USAGE
        }
    }
}

fn write_summary(summary: &VerifySummary, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "{:<12} {:>6} {:>12}", "mode", "cases", "selections")?;
    for (mode, cases, selections) in &summary.rows {
        writeln!(out, "{:<12} {:>6} {:>12}", mode.as_str(), cases, selections)?;
    }
    writeln!(out, "all {} cases ok", summary.cases())
}

fn cmd_verify(max_n: usize, max_p: usize, out: &mut dyn Write) -> Result<(), CliError> {
    match verify(max_n, max_p) {
        Ok(summary) => Ok(write_summary(&summary, out)?),
        Err(VerifyError::Mismatch(m)) => Err(CliError::Verify(m)),
        Err(VerifyError::Lac(e)) => Err(CliError::Lac(e)),
    }
}
