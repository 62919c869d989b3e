use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use aucleak::oracle::Oracle;
use aucleak::report::{BreakdownRecord, LabelRecord, CSV_HEADER};
use aucleak::{
    candidate_n1, compute_auc, enumerate_all, mispair_count, parse_guesses, parse_labels,
    BigCounter, Error, ExactAuc, ExactGuesses, LabelVector, DEFAULT_MEM_CAP,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Count and enumerate the binary labelings compatible with a reported AUC.
#[derive(Debug, Parser)]
#[command(name = "aucleak", version)]
struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Evaluate per-n1 addends in parallel (results are identical).
    #[arg(long, global = true)]
    parallel: bool,

    /// Memory cap for the counting memo table, in bytes.
    #[arg(long, env = "AUCLEAK_MEM_CAP", default_value_t = DEFAULT_MEM_CAP, global = true)]
    mem_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
    Jsonl,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact AUC of a labeling against a guess vector.
    Auc { guesses: PathBuf, labels: PathBuf },
    /// Number of compatible labelings, with the per-n1 breakdown.
    Count { n: usize, auc: String },
    /// Admissible positive-class sizes and their mispair counts.
    Candidates { n: usize, auc: String },
    /// Stream every compatible labeling, one per line.
    Enumerate {
        n: usize,
        auc: String,
        /// Guess file; bits are then reported in its example order.
        #[arg(long)]
        guesses: Option<PathBuf>,
        /// Stop after this many labelings.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: Option<u64>,
    },
    /// Counts for every n in a range with a nonempty candidate set.
    Scan {
        auc: String,
        n_min: usize,
        n_max: usize,
    },
    /// Cross-check counting and enumeration against exhaustive search.
    Selftest {
        #[arg(default_value_t = 8)]
        n_limit: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Capacity(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Input(_) => 2,
            Failure::Capacity(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Capacity(m) | Failure::Mismatch(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapacityExceeded { .. } | Error::CountOverflow => {
                Failure::Capacity(e.to_string())
            }
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(format!("write failed: {e}"))
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(m)) if m.contains("Broken pipe") => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> CmdResult {
    let counter = BigCounter::with_mem_cap(cli.mem_cap);
    match &cli.command {
        Command::Auc { guesses, labels } => cmd_auc(cli.format, guesses, labels, out),
        Command::Count { n, auc } => cmd_count(cli, &counter, *n, parse_auc(auc)?, out),
        Command::Candidates { n, auc } => cmd_candidates(cli.format, *n, parse_auc(auc)?, out),
        Command::Enumerate {
            n,
            auc,
            guesses,
            limit,
        } => cmd_enumerate(
            cli,
            &counter,
            *n,
            parse_auc(auc)?,
            guesses.as_deref(),
            *limit,
            out,
        ),
        Command::Scan { auc, n_min, n_max } => {
            cmd_scan(cli, &counter, parse_auc(auc)?, *n_min, *n_max, out)
        }
        Command::Selftest { n_limit } => cmd_selftest(&counter, *n_limit, out),
    }
}

fn parse_auc(s: &str) -> Result<ExactAuc, Failure> {
    s.parse().map_err(|_| {
        Failure::Input(format!(
            "malformed AUC {s:?}: expected p/q or a decimal in [0, 1]"
        ))
    })
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_guesses(path: &Path) -> Result<ExactGuesses, Failure> {
    parse_guesses(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_labels(path: &Path) -> Result<LabelVector, Failure> {
    parse_labels(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn cmd_auc(format: Format, guesses: &Path, labels: &Path, out: &mut impl Write) -> CmdResult {
    let guesses = load_guesses(guesses)?;
    let labels = load_labels(labels)?;
    let auc = compute_auc(&labels, &guesses)?;
    let h = mispair_count(&labels, &guesses)?;
    let pairs = labels.n0() * labels.n1();
    match format {
        Format::Table => writeln!(out, "{auc} ({}), h={h}, pairs={pairs}", auc.to_f64())?,
        Format::Csv => {
            writeln!(out, "auc,decimal,h,pairs")?;
            writeln!(out, "{auc},{},{h},{pairs}", auc.to_f64())?;
        }
        Format::Json | Format::Jsonl => writeln!(
            out,
            "{}",
            json!({"auc": auc.to_string(), "decimal": auc.to_f64(), "h": h.get(), "pairs": pairs})
        )?,
    }
    Ok(())
}

fn cmd_count(
    cli: &Cli,
    counter: &BigCounter,
    n: usize,
    auc: ExactAuc,
    out: &mut impl Write,
) -> CmdResult {
    require_size(n)?;
    let breakdown = counter.count_total_with(n, auc, cli.parallel)?;
    let rec = BreakdownRecord::from(&breakdown);
    match cli.format {
        Format::Table => {
            writeln!(out, "n={} auc={} total={}", rec.n, rec.auc, rec.total)?;
            writeln!(out, "n1\td\tcount")?;
            for a in &rec.by_n1 {
                writeln!(out, "{}\t{}\t{}", a.n1, a.d, a.count)?;
            }
        }
        Format::Json | Format::Jsonl => writeln!(out, "{}", rec.to_json())?,
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            write!(out, "{}", rec.csv_rows())?;
        }
    }
    Ok(())
}

fn cmd_candidates(format: Format, n: usize, auc: ExactAuc, out: &mut impl Write) -> CmdResult {
    require_size(n)?;
    let set = candidate_n1(n, auc);
    match format {
        Format::Table | Format::Csv => {
            let sep = if format == Format::Csv { "," } else { "\t" };
            writeln!(out, "n1{sep}d")?;
            for c in &set.entries {
                writeln!(out, "{}{sep}{}", c.n1, c.d)?;
            }
        }
        Format::Json | Format::Jsonl => {
            let entries: Vec<_> = set
                .entries
                .iter()
                .map(|c| json!({"n1": c.n1, "d": c.d.get()}))
                .collect();
            writeln!(
                out,
                "{}",
                json!({"n": n, "auc": auc.to_string(), "candidates": entries})
            )?;
        }
    }
    Ok(())
}

fn cmd_enumerate(
    cli: &Cli,
    counter: &BigCounter,
    n: usize,
    auc: ExactAuc,
    guesses: Option<&Path>,
    limit: Option<u64>,
    out: &mut impl Write,
) -> CmdResult {
    require_size(n)?;
    let guesses = guesses.map(load_guesses).transpose()?;
    let mut stream = enumerate_all(n, auc, guesses.as_ref())?;
    if cli.format == Format::Csv {
        writeln!(out, "bits,n1,d")?;
    }
    let mut emitted = 0u64;
    while limit.is_none_or(|k| emitted < k) {
        let Some(labels) = stream.next() else { break };
        let cand = stream.last_candidate().expect("stream emitted an item");
        match cli.format {
            Format::Table => writeln!(out, "{labels}")?,
            Format::Csv => writeln!(out, "{labels},{},{}", cand.n1, cand.d)?,
            Format::Json | Format::Jsonl => {
                let rec = LabelRecord {
                    bits: labels.to_string(),
                    n1: cand.n1,
                    d: cand.d.get(),
                };
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&rec).expect("record serializes")
                )?;
            }
        }
        emitted += 1;
    }
    out.flush()?;
    match counter.count_total_with(n, auc, cli.parallel) {
        Ok(b) => eprintln!("emitted {emitted} of {}", b.total),
        Err(_) => eprintln!("emitted {emitted} (total unavailable)"),
    }
    Ok(())
}

fn cmd_scan(
    cli: &Cli,
    counter: &BigCounter,
    auc: ExactAuc,
    n_min: usize,
    n_max: usize,
    out: &mut impl Write,
) -> CmdResult {
    require_size(n_min)?;
    if n_min > n_max {
        return Err(Failure::Input(format!("empty range {n_min}..{n_max}")));
    }
    let rows: Vec<BreakdownRecord> = counter
        .scan_with(auc, n_min, n_max, cli.parallel)?
        .iter()
        .map(BreakdownRecord::from)
        .collect();
    match cli.format {
        Format::Table => {
            writeln!(out, "n\tN1\tw(n,c)")?;
            for r in &rows {
                writeln!(out, "{}\t{}\t{}", r.n, r.n1_set(), r.total)?;
            }
        }
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&rows).expect("rows serialize")
        )?,
        Format::Jsonl => {
            for r in &rows {
                writeln!(out, "{}", r.to_json())?;
            }
        }
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in &rows {
                write!(out, "{}", r.csv_rows())?;
            }
        }
    }
    Ok(())
}

fn cmd_selftest(counter: &BigCounter, n_limit: usize, out: &mut impl Write) -> CmdResult {
    let oracle = Oracle::default();
    if n_limit > oracle.limit() {
        return Err(Failure::Input(format!(
            "limit exceeded: n-limit {n_limit} is above the exhaustive limit {}",
            oracle.limit()
        )));
    }
    let mut checked = 0usize;
    for n in 2..=n_limit {
        for auc in oracle.achievable_aucs(n)? {
            if candidate_n1(n, auc).is_empty() {
                return Err(Failure::Mismatch(format!(
                    "n={n}, c={auc}: achievable AUC has no candidate n1"
                )));
            }
            let expected = oracle.brute_force_count(n, auc)?;
            let actual = counter.count_total(n, auc)?.total;
            if expected != actual {
                return Err(Failure::Mismatch(format!(
                    "count mismatch: n={n}, c={auc}, expected={expected}, actual={actual}"
                )));
            }
            let expected_set = oracle.brute_force_enumerate(n, auc)?;
            let actual_list: Vec<LabelVector> = enumerate_all::<f64>(n, auc, None)?.collect();
            let actual_set: BTreeSet<LabelVector> = actual_list.iter().cloned().collect();
            if actual_set.len() != actual_list.len() || actual_set != expected_set {
                return Err(Failure::Mismatch(format!(
                    "enumeration mismatch: n={n}, c={auc}, expected={} labelings, actual={} ({} distinct)",
                    expected_set.len(),
                    actual_list.len(),
                    actual_set.len()
                )));
            }
            checked += 1;
        }
    }
    writeln!(
        out,
        "selftest ok: checked {checked} (n, c) pairs for n in 2..={n_limit}"
    )?;
    Ok(())
}

fn require_size(n: usize) -> CmdResult {
    if n < 2 {
        return Err(Failure::Input(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}
