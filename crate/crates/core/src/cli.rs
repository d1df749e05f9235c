//! The `seqrecon` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 invalid
//! input or budget refusal.
//!
//! CSV schemas (header line first, LF line endings):
//!
//! - `table`: `n,l,t,D,N_formula,N_recursive,equal`
//! - `verify`: `n,l,t,formula,brute_force,verdict,witness,tuples_examined,tuples_pruned`
//!   with the witness as semicolon-joined bit strings
//! - `ball`: one word per line, no header
//! - `reconstruct`: a `read` or `candidate` section, a blank line, then a
//!   report row `n,l,t,read_count,threshold,candidates,guarantee_met,list_within_bound`
//! - `witness`: a `read` section, a blank line, then a `candidate` section
//!
//! With `--format json` every row becomes one flat JSON object on its own
//! line, keyed by the CSV column names.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bitseq::{deletion_ball, BitWord};
use crate::combinatorics::{
    ball_size, intersection_bound, intersection_bound_recursive, reconstruction_threshold,
    CountMemo,
};
use crate::error::Error;
use crate::extremal::{
    brute_force_max_with, check_search, default_threads, intersection_size, SearchConfig,
    SearchReport, Verdict,
};
use crate::reconstruct::{
    candidates, check_guarantee, parse_reads, sample_reads, worst_case_reads, ReadSet,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Tabulate D(n,t) and N_l(n,t) in closed and recursive form
    Table,
    /// Exhaustively maximize l-ball intersections and compare with N_l(n,t)
    Verify,
    /// Print the t-deletion ball of --x
    Ball,
    /// Decode a read file (or reads sampled from --x) into a candidate list
    Reconstruct,
    /// Print the worst-case read set of the extremal family and its candidates
    Witness,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "seqrecon", version, about = "Deletion-ball combinatorics and list reconstruction")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Transmitted word length (reconstruct infers it from --x when omitted)
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub n: Option<i64>,
    /// Number of balls / list size bound plus one
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub ell: Option<i64>,
    /// Number of deletions
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub t: Option<i64>,
    /// Inclusive range A..B (or A..=B, or a single value)
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub n_range: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub ell_range: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub t_range: Option<String>,
    /// Worker threads for the exhaustive search
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for read sampling
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write output here instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// A word over {0,1}
    #[arg(long, global = true)]
    pub x: Option<String>,
    /// Read file: one read per line, '#' lines ignored
    #[arg(long, global = true)]
    pub reads: Option<PathBuf>,
    /// Re-check every reported witness against its reported value
    #[arg(long, global = true)]
    pub assert_roundtrip: bool,
}

/// A failure mapped to an exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: msg.into(),
        }
    }

    fn invalid(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::invalid(e.to_string())
    }
}

enum Cell {
    Text(String),
    Int(String),
    Bool(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Text(s) | Cell::Int(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Text(s) => serde_json::to_string(s).expect("strings serialize"),
            Cell::Int(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

fn int(v: impl ToString) -> Cell {
    Cell::Int(v.to_string())
}

fn text(v: impl ToString) -> Cell {
    Cell::Text(v.to_string())
}

struct Section {
    columns: Vec<&'static str>,
    header: bool,
    rows: Vec<Vec<Cell>>,
}

impl Section {
    fn new(columns: &[&'static str]) -> Self {
        Section {
            columns: columns.to_vec(),
            header: true,
            rows: Vec::new(),
        }
    }

    fn render(&self, format: Format, out: &mut String) {
        match format {
            Format::Csv => {
                if self.header {
                    out.push_str(&self.columns.join(","));
                    out.push('\n');
                }
                for row in &self.rows {
                    let line: Vec<String> = row.iter().map(Cell::csv).collect();
                    out.push_str(&line.join(","));
                    out.push('\n');
                }
            }
            Format::Json => {
                for row in &self.rows {
                    out.push('{');
                    for (i, (col, cell)) in self.columns.iter().zip(row).enumerate() {
                        if i > 0 {
                            out.push(',');
                        }
                        let _ = write!(out, "\"{col}\":{}", cell.json());
                    }
                    out.push_str("}\n");
                }
            }
        }
    }
}

fn render(sections: &[Section], format: Format) -> String {
    let mut out = String::new();
    for (i, s) in sections.iter().enumerate() {
        if i > 0 && format == Format::Csv {
            out.push('\n');
        }
        s.render(format, &mut out);
    }
    out
}

/// Parses `A..B`, `A..=B` (both inclusive) or a single integer `A`.
pub fn parse_range(s: &str) -> Result<Vec<i64>, String> {
    let s = s.trim();
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (a, b)
    } else if let Some((a, b)) = s.split_once("..") {
        (a, b)
    } else {
        (s, s)
    };
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad range {s:?}"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad range {s:?}"))?;
    Ok((lo..=hi).collect())
}

fn axis(
    name: &str,
    single: Option<i64>,
    range: &Option<String>,
) -> Result<Option<Vec<i64>>, Failure> {
    match (single, range) {
        (Some(_), Some(_)) => Err(Failure::usage(format!(
            "--{name} and --{name}-range are mutually exclusive"
        ))),
        (Some(v), None) => Ok(Some(vec![v])),
        (None, Some(r)) => parse_range(r).map(Some).map_err(Failure::usage),
        (None, None) => Ok(None),
    }
}

fn required_axis(name: &str, single: Option<i64>, range: &Option<String>) -> Result<Vec<i64>, Failure> {
    axis(name, single, range)?
        .ok_or_else(|| Failure::usage(format!("--{name} or --{name}-range is required")))
}

fn required(name: &str, v: Option<i64>) -> Result<i64, Failure> {
    v.ok_or_else(|| Failure::usage(format!("--{name} is required")))
}

fn nonneg(name: &str, v: i64) -> Result<usize, Failure> {
    usize::try_from(v).map_err(|_| Failure::invalid(format!("--{name} must be nonnegative, got {v}")))
}

fn parse_word(s: &str) -> Result<BitWord, Failure> {
    s.parse::<BitWord>().map_err(|e| Failure::invalid(e.to_string()))
}

fn grid(cfg: &RunConfig) -> Result<Vec<(i64, i64, i64)>, Failure> {
    let ns = required_axis("n", cfg.n, &cfg.n_range)?;
    let ls = required_axis("ell", cfg.ell, &cfg.ell_range)?;
    let ts = required_axis("t", cfg.t, &cfg.t_range)?;
    let mut points = Vec::new();
    for &n in &ns {
        for &l in &ls {
            for &t in &ts {
                points.push((n, l, t));
            }
        }
    }
    Ok(points)
}

pub fn run_table(cfg: &RunConfig) -> Result<(String, i32), Failure> {
    let points = grid(cfg)?;
    if let Some(&(_, l, _)) = points.iter().find(|p| p.1 < 2) {
        return Err(Failure::invalid(format!("ℓ must be at least 2, got {l}")));
    }
    let mut memo = CountMemo::new();
    let mut section = Section::new(&["n", "l", "t", "D", "N_formula", "N_recursive", "equal"]);
    let mut all_equal = true;
    for (n, l, t) in points {
        let closed = intersection_bound(n, l, t)?;
        let rec = intersection_bound_recursive(n, l, t, &mut memo)?;
        let eq = closed == rec;
        all_equal &= eq;
        section.rows.push(vec![
            int(n),
            int(l),
            int(t),
            int(ball_size(n, t)),
            int(closed),
            int(rec),
            Cell::Bool(eq),
        ]);
    }
    let code = if all_equal { EXIT_OK } else { EXIT_MISMATCH };
    Ok((render(&[section], cfg.format), code))
}

fn verify_row(r: &SearchReport) -> Vec<Cell> {
    vec![
        int(r.n),
        int(r.ell),
        int(r.t),
        int(&r.formula_value),
        int(r.max_value),
        text(r.verdict),
        text(r.witness_string()),
        int(r.tuples_examined),
        int(r.tuples_pruned),
    ]
}

pub fn run_verify(cfg: &RunConfig) -> Result<(String, i32), Failure> {
    let mut points = Vec::new();
    for (n, l, t) in grid(cfg)? {
        points.push((nonneg("n", n)?, nonneg("ell", l)?, nonneg("t", t)?));
    }
    let search = SearchConfig {
        threads: cfg.threads.unwrap_or_else(default_threads),
        ..SearchConfig::default()
    };
    for &(n, l, t) in &points {
        check_search(n, l, t, search.max_tuples).map_err(|e| {
            Failure::invalid(format!("refusing (n={n}, l={l}, t={t}): {e}"))
        })?;
    }
    let mut section = Section::new(&[
        "n",
        "l",
        "t",
        "formula",
        "brute_force",
        "verdict",
        "witness",
        "tuples_examined",
        "tuples_pruned",
    ]);
    let mut code = EXIT_OK;
    for (n, l, t) in points {
        let r = brute_force_max_with(n, l, t, &search)?;
        if cfg.assert_roundtrip {
            let again = intersection_size(&r.witness, t)?;
            if again != r.max_value {
                eprintln!(
                    "round-trip failure at n={n} l={l} t={t}: witness gives {again}, reported {}",
                    r.max_value
                );
                code = EXIT_MISMATCH;
            }
        }
        if r.verdict != Verdict::Match {
            if r.asserted() {
                eprintln!(
                    "mismatch at n={n} l={l} t={t}: brute force {} vs formula {}",
                    r.max_value, r.formula_value
                );
                code = EXIT_MISMATCH;
            } else {
                eprintln!(
                    "finding (not asserted) at n={n} l={l} t={t}: brute force {} vs formula {}",
                    r.max_value, r.formula_value
                );
            }
        }
        section.rows.push(verify_row(&r));
    }
    Ok((render(&[section], cfg.format), code))
}

pub fn run_ball(cfg: &RunConfig) -> Result<(String, i32), Failure> {
    let x = parse_word(
        cfg.x
            .as_deref()
            .ok_or_else(|| Failure::usage("--x is required"))?,
    )?;
    let t = nonneg("t", required("t", cfg.t)?)?;
    let ball = deletion_ball(&x, t)?;
    let mut section = Section::new(&["word"]);
    section.header = false;
    section.rows = ball.iter().map(|w| vec![text(w)]).collect();
    Ok((render(&[section], cfg.format), EXIT_OK))
}

fn word_section(column: &'static str, words: impl Iterator<Item = BitWord>) -> Section {
    let mut s = Section::new(&[column]);
    s.rows = words.map(|w| vec![text(w)]).collect();
    s
}

pub fn run_reconstruct(cfg: &RunConfig) -> Result<(String, i32), Failure> {
    let n = match (cfg.n, &cfg.x) {
        (None, Some(x)) => x.trim().len(),
        (n, _) => nonneg("n", required("n", n)?)?,
    };
    let ell = nonneg("ell", cfg.ell.unwrap_or(3))?;
    if ell < 3 {
        return Err(Failure::invalid(format!("ℓ must be at least 3, got {ell}")));
    }
    let reads: ReadSet = match (&cfg.reads, &cfg.x) {
        (Some(_), Some(_)) => return Err(Failure::usage("give either --reads or --x, not both")),
        (Some(path), None) => {
            let body = std::fs::read_to_string(path)
                .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
            parse_reads(&body, n).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?
        }
        (None, Some(x)) => {
            let x = parse_word(x)?;
            if x.len() != n {
                return Err(Failure::invalid(format!("--x has length {}, --n is {n}", x.len())));
            }
            let t = nonneg("t", required("t", cfg.t)?)?;
            let ball_len = deletion_ball(&x, t)?.len();
            let threshold = reconstruction_threshold(n as i64, ell as i64, t as i64)?;
            let m = usize::try_from(&threshold).map_or(ball_len, |th| th.min(ball_len));
            sample_reads(&x, t, m, cfg.seed)?
        }
        (None, None) => return Err(Failure::usage("--reads or --x is required")),
    };
    if let Some(t) = cfg.t {
        if cfg.reads.is_some() && t as usize != reads.t() {
            return Err(Failure::invalid(format!(
                "reads imply t = {}, --t is {t}",
                reads.t()
            )));
        }
    }
    let report = check_guarantee(n, ell, reads.t(), &reads)?;
    let mut sections = Vec::new();
    if cfg.x.is_some() {
        sections.push(word_section("read", reads.reads().iter()));
    }
    sections.push(word_section("candidate", report.candidates.iter()));
    let mut summary = Section::new(&[
        "n",
        "l",
        "t",
        "read_count",
        "threshold",
        "candidates",
        "guarantee_met",
        "list_within_bound",
    ]);
    summary.rows.push(vec![
        int(report.n),
        int(report.ell),
        int(report.t),
        int(report.read_count),
        int(&report.threshold),
        int(report.candidates.len()),
        Cell::Bool(report.guarantee_met),
        Cell::Bool(report.list_within_bound),
    ]);
    sections.push(summary);
    Ok((render(&sections, cfg.format), EXIT_OK))
}

pub fn run_witness(cfg: &RunConfig) -> Result<(String, i32), Failure> {
    let n = nonneg("n", required("n", cfg.n)?)?;
    let ell = nonneg("ell", required("ell", cfg.ell)?)?;
    let t = nonneg("t", required("t", cfg.t)?)?;
    let reads = worst_case_reads(n, ell, t)?;
    let cands = candidates(&reads);
    let sections = [
        word_section("read", reads.reads().iter()),
        word_section("candidate", cands.iter()),
    ];
    Ok((render(&sections, cfg.format), EXIT_OK))
}

/// Runs a parsed configuration, writing output, and returns the exit code.
pub fn execute(cfg: &RunConfig) -> i32 {
    let result = match cfg.command {
        Command::Table => run_table(cfg),
        Command::Verify => run_verify(cfg),
        Command::Ball => run_ball(cfg),
        Command::Reconstruct => run_reconstruct(cfg),
        Command::Witness => run_witness(cfg),
    };
    match result {
        Ok((body, code)) => {
            let written = match &cfg.out {
                Some(path) => std::fs::write(path, body.as_bytes()),
                None => std::io::stdout().lock().write_all(body.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("seqrecon: cannot write output: {e}");
                return EXIT_INVALID;
            }
            code
        }
        Err(f) => {
            eprintln!("seqrecon: {}", f.message);
            f.code
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => execute(&cfg),
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            }
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os())
}
