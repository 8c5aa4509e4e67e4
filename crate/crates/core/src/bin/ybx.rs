//! Command-line interface over the analysis library.
//!
//! Exit codes: 0 on success, 1 on a semantic failure (axiom violation,
//! failed verification, empty folding search), 2 on usage, parse or I/O
//! errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ybx::census;
use ybx::document::SolutionDocument;
use ybx::error::Error;
use ybx::folding;
use ybx::garside::{ComplementSystem, DivisorLattice};
use ybx::mask::{self, Mask};
use ybx::parabolic;
use ybx::report;
use ybx::solution::SolutionTable;

#[derive(Parser)]
#[command(
    name = "ybx",
    about = "Analyze finite involutive set-theoretic Yang-Baxter solutions and the Garside structure of their structure monoids",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the solution axioms and the R-matrix conditions.
    Check(InputArgs),
    /// Invariant subsets, parabolic subgroups, decomposability, Δ-classes.
    Analyze(InputArgs),
    /// Print the defining relations of the structure monoid.
    Presentation(InputArgs),
    /// Dump the divisor lattice of Δ.
    Lattice(InputArgs),
    /// Search for foldings, or validate one partition.
    Fold {
        #[command(flatten)]
        input: InputArgs,
        /// Only foldings whose blocks generate standard parabolic subgroups.
        #[arg(long)]
        strong: bool,
        /// Validate a single partition, e.g. "1,2,3,4|5".
        #[arg(long)]
        partition: Option<String>,
        /// Word-length bound of the folding morphism certificate.
        #[arg(long, default_value_t = folding::DEFAULT_CERTIFICATE_DEPTH)]
        depth: usize,
    },
    /// Run a named verifier against the input.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// a: invariant subsets ↔ parabolic subgroups; b: decomposability ↔
        /// strong foldings; garside: the lattice axioms; all: everything.
        #[arg(long, value_enum, default_value_t = Theorem::All)]
        theorem: Theorem,
    },
    /// Enumerate all solutions of size n (n ≤ 4), as JSON lines.
    Enumerate {
        n: usize,
        /// Deduplicate up to isomorphism.
        #[arg(long)]
        iso: bool,
        /// Output file (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; never changes the output.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Randomized spot-check mode: try this many random candidates
        /// instead of the exhaustive sweep (required for n > 4).
        #[arg(long)]
        sample: Option<usize>,
        /// Seed for --sample.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Scan a census for strongly foldable yet indecomposable solutions.
    Survey {
        n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Path to a solution document.
    path: Option<PathBuf>,
    /// Inline JSON document instead of a path.
    #[arg(long, conflicts_with = "path")]
    inline: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Reversing step budget per call (default 4^total-length).
    /// Mirrored by the YBX_BUDGET environment variable.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Theorem {
    A,
    B,
    Garside,
    All,
}

/// 0 = pass, 1 = semantic failure, 2 = usage/parse failure.
fn error_code(e: &Error) -> u8 {
    match e {
        Error::Document(_)
        | Error::NotAPermutation { .. }
        | Error::NotPairBijection(..)
        | Error::RelationSet(_)
        | Error::Io(_)
        | Error::Json(_)
        | Error::Unsupported(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}

impl InputArgs {
    fn budget(&self) -> Option<u64> {
        self.budget.or_else(|| {
            std::env::var("YBX_BUDGET")
                .ok()
                .and_then(|v| v.parse().ok())
        })
    }

    fn load(&self) -> Result<SolutionTable, Error> {
        let text = match (&self.path, &self.inline) {
            (Some(p), None) => std::fs::read_to_string(p)?,
            (None, Some(s)) => s.clone(),
            _ => {
                return Err(Error::Document(
                    "provide exactly one input: a path or --inline".into(),
                ))
            }
        };
        SolutionDocument::from_json(&text)?.load()
    }

    fn lattice(&self, s: &SolutionTable) -> Result<DivisorLattice, Error> {
        let cs = ComplementSystem::new(s)?.with_step_limit(self.budget());
        DivisorLattice::build_with(cs)
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Check(input) => cmd_check(&input),
        Command::Analyze(input) => cmd_analyze(&input),
        Command::Presentation(input) => cmd_presentation(&input),
        Command::Lattice(input) => cmd_lattice(&input),
        Command::Fold { input, strong, partition, depth } => {
            cmd_fold(&input, strong, partition.as_deref(), depth)
        }
        Command::Verify { input, theorem } => cmd_verify(&input, theorem),
        Command::Enumerate { n, iso, out, jobs, sample, seed } => {
            cmd_enumerate(n, iso, out.as_deref(), jobs, sample, seed)
        }
        Command::Survey { n, jobs } => cmd_survey(n, jobs),
    }
}

fn cmd_check(input: &InputArgs) -> Result<u8, Error> {
    let s = input.load()?;
    let rep = report::CheckReport::of(&s);
    match input.format {
        Format::Json => println!("{}", serde_json::to_string(&rep)?),
        Format::Text => println!("{}", rep.render_text()),
    }
    Ok(u8::from(!(rep.symmetric && rep.nondegenerate)))
}

fn cmd_analyze(input: &InputArgs) -> Result<u8, Error> {
    let s = input.load()?;
    s.require_valid()?;
    let lat = input.lattice(&s)?;
    let rep = report::AnalysisReport::of(&s, &lat)?;
    match input.format {
        Format::Json => println!("{}", serde_json::to_string(&rep)?),
        Format::Text => println!("{}", rep.render_text()),
    }
    Ok(0)
}

fn cmd_presentation(input: &InputArgs) -> Result<u8, Error> {
    let s = input.load()?;
    let rs = s.presentation()?;
    match input.format {
        Format::Json => {
            let rels: Vec<[[usize; 2]; 2]> = rs
                .relations()
                .iter()
                .map(|&((a, b), (c, d))| [[a + 1, b + 1], [c + 1, d + 1]])
                .collect();
            println!(
                "{}",
                serde_json::to_string(&serde_json::json!({
                    "n": rs.n(),
                    "relations": rels,
                }))?
            );
        }
        Format::Text => println!("{}", rs.render_text()),
    }
    Ok(0)
}

fn cmd_lattice(input: &InputArgs) -> Result<u8, Error> {
    let s = input.load()?;
    s.require_valid()?;
    let lat = input.lattice(&s)?;
    let dump = report::lattice_dump(&lat);
    match input.format {
        Format::Json => println!("{}", serde_json::to_string(&dump)?),
        Format::Text => {
            for entry in &dump {
                println!(
                    "x_ell={:<12} x_r={:<12} word={}  balanced={}",
                    report::fmt_set(&entry.x_ell),
                    report::fmt_set(&entry.x_r),
                    report::fmt_word(&entry.word),
                    entry.balanced
                );
            }
        }
    }
    Ok(0)
}

fn parse_partition(spec: &str, n: usize) -> Result<Vec<Mask>, Error> {
    let mut blocks = Vec::new();
    for part in spec.split('|') {
        let mut block = 0 as Mask;
        for item in part.split(',') {
            let v: usize = item
                .trim()
                .parse()
                .map_err(|_| Error::Document(format!("bad partition element {item:?}")))?;
            if v == 0 || v > n {
                return Err(Error::Document(format!(
                    "partition element {v} out of range 1..={n}"
                )));
            }
            block |= mask::bit(v - 1);
        }
        blocks.push(block);
    }
    folding::validate_partition(n, &blocks).map_err(|e| Error::Document(e.to_string()))?;
    Ok(blocks)
}

fn cmd_fold(
    input: &InputArgs,
    strong: bool,
    partition: Option<&str>,
    depth: usize,
) -> Result<u8, Error> {
    let s = input.load()?;
    s.require_valid()?;
    let lat = input.lattice(&s)?;
    let partitions = partition
        .map(|spec| parse_partition(spec, s.n()))
        .transpose()?
        .map(|blocks| vec![blocks]);
    let mut reports = folding::find_foldings(&s, &lat, partitions.as_deref())?;
    if strong {
        reports.retain(|r| r.strong);
    }
    for rep in &reports {
        if !folding::certify_folding_morphism(&lat, rep, depth)? {
            return Err(Error::Theorem(
                "folding failed its morphism certificate".into(),
            ));
        }
    }
    let entries: Vec<report::FoldingEntry> = reports
        .iter()
        .map(|r| report::FoldingEntry::of(&lat, r))
        .collect();
    match input.format {
        Format::Json => println!("{}", serde_json::to_string(&entries)?),
        Format::Text => {
            if entries.is_empty() {
                println!("no foldings");
            }
            for e in &entries {
                println!("{}", e.render_text());
            }
        }
    }
    Ok(u8::from(entries.is_empty()))
}

fn read_documents(input: &InputArgs) -> Result<Vec<SolutionTable>, Error> {
    let text = match (&input.path, &input.inline) {
        (Some(p), None) => std::fs::read_to_string(p)?,
        (None, Some(s)) => s.clone(),
        _ => {
            return Err(Error::Document(
                "provide exactly one input: a path or --inline".into(),
            ))
        }
    };
    // Either a single document or census JSON lines with a trailing
    // summary record.
    if let Ok(doc) = SolutionDocument::from_json(&text) {
        return Ok(vec![doc.load()?]);
    }
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match SolutionDocument::from_json(line) {
            Ok(doc) => out.push(doc.load()?),
            Err(_) if serde_json::from_str::<report::CensusSummary>(line).is_ok() => {}
            Err(e) => return Err(e),
        }
    }
    if out.is_empty() {
        return Err(Error::Document("no solution documents in input".into()));
    }
    Ok(out)
}

fn cmd_verify(input: &InputArgs, theorem: Theorem) -> Result<u8, Error> {
    let tables = read_documents(input)?;
    let mut all_ok = true;
    for (idx, s) in tables.iter().enumerate() {
        let label = if tables.len() == 1 {
            String::new()
        } else {
            format!("[{}] ", idx + 1)
        };
        s.require_valid()?;
        let cs = ComplementSystem::new(s)?.with_step_limit(input.budget());
        let (ok, detail) = match theorem {
            Theorem::Garside => {
                let built = DivisorLattice::build_with(cs)
                    .and_then(|lat| lat.verify_against_reversing().map(|()| lat));
                match built {
                    Ok(lat) => (
                        true,
                        format!("{} simples, Δ of length {}", lat.simple_count(), lat.delta().len()),
                    ),
                    Err(e) => (false, e.to_string()),
                }
            }
            Theorem::A => {
                let lat = DivisorLattice::build_with(cs)?;
                let ok = parabolic::verify_parabolic_correspondence(s, &lat)?;
                let subs = s.invariant_subsets()?.len();
                (ok, format!("{subs} invariant subsets"))
            }
            Theorem::B => {
                let lat = DivisorLattice::build_with(cs)?;
                let ok = folding::verify_strong_folding_equivalence(s, &lat)?;
                let dec = parabolic::is_decomposable(s)?;
                (ok, format!("decomposable = {dec}"))
            }
            Theorem::All => {
                let rep = census::run_property_suite(s);
                let ok = rep.all_passed();
                let detail = if ok {
                    format!("{} checks passed", rep.checks.len())
                } else {
                    rep.failures()
                        .map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
                        .collect::<Vec<_>>()
                        .join("; ")
                };
                (ok, detail)
            }
        };
        println!("{label}{}: {detail}", if ok { "PASS" } else { "FAIL" });
        all_ok &= ok;
    }
    Ok(u8::from(!all_ok))
}

fn cmd_enumerate(
    n: usize,
    iso: bool,
    out: Option<&std::path::Path>,
    jobs: usize,
    sample: Option<usize>,
    seed: u64,
) -> Result<u8, Error> {
    let census = match sample {
        None => census::enumerate_solutions_jobs(n, iso, jobs)?,
        Some(samples) => {
            if n == 0 || n > mask::MAX_SET_SIZE {
                return Err(Error::Unsupported(format!(
                    "sampling supports 1..={}",
                    mask::MAX_SET_SIZE
                )));
            }
            let found = census::random_solutions(n, samples, seed);
            let raw = found.len();
            let mut classes = Vec::new();
            if iso {
                let mut seen = std::collections::BTreeSet::new();
                for t in found {
                    let c = census::canonical_form(&t)?;
                    let mut key = Vec::with_capacity(n * n);
                    for x in 0..n {
                        for y in 0..n {
                            key.push(c.s(x, y));
                        }
                    }
                    if seen.insert(key) {
                        classes.push(c);
                    }
                }
            } else {
                classes = found;
            }
            let iso_count = classes.len();
            census::SolutionCensus { n, classes, raw_count: raw, iso_count }
        }
    };
    let text = report::census_jsonl(&census);
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_survey(n: usize, jobs: usize) -> Result<u8, Error> {
    let census = census::enumerate_solutions_jobs(n, true, jobs)?;
    let mut hits = 0usize;
    for (idx, s) in census.classes.iter().enumerate() {
        let lat = DivisorLattice::build(s)?;
        let strong = folding::find_strong_foldings(s, &lat)?;
        let decomposable = parabolic::is_decomposable(s)?;
        if !strong.is_empty() && !decomposable {
            hits += 1;
            println!(
                "class {}: strongly foldable but indecomposable: {}",
                idx + 1,
                SolutionDocument::from_table(s).to_json()
            );
        }
    }
    println!(
        "n={n}: {} classes scanned, {} strongly-foldable-indecomposable",
        census.classes.len(),
        hits
    );
    Ok(0)
}
