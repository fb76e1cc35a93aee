//! Command-line front end. `main.rs` only parses arguments and calls [`run`].
//!
//! Exit codes: 0 when every check passes, 1 on a verification failure, 2 on
//! usage or resource errors.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::canonical::{fc_count_formula_d, homogeneous_canonical};
use crate::commutation::{commutation_class_capped, DEFAULT_CLASS_CAP};
use crate::dynkin::DynkinGraph;
use crate::error::{Error, Result};
use crate::klr::{check_modules, components_for_words};
use crate::packets::catalan::{catalan, CatalanTriangle, Method};
use crate::packets::export::{write_csv, write_json};
use crate::packets::{verify_bijections, verify_identity, verify_theorem, Decomposition};
use crate::weight_graph::{
    build_graph, homogeneous_components, Content, HomogeneityCheck, DEFAULT_HEIGHT_CAP,
};
use crate::word::Word;

/// Largest `n` for which the identity check also enumerates directly.
const IDENTITY_DIRECT_LIMIT: usize = 8;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "fullcomm",
    version,
    about = "Fully commutative elements of type D"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the homogeneous canonical words of D_n with their packet labels
    Enumerate(RankArgs),
    /// Packet sizes per k, or the full listing of one packet with --k
    Packets(PacketArgs),
    /// Run verification suites
    Verify(VerifyArgs),
    /// Print Catalan's triangle
    Catalan(CatalanArgs),
}

#[derive(Args, Debug)]
pub struct CommonArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Write output here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Worker threads (default: all cores)
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug)]
pub struct RankArgs {
    #[arg(long)]
    pub n: usize,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct PacketArgs {
    #[arg(long)]
    pub n: usize,

    #[arg(long)]
    pub k: Option<usize>,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,

    #[arg(long, value_enum, value_delimiter = ',',
          default_values_t = [Check::Counts, Check::Packets, Check::Bijections, Check::Identity])]
    pub check: Vec<Check>,

    /// Contents up to this height are also checked on the full weight graph
    #[arg(long, default_value_t = DEFAULT_HEIGHT_CAP)]
    pub height_cap: usize,

    /// Largest commutation class explored
    #[arg(long, default_value_t = DEFAULT_CLASS_CAP)]
    pub class_cap: usize,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct CatalanArgs {
    #[arg(long)]
    pub rows: usize,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Counts,
    Packets,
    Bijections,
    Identity,
    Weightgraph,
    Klr,
}

/// Runs a parsed command line and returns the exit code. Errors are printed
/// to standard error.
pub fn run(cli: Cli) -> i32 {
    let common = match &cli.command {
        Command::Enumerate(a) => &a.common,
        Command::Packets(a) => &a.common,
        Command::Verify(a) => &a.common,
        Command::Catalan(a) => &a.common,
    };
    // output is buffered so a failing run never leaves a partial file behind
    let result = with_jobs(common.jobs, || {
        let mut buf = Vec::new();
        dispatch(&cli.command, &mut buf).map(|ok| (ok, buf))
    })
    .and_then(|r| r)
    .and_then(|(ok, buf)| {
        let mut out = open_output(common.out.as_ref())?;
        out.write_all(&buf)
            .and_then(|_| out.flush())
            .map_err(io_err)?;
        Ok(ok)
    });
    match result {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: &Command, out: &mut dyn Write) -> Result<bool> {
    match cmd {
        Command::Enumerate(a) => cmd_enumerate(a, out).map(|_| true),
        Command::Packets(a) => cmd_packets(a, out).map(|_| true),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Catalan(a) => cmd_catalan(a, out),
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Error::invalid("--jobs must be positive")),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::ResourceLimit(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(io_err)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn io_err(e: io::Error) -> Error {
    Error::ResourceLimit(format!("i/o: {e}"))
}

fn check_rank(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::invalid("n must be ≥ 4"));
    }
    Ok(())
}

pub fn cmd_enumerate(a: &RankArgs, out: &mut dyn Write) -> Result<()> {
    check_rank(a.n)?;
    let dec = Decomposition::new(a.n)?;
    match a.common.format {
        Format::Json => write_json(out, a.n, &dec.packets),
        Format::Csv => write_csv(out, a.n, &dec.packets),
        Format::Table => {
            for (k, s, w) in dec.labeled_words() {
                writeln!(out, "k={k}\tsuffix={}\t{w}", s.word()).map_err(io_err)?;
            }
            writeln!(out, "total: {}", dec.word_count()).map_err(io_err)
        }
    }
}

fn plural(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

pub fn cmd_packets(a: &PacketArgs, out: &mut dyn Write) -> Result<()> {
    check_rank(a.n)?;
    if let Some(k) = a.k {
        if k > a.n {
            return Err(Error::invalid(format!("--k must be in 0..={}", a.n)));
        }
    }
    let dec = Decomposition::new(a.n)?;
    let selected: Vec<_> = dec
        .packets
        .iter()
        .filter(|p| a.k.is_none_or(|k| p.k == k))
        .collect();
    match a.common.format {
        Format::Json => return write_json(out, a.n, selected),
        Format::Csv => return write_csv(out, a.n, selected),
        Format::Table => {}
    }
    for p in selected {
        let words = p.collection_size().unwrap_or(0);
        writeln!(
            out,
            "k={}: {} × {}",
            p.k,
            plural(p.size(), "collection", "collections"),
            plural(words, "word", "words")
        )
        .map_err(io_err)?;
        if a.k.is_some() {
            for c in &p.collections {
                writeln!(out, "  suffix {}", c.suffix.word()).map_err(io_err)?;
                for w in &c.words {
                    writeln!(out, "    {w}").map_err(io_err)?;
                }
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SuiteResult {
    check: Check,
    passed: bool,
    summary: String,
    details: Vec<String>,
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<bool> {
    check_rank(a.n)?;
    let checks: BTreeSet<Check> = a.check.iter().copied().collect();
    let mut results = Vec::new();
    for &c in &checks {
        results.push(run_check(c, a)?);
    }
    let all = results.iter().all(|r| r.passed);
    match a.common.format {
        Format::Json => {
            let doc = json!({ "n": a.n, "passed": all, "checks": results });
            serde_json::to_writer_pretty(&mut *out, &doc)
                .map_err(|e| Error::ResourceLimit(e.to_string()))?;
            writeln!(out).map_err(io_err)?;
        }
        Format::Csv => {
            let mut wtr = csv::Writer::from_writer(&mut *out);
            wtr.write_record(["n", "check", "passed", "summary"])
                .map_err(|e| Error::ResourceLimit(e.to_string()))?;
            for r in &results {
                let check = serde_json::to_value(r.check).expect("check serializes");
                wtr.write_record([
                    a.n.to_string(),
                    check.as_str().unwrap_or_default().to_string(),
                    r.passed.to_string(),
                    r.summary.clone(),
                ])
                .map_err(|e| Error::ResourceLimit(e.to_string()))?;
            }
            wtr.flush().map_err(io_err)?;
        }
        Format::Table => {
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{:?}: {} {status}", r.check, r.summary).map_err(io_err)?;
                for d in &r.details {
                    writeln!(out, "  {d}").map_err(io_err)?;
                }
            }
            writeln!(
                out,
                "{}",
                if all {
                    "all checks passed"
                } else {
                    "verification failed"
                }
            )
            .map_err(io_err)?;
        }
    }
    Ok(all)
}

fn run_check(c: Check, a: &VerifyArgs) -> Result<SuiteResult> {
    let n = a.n;
    let mut details = Vec::new();
    let (passed, summary) = match c {
        Check::Counts => {
            let found = homogeneous_canonical(n)?.len();
            let formula = fc_count_formula_d(n);
            let ok = formula == found.into();
            (ok, format!("{found} = {formula}"))
        }
        Check::Packets => {
            let rep = verify_theorem(n)?;
            for v in rep.violations() {
                details.push(format!(
                    "k={} suffix {}: {} != {}",
                    v.k, v.suffix, v.size, v.expected
                ));
            }
            for (k, found, formula) in rep.packet_size_mismatches() {
                details.push(format!("|P({n},{k})| = {found} != {formula}"));
            }
            (
                rep.passed(),
                format!("{} collections sized by C({n},k)", rep.checks.len()),
            )
        }
        Check::Bijections => {
            let reps = verify_bijections(n)?;
            for r in &reps {
                let status = if r.passed() { "ok" } else { "FAIL" };
                details.push(format!(
                    "{} k={}: {} -> {} {status}",
                    r.name, r.k, r.domain_size, r.codomain_size
                ));
                details.extend(r.failures.iter().map(|f| format!("    {f}")));
            }
            (
                reps.iter().all(|r| r.passed()),
                format!("{} maps", reps.len()),
            )
        }
        Check::Identity => {
            let rep = verify_identity(n, IDENTITY_DIRECT_LIMIT)?;
            if let Some(d) = &rep.direct {
                details.push(format!("direct enumeration: {d}"));
            }
            (rep.passed(), format!("{} = {}", rep.lhs, rep.rhs))
        }
        Check::Weightgraph => check_weight_graph(a, &mut details)?,
        Check::Klr => {
            let g = DynkinGraph::type_d(n)?;
            let words: Vec<Word> = homogeneous_canonical(n)?
                .into_iter()
                .map(|f| f.word)
                .collect();
            let comps = components_for_words(&words, &g)?;
            let checks = check_modules(&comps, &g)?;
            for m in checks.iter().filter(|m| !m.passed()) {
                details.push(format!(
                    "{}: default={} reversed={} grading={}",
                    m.representative, m.relations_default, m.relations_reversed, m.grading
                ));
            }
            let total: usize = checks.iter().map(|m| m.checked).sum();
            (
                checks.iter().all(|m| m.passed()),
                format!("{} modules, {total} relation instances", checks.len()),
            )
        }
    };
    Ok(SuiteResult {
        check: c,
        passed,
        summary,
        details,
    })
}

/// Homogeneous components of every content of a fully commutative word are
/// exactly the commutation classes of those words.
fn check_weight_graph(a: &VerifyArgs, details: &mut Vec<String>) -> Result<(bool, String)> {
    let g = DynkinGraph::type_d(a.n)?;
    let fc: Vec<Word> = homogeneous_canonical(a.n)?
        .into_iter()
        .map(|f| f.word)
        .collect();
    let comps = components_for_words(&fc, &g)?;
    let mut ok = comps.len() == fc.len();
    if !ok {
        details.push(format!(
            "{} components for {} elements",
            comps.len(),
            fc.len()
        ));
    }
    let mut classes = BTreeSet::new();
    for w in &fc {
        let mut class = commutation_class_capped(w, &g, a.class_cap)?;
        class.sort();
        classes.insert(class);
    }
    for c in &comps {
        if !classes.contains(&c.words) {
            ok = false;
            details.push(format!(
                "component of {} is not a commutation class",
                c.representative()
            ));
        }
    }
    // the full graph is built for contents up to the height cap
    let contents: BTreeSet<Content> = fc.iter().map(|w| Content::of_word(w, a.n)).collect();
    let mut full = 0;
    for alpha in contents.iter().filter(|c| c.height() <= a.height_cap) {
        let wg = build_graph(alpha, &g, a.height_cap)?;
        let slow = homogeneous_components(&wg, &g, HomogeneityCheck::Paranoid);
        let fast: Vec<_> = comps
            .iter()
            .filter(|c| &Content::of_word(c.representative(), a.n) == alpha)
            .cloned()
            .collect();
        if slow != fast {
            ok = false;
            details.push(format!("full graph disagrees for {alpha}"));
        }
        full += 1;
    }
    Ok((
        ok,
        format!(
            "{} homogeneous components, {full} of {} contents on the full graph",
            comps.len(),
            contents.len()
        ),
    ))
}

pub fn cmd_catalan(a: &CatalanArgs, out: &mut dyn Write) -> Result<bool> {
    if a.rows == 0 {
        return Err(Error::invalid("--rows must be at least 1"));
    }
    let t = CatalanTriangle::new(a.rows - 1);
    let mut agree = true;
    for n in 0..a.rows {
        for (k, v) in t.row(n).iter().enumerate() {
            if &catalan(n, k, Method::Closed)? != v {
                agree = false;
                eprintln!("methods disagree at C({n},{k})");
            }
        }
    }
    match a.common.format {
        Format::Table => {
            for n in 0..a.rows {
                let row: Vec<String> = t.row(n).iter().map(|v| v.to_string()).collect();
                writeln!(out, "{}", row.join(" ")).map_err(io_err)?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,k,value").map_err(io_err)?;
            for n in 0..a.rows {
                for (k, v) in t.row(n).iter().enumerate() {
                    writeln!(out, "{n},{k},{v}").map_err(io_err)?;
                }
            }
        }
        Format::Json => {
            let rows: Vec<Vec<String>> = (0..a.rows)
                .map(|n| t.row(n).iter().map(|v| v.to_string()).collect())
                .collect();
            writeln!(out, "{}", json!({ "rows": rows })).map_err(io_err)?;
        }
    }
    Ok(agree)
}
