//! Command-line front end: check structure files, derive constructions,
//! and search coefficient spaces for passing instances.
//!
//! Exit codes: 0 when every check passed, 1 when at least one axiom was
//! violated, 2 when no check ran (bad usage, unreadable or malformed input,
//! or a refused search budget).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use homcsa::{regular_bimodule, CheckReport};
use homcsa_cli::formats::{
    self, AlgebraDoc, BimoduleDoc, Doc, LieMatchedPairDoc, RepresentationDoc,
};
use homcsa_cli::report_json::{
    rows_from_check, sha256_hex, verdict_row, AxiomJson, InputDigest, RunReport,
};
use homcsa_cli::search::{
    found_to_doc, run_search, SearchConfig, SearchMode, SearchTarget, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(name = "homcsa", version, about = "Exact checkers for twisted algebra structures")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check structure files against the axioms of the given kind.
    Check {
        kind: CheckKind,
        /// One or more structure files; each contributes its own report rows.
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Emit the machine-readable report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Build a derived structure, write it to a file, and post-check it.
    Derive {
        kind: DeriveKind,
        /// Input structure files (two for tensor-rep, one otherwise).
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Output path; written even when the post-check fails.
        #[arg(short, long)]
        out: PathBuf,
        /// Emit the machine-readable report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate or sample candidates and print every passer to stdout.
    Search {
        #[arg(long)]
        dim: usize,
        /// Comma-separated coefficient set, e.g. "-1,0,1" or "0,1,1/2".
        #[arg(long, default_value = "-1,0,1", allow_hyphen_values = true)]
        set: String,
        #[arg(long)]
        mode: ModeArg,
        /// Number of draws (random mode only).
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        /// Stream seed (random mode only).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        target: TargetArg,
        /// Largest exhaustive candidate space the search will accept.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Algebra,
    HomLie,
    Bimodule,
    Representation,
    MatchedPair,
    LieMatchedPair,
    Bialgebra,
    Manin,
    Equivalence,
}

impl CheckKind {
    fn expected_file(self) -> &'static str {
        match self {
            CheckKind::Algebra | CheckKind::HomLie => "algebra",
            CheckKind::Bimodule => "bimodule",
            CheckKind::Representation => "representation",
            CheckKind::MatchedPair => "matched-pair",
            CheckKind::LieMatchedPair => "lie-matched-pair",
            CheckKind::Bialgebra | CheckKind::Manin | CheckKind::Equivalence => "bialgebra",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DeriveKind {
    Commutator,
    RegularBimodule,
    DualBimodule,
    Semidirect,
    Bicross,
    ManinDouble,
    TensorRep,
    InducedLiePair,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    HomCsa,
    HomLie,
    Bialgebra,
}

fn main() {
    let cli = Cli::parse();
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let code = match run(cli, command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli, command: String) -> Result<i32> {
    match cli.cmd {
        Cmd::Check { kind, files, json } => cmd_check(kind, &files, json, command),
        Cmd::Derive {
            kind,
            inputs,
            out,
            json,
        } => cmd_derive(kind, &inputs, &out, json, command),
        Cmd::Search {
            dim,
            set,
            mode,
            samples,
            seed,
            target,
            budget,
        } => cmd_search(dim, &set, mode, samples, seed, target, budget),
    }
}

fn read_doc(path: &Path) -> Result<(Doc, InputDigest)> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let digest = InputDigest {
        path: path.display().to_string(),
        sha256: sha256_hex(&bytes),
    };
    let text =
        String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))?;
    let doc = formats::parse_doc(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok((doc, digest))
}

fn file_label(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn emit(report: &RunReport, json: bool) {
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_human());
    }
}

fn cmd_check(kind: CheckKind, files: &[PathBuf], json: bool, command: String) -> Result<i32> {
    let start = Instant::now();
    let mut inputs = Vec::new();
    let mut rows = Vec::new();
    let multi = files.len() > 1;
    for path in files {
        let (doc, digest) = read_doc(path)?;
        inputs.push(digest);
        let prefix = if multi {
            format!("{}:", file_label(path))
        } else {
            String::new()
        };
        rows.extend(check_rows(kind, &doc, &prefix)?);
    }
    let report = RunReport::new(command, inputs, rows, start.elapsed().as_millis() as u64);
    emit(&report, json);
    Ok(if report.verdict { 0 } else { 1 })
}

fn check_rows(kind: CheckKind, doc: &Doc, prefix: &str) -> Result<Vec<AxiomJson>> {
    let rows = match (kind, doc) {
        (CheckKind::Algebra, Doc::Algebra(a)) => {
            rows_from_check(prefix, &a.to_algebra()?.check_center_symmetric())
        }
        (CheckKind::HomLie, Doc::Algebra(a)) => {
            rows_from_check(prefix, &a.to_algebra()?.check_hom_jacobi())
        }
        (CheckKind::Bimodule, Doc::Bimodule(b)) => {
            rows_from_check(prefix, &b.to_bimodule()?.check())
        }
        (CheckKind::Representation, Doc::Representation(r)) => {
            rows_from_check(prefix, &r.to_representation()?.check())
        }
        (CheckKind::MatchedPair, Doc::MatchedPair(m)) => {
            rows_from_check(prefix, &m.to_pair()?.check())
        }
        (CheckKind::LieMatchedPair, Doc::LieMatchedPair(m)) => {
            rows_from_check(prefix, &m.to_pair()?.check())
        }
        (CheckKind::Bialgebra, Doc::Bialgebra(b)) => {
            rows_from_check(prefix, &b.to_paired()?.check_bialgebra())
        }
        (CheckKind::Manin, Doc::Bialgebra(b)) => {
            let paired = b.to_paired()?;
            let mut report = CheckReport::new();
            report.merge_prefixed(
                "double-",
                paired.standard_manin_algebra().check_center_symmetric(),
            );
            report.merge(paired.check_manin_invariance());
            rows_from_check(prefix, &report)
        }
        (CheckKind::Equivalence, Doc::Bialgebra(b)) => {
            let report = b.to_paired()?.equivalence_report();
            vec![
                verdict_row(format!("{prefix}manin-triple"), report.manin_triple),
                verdict_row(format!("{prefix}matched-pair"), report.matched_pair),
                verdict_row(
                    format!("{prefix}lie-matched-pair"),
                    report.lie_matched_pair,
                ),
                verdict_row(format!("{prefix}bialgebra"), report.bialgebra),
                verdict_row(
                    format!("{prefix}primal-center-symmetric"),
                    report.primal_center_symmetric,
                ),
                verdict_row(
                    format!("{prefix}dual-center-symmetric"),
                    report.dual_center_symmetric,
                ),
                verdict_row(
                    format!("{prefix}twist-involutive"),
                    report.twist_involutive,
                ),
            ]
        }
        (kind, doc) => bail!(
            "this check reads a {} file, found kind {:?}",
            kind.expected_file(),
            doc.kind()
        ),
    };
    Ok(rows)
}

fn cmd_derive(
    kind: DeriveKind,
    inputs: &[PathBuf],
    out: &Path,
    json: bool,
    command: String,
) -> Result<i32> {
    let start = Instant::now();
    let expected = if kind == DeriveKind::TensorRep { 2 } else { 1 };
    if inputs.len() != expected {
        bail!("this derivation takes {expected} input file(s), found {}", inputs.len());
    }
    let mut digests = Vec::new();
    let mut docs = Vec::new();
    for path in inputs {
        let (doc, digest) = read_doc(path)?;
        digests.push(digest);
        docs.push(doc);
    }
    let (derived, post) = build_derived(kind, &docs)?;
    fs::write(out, formats::canonical_json(&derived))
        .with_context(|| format!("writing {}", out.display()))?;
    eprintln!("wrote {}", out.display());
    let rows = rows_from_check("", &post);
    let report = RunReport::new(command, digests, rows, start.elapsed().as_millis() as u64);
    emit(&report, json);
    Ok(if report.verdict { 0 } else { 1 })
}

fn build_derived(kind: DeriveKind, docs: &[Doc]) -> Result<(Doc, CheckReport)> {
    Ok(match (kind, &docs[0]) {
        (DeriveKind::Commutator, Doc::Algebra(a)) => {
            let bracket = a.to_algebra()?.commutator_algebra();
            let doc = Doc::Algebra(AlgebraDoc::from_algebra(None, &bracket));
            let post = bracket.check_hom_jacobi();
            (doc, post)
        }
        (DeriveKind::RegularBimodule, Doc::Algebra(a)) => {
            let algebra = a.to_algebra()?;
            let b = regular_bimodule(&algebra);
            let base = AlgebraDoc::from_algebra(a.name.clone(), &algebra);
            let post = b.check();
            (Doc::Bimodule(BimoduleDoc::from_bimodule(None, base, &b)), post)
        }
        (DeriveKind::DualBimodule, Doc::Bimodule(bd)) => {
            let dual = bd.to_bimodule()?.dual();
            let base = AlgebraDoc::from_algebra(bd.base.name.clone(), dual.base());
            let post = dual.check();
            (
                Doc::Bimodule(BimoduleDoc::from_bimodule(bd.name.clone(), base, &dual)),
                post,
            )
        }
        (DeriveKind::Semidirect, Doc::Bimodule(bd)) => {
            let sum = bd.to_bimodule()?.semidirect();
            let post = sum.check_center_symmetric();
            (Doc::Algebra(AlgebraDoc::from_algebra(None, &sum)), post)
        }
        (DeriveKind::Semidirect, Doc::Representation(rd)) => {
            let sum = rd.to_representation()?.semidirect();
            let post = sum.check_hom_jacobi();
            (Doc::Algebra(AlgebraDoc::from_algebra(None, &sum)), post)
        }
        (DeriveKind::Bicross, Doc::MatchedPair(md)) => {
            let product = md.to_pair()?.bicross_product();
            let post = product.check_center_symmetric();
            (Doc::Algebra(AlgebraDoc::from_algebra(None, &product)), post)
        }
        (DeriveKind::ManinDouble, Doc::Bialgebra(bd)) => {
            let double = bd.to_paired()?.standard_manin_algebra();
            let post = double.check_center_symmetric();
            (Doc::Algebra(AlgebraDoc::from_algebra(None, &double)), post)
        }
        (DeriveKind::TensorRep, Doc::Representation(first)) => {
            let Doc::Representation(second) = &docs[1] else {
                bail!("tensor-rep reads two representation files, second was {:?}", docs[1].kind());
            };
            let left = first.to_representation()?;
            let right = second.to_representation()?;
            let tensor = left
                .tensor_product(&right)
                .context("tensor-rep inputs must share one base algebra")?;
            let base = AlgebraDoc::from_algebra(None, tensor.base());
            let post = tensor.check();
            (
                Doc::Representation(RepresentationDoc::from_representation(None, base, &tensor)),
                post,
            )
        }
        (DeriveKind::InducedLiePair, Doc::MatchedPair(md)) => {
            let pair = md.to_pair()?.induced_lie_pair();
            let post = pair.check();
            (Doc::LieMatchedPair(LieMatchedPairDoc::from_pair(None, &pair)), post)
        }
        (kind, doc) => bail!(
            "derive {} does not read a {:?} file",
            kind_name(kind),
            doc.kind()
        ),
    })
}

fn kind_name(kind: DeriveKind) -> &'static str {
    match kind {
        DeriveKind::Commutator => "commutator",
        DeriveKind::RegularBimodule => "regular-bimodule",
        DeriveKind::DualBimodule => "dual-bimodule",
        DeriveKind::Semidirect => "semidirect",
        DeriveKind::Bicross => "bicross",
        DeriveKind::ManinDouble => "manin-double",
        DeriveKind::TensorRep => "tensor-rep",
        DeriveKind::InducedLiePair => "induced-lie-pair",
    }
}

fn cmd_search(
    dim: usize,
    set: &str,
    mode: ModeArg,
    samples: u64,
    seed: u64,
    target: TargetArg,
    budget: u64,
) -> Result<i32> {
    let set = set
        .split(',')
        .map(|piece| {
            formats::parse_rational(piece).map_err(|e| anyhow::anyhow!("--set entry {piece:?}: {e}"))
        })
        .collect::<Result<Vec<_>>>()?;
    let config = SearchConfig {
        dim,
        set,
        mode: match mode {
            ModeArg::Exhaustive => SearchMode::Exhaustive,
            ModeArg::Random => SearchMode::Random { samples, seed },
        },
        target: match target {
            TargetArg::HomCsa => SearchTarget::HomCsa,
            TargetArg::HomLie => SearchTarget::HomLie,
            TargetArg::Bialgebra => SearchTarget::Bialgebra,
        },
        budget,
    };
    let found = run_search(&config)?;
    let mut stdout = std::io::stdout().lock();
    for f in &found {
        stdout.write_all(formats::canonical_json(&found_to_doc(f)).as_bytes())?;
    }
    stdout.flush()?;
    eprintln!("{} passer(s)", found.len());
    Ok(0)
}
