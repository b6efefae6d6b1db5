//! `fintop`: enumerate, inspect, construct and verify finite topological
//! spaces.
//!
//! Exit codes: 0 on success, 1 when a verification reports a failure, 2 on
//! usage or input errors.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use fintop::constructions::{
    box_product, connectivity_quotient, duplicate_along, glue, one_point_compactification, product,
    simple_extension, skula, sobrification, sum_with_injections, t0_quotient, GluingData,
};
use fintop::enumeration::{all_continuous_maps, canonical_classes, enumerate_topologies, Shard};
use fintop::verify::{implication_dag, mine, run_suite};
use fintop::{characterization_suite, check, Axiom, FiniteSpace, SpaceDocument, SubsetMask};

#[derive(Parser)]
#[command(name = "fintop", version, about = "Finite topological spaces toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate separation axioms on a space document.
    Check {
        /// Space document; stdin when omitted.
        file: Option<PathBuf>,
        /// Comma-separated axiom names; all axioms when omitted.
        #[arg(long, value_delimiter = ',')]
        axioms: Vec<Axiom>,
        /// Also cross-check every registered characterization.
        #[arg(long)]
        characterize: bool,
    },
    /// Build a new space from existing ones.
    Construct {
        #[arg(value_enum)]
        op: Construction,
        /// Input documents. `glue` takes one gluing document instead.
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Subset for `ext` and `dup`, as comma-separated points.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
        /// Number of copies for `dup`.
        #[arg(long, default_value_t = 2)]
        copies: usize,
        /// Also emit the tables of the canonical maps.
        #[arg(long)]
        with_maps: bool,
    },
    /// Stream every topology on `n` labelled points as JSON lines.
    Enumerate {
        n: usize,
        /// Only shard `i/k` of the stream.
        #[arg(long)]
        shard: Option<Shard>,
        /// One representative per homeomorphism class instead.
        #[arg(long, conflicts_with = "shard")]
        canonical: bool,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Run the proposition checks over every space up to `--max-n` points.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Check ids or id prefixes, comma-separated.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// Also check both implication diagrams (at most 5 points).
        #[arg(long)]
        dag: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Shorthand for `--format text`.
        #[arg(long, conflicts_with = "format")]
        text: bool,
        /// Shorthand for `--format json`.
        #[arg(long, conflicts_with_all = ["format", "text"])]
        json: bool,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Search for the smallest space satisfying `p` but not `q`.
    Mine {
        #[arg(long)]
        p: Axiom,
        #[arg(long)]
        q: Axiom,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// List every continuous map between two spaces as JSON lines.
    Maps { dom: PathBuf, cod: PathBuf },
}

#[derive(Args)]
struct Jobs {
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, env = "FINTOP_JOBS")]
    jobs: Option<NonZeroUsize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// T0 quotient.
    T0q,
    /// Skula modification.
    Skula,
    /// Sobrification.
    Sobrify,
    Product,
    /// Box product.
    Box,
    /// Disjoint sum.
    Sum,
    /// One-point compactification.
    Opc,
    /// Simple extension by `--set`.
    Ext,
    /// Glue pieces along overlaps.
    Glue,
    /// Duplicate the complement of the open set `--set`.
    Dup,
    /// Connectivity quotient.
    Cq,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Input for `construct glue`.
#[derive(Deserialize)]
struct GluingDocument {
    pieces: Vec<SpaceDocument>,
    overlaps: Vec<Vec<Vec<usize>>>,
    homeos: Vec<Vec<Vec<Option<usize>>>>,
}

#[derive(Serialize)]
struct Constructed {
    space: SpaceDocument,
    #[serde(skip_serializing_if = "Option::is_none")]
    maps: Option<Value>,
}

/// A failure that maps to exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CliResult = Result<ExitCode, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Check {
            file,
            axioms,
            characterize,
        } => cmd_check(file, axioms, characterize),
        Command::Construct {
            op,
            inputs,
            set,
            copies,
            with_maps,
        } => cmd_construct(op, &inputs, set, copies, with_maps),
        Command::Enumerate {
            n,
            shard,
            canonical,
            jobs,
        } => cmd_enumerate(n, shard, canonical, jobs.jobs),
        Command::Verify {
            max_n,
            only,
            dag,
            format,
            text,
            json: _,
            jobs,
        } => {
            let format = if text { Format::Text } else { format };
            cmd_verify(max_n, only, dag, format, jobs.jobs)
        }
        Command::Mine { p, q, max_n } => cmd_mine(p, q, max_n),
        Command::Maps { dom, cod } => cmd_maps(&dom, &cod),
    }
}

fn read_text(path: Option<&PathBuf>) -> Result<String, InputError> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| InputError(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_space(path: Option<&PathBuf>) -> Result<(FiniteSpace, Option<String>), InputError> {
    let text = read_text(path)?;
    let doc: SpaceDocument = serde_json::from_str(&text)?;
    let space = doc.to_space()?;
    Ok((space, doc.name))
}

fn print_json(value: &impl Serialize) -> Result<(), InputError> {
    writeln!(io::stdout().lock(), "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn doc(space: &FiniteSpace) -> SpaceDocument {
    SpaceDocument::from_space(space)
}

fn cmd_check(file: Option<PathBuf>, axioms: Vec<Axiom>, characterize: bool) -> CliResult {
    let (space, name) = read_space(file.as_ref())?;
    let axioms = if axioms.is_empty() {
        Axiom::ALL.to_vec()
    } else {
        axioms
    };
    let verdicts: serde_json::Map<String, Value> = axioms
        .iter()
        .map(|&a| (a.name().to_string(), Value::Bool(check(&space, a))))
        .collect();
    let mut out = json!({ "axioms": verdicts });
    if let Some(name) = name {
        out["name"] = json!(name);
    }
    let mut ok = true;
    if characterize {
        let reports: Vec<_> = axioms
            .iter()
            .map(|&a| characterization_suite(&space, a))
            .collect();
        ok = reports.iter().all(|r| r.passed());
        out["characterization"] = serde_json::to_value(&reports)?;
    }
    print_json(&out)?;
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn points(set: &Option<Vec<usize>>, space: &FiniteSpace) -> Result<SubsetMask, InputError> {
    let set = set
        .as_ref()
        .ok_or_else(|| InputError("this construction needs --set".into()))?;
    if let Some(p) = set.iter().find(|&&p| p >= space.n()) {
        return Err(InputError(format!("point {p} outside 0..{}", space.n())));
    }
    Ok(SubsetMask::from_points(set.iter().copied()))
}

fn cmd_construct(
    op: Construction,
    inputs: &[PathBuf],
    set: Option<Vec<usize>>,
    copies: usize,
    with_maps: bool,
) -> CliResult {
    if matches!(op, Construction::Glue) {
        let [path] = inputs else {
            return Err(InputError("glue takes exactly one gluing document".into()));
        };
        let gd: GluingDocument = serde_json::from_str(&read_text(Some(path))?)?;
        let data = GluingData {
            pieces: gd
                .pieces
                .iter()
                .map(|d| d.to_space())
                .collect::<Result<_, _>>()?,
            overlaps: gd
                .overlaps
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| SubsetMask::from_points(s.iter().copied()))
                        .collect()
                })
                .collect(),
            homeos: gd.homeos,
        };
        let glued = glue(&data)?;
        let maps = json!({
            "projection": glued.projection.table(),
            "embeddings": glued.embeddings.iter().map(|e| e.table().to_vec()).collect::<Vec<_>>(),
        });
        return emit(&glued.space, with_maps.then_some(maps));
    }
    let spaces: Vec<FiniteSpace> = inputs
        .iter()
        .map(|p| read_space(Some(p)).map(|(s, _)| s))
        .collect::<Result<_, _>>()?;
    let unary = || -> Result<&FiniteSpace, InputError> {
        match spaces.as_slice() {
            [x] => Ok(x),
            _ => Err(InputError(
                "this construction takes exactly one space".into(),
            )),
        }
    };
    match op {
        Construction::T0q | Construction::Cq => {
            let x = unary()?;
            let q = if matches!(op, Construction::T0q) {
                t0_quotient(x)
            } else {
                connectivity_quotient(x)
            };
            emit(
                &q.space,
                with_maps.then(|| json!({ "projection": q.projection.table() })),
            )
        }
        Construction::Skula => emit(&skula(unary()?), None),
        Construction::Sobrify => {
            let s = sobrification(unary()?);
            let maps = json!({
                "iota": s.iota.table(),
                "closed_irreducibles": s.set_of.iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
            });
            emit(&s.space, with_maps.then_some(maps))
        }
        Construction::Product => emit(&product(&spaces)?, None),
        Construction::Box => emit(&box_product(&spaces)?, None),
        Construction::Sum => {
            let (space, inj) = sum_with_injections(&spaces)?;
            let maps = json!({
                "injections": inj.iter().map(|i| i.table().to_vec()).collect::<Vec<_>>(),
            });
            emit(&space, with_maps.then_some(maps))
        }
        Construction::Opc => emit(&one_point_compactification(unary()?)?, None),
        Construction::Ext => {
            let x = unary()?;
            emit(&simple_extension(x, points(&set, x)?), None)
        }
        Construction::Dup => {
            let x = unary()?;
            emit(&duplicate_along(x, points(&set, x)?, copies)?, None)
        }
        Construction::Glue => unreachable!("handled above"),
    }
}

fn emit(space: &FiniteSpace, maps: Option<Value>) -> CliResult {
    print_json(&Constructed {
        space: doc(space),
        maps,
    })?;
    Ok(ExitCode::SUCCESS)
}

fn pool(jobs: Option<NonZeroUsize>) -> Result<rayon::ThreadPool, InputError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.get());
    }
    Ok(builder.build()?)
}

fn cmd_enumerate(
    n: usize,
    shard: Option<Shard>,
    canonical: bool,
    jobs: Option<NonZeroUsize>,
) -> CliResult {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut write = |s: &FiniteSpace| -> Result<(), InputError> {
        writeln!(out, "{}", serde_json::to_string(&doc(s))?)?;
        Ok(())
    };
    if canonical {
        for s in &canonical_classes(n)? {
            write(s)?;
        }
    } else if shard.is_some() || jobs.is_none_or(|j| j.get() == 1) {
        for s in enumerate_topologies(n, shard)? {
            write(&s)?;
        }
    } else {
        // Shards are generated in parallel and written back in shard order.
        let k = jobs.map_or(1, NonZeroUsize::get);
        let parts: Vec<Vec<FiniteSpace>> = pool(jobs)?.install(|| {
            use rayon::prelude::*;
            (0..k)
                .into_par_iter()
                .map(|i| {
                    let shard = Shard::new(i, k).expect("index below count");
                    enumerate_topologies(n, Some(shard)).map(|it| it.collect())
                })
                .collect::<Result<_, _>>()
        })?;
        for s in parts.iter().flatten() {
            write(s)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    max_n: usize,
    only: Option<Vec<String>>,
    dag: bool,
    format: Format,
    jobs: Option<NonZeroUsize>,
) -> CliResult {
    let (reports, dag) = pool(jobs)?.install(|| -> Result<_, fintop::Error> {
        let reports = run_suite(max_n, only.as_deref())?;
        let dag = if dag {
            Some(implication_dag(max_n.min(fintop::verify::DAG_CAP))?)
        } else {
            None
        };
        Ok((reports, dag))
    })?;
    let ok = reports.iter().all(|r| r.passed()) && dag.as_ref().is_none_or(|d| d.report.passed());
    match format {
        Format::Json => {
            let mut out = json!({ "max_n": max_n, "passed": ok, "reports": reports });
            if let Some(d) = &dag {
                out["implication_dag"] = serde_json::to_value(d)?;
            }
            print_json(&out)?;
        }
        Format::Text => {
            for r in &reports {
                println!("{}", r.summary_line());
            }
            if let Some(d) = &dag {
                println!("{}", d.report.summary_line());
                for e in &d.edges {
                    let arrow = if e.biconditional { "<->" } else { "->" };
                    println!(
                        "  diagram {}: {} {arrow} {}: {:?}",
                        e.diagram, e.from, e.to, e.status
                    );
                }
                for g in d
                    .collapse_table
                    .iter()
                    .filter(|g| g.nodes.len() > 1 || g.universal)
                {
                    let tag = if g.universal { " (every space)" } else { "" };
                    println!("  collapse: {}{tag}", g.nodes.join(" = "));
                }
            }
        }
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_mine(p: Axiom, q: Axiom, max_n: usize) -> CliResult {
    print_json(&mine(p, q, max_n)?)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_maps(dom: &PathBuf, cod: &PathBuf) -> CliResult {
    let (x, _) = read_space(Some(dom))?;
    let (y, _) = read_space(Some(cod))?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for f in all_continuous_maps(&x, &y)? {
        writeln!(out, "{}", serde_json::to_string(f.table())?)?;
    }
    Ok(ExitCode::SUCCESS)
}
