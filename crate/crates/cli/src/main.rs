use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use rdfsim_core::bench::{
    build_bundle, load_inputs, matrix_csv, resolve_approach, summary_stats, BenchConfig,
    BenchError, DatasetSource, InputConfig, Inputs, Parallelism, ScalingMode, VectorSource,
    DEFAULT_BIN_COUNT,
};
use rdfsim_core::embedding::EmbeddingMode;
use rdfsim_core::ingest::{
    generate_vehicle_dataset, parse_ntriples_bytes, serialize_ntriples, GeneratorConfig, Severity,
};
use rdfsim_core::profiles::DEFAULT_BOOST_FACTOR;
use rdfsim_core::rdf::{extract_entities, local_name, EntityDescription};
use rdfsim_core::similarity::{score_slots, Approach};

/// Similarity of RDF entity descriptions under weighted properties.
#[derive(Parser, Debug)]
#[command(name = "rdfsim", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a synthetic vehicle dataset as N-Triples.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Similarity of one entity pair.
    Sim {
        #[command(flatten)]
        dataset: DatasetArgs,
        /// Subject IRI or its local name.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// PJ, PS, P0..P11, example-3b or the name of a --profile.
        #[arg(long)]
        approach: Option<String>,
        #[command(flatten)]
        scoring: ScoringArgs,
    },
    /// Full pairwise matrix for one approach, as CSV.
    Matrix {
        #[command(flatten)]
        dataset: DatasetArgs,
        #[arg(long)]
        approach: Option<String>,
        #[command(flatten)]
        scoring: ScoringArgs,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the benchmark and write the report bundle.
    Bench {
        #[command(flatten)]
        dataset: DatasetArgs,
        /// Approaches to run (repeatable); all fourteen standard ones plus
        /// every --profile when omitted.
        #[arg(long = "approach")]
        approaches: Vec<String>,
        #[command(flatten)]
        scoring: ScoringArgs,
        #[arg(long, default_value_t = DEFAULT_BIN_COUNT)]
        bins: usize,
        /// Evaluate pairs on one thread.
        #[arg(long)]
        serial: bool,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
    /// Parse an N-Triples file and report diagnostics.
    Validate { file: PathBuf },
}

#[derive(Args, Debug)]
struct DatasetArgs {
    /// N-Triples dataset.
    #[arg(long, conflicts_with_all = ["seed", "count"], required_unless_present = "seed")]
    dataset: Option<PathBuf>,
    /// Generate the dataset with this seed instead of reading one.
    #[arg(long, requires = "count")]
    seed: Option<u64>,
    #[arg(long, requires = "seed")]
    count: Option<usize>,
}

#[derive(Args, Debug)]
struct ScoringArgs {
    /// JSON weight profile (repeatable).
    #[arg(long = "profile")]
    profiles: Vec<PathBuf>,
    /// word2vec text vector file; the bundled fixture vectors by default.
    #[arg(long, env = "RDFSIM_VECTORS")]
    vectors: Option<PathBuf>,
    #[arg(long, default_value = "raw")]
    scaling: ScalingMode,
    #[arg(long, default_value = "word2vec")]
    embedding: EmbeddingMode,
    #[arg(long, default_value_t = DEFAULT_BOOST_FACTOR)]
    boost_factor: f64,
}

enum Failure {
    Usage(anyhow::Error),
    Data(anyhow::Error),
}

impl From<BenchError> for Failure {
    fn from(e: BenchError) -> Self {
        if e.is_usage() {
            Failure::Usage(e.into())
        } else {
            Failure::Data(e.into())
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Data(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Data(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    let json = cli.json;
    match cli.command {
        Command::Gen { seed, count, out } => gen(seed, count, out, json),
        Command::Validate { file } => validate(file, json),
        Command::Sim {
            dataset,
            left,
            right,
            approach,
            scoring,
        } => sim(dataset, &left, &right, approach, scoring, json),
        Command::Matrix {
            dataset,
            approach,
            scoring,
            out,
        } => matrix(dataset, approach, scoring, out, json),
        Command::Bench {
            dataset,
            approaches,
            scoring,
            bins,
            serial,
            out,
        } => bench(dataset, approaches, scoring, bins, serial, out, json),
    }
}

fn gen(seed: u64, count: usize, out: Option<PathBuf>, json: bool) -> CmdResult {
    let config = GeneratorConfig::new(seed, count).map_err(|e| Failure::Usage(e.into()))?;
    let graph = generate_vehicle_dataset(&config);
    let text = serialize_ntriples(&graph);
    match &out {
        Some(path) => {
            fs::write(path, &text).with_context(|| format!("cannot write {}", path.display()))?;
            if json {
                print_json(&json!({
                    "seed": seed,
                    "count": count,
                    "triples": graph.len(),
                    "out": path.display().to_string(),
                }))?;
            }
        }
        None => write_stdout(text.as_bytes())?,
    }
    Ok(())
}

fn validate(file: PathBuf, json: bool) -> CmdResult {
    let bytes = fs::read(&file).with_context(|| format!("cannot read {}", file.display()))?;
    let (graph, diagnostics) =
        parse_ntriples_bytes(&bytes).with_context(|| file.display().to_string())?;
    let errors = diagnostics
        .iter()
        .filter(|d| d.severity == Severity::Error)
        .count();
    let entities = extract_entities(&graph).len();
    if json {
        print_json(&json!({
            "file": file.display().to_string(),
            "triples": graph.len(),
            "entities": entities,
            "errors": errors,
            "warnings": diagnostics.len() - errors,
            "diagnostics": diagnostics,
        }))?;
    } else {
        let mut text = String::new();
        for d in &diagnostics {
            writeln!(text, "{}:{d}", file.display()).expect("string write");
        }
        writeln!(
            text,
            "{}: {} triples, {} entities, {} errors, {} warnings",
            file.display(),
            graph.len(),
            entities,
            errors,
            diagnostics.len() - errors
        )
        .expect("string write");
        write_stdout(text.as_bytes())?;
    }
    if errors > 0 {
        return Err(Failure::Data(anyhow!(
            "{} has {errors} malformed line(s)",
            file.display()
        )));
    }
    Ok(())
}

fn sim(
    dataset: DatasetArgs,
    left: &str,
    right: &str,
    approach: Option<String>,
    scoring: ScoringArgs,
    json: bool,
) -> CmdResult {
    let boost = scoring.boost_factor;
    let inputs = load(dataset, scoring)?;
    let approach = pick_approach(approach, boost, &inputs)?;
    let a = find_entity(&inputs.entities, left)?;
    let b = find_entity(&inputs.entities, right)?;
    let score = approach
        .similarity(a, b, &inputs.embedding, &inputs.options)
        .context("similarity failed")?;
    if json {
        let slots = match &approach {
            Approach::Weighted(profile) => Some(
                score_slots(a, b, profile, &inputs.embedding, &inputs.options)
                    .context("similarity failed")?,
            ),
            _ => None,
        };
        print_json(&json!({
            "left": a.id(),
            "right": b.id(),
            "approach": approach.name(),
            "embedding": inputs.embedding.mode().as_str(),
            "scaling": inputs.options.scaling.name(),
            "similarity": score,
            "slots": slots,
        }))?;
    } else {
        write_stdout(format!("{score:?}\n").as_bytes())?;
    }
    Ok(())
}

fn matrix(
    dataset: DatasetArgs,
    approach: Option<String>,
    scoring: ScoringArgs,
    out: Option<PathBuf>,
    json: bool,
) -> CmdResult {
    let boost = scoring.boost_factor;
    let inputs = load(dataset, scoring)?;
    let approach = pick_approach(approach, boost, &inputs)?;
    let m = rdfsim_core::bench::compute_matrix(
        &inputs.entities,
        &approach,
        &inputs.embedding,
        &inputs.options,
    )?;
    let bytes = if json {
        let rows: Vec<&[f64]> = (0..m.size()).map(|i| m.row(i)).collect();
        let mut value = json!({
            "approach": m.approach(),
            "entity_ids": m.entity_ids(),
            "scores": rows,
        });
        if m.size() >= 2 {
            value["summary"] = serde_json::to_value(summary_stats(&m)?).expect("serializable");
        }
        let mut text = serde_json::to_string_pretty(&value).expect("serializable");
        text.push('\n');
        text.into_bytes()
    } else {
        matrix_csv(&m)?
    };
    match out {
        Some(path) => {
            fs::write(&path, bytes).with_context(|| format!("cannot write {}", path.display()))?
        }
        None => write_stdout(&bytes)?,
    }
    Ok(())
}

fn bench(
    dataset: DatasetArgs,
    approaches: Vec<String>,
    scoring: ScoringArgs,
    bins: usize,
    serial: bool,
    out: PathBuf,
    json: bool,
) -> CmdResult {
    let boost_factor = scoring.boost_factor;
    let inputs = input_config(dataset, scoring)?;
    let mut config = BenchConfig::new(inputs);
    config.boost_factor = boost_factor;
    config.bin_count = bins;
    config.parallelism = if serial {
        Parallelism::Serial
    } else {
        Parallelism::Parallel
    };
    if !approaches.is_empty() {
        config.approaches = approaches;
    } else if !config.inputs.profiles.is_empty() {
        // custom profiles join the standard set under their own names
        let loaded = load_inputs(&config.inputs)?;
        config
            .approaches
            .extend(loaded.profiles.iter().map(|p| p.name().to_owned()));
    }
    let bundle = build_bundle(&config)?;
    let written = bundle.write_to(&out)?;
    if json {
        print_json(&json!({
            "out": out.display().to_string(),
            "files": written
                .iter()
                .map(|p| p.file_name().unwrap_or_default().to_string_lossy().into_owned())
                .collect::<Vec<_>>(),
            "summary": bundle.summaries(),
        }))?;
    } else {
        let mut text = format!(
            "{:<12} {:>10} {:>10} {:>10} {:>10} {:>8}\n",
            "approach", "mean", "min", "max", "stdev", "count"
        );
        for s in bundle.summaries() {
            writeln!(
                text,
                "{:<12} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>8}",
                s.approach, s.mean, s.min, s.max, s.stdev, s.count
            )
            .expect("string write");
        }
        writeln!(text, "wrote {} files to {}", written.len(), out.display()).expect("string write");
        write_stdout(text.as_bytes())?;
    }
    Ok(())
}

fn input_config(dataset: DatasetArgs, scoring: ScoringArgs) -> Result<InputConfig, Failure> {
    let source = match (dataset.dataset, dataset.seed, dataset.count) {
        (Some(path), _, _) => DatasetSource::File(path),
        (None, Some(seed), Some(count)) => DatasetSource::Generated(
            GeneratorConfig::new(seed, count).map_err(|e| Failure::Usage(e.into()))?,
        ),
        _ => {
            return Err(Failure::Usage(anyhow!(
                "give --dataset or --seed with --count"
            )))
        }
    };
    if !(scoring.boost_factor.is_finite() && scoring.boost_factor > 0.0) {
        return Err(Failure::Usage(anyhow!(
            "--boost-factor must be finite and positive"
        )));
    }
    let mut config = InputConfig::new(source);
    config.vectors = scoring
        .vectors
        .map_or(VectorSource::Bundled, VectorSource::File);
    config.embedding = scoring.embedding;
    config.scaling = scoring.scaling;
    config.profiles = scoring.profiles;
    Ok(config)
}

fn load(dataset: DatasetArgs, scoring: ScoringArgs) -> Result<Inputs, Failure> {
    let inputs = load_inputs(&input_config(dataset, scoring)?)?;
    for d in &inputs.diagnostics {
        eprintln!(
            "{}: line {}: {}",
            severity_name(d.severity),
            d.line_number,
            d.message
        );
    }
    for w in &inputs.profile_warnings {
        eprintln!("warning: {w}");
    }
    Ok(inputs)
}

fn severity_name(severity: Severity) -> &'static str {
    match severity {
        Severity::Error => "error",
        Severity::Warning => "warning",
    }
}

/// Explicit approach, else the only loaded profile, else P0.
fn pick_approach(name: Option<String>, boost: f64, inputs: &Inputs) -> Result<Approach, Failure> {
    let name = match (name, inputs.profiles.as_slice()) {
        (Some(n), _) => n,
        (None, [only]) => only.name().to_owned(),
        (None, _) => "P0".to_owned(),
    };
    Ok(resolve_approach(&name, boost, &inputs.profiles)?)
}

/// Matches a full subject id first, then a unique local name.
fn find_entity<'a>(
    entities: &'a [EntityDescription],
    key: &str,
) -> Result<&'a EntityDescription, Failure> {
    if let Some(e) = entities.iter().find(|e| e.id() == key) {
        return Ok(e);
    }
    let matches: Vec<_> = entities
        .iter()
        .filter(|e| local_name(&e.id()) == key)
        .collect();
    match matches.as_slice() {
        [one] => Ok(one),
        [] => Err(Failure::Data(anyhow!("no entity {key:?} in the dataset"))),
        many => Err(Failure::Data(anyhow!(
            "{key:?} is ambiguous ({} entities share that local name)",
            many.len()
        ))),
    }
}

fn print_json(value: &serde_json::Value) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    write_stdout(text.as_bytes())
}

/// A closed pipe on the reading side is not an error.
fn write_stdout(bytes: &[u8]) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    match out.write_all(bytes).and_then(|()| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}
