use std::collections::HashSet;
use std::path::{Path, PathBuf};

use indexmap::IndexMap;
use serde_json::json;

use super::inputs::{load_inputs, resolve_approach, DatasetSource, InputConfig};
use super::matrix::{compute_matrix_with, Parallelism, SimilarityMatrix};
use super::report::{histogram, summary_stats, HistogramReport, SummaryStats, DEFAULT_BIN_COUNT};
use super::BenchError;
use crate::profiles::DEFAULT_BOOST_FACTOR;

const STANDARD_APPROACHES: [&str; 14] = [
    "PJ", "PS", "P0", "P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9", "P10", "P11",
];

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub inputs: InputConfig,
    /// Approach names, resolved by [`resolve_approach`](super::resolve_approach).
    pub approaches: Vec<String>,
    pub boost_factor: f64,
    pub bin_count: usize,
    pub parallelism: Parallelism,
}

impl BenchConfig {
    /// All fourteen standard approaches with default options.
    pub fn new(inputs: InputConfig) -> Self {
        BenchConfig {
            inputs,
            approaches: STANDARD_APPROACHES.iter().map(|s| s.to_string()).collect(),
            boost_factor: DEFAULT_BOOST_FACTOR,
            bin_count: DEFAULT_BIN_COUNT,
            parallelism: Parallelism::Parallel,
        }
    }
}

/// A complete report bundle held in memory: output file names with their
/// bytes, plus the parsed statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct Bundle {
    files: IndexMap<String, Vec<u8>>,
    summaries: Vec<SummaryStats>,
    histograms: Vec<HistogramReport>,
}

impl Bundle {
    /// File names in write order.
    pub fn file_names(&self) -> impl Iterator<Item = &str> {
        self.files.keys().map(String::as_str)
    }

    pub fn file(&self, name: &str) -> Option<&[u8]> {
        self.files.get(name).map(Vec::as_slice)
    }

    pub fn summaries(&self) -> &[SummaryStats] {
        &self.summaries
    }

    pub fn histograms(&self) -> &[HistogramReport] {
        &self.histograms
    }

    /// Writes every file into `dir`, creating it if needed.
    pub fn write_to(&self, dir: &Path) -> Result<Vec<PathBuf>, BenchError> {
        let write_err = |path: &Path| {
            let path = path.to_owned();
            move |source| BenchError::Write { path, source }
        };
        std::fs::create_dir_all(dir).map_err(write_err(dir))?;
        let mut written = Vec::with_capacity(self.files.len());
        for (name, bytes) in &self.files {
            let path = dir.join(name);
            std::fs::write(&path, bytes).map_err(write_err(&path))?;
            written.push(path);
        }
        Ok(written)
    }
}

/// Computes the whole bundle without touching the filesystem beyond
/// reading inputs.
pub fn build_bundle(config: &BenchConfig) -> Result<Bundle, BenchError> {
    if config.approaches.is_empty() {
        return Err(BenchError::NoApproaches);
    }
    if config.bin_count == 0 {
        return Err(BenchError::ZeroBins);
    }
    let inputs = load_inputs(&config.inputs)?;

    let mut approaches = Vec::with_capacity(config.approaches.len());
    let mut stems = HashSet::new();
    for name in &config.approaches {
        let approach = resolve_approach(name, config.boost_factor, &inputs.profiles)?;
        if !stems.insert(file_stem(approach.name())) {
            return Err(BenchError::DuplicateApproach(approach.name().to_owned()));
        }
        approaches.push(approach);
    }

    let mut files = IndexMap::new();
    let mut summaries = Vec::new();
    let mut histograms = Vec::new();
    for approach in &approaches {
        let matrix = compute_matrix_with(
            &inputs.entities,
            approach,
            &inputs.embedding,
            &inputs.options,
            config.parallelism,
        )?;
        let hist = histogram(&matrix, config.bin_count)?;
        let stats = summary_stats(&matrix)?;
        let stem = file_stem(approach.name());
        files.insert(format!("matrix_{stem}.csv"), matrix_csv(&matrix)?);
        files.insert(format!("hist_{stem}.csv"), histogram_csv(&hist)?);
        files.insert(format!("heat_{stem}.csv"), heatmap_csv(&matrix)?);
        summaries.push(stats);
        histograms.push(hist);
    }
    files.insert("summary.csv".to_owned(), summary_csv(&summaries)?);

    let seed = match &config.inputs.dataset {
        DatasetSource::Generated(cfg) => Some(cfg.seed()),
        DatasetSource::File(_) => None,
    };
    let count_severity = |severity| {
        inputs
            .diagnostics
            .iter()
            .filter(|d| d.severity == severity)
            .count()
    };
    let mut file_list: Vec<&str> = files.keys().map(String::as_str).collect();
    file_list.push("manifest.json");
    let manifest = json!({
        "tool": "rdfsim",
        "version": env!("CARGO_PKG_VERSION"),
        "seed": seed,
        "dataset": {
            "name": inputs.dataset_record.name,
            "sha256": inputs.dataset_record.sha256,
            "triples": inputs.graph.len(),
            "entities": inputs.entities.len(),
            "parse_errors": count_severity(crate::ingest::Severity::Error),
            "parse_warnings": count_severity(crate::ingest::Severity::Warning),
        },
        "vectors": inputs.vectors_record,
        "profiles": inputs
            .profiles
            .iter()
            .zip(&inputs.profile_records)
            .map(|(p, r)| json!({"profile": p.name(), "name": r.name, "sha256": r.sha256}))
            .collect::<Vec<_>>(),
        "options": {
            "embedding": config.inputs.embedding.as_str(),
            "scaling": config.inputs.scaling.as_str(),
            "boost_factor": config.boost_factor,
            "bin_count": config.bin_count,
        },
        "approaches": approaches.iter().map(|a| a.name()).collect::<Vec<_>>(),
        "files": file_list,
    });
    let mut manifest_text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    manifest_text.push('\n');
    files.insert("manifest.json".to_owned(), manifest_text.into_bytes());

    Ok(Bundle {
        files,
        summaries,
        histograms,
    })
}

/// Builds the bundle, then writes it to `out_dir`. Input errors surface
/// before any file is created.
pub fn run_benchmark(config: &BenchConfig, out_dir: &Path) -> Result<Bundle, BenchError> {
    let bundle = build_bundle(config)?;
    bundle.write_to(out_dir)?;
    Ok(bundle)
}

/// Square matrix with entity ids as header row and first column.
pub fn matrix_csv(matrix: &SimilarityMatrix) -> Result<Vec<u8>, BenchError> {
    let mut w = writer();
    w.write_record(std::iter::once("id").chain(matrix.entity_ids().iter().map(String::as_str)))?;
    for (i, id) in matrix.entity_ids().iter().enumerate() {
        let row = matrix.row(i).iter().map(|v| v.to_string());
        w.write_record(std::iter::once(id.clone()).chain(row))?;
    }
    finish(w)
}

pub fn histogram_csv(hist: &HistogramReport) -> Result<Vec<u8>, BenchError> {
    let mut w = writer();
    w.write_record(["bin_lo", "bin_hi", "count"])?;
    for (i, count) in hist.counts.iter().enumerate() {
        w.write_record([
            hist.edges[i].to_string(),
            hist.edges[i + 1].to_string(),
            count.to_string(),
        ])?;
    }
    finish(w)
}

/// Long form over every ordered pair, diagonal included.
pub fn heatmap_csv(matrix: &SimilarityMatrix) -> Result<Vec<u8>, BenchError> {
    let mut w = writer();
    w.write_record(["id_a", "id_b", "score"])?;
    let ids = matrix.entity_ids();
    for (i, a) in ids.iter().enumerate() {
        for (j, b) in ids.iter().enumerate() {
            w.write_record([a.as_str(), b.as_str(), &matrix.get(i, j).to_string()])?;
        }
    }
    finish(w)
}

pub fn summary_csv(rows: &[SummaryStats]) -> Result<Vec<u8>, BenchError> {
    let mut w = writer();
    w.write_record(["approach", "mean", "min", "max", "stdev", "count"])?;
    for s in rows {
        w.write_record([
            s.approach.clone(),
            s.mean.to_string(),
            s.min.to_string(),
            s.max.to_string(),
            s.stdev.to_string(),
            s.count.to_string(),
        ])?;
    }
    finish(w)
}

fn writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<Vec<u8>, BenchError> {
    w.into_inner()
        .map_err(|e| BenchError::Csv(csv::Error::from(e.into_error())))
}

/// Approach name made safe for a file name.
fn file_stem(name: &str) -> String {
    name.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.') {
                c
            } else {
                '_'
            }
        })
        .collect()
}
