use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::BenchError;
use crate::embedding::{load_word_vectors, EmbeddingMode, TextEmbedding};
use crate::fixtures;
use crate::ingest::{
    generate_vehicle_dataset, parse_ntriples_bytes, serialize_ntriples, GeneratorConfig,
    ParseDiagnostic,
};
use crate::profiles::{builtin_profile, profile_from_config, WeightProfile};
use crate::rdf::{extract_entities, EntityDescription, Graph};
use crate::similarity::{Approach, MinMaxStats, SimilarityOptions};

/// Name recorded for the vector file compiled into the crate.
pub const BUNDLED_VECTORS_NAME: &str = "vectors-fixture.txt";

#[derive(Debug, Clone, PartialEq)]
pub enum DatasetSource {
    File(PathBuf),
    Generated(GeneratorConfig),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum VectorSource {
    /// The fixture vectors shipped with the crate.
    #[default]
    Bundled,
    File(PathBuf),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ScalingMode {
    #[default]
    Raw,
    MinMax,
}

impl ScalingMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ScalingMode::Raw => "raw",
            ScalingMode::MinMax => "minmax",
        }
    }
}

impl fmt::Display for ScalingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ScalingMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "raw" => Ok(ScalingMode::Raw),
            "minmax" | "min-max" => Ok(ScalingMode::MinMax),
            _ => Err(format!("unknown scaling {s:?} (expected raw or minmax)")),
        }
    }
}

/// Everything needed to score entities of one dataset.
#[derive(Debug, Clone)]
pub struct InputConfig {
    pub dataset: DatasetSource,
    pub vectors: VectorSource,
    pub embedding: EmbeddingMode,
    pub scaling: ScalingMode,
    /// JSON profile files; their profiles become selectable by name.
    pub profiles: Vec<PathBuf>,
}

impl InputConfig {
    pub fn new(dataset: DatasetSource) -> Self {
        InputConfig {
            dataset,
            vectors: VectorSource::Bundled,
            embedding: EmbeddingMode::Word2Vec,
            scaling: ScalingMode::Raw,
            profiles: Vec::new(),
        }
    }
}

/// Identity of one input as recorded in a manifest: file base name and
/// SHA-256 of its bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputRecord {
    pub name: String,
    pub sha256: String,
}

impl InputRecord {
    fn new(name: impl Into<String>, bytes: &[u8]) -> Self {
        InputRecord {
            name: name.into(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

/// Loaded, validated inputs.
#[derive(Debug, Clone)]
pub struct Inputs {
    pub graph: Graph,
    pub diagnostics: Vec<ParseDiagnostic>,
    pub entities: Vec<EntityDescription>,
    pub embedding: TextEmbedding,
    pub options: SimilarityOptions,
    pub profiles: Vec<WeightProfile>,
    pub profile_warnings: Vec<String>,
    pub dataset_record: InputRecord,
    pub vectors_record: Option<InputRecord>,
    pub profile_records: Vec<InputRecord>,
}

/// Reads every input named by `config`. Nothing is written.
pub fn load_inputs(config: &InputConfig) -> Result<Inputs, BenchError> {
    let (graph, diagnostics, dataset_record) = match &config.dataset {
        DatasetSource::File(path) => {
            let bytes = read(path)?;
            let (graph, diagnostics) =
                parse_ntriples_bytes(&bytes).map_err(|source| BenchError::Dataset {
                    path: path.clone(),
                    source,
                })?;
            (
                graph,
                diagnostics,
                InputRecord::new(base_name(path), &bytes),
            )
        }
        DatasetSource::Generated(cfg) => {
            let graph = generate_vehicle_dataset(cfg);
            let text = serialize_ntriples(&graph);
            let record = InputRecord::new(
                format!(
                    "generated-seed{}-count{}.nt",
                    cfg.seed(),
                    cfg.entity_count()
                ),
                text.as_bytes(),
            );
            (graph, Vec::new(), record)
        }
    };
    let entities = extract_entities(&graph);
    if entities.is_empty() {
        return Err(BenchError::EmptyDataset);
    }

    let mut profiles = Vec::new();
    let mut profile_warnings = Vec::new();
    let mut profile_records = Vec::new();
    for path in &config.profiles {
        let bytes = read(path)?;
        let text =
            std::str::from_utf8(&bytes).map_err(|_| BenchError::NotUtf8 { path: path.clone() })?;
        let (profile, warnings) =
            profile_from_config(text).map_err(|source| BenchError::ProfileFile {
                path: path.clone(),
                source,
            })?;
        profile_warnings.extend(
            warnings
                .into_iter()
                .map(|w| format!("{}: {w}", path.display())),
        );
        profile_records.push(InputRecord::new(base_name(path), &bytes));
        profiles.push(profile);
    }

    let (embedding, vectors_record) = match config.embedding {
        EmbeddingMode::Word2Vec => {
            let (name, text) = match &config.vectors {
                VectorSource::Bundled => (
                    BUNDLED_VECTORS_NAME.to_owned(),
                    fixtures::VECTORS.to_owned(),
                ),
                VectorSource::File(path) => {
                    let bytes = read(path)?;
                    let text = String::from_utf8(bytes)
                        .map_err(|_| BenchError::NotUtf8 { path: path.clone() })?;
                    (base_name(path), text)
                }
            };
            let store = load_word_vectors(&text).map_err(|source| BenchError::Vectors {
                name: name.clone(),
                source,
            })?;
            let record = InputRecord::new(name, text.as_bytes());
            (TextEmbedding::Word2Vec(store), Some(record))
        }
        EmbeddingMode::Tfidf => (TextEmbedding::fit_tfidf(&entities)?, None),
        EmbeddingMode::Exact => (TextEmbedding::Exact, None),
    };

    let options = match config.scaling {
        ScalingMode::Raw => SimilarityOptions::default(),
        ScalingMode::MinMax => SimilarityOptions::minmax(MinMaxStats::from_entities(&entities)),
    };

    Ok(Inputs {
        graph,
        diagnostics,
        entities,
        embedding,
        options,
        profiles,
        profile_warnings,
        dataset_record,
        vectors_record,
        profile_records,
    })
}

/// `PJ`, `PS`, a built-in profile name, or the name of a loaded profile.
/// Loaded profiles take precedence over built-ins of the same name.
pub fn resolve_approach(
    name: &str,
    boost_factor: f64,
    loaded: &[WeightProfile],
) -> Result<Approach, BenchError> {
    if let Some(p) = loaded.iter().find(|p| p.name() == name) {
        return Ok(Approach::Weighted(p.clone()));
    }
    if name.eq_ignore_ascii_case("PJ") {
        return Ok(Approach::Jaccard);
    }
    if name.eq_ignore_ascii_case("PS") {
        return Ok(Approach::PredicateObject);
    }
    builtin_profile(name, boost_factor)?
        .map(Approach::Weighted)
        .ok_or_else(|| BenchError::UnknownApproach(name.to_owned()))
}

fn read(path: &Path) -> Result<Vec<u8>, BenchError> {
    std::fs::read(path).map_err(|source| BenchError::Read {
        path: path.to_owned(),
        source,
    })
}

fn base_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}
